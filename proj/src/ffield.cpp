#include "rsl/ffield.hpp"

#include <algorithm>
#include <string>

#include "rsl/nt.hpp"

namespace rsl {

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Dense polynomial arithmetic over F_p on coefficient vectors (constant first).

int degree(const Coeffs& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Coeffs poly_mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& mod, std::uint64_t p) {
    std::size_t k = mod.size() - 1;
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = r.size(); i-- > k;) {
        std::uint64_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            // monic modulus: x^k = -sum mod[j] x^j
            std::uint64_t sub = c * mod[j] % p;
            r[i - k + j] = (r[i - k + j] + p - sub % p) % p;
        }
    }
    r.resize(k);
    return r;
}

Coeffs poly_pow_mod(Coeffs base, std::uint64_t e, const Coeffs& mod, std::uint64_t p) {
    std::size_t k = mod.size() - 1;
    Coeffs r(k, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
    while (degree(b) >= 0) {
        int da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        std::uint64_t inv_lead = nt::powmod(b[db], p - 2, p);
        while ((da = degree(a)) >= db) {
            std::uint64_t c = a[da] * inv_lead % p;
            int sh = da - db;
            for (int i = 0; i <= db; ++i)
                a[i + sh] = (a[i + sh] + p - c * b[i] % p) % p;
        }
        std::swap(a, b);
    }
    return a;
}

// x^(p^steps) mod f via repeated p-th powering (deg f >= 2).
Coeffs frobenius_power_of_x(unsigned steps, const Coeffs& mod, std::uint64_t p) {
    std::size_t k = mod.size() - 1;
    Coeffs cur(k, 0);
    cur[1] = 1; // x
    for (unsigned s = 0; s < steps; ++s) cur = poly_pow_mod(cur, p, mod, p);
    return cur;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
    int deg = degree(coeffs);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (coeffs[0] == 0) return false; // root at 0
    if (deg <= 3) {
        // Degree 2 or 3: irreducible iff no root in F_p.
        for (std::uint64_t x = 0; x < p; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = coeffs.size(); i-- > 0;) v = (v * x + coeffs[i]) % p;
            if (v == 0) return false;
        }
        return true;
    }
    unsigned k = static_cast<unsigned>(deg);
    Coeffs x_poly(k, 0);
    x_poly[1] = 1;
    // x^(p^k) == x mod f
    Coeffs xq = frobenius_power_of_x(k, coeffs, p);
    if (xq != x_poly) return false;
    // gcd(x^(p^(k/t)) - x, f) == 1 for every prime t | k
    for (std::uint64_t t : nt::distinct_prime_factors(k)) {
        Coeffs xt = frobenius_power_of_x(k / static_cast<unsigned>(t), coeffs, p);
        for (std::size_t i = 0; i < xt.size(); ++i)
            xt[i] = (xt[i] + p - x_poly[i] % p) % p;
        Coeffs g = poly_gcd(coeffs, xt, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

Elem FieldCtx::add_digits(Elem a, Elem b) const {
    Elem r = 0, mul = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t s = a % p + b % p;
        if (s >= p) s -= p;
        r += s * mul;
        mul *= p;
        a /= p;
        b /= p;
    }
    return r;
}

Elem FieldCtx::neg(Elem a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    Elem r = 0, mul = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t d = a % p;
        r += (d == 0 ? 0 : p - d) * mul;
        mul *= p;
        a /= p;
    }
    return r;
}

Elem FieldCtx::mul_poly(Elem a, Elem b) const {
    if (k == 1) return a * b % p;
    Coeffs ca = digits(a), cb = digits(b);
    return from_digits(poly_mul_mod(ca, cb, modulus, p));
}

Elem FieldCtx::pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return pow(a, q - 2);
}

std::vector<std::uint64_t> FieldCtx::digits(Elem a) const {
    std::vector<std::uint64_t> c(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        c[i] = a % p;
        a /= p;
    }
    return c;
}

Elem FieldCtx::from_digits(const std::vector<std::uint64_t>& c) const {
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * p + c[i] % p;
    return r;
}

std::uint64_t FieldCtx::dlog(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "dlog of 0");
    if (!has_tables()) throw Error(ErrorKind::TablesUnavailable, "q exceeds the log-table cap");
    return log_table[a];
}

Elem find_generator(const FieldCtx& ctx) {
    auto prime_divs = nt::distinct_prime_factors(ctx.q - 1);
    for (Elem g = 1; g < ctx.q; ++g) {
        bool full_order = true;
        for (std::uint64_t l : prime_divs) {
            if (ctx.pow(g, (ctx.q - 1) / l) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return g;
    }
    throw Error(ErrorKind::PreconditionViolated, "no generator found (invalid field)");
}

FieldCtx make_field(std::uint64_t p, std::uint64_t k) {
    if (p == 2) throw Error(ErrorKind::EvenPrime, "characteristic 2 is not supported");
    if (!nt::is_prime(p)) throw Error(ErrorKind::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error(ErrorKind::PreconditionViolated, "extension degree must be >= 1");

    FieldCtx ctx;
    ctx.p = p;
    ctx.k = k;
    ctx.q = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (ctx.q > ~std::uint64_t{0} / p)
            throw Error(ErrorKind::Overflow, "p^k does not fit in 64 bits");
        ctx.q *= p;
    }

    if (k == 1) {
        ctx.modulus = {0, 1}; // placeholder x; arithmetic is plain mod p
    } else {
        // Lexicographically smallest monic irreducible, low-degree coefficients
        // most significant in the scan order.
        std::vector<std::uint64_t> c(k + 1, 0);
        c[k] = 1;
        bool found = false;
        while (!found) {
            if (is_irreducible_mod_p(c, p)) {
                found = true;
                break;
            }
            // increment (c[k-1], ..., c[0]) with c[k-1] as the fastest digit
            std::size_t i = k;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) throw Error(ErrorKind::PreconditionViolated, "no irreducible polynomial found");
            }
        }
        ctx.modulus = c;
    }

    ctx.generator = find_generator(ctx);

    if (ctx.q <= FieldCtx::log_table_cap()) {
        ctx.log_table.assign(ctx.q, 0);
        ctx.antilog_table.assign(ctx.q - 1, 0);
        Elem x = 1;
        for (std::uint64_t t = 0; t < ctx.q - 1; ++t) {
            ctx.log_table[x] = static_cast<std::uint32_t>(t);
            ctx.antilog_table[t] = static_cast<std::uint32_t>(x);
            x = ctx.mul_poly(x, ctx.generator);
        }
    }
    return ctx;
}

} // namespace rsl
