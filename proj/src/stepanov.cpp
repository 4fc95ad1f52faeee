#include "rsl/stepanov.hpp"

#include <algorithm>
#include <string>

#include "rsl/nt.hpp"
#include "rsl/sumsets.hpp"

namespace rsl {

Poly poly_add(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = ctx.add(x, y);
    }
    r.trim();
    return r;
}

Poly poly_sub(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    return poly_add(ctx, a, poly_scale(ctx, b, ctx.neg(1)));
}

Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = ctx.add(r.c[i + j], ctx.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly poly_scale(const FieldCtx& ctx, const Poly& a, Elem s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = ctx.mul(x, s);
    return r;
}

Poly poly_pow(const FieldCtx& ctx, Poly base, std::uint64_t e) {
    Poly r;
    r.c = {1};
    while (e) {
        if (e & 1) r = poly_mul(ctx, r, base);
        base = poly_mul(ctx, base, base);
        e >>= 1;
    }
    return r;
}

Elem poly_eval(const FieldCtx& ctx, const Poly& f, Elem x) {
    Elem v = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) v = ctx.add(ctx.mul(v, x), f.c[i]);
    return v;
}

std::pair<Poly, Elem> poly_divide_linear(const FieldCtx& ctx, const Poly& f, Elem c) {
    if (f.is_zero()) return {{}, 0};
    Poly q;
    q.c.assign(f.c.size() - 1, 0);
    Elem carry = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        Elem cur = ctx.add(f.c[i], ctx.mul(carry, c));
        if (i == 0) return {q, cur};
        q.c[i - 1] = cur;
        carry = cur;
    }
    return {q, carry};
}

std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    while (n || k) {
        std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // C(nd, kd) mod p by the multiplicative formula, nd, kd < p
        kd = std::min(kd, nd - kd);
        std::uint64_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < kd; ++i) {
            num = nt::mulmod(num, (nd - i) % p, p);
            den = nt::mulmod(den, (i + 1) % p, p);
        }
        result = nt::mulmod(result, nt::mulmod(num, nt::powmod(den, p - 2, p), p), p);
        n /= p;
        k /= p;
    }
    return result;
}

Poly hyper_derivative(const FieldCtx& ctx, const Poly& f, std::uint64_t n) {
    if (static_cast<long>(n) > f.deg()) return {};
    Poly r;
    r.c.assign(f.c.size() - n, 0);
    for (std::size_t j = n; j < f.c.size(); ++j) {
        Elem cj = f.c[j];
        if (cj == 0) continue;
        // C(j, n) mod p lives in the prime subfield, whose elements are the
        // idx values 0..p-1
        std::uint64_t binom = binomial_mod_p(j, n, ctx.p);
        if (binom == 0) continue;
        r.c[j - n] = ctx.mul(cj, static_cast<Elem>(binom));
    }
    r.trim();
    return r;
}

std::uint64_t root_multiplicity(const FieldCtx& ctx, const Poly& f, Elem c) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity of a root of 0 is undefined");
    std::uint64_t via_derivatives = 0;
    while (static_cast<long>(via_derivatives) <= f.deg() &&
           poly_eval(ctx, hyper_derivative(ctx, f, via_derivatives), c) == 0)
        ++via_derivatives;

    // independent route: repeated synthetic division
    std::uint64_t via_division = 0;
    Poly g = f;
    while (!g.is_zero()) {
        auto [q, rem] = poly_divide_linear(ctx, g, c);
        if (rem != 0) break;
        ++via_division;
        g = q;
    }
    if (via_derivatives != via_division)
        throw std::logic_error("hyper-derivative and division multiplicities disagree");
    return via_division;
}

std::vector<Elem> vandermonde_solve(const FieldCtx& ctx, const std::vector<Elem>& points,
                                    std::size_t target_row) {
    std::size_t n = points.size();
    if (n == 0) throw Error(ErrorKind::PreconditionViolated, "empty point list");
    if (target_row != n - 1)
        throw Error(ErrorKind::PreconditionViolated, "target row must be n-1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw Error(ErrorKind::DuplicatePoints, "points must be distinct");

    // closed form: c_i = prod_{k != i} (a_i - a_k)^(-1)
    std::vector<Elem> closed(n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem prod = 1;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) prod = ctx.mul(prod, ctx.sub(points[i], points[k]));
        closed[i] = ctx.inv(prod);
    }

    // elimination route on the transposed Vandermonde system
    std::vector<std::vector<Elem>> mat(n, std::vector<Elem>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) mat[j][i] = ctx.pow(points[i], j);
        mat[j][n] = (j == n - 1) ? 1 : 0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && mat[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::DuplicatePoints, "singular Vandermonde system");
        std::swap(mat[col], mat[piv]);
        Elem inv = ctx.inv(mat[col][col]);
        for (auto& x : mat[col]) x = ctx.mul(x, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || mat[r][col] == 0) continue;
            Elem factor = mat[r][col];
            for (std::size_t cc = col; cc <= n; ++cc)
                mat[r][cc] = ctx.sub(mat[r][cc], ctx.mul(factor, mat[col][cc]));
        }
    }
    std::vector<Elem> solved(n);
    for (std::size_t i = 0; i < n; ++i) solved[i] = mat[i][n];

    if (solved != closed) throw std::logic_error("Vandermonde routes disagree");
    for (auto ci : solved)
        if (ci == 0) throw std::logic_error("Vandermonde coefficient vanished");
    return solved;
}

namespace {

// -(-1)^m as a field element
Elem minus_minus_one_pow(const FieldCtx& ctx, std::uint64_t m) {
    return (m % 2 == 0) ? ctx.neg(1) : 1;
}

} // namespace

CertificateReport build_certificate(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set,
                                    CertVariant variant) {
    CertificateReport rep;
    rep.variant = variant;
    rep.q = ctx.q;
    rep.d = sd.d;
    rep.set_size = a_set.count();

    auto restr = restricted_sumset(ctx, a_set);
    if (!restr.is_subset_of(sd.members))
        throw Error(ErrorKind::PreconditionViolated, "A +^ A is not contained in S_d");

    std::size_t N = rep.set_size;
    bool even = (N % 2 == 0);
    if (variant == CertVariant::OddN && even)
        throw Error(ErrorKind::ParityMismatch, "odd variant needs odd |A|");
    if ((variant == CertVariant::EvenN || variant == CertVariant::EvenNRefined) && !even)
        throw Error(ErrorKind::ParityMismatch, "even variants need even |A|");

    std::uint64_t e = sd.index_exponent;

    // A + A outside S_d u {0}?
    auto full = sumset(ctx, a_set, a_set);
    ElemSet sd0 = sd.members;
    sd0.set(0);
    rep.sumset_outside_sd0 = !full.is_subset_of(sd0);

    auto in_sd0 = [&](Elem x) { return x == 0 || sd.members.test(x); };
    auto doubled = [&](Elem a) { return ctx.add(a, a); };

    // evaluation order: ascending idx; 0 last when present; for the EvenN
    // variant without 0, put some element whose double lands in S_d u {0}
    // last if one exists, so the excluded point never hides the witness.
    std::vector<Elem> elems = a_set.to_vector();
    if (a_set.test(0)) {
        elems.erase(std::find(elems.begin(), elems.end(), Elem{0}));
        elems.push_back(0);
    } else if (variant == CertVariant::EvenN) {
        for (std::size_t i = elems.size(); i-- > 0;) {
            if (in_sd0(doubled(elems[i]))) {
                Elem chosen = elems[i];
                elems.erase(elems.begin() + static_cast<long>(i));
                elems.push_back(chosen);
                break;
            }
        }
    }
    rep.points = elems;

    std::size_t n_points = 0;
    if (variant == CertVariant::OddN) n_points = N;
    else if (variant == CertVariant::EvenN) n_points = N - 1;
    else n_points = N;
    rep.n_points = n_points;

    std::uint64_t m = 0;
    bool refined = (variant == CertVariant::EvenNRefined);
    if (variant == CertVariant::OddN) m = (N - 1) / 2;
    else m = (N - 2) / 2;
    rep.m = m;

    // trivial-case handling: the statements carry no content
    if ((variant != CertVariant::EvenNRefined && (N <= 2 || m == 0)) ||
        (variant == CertVariant::EvenNRefined && N == 0)) {
        rep.degenerate = true;
        rep.accepted = true;
        rep.degree_bound_ok = true;
        rep.multiplicity_ok = true;
        rep.inequality_ok = true;
        return rep;
    }

    std::vector<Elem> sys_points(elems.begin(), elems.begin() + static_cast<long>(n_points));
    auto coeffs = vandermonde_solve(ctx, sys_points, n_points - 1);

    // f(x) = -(-1)^{m or m+1} + sum c_i (x+a_i)^{m+e} (x-a_i)^{m or m+1}
    std::uint64_t lower_exp = refined ? m + 1 : m;
    Poly f;
    f.c = {minus_minus_one_pow(ctx, refined ? m + 1 : m)};
    for (std::size_t i = 0; i < n_points; ++i) {
        Poly plus;
        plus.c = {sys_points[i], 1};
        Poly minus;
        minus.c = {ctx.neg(sys_points[i]), 1};
        Poly term = poly_mul(ctx, poly_pow(ctx, plus, m + e), poly_pow(ctx, minus, lower_exp));
        f = poly_add(ctx, f, poly_scale(ctx, term, coeffs[i]));
    }

    rep.f_degree = f.deg();
    rep.identically_zero = f.is_zero();
    rep.degree_bound_ok = f.is_zero() || f.deg() <= static_cast<long>(e);

    // multiplicity pattern
    rep.multiplicity_ok = true;
    for (std::size_t j = 0; j < elems.size(); ++j) {
        Elem a = elems[j];
        std::uint64_t required;
        if (refined) {
            required = m + 1;
        } else if (j < n_points) {
            required = m + (in_sd0(doubled(a)) ? 1 : 0);
        } else {
            required = (a == 0) ? 2 * m + 1 : m + 1;
        }
        std::uint64_t achieved =
            f.is_zero() ? required : root_multiplicity(ctx, f, a);
        rep.required_multiplicity.push_back(required);
        rep.achieved_multiplicity.push_back(achieved);
        if (achieved < required) rep.multiplicity_ok = false;
    }

    // witness: some a_j among the system points with 2a_j outside S_d u {0}
    // must make E^(m) f nonzero, matching the closed form
    //   c_j (2a_j)^m ((2a_j)^e - 1)              (plain variants)
    rep.witness_ok = true;
    if (rep.sumset_outside_sd0 && !refined) {
        Poly em = hyper_derivative(ctx, f, m);
        for (std::size_t j = 0; j < n_points; ++j) {
            Elem a = sys_points[j];
            Elem two_a = doubled(a);
            if (in_sd0(two_a)) continue;
            Elem direct = poly_eval(ctx, em, a);
            Elem closed = ctx.mul(ctx.mul(coeffs[j], ctx.pow(two_a, m)),
                                  ctx.sub(ctx.pow(two_a, e), 1));
            if (direct != closed || direct == 0) rep.witness_ok = false;
            if (!rep.nonzero_witness) rep.nonzero_witness = a;
        }
        if (!rep.nonzero_witness) rep.witness_ok = false; // must exist
    }

    // derived inequality
    auto [dbl_sd, dbl_sd0] = doubles_condition(ctx, sd, a_set);
    if (!refined) {
        if (variant == CertVariant::OddN) {
            rep.inequality_lhs = N * (N - 1) / 2 + dbl_sd0;
        } else if (a_set.test(0)) {
            rep.inequality_lhs = N * (N - 1) / 2 + dbl_sd;
        } else {
            rep.inequality_lhs = ((N - 1) * (N - 1) + 1) / 2;
        }
        rep.inequality_rhs = e;
        rep.inequality_ok = f.is_zero() || rep.inequality_lhs <= rep.inequality_rhs;
    } else {
        rep.inequality_lhs = N * (m + 1);
        rep.inequality_rhs = e;
        rep.inequality_ok = rep.identically_zero || rep.inequality_lhs <= rep.inequality_rhs;
    }

    // refined conclusions, via the identity (valid once f vanishes identically)
    //   c_j ((2a_j)^e - 1) prod_i (a_j + a_i) = C(m+e, m+1) * 2a_j
    if (refined && rep.identically_zero) {
        std::uint64_t binom = binomial_mod_p(m + e, m + 1, ctx.p);
        rep.binom_nonzero = binom != 0;
        rep.doubles_disjoint = dbl_sd == 0;
        bool identity_ok = true;
        for (std::size_t j = 0; j < N; ++j) {
            Elem a = sys_points[j];
            if (a == 0) continue;
            Elem lhs = ctx.mul(coeffs[j], ctx.sub(ctx.pow(doubled(a), e), 1));
            for (std::size_t i = 0; i < N; ++i) lhs = ctx.mul(lhs, ctx.add(a, sys_points[i]));
            Elem rhs = ctx.mul(static_cast<Elem>(binom), doubled(a));
            if (lhs != rhs) identity_ok = false;
            if (!rep.nonzero_witness && !in_sd0(doubled(a))) rep.nonzero_witness = a;
        }
        rep.witness_ok = identity_ok;
        rep.mod8_ok = sd.d != 2 || (ctx.q % 8 == 3 || ctx.q % 8 == 5);
    }

    if (refined) {
        // dichotomy: nonzero f forces the size inequality; zero f forces the
        // structural conclusions (those need the sumset hypothesis to bite)
        bool conclusions_ok = !rep.sumset_outside_sd0 ||
                              (rep.binom_nonzero && rep.doubles_disjoint && rep.mod8_ok);
        rep.accepted = rep.degree_bound_ok && rep.multiplicity_ok &&
                       (rep.identically_zero ? (rep.witness_ok && conclusions_ok)
                                             : rep.inequality_ok);
    } else {
        rep.accepted = rep.degree_bound_ok && rep.multiplicity_ok && rep.inequality_ok &&
                       (!rep.sumset_outside_sd0 || rep.witness_ok);
    }
    return rep;
}

} // namespace rsl
