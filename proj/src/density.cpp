#include "rsl/density.hpp"

#include <cmath>
#include <string>

namespace rsl {

std::vector<std::uint64_t> prime_stream(std::uint64_t d, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    if (limit > 100'000'000)
        throw Error(ErrorKind::PreconditionViolated, "sieve limit capped at 1e8");

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint8_t> small(root + 1, 1);
    small[0] = small[1] = 0;
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    const std::uint64_t seg_size = 1u << 20;
    std::vector<std::uint8_t> seg;
    for (std::uint64_t lo = 2; lo <= limit; lo += seg_size) {
        std::uint64_t hi = std::min(limit, lo + seg_size - 1);
        seg.assign(hi - lo + 1, 1);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (seg[n - lo] && (d <= 1 || n % d == 1)) out.push_back(n);
    }
    return out;
}

BigInt floor_sqrt_rational(const BigInt& a, const BigInt& b) {
    if (a <= 0 || b <= 0) throw Error(ErrorKind::NonPositive, "radicand must be positive");
    BigInt t = sqrt(BigInt(a / b));
    while ((t + 1) * (t + 1) * b <= a) ++t;
    while (t > 0 && t * t * b > a) --t;
    return t;
}

BigInt ceil_sqrt_rational(const BigInt& a, const BigInt& b) {
    BigInt t = floor_sqrt_rational(a, b);
    return (t * t * b == a) ? t : t + 1;
}

bool frac_window_test(const BigInt& a, const BigInt& b, Rational lo, Rational hi) {
    BigInt t = floor_sqrt_rational(a, b);
    // (t + lo)^2 < a/b  and  a/b < (t + hi)^2, cross-multiplied
    BigInt lo_lhs = (t * lo.den + lo.num);
    bool above_lo = lo_lhs * lo_lhs * b < a * BigInt(lo.den) * lo.den;
    BigInt hi_rhs = (t * hi.den + hi.num);
    bool below_hi = a * BigInt(hi.den) * hi.den < hi_rhs * hi_rhs * b;
    return above_lo && below_hi;
}

bool frac_boundary_hit(const BigInt& a, const BigInt& b, Rational lo) {
    BigInt t = floor_sqrt_rational(a, b);
    BigInt lhs = t * lo.den + lo.num;
    return lhs * lhs * b == a * BigInt(lo.den) * lo.den;
}

DigitConditions digit_conditions(std::uint64_t p, std::uint64_t d, std::uint64_t s) {
    if (d < 2 || (p - 1) % d != 0)
        throw Error(ErrorKind::PreconditionViolated, "digit conditions need p = 1 mod d");
    DigitConditions out;
    BigInt q = 1;
    for (std::uint64_t i = 0; i < s; ++i) q *= p;
    out.alpha = ceil_sqrt_rational(q - 1, BigInt(2) * d);

    std::uint64_t bound = (d - 1) * (p - 1) / d;
    BigInt v = out.alpha;
    std::uint64_t j = 0;
    out.all_ok = true;
    do {
        std::uint64_t digit = static_cast<std::uint64_t>(v % p);
        std::uint64_t b = (j == 0) ? bound + 1 : bound;
        bool ok = digit <= b;
        out.digits.push_back({j, digit, b, ok});
        out.all_ok = out.all_ok && ok;
        v /= p;
        ++j;
    } while (v > 0);
    return out;
}

DensitySummary empirical_density(std::uint64_t d, std::uint64_t s, std::uint64_t limit,
                                 std::vector<ScanRecord>* records) {
    if (d < 3) throw Error(ErrorKind::PreconditionViolated, "density scan needs d >= 3");
    if (s < 1) throw Error(ErrorKind::PreconditionViolated, "s >= 1");
    std::uint64_t r = (s + 1) / 2 - 1;
    if (s % 2 == 0) {
        std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(2 * d)));
        for (std::uint64_t t : {root, root + 1})
            if (t * t == 2 * d)
                throw Error(ErrorKind::PredicateMismatch,
                            "even s requires 2d to not be a perfect square (got 2d = " +
                                std::to_string(2 * d) + ")");
    }

    DensitySummary sum;
    sum.d = d;
    sum.s = s;
    sum.limit = limit;
    sum.predicted = 0.25 * std::pow(static_cast<double>(d - 1) / static_cast<double>(d),
                                    static_cast<double>(r));

    auto primes = prime_stream(d, limit);
    const Rational half{1, 2}, three_quarters{3, 4}, zero{0, 1}, d_frac{d - 1, d};
    const BigInt two_d = BigInt(2) * d;

    for (std::uint64_t p : primes) {
        ScanRecord rec;
        rec.p = p;
        rec.d = d;
        rec.s = s;

        BigInt q = 1;
        for (std::uint64_t i = 0; i < s; ++i) q *= p;

        // exact predicates at the actual prime power
        rec.in_window = frac_window_test(q - 1, two_d, half, three_quarters);
        rec.boundary_half = frac_boundary_hit(q - 1, two_d, half);
        auto dc = digit_conditions(p, d, s);
        rec.alpha = dc.alpha;
        rec.digits_ok = dc.all_ok;

        // q = d k(k-1)/2 + 1 for integer k
        BigInt disc = 1 + 8 * (q - 1) / d;
        BigInt t = sqrt(disc);
        while ((t + 1) * (t + 1) <= disc) ++t;
        while (t * t > disc) --t;
        rec.in_cd = (t * t == disc) && ((1 + t) % 2 == 0);

        // the limiting predicate: windows on p^(j+1/2)/sqrt(2d) resp. p^j/sqrt(2d)
        bool dt;
        if (s % 2 == 1) {
            BigInt top = 1;
            for (std::uint64_t i = 0; i < 2 * r + 1; ++i) top *= p;
            dt = frac_window_test(top, two_d, half, three_quarters);
            BigInt low = 1; // p^(2j+1) for j = 0..r-1
            for (std::uint64_t j = 0; dt && j < r; ++j) {
                BigInt rad = low * p;
                dt = frac_window_test(rad, two_d, zero, d_frac);
                low = rad * p;
            }
        } else {
            BigInt top = 1;
            for (std::uint64_t i = 0; i < 2 * r + 2; ++i) top *= p;
            dt = frac_window_test(top, two_d, half, three_quarters);
            BigInt low = 1;
            for (std::uint64_t j = 1; j <= r; ++j) {
                low *= p;
                low *= p; // p^(2j)
                if (dt) dt = frac_window_test(low, two_d, zero, d_frac);
            }
        }
        rec.in_dtilde = dt;

        ++sum.primes_scanned;
        sum.dtilde_hits += rec.in_dtilde;
        sum.window_hits += rec.in_window;
        sum.boundary_hits += rec.boundary_half;
        sum.cd_hits += rec.in_cd;
        sum.digit_hits += rec.digits_ok;
        if (records) records->push_back(rec);
    }
    sum.fraction = sum.primes_scanned
                       ? static_cast<double>(sum.dtilde_hits) / static_cast<double>(sum.primes_scanned)
                       : 0.0;
    return sum;
}

} // namespace rsl
