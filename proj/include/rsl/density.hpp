#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsl/errors.hpp"

namespace rsl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational endpoint for the fractional-part window tests.
struct Rational {
    std::uint64_t num;
    std::uint64_t den;
};

/// Primes p <= limit with p = 1 mod d, by segmented sieve.
std::vector<std::uint64_t> prime_stream(std::uint64_t d, std::uint64_t limit);

/// floor(sqrt(a/b)) for positive a, b.
BigInt floor_sqrt_rational(const BigInt& a, const BigInt& b);

/// ceil(sqrt(a/b)) for positive a, b.
BigInt ceil_sqrt_rational(const BigInt& a, const BigInt& b);

/// frac(sqrt(a/b)) in the open interval (lo, hi), decided by cross-multiplied
/// integer comparisons only. Boundary hits return false. Throws NonPositive.
bool frac_window_test(const BigInt& a, const BigInt& b, Rational lo, Rational hi);

/// frac(sqrt(a/b)) == lo exactly (used to tally window-boundary hits).
bool frac_boundary_hit(const BigInt& a, const BigInt& b, Rational lo);

struct DigitVerdict {
    std::uint64_t j;
    std::uint64_t digit;
    std::uint64_t bound;
    bool ok;
};

struct DigitConditions {
    BigInt alpha;                     // ceil(sqrt((p^s - 1)/(2d)))
    std::vector<DigitVerdict> digits; // base-p digits of alpha, low to high
    bool all_ok;
};

/// Base-p digit bounds on alpha: c_j <= (d-1)(p-1)/d for j >= 1 and
/// c_0 <= (d-1)(p-1)/d + 1. Requires p = 1 mod d.
DigitConditions digit_conditions(std::uint64_t p, std::uint64_t d, std::uint64_t s);

struct ScanRecord {
    std::uint64_t p = 0, d = 0, s = 0;
    BigInt alpha;
    bool in_cd = false;        // p^s = d k(k-1)/2 + 1 solvable in integers
    bool in_window = false;    // frac(sqrt((q-1)/2d)) in (1/2, 3/4)
    bool boundary_half = false;// frac exactly 1/2 (tallied, not classified)
    bool digits_ok = false;
    bool in_dtilde = false;    // the limiting predicate the density compares against
};

struct DensitySummary {
    std::uint64_t d = 0, s = 0, limit = 0;
    std::uint64_t primes_scanned = 0;
    std::uint64_t dtilde_hits = 0;
    std::uint64_t window_hits = 0;
    std::uint64_t boundary_hits = 0;
    std::uint64_t cd_hits = 0;
    std::uint64_t digit_hits = 0;
    double fraction = 0.0;  // dtilde_hits / primes_scanned
    double predicted = 0.0; // (1/4) ((d-1)/d)^r, r = ceil(s/2) - 1
};

/// Scans P_d up to `limit` and evaluates every predicate exactly. d >= 3;
/// for even s, 2d must not be a perfect square (throws PredicateMismatch).
DensitySummary empirical_density(std::uint64_t d, std::uint64_t s, std::uint64_t limit,
                                 std::vector<ScanRecord>* records = nullptr);

} // namespace rsl
