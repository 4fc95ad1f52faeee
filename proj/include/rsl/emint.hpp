#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsl/clique.hpp"
#include "rsl/density.hpp"

namespace rsl {

/// Exact integer d-th-root test, arbitrary precision.
bool is_dth_power(const BigInt& n, std::uint64_t d);

struct EmSearchReport {
    std::uint64_t range = 0; // sets drawn from {1..range}
    std::uint64_t d = 0;
    std::size_t best_size = 0;
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::uint64_t nodes = 0;
    double wall_time_s = 0.0;
    bool timed_out = false;
};

/// Largest A in {1..N} whose pairwise sums of distinct elements are all
/// perfect d-th powers: a maximum clique on the sum graph, via the same
/// branch-and-bound kernel as the field-side searches.
EmSearchReport search_max_em_set(std::uint64_t N, std::uint64_t d, const CliqueOptions& opts = {});

/// All C(|A|,2) pairwise sums are perfect d-th powers?
bool em_verify(const std::vector<std::uint64_t>& a, std::uint64_t d);

struct SieveBound {
    std::uint64_t range = 0;
    std::uint64_t d = 0;
    double q_cutoff = 0.0;
    std::uint64_t primes_used = 0;
    double numerator = 0.0;
    double denominator = 0.0;
    std::optional<double> bound; // empty = Unbounded (denominator <= 0)
    double asymptote = 0.0;      // 2 phi(d)/d log N
};

/// Gallagher larger-sieve bound on |A| with the per-prime caps
/// |A_p| <= sqrt(2(p-1)/d + 1) + 2 over primes p = 1 mod d, p <= Q.
/// Q defaults to (2/d)(phi(d) log N)^2.
SieveBound gallagher_bound(std::uint64_t N, std::uint64_t d,
                           std::optional<double> q_cutoff = std::nullopt);

std::uint64_t euler_phi(std::uint64_t d);

struct GenusResult {
    std::uint64_t genus = 0;  // ceil(k/2) - 1
    bool squarefree = false;  // gcd(f, f') constant over the rationals
};

/// Genus bookkeeping for y^2 = (8/d)(x^k - 1) + 1; throws RepeatedRoot when
/// the defining polynomial is not squarefree (exactly d = 8).
GenusResult genus_check(std::uint64_t d, std::uint64_t k);

} // namespace rsl
