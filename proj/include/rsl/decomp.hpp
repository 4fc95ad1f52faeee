#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsl/cayley.hpp"
#include "rsl/elem_set.hpp"
#include "rsl/ffield.hpp"
#include "rsl/parallel.hpp"
#include "rsl/subgroup.hpp"
#include "rsl/sumsets.hpp"

namespace rsl {

/// What equation the search targets. The zero-membership distinction is a
/// hard mode, never inferred.
enum class DecompMode {
    RestrictedExact, // A +^ A = S_d
    FullExact,       // A + A  = S_d
    FullExactZero,   // A + A  = S_d u {0}
};

struct DecompOptions {
    double budget_secs = 60.0;
    bool symmetry_reduction = true; // explore only dilation-canonical prefixes
    Parallelism par;
};

struct DecompSolution {
    ElemSet canonical;          // lexicographically least dilate
    std::vector<ElemSet> orbit; // all distinct dilates u*A, u in S_d, lex order
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double wall_time_s = 0.0;
    bool timed_out = false;
    std::uint64_t n_min = 0, n_max = 0;
};

struct StructuralVerdict {
    bool decomposition_ok = false;
    std::size_t size = 0;
    bool size_even = false;
    bool zero_in_set = false;
    SidonClass sidon = SidonClass::Neither;
    bool sidon_ok = false;       // odd-|A|-or-0-in-A branch
    std::uint64_t doubles_in_sd = 0;
    bool doubles_ok = false;
    bool q_formula_ok = false;   // q = d|A|(|A|-1)/2 + 1
    bool ceiling_ok = false;     // even branch: |A| = 2*ceil(sqrt((q-1)/2d))
    bool window_ok = false;      // even branch: frac in (1/2, 3/4), exact test
    bool ok = false;
};

struct DecompositionReport {
    std::uint64_t q = 0, d = 0;
    DecompMode mode = DecompMode::RestrictedExact;
    std::vector<DecompSolution> solutions;
    std::vector<StructuralVerdict> structural; // per solution, RestrictedExact only
    SearchStats stats;
};

/// Exhaustive search for every A solving the mode equation. DFS clique
/// extension over the bitset graph with window, coverage and attainability
/// pruning; optional dilation-symmetry quotient.
DecompositionReport search_decomposition(const FieldCtx& ctx, std::uint64_t d, DecompMode mode,
                                         const DecompOptions& opts = {});

struct VerifyResult {
    bool ok = false;
    ElemSet missing; // target elements no pair reaches
    ElemSet excess;  // reached elements outside the target
};

/// Does A +^ A equal S_d exactly? Diagnostics on failure.
VerifyResult verify_decomposition(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set);

/// The structural facts every decomposition must satisfy. Pre: A +^ A = S_d
/// (throws NotADecomposition otherwise).
StructuralVerdict check_sidon_structure(const FieldCtx& ctx, const SubgroupSd& sd,
                                        const ElemSet& a_set);

struct HpBoundResult {
    std::uint64_t lhs = 0;       // |A| |B|
    std::uint64_t subgroup_size = 0;
    std::uint64_t overlap = 0;   // |A n (-B)|
    bool ok = false;             // lhs <= subgroup_size + overlap
};

/// Sumset bound |A||B| <= (q-1)/d + |A n (-B)|, gated on A+B <= S_d u {0}
/// and the binomial condition C(|B|-1+(q-1)/d, (q-1)/d) != 0 mod p.
/// Throws PreconditionViolated when the gate fails.
HpBoundResult hp_bound_check(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set,
                             const ElemSet& b_set);

/// True iff C(m_plus_n, n) != 0 mod p, decided by carry counting in base p.
bool kummer_nonvanishing(std::uint64_t m_plus_n, std::uint64_t n, std::uint64_t p);

/// Digit-driven |B| selection: a subset size with 2|B| >= |A|+1 whose
/// binomial gate holds automatically (both base-p digit branches).
std::uint64_t digit_driven_b_size(std::uint64_t a_size, std::uint64_t p, std::uint64_t d);

struct NagellVerdict {
    std::optional<std::uint64_t> n_value; // q = N^2 - N + 1
    bool prime_power_r_ge_2 = false;
    bool exceptional = false; // the lone higher-power solution q = 343, N = 19
};

NagellVerdict nagell_gate(std::uint64_t q);

struct Thm14Verdict {
    std::uint64_t q = 0, d = 0, k = 0;
    bool search_empty = false;
    bool search_complete = false;
    // odd-|A| obstruction: the size formula has no usable integer solution
    bool odd_size_exists = false;
    std::uint64_t odd_size = 0;
    bool odd_divisor_blocked = false; // 2p^r + 2kN - k > k^2 - 4
    // even-|A| obstruction: the fractional part sits below the window
    bool two_k_divides = false;          // 2k | p^r - 1
    bool frac_in_low_interval = false;   // frac(sqrt((q-1)/2d)) in (0, 1/2k)
    bool window_excluded = false;        // frac not in (1/2, 3/4)
    bool ok = false;
};

/// d = 2k^2 (k >= 3), q an even power of p = 1 mod d: the search must come
/// back empty, and both arithmetic obstructions from the proof are evaluated.
Thm14Verdict check_thm14(const FieldCtx& ctx, std::uint64_t d, const DecompOptions& opts = {});

} // namespace rsl
