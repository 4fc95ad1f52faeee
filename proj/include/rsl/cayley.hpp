#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rsl/clique.hpp"
#include "rsl/elem_set.hpp"
#include "rsl/ffield.hpp"
#include "rsl/subgroup.hpp"

namespace rsl {

enum class GraphKind {
    Cayley,    // x ~ y iff x - y in connection (needs connection = -connection, 0 excluded)
    CayleySum, // x ~ y iff x != y and x + y in connection
};

struct CayleyGraph {
    FieldCtx ctx;
    std::uint64_t d = 0;
    ElemSet connection;
    GraphKind kind = GraphKind::CayleySum;
    bool zero_in_connection = false;
    std::vector<ElemSet> rows; // rows[x] = neighbours of x
};

/// d-Paley sum graph GPS(q,d) = CayS(F_q, S_d u {0}); with include_zero=false
/// the connection is S_d only (the variant the strict restricted-sumset
/// searches need). Throws NotADivisor.
CayleyGraph build_gps(const FieldCtx& ctx, std::uint64_t d, bool include_zero = true);

/// d-Paley (difference) graph GP(q,d) = Cay(F_q, S_d); requires q = 1 mod 2d
/// so the graph is undirected. Throws ParityViolation, NotADivisor.
CayleyGraph build_gp(const FieldCtx& ctx, std::uint64_t d);

enum class EkrClass { Canonical, NonCanonical };

struct EkrVerdict {
    EkrClass cls = EkrClass::NonCanonical;
    Elem alpha = 0; // least alpha in S_d with witness = alpha * F_sqrt(q), when canonical
};

struct EkrReport {
    ElemSet subfield; // F_sqrt(q) as the fixed set of x -> x^sqrt(q)
    std::vector<EkrVerdict> per_witness;
    bool all_canonical = false;
};

/// Tests each witness for the canonical (subfield-dilate) structure.
/// Requires q to be a perfect square; throws NotASquare.
EkrReport classify_ekr(const FieldCtx& ctx, std::uint64_t d, const std::vector<ElemSet>& witnesses);

} // namespace rsl
