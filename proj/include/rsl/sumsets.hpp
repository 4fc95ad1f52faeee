#pragma once

#include <cstdint>
#include <utility>

#include "rsl/elem_set.hpp"
#include "rsl/ffield.hpp"
#include "rsl/subgroup.hpp"

namespace rsl {

/// A +^ A = { a + b : a, b in A, a != b }.
ElemSet restricted_sumset(const FieldCtx& ctx, const ElemSet& a_set);

/// A + B = { a + b : a in A, b in B }.
ElemSet sumset(const FieldCtx& ctx, const ElemSet& a_set, const ElemSet& b_set);

enum class SidonClass {
    Sidon,     // all sums a_i + a_j, i <= j, distinct
    WeakSidon, // i < j sums distinct, but some collision involves a double
    Neither,
};

SidonClass is_sidon(const FieldCtx& ctx, const ElemSet& a_set);

/// (#{a in A : 2a in S_d}, #{a in A : 2a in S_d or 2a = 0}).
std::pair<std::uint64_t, std::uint64_t>
doubles_condition(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set);

/// { u*a : a in A } for u != 0.
ElemSet dilate(const FieldCtx& ctx, Elem u, const ElemSet& a_set);

} // namespace rsl
