#pragma once

#include <complex>
#include <cstdint>

#include "rsl/elem_set.hpp"
#include "rsl/ffield.hpp"

namespace rsl {

/// The multiplicative subgroup S_d = { x^d : x in F_q^* } of order (q-1)/d.
struct SubgroupSd {
    std::uint64_t d = 0;
    std::uint64_t index_exponent = 0; // (q-1)/d
    ElemSet members;
};

enum class Residue { InSd, NotInSd, Zero };

/// Members computed both as the d-th power image and by the exponent test
/// x^{(q-1)/d} == 1; the two are required to agree. Throws NotADivisor.
SubgroupSd compute_subgroup(const FieldCtx& ctx, std::uint64_t d);

/// Classification of x by x^{(q-1)/d}.
Residue residue_symbol(const FieldCtx& ctx, const SubgroupSd& sd, Elem x);

/// Double sum  sum_{a,b in A} chi(a+b)  for the order-d character pinned to
/// the field generator: chi(g^t) = exp(2*pi*i*t/d), chi(0) = 0.
/// Requires discrete-log tables. Throws TablesUnavailable, NotADivisor.
std::complex<double> char_sum(const FieldCtx& ctx, std::uint64_t d, const ElemSet& a_set);

} // namespace rsl
