#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/elem_set.hpp"
#include "rsl/ffield.hpp"
#include "rsl/subgroup.hpp"

namespace rsl {

/// Dense polynomial over F_q, coefficients constant-term first, no trailing
/// zeros. The zero polynomial is the empty list (degree -1).
struct Poly {
    std::vector<Elem> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

Poly poly_add(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_mul(const FieldCtx& ctx, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& ctx, const Poly& a, Elem s);
Poly poly_pow(const FieldCtx& ctx, Poly base, std::uint64_t e);
Elem poly_eval(const FieldCtx& ctx, const Poly& f, Elem x);

/// Quotient of f by (x - c); remainder returned separately.
std::pair<Poly, Elem> poly_divide_linear(const FieldCtx& ctx, const Poly& f, Elem c);

/// C(n, k) mod p by Lucas decomposition (p prime).
std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// n-th hyper-derivative: coefficient j-n of the result is C(j, n) c_j.
Poly hyper_derivative(const FieldCtx& ctx, const Poly& f, std::uint64_t n);

/// Multiplicity of c as a root of f != 0, via vanishing hyper-derivatives,
/// cross-checked against repeated division by (x - c). Throws ZeroPolynomial.
std::uint64_t root_multiplicity(const FieldCtx& ctx, const Poly& f, Elem c);

/// Solves sum_i c_i a_i^j = 0 for 0 <= j <= n-2 and sum_i c_i a_i^{n-1} = 1
/// by elimination, checked against the closed form prod_{k != i}(a_i-a_k)^-1.
/// target_row must equal points.size()-1. Throws DuplicatePoints.
std::vector<Elem> vandermonde_solve(const FieldCtx& ctx, const std::vector<Elem>& points,
                                    std::size_t target_row);

enum class CertVariant { OddN, EvenN, EvenNRefined };

/// Machine-checked record of the auxiliary-polynomial construction: the
/// polynomial is expanded literally and every claimed property is verified
/// on the instance.
struct CertificateReport {
    CertVariant variant = CertVariant::OddN;
    std::uint64_t q = 0, d = 0;
    std::size_t set_size = 0;
    std::size_t n_points = 0;
    std::uint64_t m = 0;
    bool degenerate = false;

    long f_degree = -1; // -1 when identically zero
    bool degree_bound_ok = false;

    std::vector<Elem> points;                      // evaluation order, a_N last
    std::vector<std::uint64_t> achieved_multiplicity; // per points[] entry
    std::vector<std::uint64_t> required_multiplicity;
    bool multiplicity_ok = false;

    bool sumset_outside_sd0 = false; // A+A not <= S_d u {0}
    std::optional<Elem> nonzero_witness;
    bool witness_ok = false; // E^(m) f(a_j0) nonzero and matches the closed form

    bool identically_zero = false;
    std::uint64_t inequality_lhs = 0, inequality_rhs = 0;
    bool inequality_ok = false;

    // EvenNRefined conclusions (meaningful when identically_zero)
    bool binom_nonzero = false;
    bool doubles_disjoint = false;
    bool mod8_ok = false; // d = 2 only: q = 3,5 mod 8

    bool accepted = false;
};

/// Builds and verifies the certificate for A (A +^ A <= S_d required).
/// Throws PreconditionViolated, ParityMismatch.
CertificateReport build_certificate(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set,
                                    CertVariant variant);

} // namespace rsl
