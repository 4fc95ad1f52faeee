#pragma once

#include <cstdint>
#include <vector>

#include "rsl/elem_set.hpp"
#include "rsl/errors.hpp"

namespace rsl {

/// Immutable description of F_{p^k}, p an odd prime. Elements are integer
/// indices in [0, q): the base-p digits of idx are the coefficients of the
/// residue polynomial, constant term first. idx 0 and 1 are the additive and
/// multiplicative identities.
///
/// Construction is deterministic: the modulus is the lexicographically
/// smallest monic irreducible polynomial of degree k (coefficients compared
/// constant-term first) and the generator is the smallest idx of full order.
/// Discrete-log tables are built eagerly for q <= log_table_cap(); above the
/// cap multiplication falls back to polynomial arithmetic mod the modulus.
class FieldCtx {
  public:
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus; // k+1 coefficients, constant first, monic
    Elem generator = 0;

    static constexpr std::uint64_t log_table_cap() { return std::uint64_t{1} << 20; }

    bool has_tables() const { return !log_table.empty(); }

    Elem add(Elem a, Elem b) const {
        if (k == 1) {
            Elem s = a + b;
            return s >= p ? s - p : s;
        }
        return add_digits(a, b);
    }

    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) {
            std::uint64_t t = log_table[a] + log_table[b];
            if (t >= q - 1) t -= q - 1;
            return antilog_table[t];
        }
        return mul_poly(a, b);
    }

    /// Polynomial-basis multiplication; always available regardless of tables.
    Elem mul_poly(Elem a, Elem b) const;

    Elem pow(Elem a, std::uint64_t e) const;
    Elem inv(Elem a) const;

    std::vector<std::uint64_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint64_t>& c) const;

    /// Discrete log base `generator` (a != 0, tables required).
    std::uint64_t dlog(Elem a) const;

    std::uint64_t log_entry(Elem a) const { return log_table[a]; }
    Elem antilog_entry(std::uint64_t t) const { return antilog_table[t]; }

  private:
    friend FieldCtx make_field(std::uint64_t, std::uint64_t);

    Elem add_digits(Elem a, Elem b) const;

    std::vector<std::uint32_t> log_table;  // index: element idx; valid for idx != 0
    std::vector<std::uint32_t> antilog_table; // index: exponent t in [0, q-1)
};

/// Build F_{p^k}. Throws NonPrime/EvenPrime/Overflow.
FieldCtx make_field(std::uint64_t p, std::uint64_t k);

/// Smallest idx of multiplicative order exactly q-1 (order verified against
/// every prime divisor of q-1).
Elem find_generator(const FieldCtx& ctx);

/// Irreducibility over F_p of a monic polynomial given as coefficient list
/// (constant first). Root scan for degree <= 3, x^{p^i}-gcd test above.
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& coeffs, std::uint64_t p);

} // namespace rsl
