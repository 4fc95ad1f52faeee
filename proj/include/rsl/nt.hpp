#pragma once

#include <cstdint>
#include <vector>

namespace rsl::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Prime factorization (trial division + Pollard rho), ascending, with multiplicity.
std::vector<u64> factor(u64 n);

/// Distinct prime factors, ascending.
std::vector<u64> distinct_prime_factors(u64 n);

/// floor(sqrt(n)) in exact integer arithmetic.
u64 isqrt(u64 n);

/// Largest t with t^d <= n (n >= 0, d >= 1).
u64 iroot(u64 n, unsigned d);

} // namespace rsl::nt
