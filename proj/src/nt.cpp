#include "rsl/nt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rsl::nt {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // These witnesses decide primality for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<u64> factor(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p < 100 && p * p <= n; ++p) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> distinct_prime_factors(u64 n) {
    auto f = factor(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

u64 iroot(u64 n, unsigned d) {
    if (d == 1 || n < 2) return n;
    if (d == 2) return isqrt(n);
    auto pow_le = [&](u64 b) {
        // true iff b^d <= n, overflow-safe
        u128 acc = 1;
        for (unsigned i = 0; i < d; ++i) {
            acc *= b;
            if (acc > n) return false;
        }
        return true;
    };
    u64 lo = 1, hi = 2;
    while (pow_le(hi)) hi <<= 1;
    while (lo + 1 < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (pow_le(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace rsl::nt
