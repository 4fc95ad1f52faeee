#include "rsl/emint.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>

#include "rsl/nt.hpp"

namespace rsl {

namespace {
using boost::multiprecision::cpp_rational;
}

bool is_dth_power(const BigInt& n, std::uint64_t d) {
    if (n < 0) return false;
    if (d == 0) return n == 1;
    if (n == 0 || n == 1 || d == 1) return true;
    // binary search for the integer d-th root
    BigInt lo = 1, hi = 2;
    auto pw = [&](const BigInt& b) {
        BigInt acc = 1;
        for (std::uint64_t i = 0; i < d; ++i) {
            acc *= b;
            if (acc > n) break;
        }
        return acc;
    };
    while (pw(hi) < n) hi <<= 1;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        BigInt v = pw(mid);
        if (v == n) return true;
        if (v < n)
            lo = mid + 1;
        else
            hi = mid;
    }
    return pw(lo) == n;
}

bool em_verify(const std::vector<std::uint64_t>& a, std::uint64_t d) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!is_dth_power(BigInt(a[i]) + a[j], d)) return false;
    return true;
}

EmSearchReport search_max_em_set(std::uint64_t N, std::uint64_t d, const CliqueOptions& opts) {
    if (N == 0 || N > 100'000)
        throw Error(ErrorKind::PreconditionViolated, "exhaustive mode requires 1 <= N <= 1e5");
    EmSearchReport rep;
    rep.range = N;
    rep.d = d;

    // vertex v represents the integer v+1
    std::vector<ElemSet> adj(N, ElemSet(N));
    std::vector<std::uint8_t> power(2 * N + 1, 0);
    for (std::uint64_t s = 2; s <= 2 * N; ++s) power[s] = is_dth_power(BigInt(s), d);
    for (std::uint64_t i = 1; i <= N; ++i)
        for (std::uint64_t j = i + 1; j <= N; ++j)
            if (power[i + j]) {
                adj[i - 1].set(j - 1);
                adj[j - 1].set(i - 1);
            }

    auto clique = max_clique(adj, opts);
    rep.best_size = clique.omega;
    rep.nodes = clique.nodes_explored;
    rep.wall_time_s = clique.wall_time_s;
    rep.timed_out = clique.timed_out;
    for (auto& w : clique.witnesses) {
        std::vector<std::uint64_t> ints;
        w.for_each([&](std::uint64_t v) { ints.push_back(v + 1); });
        rep.witnesses.push_back(std::move(ints));
    }
    return rep;
}

SieveBound gallagher_bound(std::uint64_t N, std::uint64_t d, std::optional<double> q_cutoff) {
    if (N < 3) throw Error(ErrorKind::PreconditionViolated, "N >= 3");
    SieveBound out;
    out.range = N;
    out.d = d;
    double log_n = std::log(static_cast<double>(N));
    double phi = static_cast<double>(euler_phi(d));
    out.asymptote = 2.0 * phi / static_cast<double>(d) * log_n;
    out.q_cutoff = q_cutoff.value_or(2.0 / static_cast<double>(d) * phi * phi * log_n * log_n);
    if (out.q_cutoff < 2) out.q_cutoff = 2;

    auto primes = prime_stream(d, static_cast<std::uint64_t>(out.q_cutoff));
    out.primes_used = primes.size();
    double sum_log = 0.0, sum_scaled = 0.0;
    for (std::uint64_t p : primes) {
        double lp = std::log(static_cast<double>(p));
        double cap = std::sqrt(2.0 * static_cast<double>(p - 1) / static_cast<double>(d) + 1.0) + 2.0;
        cap = std::min(cap, static_cast<double>(p));
        sum_log += lp;
        sum_scaled += lp / cap;
    }
    out.numerator = sum_log - log_n;
    out.denominator = sum_scaled - log_n;
    if (out.denominator > 0) out.bound = out.numerator / out.denominator;
    return out;
}

std::uint64_t euler_phi(std::uint64_t d) {
    if (d == 0) throw Error(ErrorKind::PreconditionViolated, "phi needs d >= 1");
    std::uint64_t result = d;
    for (std::uint64_t p : nt::distinct_prime_factors(d)) result -= result / p;
    return d == 1 ? 1 : result;
}

GenusResult genus_check(std::uint64_t d, std::uint64_t k) {
    if (d < 2 || k < 3)
        throw Error(ErrorKind::PreconditionViolated, "genus check needs d >= 2, k >= 3");

    // f(x) = (8/d)(x^k - 1) + 1 over Q; squarefree iff gcd(f, f') is constant
    using RPoly = std::vector<cpp_rational>;
    auto deg = [](const RPoly& f) {
        int i = static_cast<int>(f.size()) - 1;
        while (i >= 0 && f[static_cast<std::size_t>(i)] == 0) --i;
        return i;
    };
    RPoly f(k + 1, 0);
    f[k] = cpp_rational(8, d);
    f[0] = cpp_rational(1) - cpp_rational(8, d);
    RPoly fp(k, 0);
    for (std::uint64_t j = 1; j <= k; ++j) fp[j - 1] = f[j] * j;

    RPoly a = f, b = fp;
    while (deg(b) >= 0) {
        int da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        while ((da = deg(a)) >= (db = deg(b)) && db >= 0) {
            cpp_rational c = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
            for (int i = 0; i <= db; ++i)
                a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
            a[static_cast<std::size_t>(da)] = 0; // kill rounding-free leading term explicitly
        }
        std::swap(a, b);
    }
    bool squarefree = deg(a) == 0;
    if (!squarefree)
        throw Error(ErrorKind::RepeatedRoot, "defining polynomial has a repeated root (d = 8)");
    GenusResult g;
    g.genus = (k + 1) / 2 - 1;
    g.squarefree = true;
    return g;
}

} // namespace rsl
