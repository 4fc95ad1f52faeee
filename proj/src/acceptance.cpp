#include "rsl/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "rsl/cayley.hpp"
#include "rsl/clique.hpp"
#include "rsl/decomp.hpp"
#include "rsl/density.hpp"
#include "rsl/emint.hpp"
#include "rsl/nt.hpp"
#include "rsl/stepanov.hpp"

namespace rsl {

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_prime_powers(std::uint64_t lo,
                                                                      std::uint64_t hi) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out; // (p, k)
    for (std::uint64_t q = lo; q <= hi; ++q) {
        if (q % 2 == 0) continue;
        auto fac = nt::factor(q);
        bool pp = !fac.empty();
        for (auto f : fac) pp = pp && (f == fac[0]);
        if (pp) out.emplace_back(fac[0], fac.size());
    }
    return out;
}

// Exhaustive clique enumeration without any bounding: the independent oracle.
std::size_t oracle_omega(const std::vector<ElemSet>& adj) {
    std::size_t best = 0, depth = 0;
    auto dfs = [&](auto&& self, const ElemSet& cand) -> void {
        best = std::max(best, depth);
        ElemSet rest = cand;
        for (std::uint64_t v = cand.find_first(); v != ElemSet::npos; v = cand.find_next_from(v + 1)) {
            rest.reset(v);
            ++depth;
            self(self, rest & adj[v]);
            --depth;
        }
    };
    ElemSet all(adj.size());
    all.fill();
    dfs(dfs, all);
    return best;
}

std::string set_str(const ElemSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    s.for_each([&](std::uint64_t v) {
        os << (first ? "" : ",") << v;
        first = false;
    });
    os << "}";
    return os.str();
}

struct Ctx {
    std::ostream* progress;
    std::vector<CriterionResult> results;

    void run(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.id = id;
        r.name = name;
        try {
            auto [pass, detail] = fn();
            r.pass = pass;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            (*progress) << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
                        << r.detail << ")  " << r.seconds << "s\n";
            progress->flush();
        }
        results.push_back(std::move(r));
    }
};

std::pair<bool, std::string> census(double budget) {
    // expected: exactly these (q, set) pairs, nothing else anywhere
    std::map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> expected = {
        {3, {{0, 1}}},
        {7, {{3, 5, 6}}},
        {13, {{0, 1, 3, 9}, {0, 4, 10, 12}}},
    };
    std::map<std::uint64_t, std::vector<std::vector<std::uint64_t>>> got;
    for (auto [p, k] : odd_prime_powers(3, 343)) {
        auto f = make_field(p, k);
        DecompOptions opts;
        opts.budget_secs = budget;
        auto rep = search_decomposition(f, 2, DecompMode::RestrictedExact, opts);
        if (rep.stats.timed_out) return {false, "timed out at q = " + std::to_string(f.q)};
        for (auto& sol : rep.solutions)
            for (auto& member : sol.orbit) got[f.q].push_back(member.to_vector());
    }
    if (got.size() != expected.size()) {
        std::ostringstream os;
        os << "solutions at " << got.size() << " values of q, expected " << expected.size();
        return {false, os.str()};
    }
    for (auto& [q, sets] : expected) {
        auto it = got.find(q);
        if (it == got.end() || it->second != sets)
            return {false, "mismatch at q = " + std::to_string(q)};
    }
    return {true, "4 solutions across q in {3,7,13}, none elsewhere up to 343"};
}

std::pair<bool, std::string> f343_clique(double budget) {
    auto f = make_field(7, 3);
    CliqueOptions opts;
    opts.budget_secs = budget;
    auto g = build_gps(f, 2, /*include_zero=*/false);
    auto rep = max_clique(g.rows, opts);
    if (rep.timed_out) return {false, "timed out"};
    std::ostringstream os;
    os << "omega = " << rep.omega << " in " << rep.wall_time_s << "s";
    return {rep.omega == 10, os.str()};
}

std::pair<bool, std::string> remark34(double budget) {
    CliqueOptions opts;
    opts.budget_secs = budget;
    auto f9 = make_field(3, 2);
    auto r9 = max_clique(build_gps(f9, 2).rows, opts);
    if (r9.timed_out || r9.omega != 4) return {false, "GPS(9,2) omega != 4"};
    auto f25 = make_field(5, 2);
    opts.enumerate_all = true;
    auto r25 = enumerate_max_cliques(build_gps(f25, 2).rows, opts);
    if (r25.timed_out || r25.omega != 5 || r25.witnesses.size() != 15)
        return {false, "GPS(25,2) maximum cliques != 15 of size 5"};
    return {true, "GPS(9,2): size-4 clique; GPS(25,2): exactly 15 maximum 5-cliques"};
}

std::pair<bool, std::string> ekr(double budget) {
    CliqueOptions opts;
    opts.budget_secs = budget;
    auto f121 = make_field(11, 2);
    auto r = enumerate_max_cliques(build_gps(f121, 3).rows, opts);
    if (r.timed_out) return {false, "GPS(121,3) timed out"};
    if (r.omega != 11 || r.witnesses.size() != 4)
        return {false, "GPS(121,3): expected omega 11 with 4 maximum cliques"};
    auto cls = classify_ekr(f121, 3, r.witnesses);
    if (!cls.all_canonical) return {false, "non-canonical maximum clique in GPS(121,3)"};
    auto s3 = compute_subgroup(f121, 3);
    for (auto& v : cls.per_witness)
        if (!s3.members.test(v.alpha)) return {false, "dilation factor outside S_3"};

    auto f169 = make_field(13, 2);
    auto r169 = max_clique(build_gps(f169, 3).rows, opts);
    if (r169.timed_out) return {false, "GPS(169,3) timed out"};
    if (r169.omega > 12) return {false, "GPS(169,3) omega exceeds sqrt(q) - 1"};
    std::ostringstream os;
    os << "GPS(121,3): 4 canonical witnesses; GPS(169,3): omega = " << r169.omega << " <= 12";
    return {true, os.str()};
}

std::pair<bool, std::string> bound_suite(double budget) {
    std::size_t graphs = 0;
    for (std::uint64_t d : {2, 3, 4}) {
        for (std::uint64_t p : prime_stream(d, 200)) {
            if (p == 2) continue;
            auto f = make_field(p, 1);
            CliqueOptions opts;
            opts.budget_secs = budget;
            auto rep = max_clique(build_gps(f, d).rows, opts);
            if (rep.timed_out) return {false, "timed out at p = " + std::to_string(p)};
            std::uint64_t w = rep.omega;
            // omega <= sqrt(2(p-1)/d + 1) + 2, exact integer comparison
            std::uint64_t x = 2 * (p - 1) / d + 1;
            if (w > 2 && (w - 2) * (w - 2) > x)
                return {false, "HP-type bound violated at p = " + std::to_string(p) +
                                   ", d = " + std::to_string(d)};
            // omega < sqrt(p) + 3
            if (w >= 3 && (w - 3) * (w - 3) >= p)
                return {false, "square-root bound violated at p = " + std::to_string(p)};
            ++graphs;
        }
    }
    return {true, std::to_string(graphs) + " graphs, zero bound violations"};
}

std::pair<bool, std::string> sidon_structure(double budget) {
    std::size_t checked = 0;
    for (std::uint64_t q : {3ull, 7ull, 13ull}) {
        auto f = make_field(q, 1);
        auto sd = compute_subgroup(f, 2);
        DecompOptions opts;
        opts.budget_secs = budget;
        auto rep = search_decomposition(f, 2, DecompMode::RestrictedExact, opts);
        for (auto& sol : rep.solutions) {
            for (auto& member : sol.orbit) {
                auto v = check_sidon_structure(f, sd, member);
                if (!v.ok) return {false, "structure check failed at q = " + std::to_string(q) +
                                              " for " + set_str(member)};
                ++checked;
            }
        }
    }
    if (checked != 4) return {false, "expected 4 decompositions, saw " + std::to_string(checked)};
    return {true, "all 4 decompositions: Sidon, empty doubles, q-formula exact"};
}

std::pair<bool, std::string> certificates(double) {
    // the four known decompositions
    struct Known {
        std::uint64_t q;
        std::vector<std::uint64_t> set;
        CertVariant variant;
    };
    std::vector<Known> known = {
        {3, {0, 1}, CertVariant::EvenN},
        {3, {0, 1}, CertVariant::EvenNRefined},
        {7, {3, 5, 6}, CertVariant::OddN},
        {13, {0, 1, 3, 9}, CertVariant::EvenN},
        {13, {0, 1, 3, 9}, CertVariant::EvenNRefined},
        {13, {0, 4, 10, 12}, CertVariant::EvenN},
        {13, {0, 4, 10, 12}, CertVariant::EvenNRefined},
    };
    for (auto& kn : known) {
        auto f = make_field(kn.q, 1);
        auto sd = compute_subgroup(f, 2);
        ElemSet a(f.q);
        for (auto x : kn.set) a.set(x);
        auto rep = build_certificate(f, sd, a, kn.variant);
        if (!rep.accepted)
            return {false, "certificate rejected at q = " + std::to_string(kn.q)};
    }

    // 20 random cliques with A +^ A <= S_2 in F_49 and F_121, sumset escaping
    // S_2 u {0} so the witness must appear
    std::mt19937_64 rng(1234);
    int built = 0;
    for (auto [p, k] : {std::pair<int, int>{7, 2}, {11, 2}}) {
        auto f = make_field(p, k);
        auto sd = compute_subgroup(f, 2);
        auto g = build_gps(f, 2, /*include_zero=*/false);
        ElemSet sd0 = sd.members;
        sd0.set(0);
        int want = 10;
        int guard = 0;
        while (want > 0 && guard++ < 4000) {
            // random greedy maximal clique
            ElemSet cand(f.q);
            cand.fill();
            ElemSet clique(f.q);
            while (cand.any()) {
                auto vs = cand.to_vector();
                Elem v = vs[rng() % vs.size()];
                clique.set(v);
                cand &= g.rows[v];
            }
            if (clique.count() < 3) continue;
            if (sumset(f, clique, clique).is_subset_of(sd0)) continue;
            CertVariant variant = clique.count() % 2 ? CertVariant::OddN : CertVariant::EvenN;
            auto rep = build_certificate(f, sd, clique, variant);
            if (!rep.accepted || !rep.witness_ok)
                return {false, "random-clique certificate rejected over q = " + std::to_string(f.q) +
                                   " set " + set_str(clique)};
            --want;
            ++built;
        }
        if (want > 0) return {false, "could not sample enough cliques"};
    }

    // property sweeps: Leibniz rule and the (x+c)^n derivative formula
    for (auto [p, k] : {std::pair<int, int>{7, 1}, {7, 3}}) {
        auto f = make_field(p, k);
        std::uniform_int_distribution<std::uint64_t> el(0, f.q - 1);
        for (int round = 0; round < 500; ++round) {
            Poly a, b;
            std::size_t da = rng() % 31, db = rng() % 31;
            for (std::size_t i = 0; i <= da; ++i) a.c.push_back(el(rng));
            for (std::size_t i = 0; i <= db; ++i) b.c.push_back(el(rng));
            a.trim();
            b.trim();
            std::uint64_t n = rng() % 8;
            Poly lhs = hyper_derivative(f, poly_mul(f, a, b), n);
            Poly rhs;
            for (std::uint64_t t = 0; t <= n; ++t)
                rhs = poly_add(f, rhs,
                               poly_mul(f, hyper_derivative(f, a, t), hyper_derivative(f, b, n - t)));
            if (!(poly_sub(f, lhs, rhs).is_zero()))
                return {false, "Leibniz rule failed"};
        }
        for (int round = 0; round < 500; ++round) {
            std::uint64_t deg = 1 + rng() % 50;
            std::uint64_t n = rng() % (deg + 2);
            Elem c = el(rng);
            Poly base;
            base.c = {c, 1};
            Poly lhs = hyper_derivative(f, poly_pow(f, base, deg), n);
            Poly rhs;
            if (n <= deg) {
                Elem binom = static_cast<Elem>(binomial_mod_p(deg, n, f.p));
                rhs = poly_scale(f, poly_pow(f, base, deg - n), binom);
            }
            if (!(poly_sub(f, lhs, rhs).is_zero()))
                return {false, "hyper-derivative of (x+c)^n failed"};
        }
    }
    return {true, std::to_string(built) + " random-clique certificates plus 2000 property instances"};
}

std::pair<bool, std::string> thm14(double budget) {
    for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{19, 2}, {37, 2}}) {
        auto f = make_field(p, k);
        DecompOptions opts;
        opts.budget_secs = budget;
        auto v = check_thm14(f, 18, opts);
        if (!v.ok)
            return {false, "verdict failed at q = " + std::to_string(f.q)};
    }
    return {true, "d = 18: empty searches and both obstructions at q = 361, 1369"};
}

std::pair<bool, std::string> density_scan(double) {
    auto s1 = empirical_density(3, 1, 1'000'000);
    if (std::abs(s1.fraction - 0.25) > 0.02)
        return {false, "s = 1 fraction " + std::to_string(s1.fraction)};
    auto s3 = empirical_density(3, 3, 1'000'000);
    if (std::abs(s3.fraction - 1.0 / 6.0) > 0.02)
        return {false, "s = 3 fraction " + std::to_string(s3.fraction)};
    std::ostringstream os;
    os << "fractions " << s1.fraction << " (target 1/4), " << s3.fraction << " (target 1/6)";
    return {true, os.str()};
}

std::pair<bool, std::string> prop41_sweep(double budget) {
    std::size_t instances = 0;
    for (auto [p, k] : odd_prime_powers(3, 1000)) {
        auto f = make_field(p, k);
        for (std::uint64_t d : {2, 3, 4}) {
            if ((f.q - 1) % d != 0 || (f.q - 1) / d < 3) continue;
            for (auto mode : {DecompMode::FullExact, DecompMode::FullExactZero}) {
                DecompOptions opts;
                opts.budget_secs = budget;
                auto rep = search_decomposition(f, d, mode, opts);
                if (rep.stats.timed_out)
                    return {false, "not exhausted at q = " + std::to_string(f.q) +
                                       ", d = " + std::to_string(d)};
                if (!rep.solutions.empty())
                    return {false, "counterexample at q = " + std::to_string(f.q) +
                                       ", d = " + std::to_string(d)};
                ++instances;
            }
        }
    }
    return {true, std::to_string(instances) + " full-sumset instances, all empty"};
}

std::pair<bool, std::string> integer_side(double budget) {
    CliqueOptions opts;
    opts.budget_secs = budget;
    auto em = search_max_em_set(100, 2, opts);
    if (em.timed_out) return {false, "em search timed out"};
    // naive oracle on the same graph
    std::vector<ElemSet> adj(100, ElemSet(100));
    for (std::uint64_t i = 1; i <= 100; ++i)
        for (std::uint64_t j = i + 1; j <= 100; ++j) {
            std::uint64_t s = i + j, r = nt::isqrt(s);
            if (r * r == s) {
                adj[i - 1].set(j - 1);
                adj[j - 1].set(i - 1);
            }
        }
    if (em.best_size != oracle_omega(adj)) return {false, "em search disagrees with the oracle"};
    for (auto& w : em.witnesses)
        if (!em_verify(w, 2)) return {false, "witness fails the power test"};

    auto sieve = gallagher_bound(1'000'000, 2);
    if (!sieve.bound.has_value() || !(*sieve.bound > 0))
        return {false, "sieve bound not finite"};

    // Kummer / Lucas / Pascal three-way agreement
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
        const std::size_t rows = 10'001;
        std::vector<std::uint8_t> prev(rows, 0), cur(rows, 0);
        prev[0] = 1 % p;
        for (std::size_t n = 1; n < rows; ++n) {
            cur[0] = 1 % p;
            for (std::size_t kk = 1; kk <= n; ++kk)
                cur[kk] = static_cast<std::uint8_t>((prev[kk - 1] + (kk < n ? prev[kk] : 0)) % p);
            for (std::size_t kk = 0; kk <= n; ++kk) {
                bool pascal = cur[kk] != 0;
                if (kummer_nonvanishing(n, kk, p) != pascal)
                    return {false, "Kummer/Pascal mismatch"};
                if ((binomial_mod_p(n, kk, p) != 0) != pascal)
                    return {false, "Lucas/Pascal mismatch"};
            }
            std::swap(prev, cur);
        }
    }
    std::ostringstream os;
    os << "em(100,2) = " << em.best_size << " (oracle match); sieve bound " << *sieve.bound
       << " vs asymptote " << sieve.asymptote << "; binomial routes agree to 1e4";
    return {true, os.str()};
}

std::pair<bool, std::string> oracle_equivalence(double budget) {
    std::size_t graphs = 0;
    for (auto [p, k] : odd_prime_powers(3, 49)) {
        auto f = make_field(p, k);
        for (std::uint64_t d = 2; d < f.q; ++d) {
            if ((f.q - 1) % d != 0) continue;
            CliqueOptions opts;
            opts.budget_secs = budget;
            std::vector<std::vector<ElemSet>> rows;
            rows.push_back(build_gps(f, d).rows);
            rows.push_back(build_gps(f, d, false).rows);
            if ((f.q - 1) % (2 * d) == 0) rows.push_back(build_gp(f, d).rows);
            for (auto& r : rows) {
                if (max_clique(r, opts).omega != oracle_omega(r))
                    return {false, "engine/oracle mismatch at q = " + std::to_string(f.q)};
                ++graphs;
            }
        }
    }
    // pruned vs unpruned decomposition search
    std::size_t searches = 0;
    for (auto [p, k] : odd_prime_powers(3, 121)) {
        auto f = make_field(p, k);
        for (std::uint64_t d : {2, 3}) {
            if ((f.q - 1) % d != 0) continue;
            DecompOptions pruned, unpruned;
            pruned.budget_secs = unpruned.budget_secs = budget;
            unpruned.symmetry_reduction = false;
            auto a = search_decomposition(f, d, DecompMode::RestrictedExact, pruned);
            auto b = search_decomposition(f, d, DecompMode::RestrictedExact, unpruned);
            if (a.stats.timed_out || b.stats.timed_out)
                return {false, "decomposition search timed out at q = " + std::to_string(f.q)};
            if (a.solutions.size() != b.solutions.size())
                return {false, "pruned/unpruned mismatch at q = " + std::to_string(f.q)};
            for (std::size_t i = 0; i < a.solutions.size(); ++i) {
                if (a.solutions[i].orbit.size() != b.solutions[i].orbit.size())
                    return {false, "orbit mismatch at q = " + std::to_string(f.q)};
                for (std::size_t j = 0; j < a.solutions[i].orbit.size(); ++j)
                    if (!(a.solutions[i].orbit[j] == b.solutions[i].orbit[j]))
                        return {false, "orbit member mismatch at q = " + std::to_string(f.q)};
            }
            ++searches;
        }
    }
    std::ostringstream os;
    os << graphs << " graphs against the subset oracle; " << searches
       << " pruned/unpruned search pairs";
    return {true, os.str()};
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress) {
    Ctx ctx;
    ctx.progress = progress;
    ctx.run(1, "decomposition census d=2, q <= 343", [] { return census(300.0); });
    ctx.run(2, "omega(CayS(F_343, S_2)) = 10", [] { return f343_clique(60.0); });
    ctx.run(3, "GPS(9,2) and GPS(25,2) goldens", [] { return remark34(60.0); });
    ctx.run(4, "EKR: GPS(121,3) canonical, GPS(169,3) bounded", [] { return ekr(120.0); });
    ctx.run(5, "clique bounds for p <= 200, d in {2,3,4}", [] { return bound_suite(60.0); });
    ctx.run(6, "structural facts for every decomposition", [] { return sidon_structure(60.0); });
    ctx.run(7, "auxiliary-polynomial certificates", [] { return certificates(60.0); });
    ctx.run(8, "d = 18 searches at q = 361, 1369 are empty", [] { return thm14(120.0); });
    ctx.run(9, "density scan d = 3, s in {1,3}, primes <= 1e6", [] { return density_scan(180.0); });
    ctx.run(10, "full-sumset sweep q <= 1000, d in {2,3,4}", [] { return prop41_sweep(60.0); });
    ctx.run(11, "integer side: em search, sieve bound, binomials", [] { return integer_side(60.0); });
    ctx.run(12, "engine vs oracle; pruned vs unpruned", [] { return oracle_equivalence(60.0); });
    return ctx.results;
}

} // namespace rsl
