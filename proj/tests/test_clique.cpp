#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsl/cayley.hpp"
#include "rsl/clique.hpp"
#include "rsl/sumsets.hpp"

using namespace rsl;

namespace {

// Exhaustive clique enumeration with no bounding at all: the independent
// oracle the branch-and-bound engine is checked against.
std::size_t oracle_omega(const std::vector<ElemSet>& adj) {
    std::size_t n = adj.size(), best = 0;
    std::vector<std::uint64_t> stack;
    auto dfs = [&](auto&& self, const ElemSet& cand) -> void {
        best = std::max(best, stack.size());
        ElemSet rest = cand;
        for (std::uint64_t v = cand.find_first(); v != ElemSet::npos; v = cand.find_next_from(v + 1)) {
            rest.reset(v);
            stack.push_back(v);
            self(self, rest & adj[v]);
            stack.pop_back();
        }
    };
    ElemSet all(n);
    all.fill();
    dfs(dfs, all);
    return best;
}

std::vector<ElemSet> complete_graph(std::size_t n) {
    std::vector<ElemSet> adj(n, ElemSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) adj[i].set(j);
    return adj;
}

} // namespace

TEST_CASE("harness graphs") {
    auto k5 = complete_graph(5);
    auto rep = max_clique(k5);
    CHECK(rep.omega == 5);
    CHECK(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].count() == 5);

    std::vector<ElemSet> edgeless(6, ElemSet(6));
    auto e = enumerate_max_cliques(edgeless);
    CHECK(e.omega == 1);
    CHECK(e.witnesses.size() == 6);
}

TEST_CASE("gps construction invariants") {
    auto f13 = make_field(13, 1);
    auto g = build_gps(f13, 2);
    CHECK(g.connection.to_vector() == std::vector<std::uint64_t>{0, 1, 3, 4, 9, 10, 12});
    CHECK(g.rows[0].count() == 6); // neighbours of 0 are S_2 itself
    CHECK(g.rows[0].to_vector() == std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12});

    auto f7 = make_field(7, 1);
    CHECK(build_gps(f7, 2).connection.to_vector() == std::vector<std::uint64_t>{0, 1, 2, 4});

    // row symmetry and no loops
    for (Elem x = 0; x < 13; ++x) {
        CHECK_FALSE(g.rows[x].test(x));
        for (Elem y = 0; y < 13; ++y) CHECK(g.rows[x].test(y) == g.rows[y].test(x));
    }
}

TEST_CASE("gp parity gate") {
    auto f13 = make_field(13, 1);
    auto g = build_gp(f13, 2);
    CHECK(g.rows[0].to_vector() == std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12});
    CHECK_NOTHROW(build_gp(f13, 3)); // 13 = 1 mod 6
    auto f7 = make_field(7, 1);
    CHECK_THROWS_AS(build_gp(f7, 2), Error); // 7 = 3 mod 4: squares are not symmetric

    auto f121 = make_field(11, 2);
    auto g121 = build_gp(f121, 3);
    for (Elem x = 0; x < f121.q; ++x) CHECK(g121.rows[x].count() == 40);

    auto f9 = make_field(3, 2);
    CHECK_NOTHROW(build_gp(f9, 2)); // 9 = 1 mod 4
}

TEST_CASE("paper goldens: GPS(9,2) and GPS(25,2)") {
    auto f9 = make_field(3, 2);
    auto rep9 = max_clique(build_gps(f9, 2).rows);
    CHECK(rep9.omega == 4);

    auto f25 = make_field(5, 2);
    auto rep25 = enumerate_max_cliques(build_gps(f25, 2).rows);
    CHECK(rep25.omega == 5);
    CHECK(rep25.witnesses.size() == 15);
    // frozen witness list head (lexicographic order)
    CHECK(rep25.witnesses[0].to_vector() == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
    CHECK(rep25.witnesses[1].to_vector() == std::vector<std::uint64_t>{0, 5, 10, 15, 20});
}

TEST_CASE("EKR classification on GPS(121,3)") {
    auto f = make_field(11, 2);
    auto rep = enumerate_max_cliques(build_gps(f, 3).rows);
    REQUIRE_FALSE(rep.timed_out);
    CHECK(rep.omega == 11);
    CHECK(rep.witnesses.size() == 4);

    auto ekr = classify_ekr(f, 3, rep.witnesses);
    CHECK(ekr.all_canonical);
    CHECK(ekr.subfield.to_vector() ==
          std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    // the subfield itself is a witness, classified with alpha = 1
    CHECK(ekr.per_witness[0].cls == EkrClass::Canonical);
    CHECK(ekr.per_witness[0].alpha == 1);
    auto s3 = compute_subgroup(f, 3);
    for (auto& v : ekr.per_witness) CHECK(s3.members.test(v.alpha));
    CHECK((11 + 1) % 3 == 0); // canonical cliques exist exactly when d | sqrt(q)+1
}

TEST_CASE("classify_ekr requires square q") {
    auto f13 = make_field(13, 1);
    CHECK_THROWS_AS(classify_ekr(f13, 2, {}), Error);
}

TEST_CASE("engine equals oracle on every constructed graph with q <= 49") {
    for (auto [p, k] : {std::pair<int, int>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1},
                        {13, 1}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1},
                        {31, 1}, {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}}) {
        auto f = make_field(p, k);
        for (std::uint64_t d = 2; d < f.q; ++d) {
            if ((f.q - 1) % d != 0) continue;
            auto gps = build_gps(f, d);
            CHECK(max_clique(gps.rows).omega == oracle_omega(gps.rows));
            auto nz = build_gps(f, d, false);
            CHECK(max_clique(nz.rows).omega == oracle_omega(nz.rows));
            if ((f.q - 1) % (2 * d) == 0) {
                auto gp = build_gp(f, d);
                CHECK(max_clique(gp.rows).omega == oracle_omega(gp.rows));
            }
        }
    }
}

TEST_CASE("clique witnesses vs restricted sumsets") {
    // a set is a clique of the no-zero GPS variant iff A +^ A lies in S_d
    auto f = make_field(7, 2);
    auto s2 = compute_subgroup(f, 2);
    auto g = build_gps(f, 2, false);
    auto rep = max_clique(g.rows);
    REQUIRE(rep.witnesses.size() == 1);
    auto rs = restricted_sumset(f, rep.witnesses[0]);
    CHECK(rs.is_subset_of(s2.members));
}

TEST_CASE("omega equals the largest A with restricted sumset inside S_d") {
    // cross-module consistency by full subset enumeration on tiny fields
    for (auto [p, k] : {std::pair<int, int>{7, 1}, {13, 1}, {3, 2}, {11, 1}}) {
        auto f = make_field(p, k);
        for (std::uint64_t d = 2; d < f.q; ++d) {
            if ((f.q - 1) % d != 0) continue;
            auto sd = compute_subgroup(f, d);
            std::size_t best = 0;
            for (std::uint64_t mask = 0; mask < (1ull << f.q); ++mask) {
                ElemSet a(f.q);
                for (std::uint64_t i = 0; i < f.q; ++i)
                    if (mask >> i & 1) a.set(i);
                if (restricted_sumset(f, a).is_subset_of(sd.members))
                    best = std::max(best, a.count());
            }
            auto rep = max_clique(build_gps(f, d, false).rows);
            CHECK(rep.omega == best);
        }
    }
}

TEST_CASE("square-root bound holds on every computed graph") {
    // omega(GPS(q,d)) < sqrt(q) + 3, i.e. (omega - 3)^2 < q for omega >= 3
    for (auto [p, k] : {std::pair<int, int>{3, 1}, {7, 1}, {13, 1}, {3, 2}, {5, 2}, {17, 1},
                        {29, 1}, {7, 2}, {3, 4}, {11, 2}, {13, 2}, {7, 3}}) {
        auto f = make_field(p, k);
        for (std::uint64_t d : {2, 3, 4}) {
            if ((f.q - 1) % d != 0) continue;
            auto rep = max_clique(build_gps(f, d).rows);
            REQUIRE_FALSE(rep.timed_out);
            std::size_t w = rep.omega;
            CHECK((w < 3 || (w - 3) * (w - 3) < f.q));
        }
    }
}

TEST_CASE("deterministic across worker counts") {
    auto f = make_field(5, 2);
    auto g = build_gps(f, 2);
    CliqueOptions serial;
    CliqueOptions par;
    par.par.workers = 4;
    par.enumerate_all = true;
    CliqueOptions ser_en = serial;
    ser_en.enumerate_all = true;
    auto a = enumerate_max_cliques(g.rows, ser_en);
    auto b = enumerate_max_cliques(g.rows, par);
    CHECK(a.omega == b.omega);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i] == b.witnesses[i]);
}

TEST_CASE("timeout is an explicit state") {
    auto f = make_field(113, 1);
    auto g = build_gps(f, 2);
    CliqueOptions opts;
    opts.budget_secs = 0.0;
    auto rep = max_clique(g.rows, opts);
    CHECK(rep.timed_out);
    CHECK(rep.omega >= 1); // lower bound still reported
}

TEST_CASE("dilation maps maximum cliques to maximum cliques") {
    auto f = make_field(13, 1);
    auto s2 = compute_subgroup(f, 2);
    auto g = build_gps(f, 2, false);
    CliqueOptions opts;
    opts.enumerate_all = true;
    auto rep = enumerate_max_cliques(g.rows, opts);
    REQUIRE_FALSE(rep.timed_out);
    // orbit closure: u * witness is again a maximum clique for u in S_2
    for (auto& w : rep.witnesses) {
        s2.members.for_each([&](Elem u) {
            auto img = dilate(f, u, w);
            bool found = false;
            for (auto& w2 : rep.witnesses) found = found || (w2 == img);
            CHECK(found);
        });
    }
}
