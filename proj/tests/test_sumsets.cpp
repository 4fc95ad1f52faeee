#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsl/sumsets.hpp"

using namespace rsl;

TEST_CASE("restricted sumsets of the known decompositions") {
    auto f3 = make_field(3, 1);
    CHECK(restricted_sumset(f3, ElemSet::of(3, {0, 1})).to_vector() == std::vector<std::uint64_t>{1});

    auto f7 = make_field(7, 1);
    CHECK(restricted_sumset(f7, ElemSet::of(7, {3, 5, 6})).to_vector() ==
          std::vector<std::uint64_t>{1, 2, 4});

    auto f13 = make_field(13, 1);
    CHECK(restricted_sumset(f13, ElemSet::of(13, {0, 1, 3, 9})).to_vector() ==
          std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12});

    CHECK(restricted_sumset(f13, ElemSet::of(13, {5})).none());
    CHECK(restricted_sumset(f13, ElemSet(13)).none());
}

TEST_CASE("full sumset vs restricted sumset") {
    auto f13 = make_field(13, 1);
    auto a = ElemSet::of(13, {0, 1, 3, 9});
    auto full = sumset(f13, a, a);
    auto restr = restricted_sumset(f13, a);
    auto expected = restr | ElemSet::of(13, {0, 2, 6, 5});
    CHECK(full == expected);
    CHECK(restr.is_subset_of(full));

    CHECK(sumset(f13, ElemSet::of(13, {0}), a) == a);
    CHECK(sumset(f13, ElemSet(13), a).none());
}

TEST_CASE("sidon classification") {
    auto f13 = make_field(13, 1);
    CHECK(is_sidon(f13, ElemSet::of(13, {0, 1, 3, 9})) == SidonClass::Sidon);
    CHECK(is_sidon(f13, ElemSet::of(13, {5})) == SidonClass::Sidon);
    CHECK(is_sidon(f13, ElemSet(13)) == SidonClass::Sidon);

    auto f7 = make_field(7, 1);
    // 0+2 = 1+1, but the three i<j sums {1,2,3} are distinct
    CHECK(is_sidon(f7, ElemSet::of(7, {0, 1, 2})) == SidonClass::WeakSidon);
    // 0+4 = 1+3: a strict collision
    CHECK(is_sidon(f7, ElemSet::of(7, {0, 1, 3, 4})) == SidonClass::Neither);
}

TEST_CASE("doubles condition counts") {
    auto f13 = make_field(13, 1);
    auto s2 = compute_subgroup(f13, 2);
    auto [in_sd, in_sd0] = doubles_condition(f13, s2, ElemSet::of(13, {0, 1, 3, 9}));
    CHECK(in_sd == 0);
    CHECK(in_sd0 == 1);

    CHECK(doubles_condition(f13, s2, ElemSet(13)) == std::pair<std::uint64_t, std::uint64_t>{0, 0});

    auto f7 = make_field(7, 1);
    auto s7 = compute_subgroup(f7, 2);
    CHECK(doubles_condition(f7, s7, ElemSet::of(7, {1})) ==
          std::pair<std::uint64_t, std::uint64_t>{1, 1});
}

TEST_CASE("sumset properties on random sets") {
    auto f = make_field(7, 2);
    std::mt19937_64 rng(555);
    for (int round = 0; round < 60; ++round) {
        ElemSet a(f.q);
        std::size_t sz = rng() % 12;
        for (std::size_t i = 0; i < sz; ++i) a.set(rng() % f.q);
        auto restr = restricted_sumset(f, a);
        auto full = sumset(f, a, a);
        CHECK(restr.is_subset_of(full));

        std::size_t n = a.count();
        CHECK(restr.count() <= n * (n - (n ? 1 : 0)) / 2);
        bool max_restricted = restr.count() == n * (n - (n ? 1 : 0)) / 2;
        auto cls = is_sidon(f, a);
        CHECK(max_restricted == (cls == SidonClass::Sidon || cls == SidonClass::WeakSidon));

        // dilation equivariance
        Elem u = 1 + rng() % (f.q - 1);
        CHECK(restricted_sumset(f, dilate(f, u, a)) == dilate(f, u, restr));
    }
}
