#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rsl/ffield.hpp"
#include "rsl/nt.hpp"

using namespace rsl;

TEST_CASE("make_field on small prime fields") {
    auto f3 = make_field(3, 1);
    CHECK(f3.q == 3);
    CHECK(f3.modulus == std::vector<std::uint64_t>{0, 1});

    auto f13 = make_field(13, 1);
    CHECK(f13.q == 13);
    CHECK(f13.generator == 2);
    CHECK(f13.pow(2, 6) == 12); // -1
    CHECK(f13.pow(2, 12) == 1);
}

TEST_CASE("make_field F_343: exhaustive irreducibility scan") {
    auto f = make_field(7, 3);
    CHECK(f.q == 343);
    // independently frozen: the first monic cubic over F_7 with no root,
    // scanning (c0,c1,c2) lexicographically, is x^3 + x^2 + 1
    CHECK(f.modulus == std::vector<std::uint64_t>{1, 0, 1, 1});
    CHECK(f.generator == 9);
    // every monic cubic before the modulus really is reducible
    std::uint64_t before = 0;
    std::vector<std::uint64_t> c{0, 0, 0, 1};
    for (c[0] = 0; c[0] < 2; ++c[0])
        for (c[1] = 0; c[1] < 7; ++c[1])
            for (c[2] = 0; c[2] < 7; ++c[2]) {
                if (c[0] == 1 && c[1] == 0 && c[2] == 1) goto done;
                if (is_irreducible_mod_p(c, 7)) ++before;
            }
done:
    CHECK(before == 0);
}

TEST_CASE("rejected input classes") {
    CHECK_THROWS_AS(make_field(2, 5), Error);
    CHECK_THROWS_AS(make_field(15, 1), Error);
    try {
        make_field(2, 5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EvenPrime);
    }
    try {
        make_field(21, 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonPrime);
    }
    CHECK_THROWS_AS(make_field(3, 50), Error); // 3^50 > 2^64
}

TEST_CASE("generator values") {
    CHECK(make_field(3, 1).generator == 2);
    CHECK(make_field(7, 1).generator == 3);
    CHECK(make_field(13, 1).generator == 2);
    // extension fields, frozen by an independent scan
    CHECK(make_field(3, 2).generator == 4);
    CHECK(make_field(5, 2).generator == 7);
    CHECK(make_field(11, 2).generator == 15);
}

TEST_CASE("higher-degree moduli (gcd-based irreducibility path)") {
    // frozen against an independent computer-algebra scan
    CHECK(make_field(3, 4).modulus == std::vector<std::uint64_t>{1, 0, 1, 1, 1});
    CHECK(make_field(3, 5).modulus == std::vector<std::uint64_t>{1, 0, 0, 0, 2, 1});
    CHECK(make_field(3, 6).modulus == std::vector<std::uint64_t>{1, 0, 0, 0, 1, 1, 1});
    CHECK(make_field(5, 4).modulus == std::vector<std::uint64_t>{1, 0, 1, 1, 1});
    CHECK(make_field(7, 4).modulus == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
    CHECK(make_field(3, 4).generator == 10);
    CHECK(make_field(7, 4).generator == 13);
    // degree <= 3 root-scan route and the gcd route agree where both apply
    for (std::uint64_t p : {3ull, 7ull, 13ull}) {
        std::vector<std::uint64_t> c(4, 0);
        c[3] = 1;
        for (c[0] = 0; c[0] < p; ++c[0])
            for (c[1] = 0; c[1] < (p > 3 ? 4 : p); ++c[1])
                for (c[2] = 0; c[2] < (p > 3 ? 4 : p); ++c[2]) {
                    bool root_free = true;
                    for (std::uint64_t x = 0; x < p && root_free; ++x) {
                        std::uint64_t v = ((x + c[2]) * x % p + c[1]) * x % p;
                        root_free = (v + c[0]) % p != 0;
                    }
                    CHECK(is_irreducible_mod_p(c, p) == root_free);
                }
    }
}

TEST_CASE("elementary arithmetic identities") {
    auto f = make_field(13, 1);
    CHECK(f.pow(5, 0) == 1);
    CHECK(f.inv(1) == 1);
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK(f.mul(f.inv(7), 7) == 1);
}

static void field_axioms(const FieldCtx& f, unsigned rounds) {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q - 1);
    for (unsigned i = 0; i < rounds; ++i) {
        Elem a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, f.q - 1) == 1);
        }
        // Frobenius additivity
        CHECK(f.pow(f.add(a, b), f.p) == f.add(f.pow(a, f.p), f.pow(b, f.p)));
    }
}

TEST_CASE("field axioms as property tests") {
    field_axioms(make_field(13, 1), 200);
    field_axioms(make_field(7, 3), 200);
    field_axioms(make_field(3, 5), 200);
    field_axioms(make_field(11, 2), 200);
}

TEST_CASE("table multiplication equals polynomial multiplication") {
    auto f = make_field(7, 3);
    REQUIRE(f.has_tables());
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.q - 1);
    for (int i = 0; i < 500; ++i) {
        Elem a = pick(rng), b = pick(rng);
        CHECK(f.mul(a, b) == f.mul_poly(a, b));
    }
    // table consistency: antilog[log[x]] == x
    for (Elem x = 1; x < f.q; ++x) CHECK(f.antilog_entry(f.log_entry(x)) == x);
}

TEST_CASE("nt helpers") {
    CHECK(nt::is_prime(2));
    CHECK(nt::is_prime(1'000'003));
    CHECK_FALSE(nt::is_prime(1'000'001)); // 101 * 9901
    CHECK(nt::factor(360) == std::vector<std::uint64_t>{2, 2, 2, 3, 3, 5});
    CHECK(nt::isqrt(0) == 0);
    CHECK(nt::isqrt(15) == 3);
    CHECK(nt::isqrt(16) == 4);
    CHECK(nt::iroot(1u << 30, 3) == 1024);
    CHECK(nt::iroot((1u << 30) - 1, 3) == 1023);
}
