#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ccm/catalog.hpp"
#include "ccm/counting.hpp"
#include "ccm/errors.hpp"

using namespace ccm;

TEST_CASE("simple_count frozen examples") {
    CHECK(simple_count(3, 7) == 2);
    CHECK(simple_count(3, 91) == 4);
    CHECK(simple_count(3, 49) == 2);
    CHECK(simple_count(16, 289) == 32);
    CHECK(simple_count(16, 17) == 8);
    CHECK(simple_count(8, 3) == 0);  // exponent 1 not divisible by ell_3 = 2
    CHECK(simple_count(8, 9) == 2);
    CHECK(simple_count(7, 8) == 2);
    CHECK(simple_count(7, 232) == 12);
    for (unsigned n : {3u, 4u, 5u, 12u, 84u}) CHECK(simple_count(n, 1) == 1);
    CHECK_THROWS_AS(simple_count(3, 0), std::domain_error);
}

TEST_CASE("multiple_count frozen examples") {
    CHECK(multiple_count(3, 49) == 3);
    CHECK(multiple_count(3, 7) == 2);
    CHECK(multiple_count(4, 25) == 3);
    CHECK(multiple_count(11, 59049) == 3);  // 3^10, ell = 5, j = 2
    CHECK(multiple_count(3, 2401) == 5);    // 7^4: c = 2, diff = 3 -> b = 5
    CHECK_THROWS_AS(multiple_count(4, 0), std::domain_error);
}

TEST_CASE("ideal_count frozen examples") {
    CHECK(ideal_count(3, 3) == 1);   // ramified Euler factor 1/(1 - 3^-s)
    CHECK(ideal_count(3, 7) == 2);   // two Eisenstein classes of norm 7
    CHECK(ideal_count(3, 2) == 0);   // 2 inert
    CHECK(ideal_count(3, 4) == 1);
    CHECK(ideal_count(4, 25) == 3);  // (1+2i)^2, 5(1+2i)... no: classes of norm 25
    CHECK(ideal_count(3, 21) == 2);  // 3 * 7
}

TEST_CASE("coefficient_table matches point evaluation and is thread-count independent") {
    CoefficientTable t = coefficient_table(3, Kind::simple, 50);
    CHECK(t.values[49] == 2);
    CHECK(t.values[1] == 1);
    CoefficientTable m = coefficient_table(3, Kind::multiple, 50);
    CHECK(m.values[49] == 3);

    for (Kind kind : {Kind::simple, Kind::multiple, Kind::ideal}) {
        CoefficientTable table = coefficient_table(3, kind, 10'000);
        for (std::uint64_t k = 1; k <= 10'000; ++k) REQUIRE(table.values[k] == count(3, kind, k));
        CoefficientTable threaded = coefficient_table(3, kind, 10'000, 3);
        REQUIRE(table.values == threaded.values);
    }
}

TEST_CASE("coefficient_table resource limits") {
    CHECK_THROWS_AS(coefficient_table(3, Kind::simple, 200'000'000ull), resource_error);
    CHECK_THROWS_AS(coefficient_table(3, Kind::simple, 0), std::domain_error);
}

TEST_CASE("is_coincidence_index") {
    CHECK(!is_coincidence_index(3, 21));
    CHECK(is_coincidence_index(3, 49));
    CHECK(is_coincidence_index(8, 9));
    for (unsigned n : {3u, 4u, 25u}) CHECK(is_coincidence_index(n, 1));

    for (std::uint64_t k = 1; k <= 2'000; ++k) {
        bool in = is_coincidence_index(3, k);
        CHECK(in == (simple_count(3, k) > 0));
        CHECK(in == (multiple_count(3, k) > 0));
    }
}

TEST_CASE("multiplicativity on random coprime pairs") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::uint64_t> draw(1, 1000);
    for (unsigned n : {3u, 8u, 21u}) {
        for (int trial = 0; trial < 1'000; ++trial) {
            std::uint64_t k = draw(rng), l = draw(rng);
            if (std::gcd(k, l) != 1) continue;
            for (Kind kind : {Kind::simple, Kind::multiple, Kind::ideal})
                REQUIRE(count(n, kind, k * l) == count(n, kind, k) * count(n, kind, l));
        }
    }
}

TEST_CASE("ordering and support equality up to 10^4") {
    for (unsigned n : {3u, 4u, 12u, 16u}) {
        CoefficientTable a = coefficient_table(n, Kind::ideal, 10'000);
        CoefficientTable b = coefficient_table(n, Kind::multiple, 10'000);
        CoefficientTable c = coefficient_table(n, Kind::simple, 10'000);
        for (std::uint64_t k = 1; k <= 10'000; ++k) {
            REQUIRE(a.values[k] >= b.values[k]);
            REQUIRE(b.values[k] >= c.values[k]);
            REQUIRE((b.values[k] != 0) == (c.values[k] != 0));
        }
    }
}

TEST_CASE("triangular-lattice closed form: b_3(k) = prod (r_j + 1)") {
    for (std::uint64_t k = 2; k <= 20'000; ++k) {
        if (!is_coincidence_index(3, k)) continue;
        std::uint64_t expect = 1, rest = k;
        for (std::uint64_t p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            unsigned r = 0;
            while (rest % p == 0) {
                rest /= p;
                ++r;
            }
            expect *= r + 1;
        }
        if (rest > 1) expect *= 2;
        REQUIRE(multiple_count(3, k) == expect);
    }
}

TEST_CASE("enumerate_csms frozen examples") {
    auto simple7 = enumerate_csms(3, 7, Kind::simple);
    REQUIRE(simple7.size() == 2);
    for (const auto& f : simple7) {
        REQUIRE(f.entries.size() == 1);
        CHECK(f.entries[0].p == 7);
        CHECK(f.entries[0].exponent_left + f.entries[0].exponent_right == 1);
    }

    auto multi49 = enumerate_csms(3, 49, Kind::multiple);
    REQUIRE(multi49.size() == 3);
    int two_sided = 0;
    for (const auto& f : multi49)
        if (f.entries.size() == 1 && f.entries[0].exponent_left == 1 && f.entries[0].exponent_right == 1)
            ++two_sided;
    CHECK(two_sided == 1);

    CHECK(enumerate_csms(3, 5, Kind::multiple).empty());
    CHECK(enumerate_csms(3, 1, Kind::simple).size() == 1);  // identity rotation

    CHECK_THROWS_AS(enumerate_csms(3, 7, Kind::ideal), std::domain_error);
}

TEST_CASE("enumeration length equals count and factorizations are valid") {
    for (unsigned n : {3u, 4u, 5u, 8u, 12u}) {
        for (std::uint64_t k = 1; k <= 10'000; ++k) {
            auto simple = enumerate_csms(n, k, Kind::simple);
            REQUIRE(simple.size() == simple_count(n, k));
            auto multiple = enumerate_csms(n, k, Kind::multiple);
            REQUIRE(multiple.size() == multiple_count(n, k));
            for (const auto& f : simple)
                for (const auto& e : f.entries)
                    REQUIRE((e.exponent_left == 0 || e.exponent_right == 0));
            // every assignment reconstructs its norm k
            for (const auto& f : multiple) {
                std::uint64_t norm = 1;
                for (const auto& e : f.entries) {
                    unsigned ell = classify_prime(n, e.p).residue_degree;
                    for (unsigned i = 0; i < ell * (e.exponent_left + e.exponent_right); ++i)
                        norm *= e.p;
                }
                REQUIRE(norm == k);
            }
        }
    }
}

TEST_CASE("enumeration cap raises resource error") {
    // c_17(103^40) style blow-ups are cheaper to trigger via a tiny cap
    CHECK_THROWS_AS(enumerate_csms(3, 49, Kind::multiple, 2), resource_error);
}

TEST_CASE("summatory") {
    SummatoryResult s = summatory(3, Kind::simple, 10);
    CHECK(s.total == 3);  // k = 1 and k = 7 contribute 1 + 2

    for (Kind kind : {Kind::simple, Kind::multiple, Kind::ideal}) {
        SummatoryResult one = summatory(3, kind, 1);
        CHECK(one.total == 1);
        CHECK(one.slope == 1.0);
    }
}

TEST_CASE("k beyond the 64-bit evaluation budget is an error, never a wrong value") {
    CHECK_THROWS_AS(simple_count(3, 1ull << 63), std::overflow_error);
    CHECK_THROWS_AS(multiple_count(3, 1ull << 63), std::overflow_error);
}
