#include "strtop/error.hpp"
#include "strtop/grading.hpp"

#include <doctest.h>

using namespace strtop;

namespace {

EigenData eig(std::initializer_list<Scalar> k) { return EigenData{std::vector<Scalar>(k)}; }

Scalar q(long p, long d) {
    Scalar x(p, static_cast<unsigned long>(d));
    x.canonicalize();
    return x;
}

}  // namespace

TEST_CASE("age and sector dimension") {
    CHECK(age(eig({q(1, 2)})) == q(1, 2));
    CHECK(age(eig({0, 0, 0})) == 0);
    CHECK(age(eig({q(1, 3), q(2, 3)})) == 1);
    CHECK(sector_dimension(eig({q(1, 2)})) == 0);
    CHECK(sector_dimension(eig({0, q(1, 2)})) == 2);
    CHECK(sector_dimension(eig({0, 0, 0})) == 6);
    CHECK_THROWS_AS(age(eig({1})), PreconditionError);
    CHECK_THROWS_AS(age(eig({q(-1, 2)})), PreconditionError);
}

TEST_CASE("age-dimension identity") {
    CHECK(check_age_dimension(eig({q(1, 2)})).passed());
    CHECK(check_age_dimension(eig({q(1, 3)})).passed());
    CHECK(check_age_dimension(eig({0})).passed());
    const auto inv = inverse(eig({q(1, 3), 0}));
    CHECK(inv.exponents == std::vector<Scalar>{q(2, 3), 0});
}

TEST_CASE("obstruction rank") {
    CHECK(obstruction_rank(q(1, 2), q(1, 2), 0, 0, 2) == 0);
    CHECK(obstruction_rank(1, 1, 1, 0, 0) == 2);
    CHECK(obstruction_rank(0, q(1, 3), q(1, 3), 2, 2) == 0);
    CHECK_THROWS_AS(obstruction_rank(q(1, 2), 0, 0, 0, 0), InconsistentSectorError);
    CHECK_THROWS_AS(obstruction_rank(0, 0, 1, 0, 0), InconsistentSectorError);
    CHECK_THROWS_WITH_AS(obstruction_rank(0, 0, 0, 0, 2), doctest::Contains("-2"), InconsistentSectorError);
}

TEST_CASE("orbifold degree") {
    CHECK(orbifold_degree(0, q(1, 2)) == 1);
    CHECK(orbifold_degree(3, 0) == 3);
    CHECK(orbifold_degree(2, q(1, 3)) == q(8, 3));
}

TEST_CASE("pairing degree ledger") {
    const auto z2 = pairing_data(eig({q(1, 2)}), eig({q(1, 2)}));
    const auto r = check_pairing_degree(z2, 1, 1);
    CHECK(r.passed());
    CHECK(r.notes.back() == std::pair<std::string, std::string>{"target", "0"});

    const auto z3 = pairing_data(eig({q(1, 3), q(2, 3)}), eig({q(1, 3), q(2, 3)}));
    CHECK(z3.gh.age == 1);
    const auto r3 = check_pairing_degree(z3, 2, 2);
    CHECK(r3.passed());
    bool saw_rank = false;
    for (const auto& [k, v] : r3.notes) saw_rank = saw_rank || (k == "inverse_obstruction_rank" && v == "2");
    CHECK(saw_rank);

    const auto untwisted = pairing_data(eig({0, 0}), eig({0, 0}));
    for (long i = 0; i <= 4; ++i) {
        for (long j = 0; j <= 4; ++j) CHECK(check_pairing_degree(untwisted, i, j).passed());
    }

    auto corrupted = z3;
    corrupted.gh.age = 0;
    const auto bad = check_pairing_degree(corrupted, 2, 2);
    CHECK_FALSE(bad.passed());
    CHECK(bad.violations.front().note == "imbalance -2");

    auto nonsense = z2;
    nonsense.gh.dimension = 3;
    CHECK_THROWS_AS(check_pairing_degree(nonsense, 1, 1), InconsistentSectorError);
}

TEST_CASE("exhaustive diagonal sweep") {
    std::size_t elements = 0;
    for (unsigned m = 1; m <= 12; ++m) {
        for (unsigned k = 1; k <= 4; ++k) {
            std::vector<long> w(k, 0);
            while (true) {
                const auto rows = sector_table({DiagonalGenerator{m, w}});
                for (const auto& g : rows) {
                    ++elements;
                    CHECK(check_age_dimension(g.eigen, g.label).passed());
                }
                // Pairs are only swept for k ≤ 2 here; the acceptance binary covers all k.
                if (k <= 2) {
                    for (const auto& g : rows) {
                        for (const auto& h : rows) {
                            const auto gh = compose(g.eigen, h.eigen);
                            const long dd = double_sector_dimension(g.eigen, h.eigen);
                            const long r = obstruction_rank(g.age, h.age, age(gh), dd, sector_dimension(gh));
                            CHECK(r == obstruction_rank(h.age, g.age, age(gh), dd, sector_dimension(gh)));
                            long over = 0;
                            for (std::size_t j = 0; j < k; ++j) over += (g.eigen.exponents[j] + h.eigen.exponents[j] > 1);
                            CHECK(r == 2 * over);
                        }
                    }
                }
                std::size_t i = 0;
                while (i < k && ++w[i] == static_cast<long>(m)) w[i++] = 0;
                if (i == k) break;
            }
        }
    }
    CHECK(elements > 0);
}

TEST_CASE("identity element has zero obstruction") {
    const auto e = eig({0, 0, 0});
    for (const auto& h : {eig({q(1, 2), 0, q(1, 3)}), eig({q(1, 5), q(2, 5), q(4, 5)})}) {
        const auto gh = compose(e, h);
        CHECK(obstruction_rank(age(e), age(h), age(gh), double_sector_dimension(e, h), sector_dimension(gh)) == 0);
    }
}

TEST_CASE("sector table") {
    const auto rows = sector_table({DiagonalGenerator{3, {1, 2}}});
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].label == "a");
    CHECK(rows[1].age == 1);
    CHECK(rows[1].dimension == 0);
    CHECK(rows[1].degree_offset == 2);
    CHECK(rows[0].dimension == 4);
    const auto two = sector_table({DiagonalGenerator{2, {1, 0}}, DiagonalGenerator{2, {0, 1}}});
    CHECK(two.size() == 4);
    CHECK_THROWS_AS(sector_table({}), PreconditionError);
    CHECK_THROWS_AS(sector_table({DiagonalGenerator{2, {1}}, DiagonalGenerator{2, {1, 1}}}), PreconditionError);
}
