#include "strtop/checks.hpp"
#include "strtop/error.hpp"
#include "strtop/lie.hpp"

#include <doctest.h>

using namespace strtop;

namespace {

LieElement mono(const ExponentProfile& p, const std::string& label, Scalar c = 1) {
    return LieElement{{parse_monomial(p, label), c}};
}

Lie2Element mono2(std::vector<unsigned> x, std::vector<unsigned> xp, std::vector<unsigned char> y,
                  std::vector<unsigned char> yp) {
    return Lie2Element{{GG2Monomial{std::move(x), std::move(xp), std::move(y), std::move(yp)}, 1}};
}

}  // namespace

TEST_CASE("profiles") {
    const auto su2 = builtin_profile("SU(2)");
    CHECK(su2.rank() == 1);
    CHECK(su2.dimension() == 3);
    const auto su3 = builtin_profile("SU3");
    CHECK(su3.exponents == std::vector<unsigned>{1, 2});
    CHECK(su3.dimension() == 8);
    CHECK(profile_from_exponents({3}).dimension() == 7);
    CHECK(builtin_profile("G2").dimension() == 14);
    CHECK(builtin_profile("SO(5)").dimension() == 10);
    CHECK(builtin_profile("Sp(2)").dimension() == 10);
    CHECK(builtin_profile("SU(5)").dimension() == 24);
    CHECK(builtin_profile("SU(4)").dimension() == 15);
    CHECK_THROWS_AS(builtin_profile("E8"), PreconditionError);
    CHECK_THROWS_AS(profile_from_exponents({}), PreconditionError);
    CHECK_THROWS_AS(profile_from_exponents({0}), PreconditionError);
}

TEST_CASE("labels round trip") {
    const auto p = builtin_profile("SU(3)");
    for (const auto& m : lie_monomials(p, 3)) CHECK(parse_monomial(p, monomial_label(m)) == m);
    CHECK(monomial_label(parse_monomial(p, "x1^2*y1*y2")) == "x1^2*y1*y2");
    CHECK(monomial_label(GGMonomial{{0, 0}, {0, 0}}) == "1");
    CHECK(monomial_label(GG2Monomial{{2, 0}, {0, 0}, {1, 0}, {0, 1}}) == "x1^2*y1*y2'");
    CHECK_THROWS_AS(parse_monomial(p, "y1*y1"), ParseError);
    CHECK_THROWS_AS(parse_monomial(p, "x3"), ParseError);
    CHECK_THROWS_AS(parse_monomial(p, "z1"), ParseError);
}

TEST_CASE("dual string product on SU(2)") {
    const auto p = builtin_profile("SU(2)");
    CHECK(dual_string_product(p, mono(p, "x1*y1"), mono(p, "x1^2*y1")) == mono(p, "x1^3*y1"));
    CHECK(dual_string_product(p, mono(p, "x1"), mono(p, "x1^2")).empty());
    CHECK(dual_string_product(p, mono(p, "y1"), mono(p, "1")) == mono(p, "1"));
    const auto deg = cohomological_degree(p, parse_monomial(p, "y1")) + cohomological_degree(p, parse_monomial(p, "1")) -
                     p.dimension();
    CHECK(deg == 0);
}

TEST_CASE("m_shriek and delta_star") {
    const auto p = builtin_profile("SU(2)");
    CHECK(m_shriek(p, mono2({0}, {0}, {1}, {1})) == mono(p, "y1"));
    CHECK(m_shriek(p, mono2({0}, {0}, {1}, {0})) == mono(p, "1"));
    CHECK(m_shriek(p, mono2({0}, {0}, {0}, {0})).empty());
    CHECK_THROWS_AS(m_shriek(p, mono2({0}, {1}, {1}, {0})), PreconditionError);

    CHECK(delta_star(p, mono2({0}, {1}, {0}, {0})) == mono2({1}, {0}, {0}, {0}));
    CHECK(delta_star(p, mono2({1}, {1}, {0}, {0})) == mono2({2}, {0}, {0}, {0}));
    CHECK(delta_star(p, mono2({0}, {0}, {1}, {1})) == mono2({0}, {0}, {1}, {1}));

    CHECK(dual_coproduct(p, mono(p, "x1*y1")).empty());
    CHECK(dual_coproduct(p, mono(p, "1")).empty());
    CHECK(dual_coproduct(p, LieElement{}).empty());
}

TEST_CASE("delta_star is an algebra map") {
    const auto p = builtin_profile("SU(3)");
    const auto a = mono2({1, 0}, {0, 2}, {0, 1}, {0, 0});
    const auto b = mono2({0, 1}, {1, 0}, {0, 0}, {1, 0});
    // Multiplication of commuting x-parts with disjoint y-parts is exponent addition.
    const auto ab = mono2({1, 1}, {1, 2}, {0, 1}, {1, 0});
    const auto da = delta_star(p, a).begin()->first;
    const auto db = delta_star(p, b).begin()->first;
    const auto dab = delta_star(p, ab).begin()->first;
    for (std::size_t i = 0; i < 2; ++i) CHECK(dab.x[i] == da.x[i] + db.x[i]);
}

TEST_CASE("factored route equals the closed formula") {
    for (const auto* g : {"SU(2)", "SU(3)"}) {
        const auto p = builtin_profile(g);
        const auto monos = lie_monomials(p, 4);
        for (const auto& a : monos) {
            for (const auto& b : monos) {
                const LieElement x{{a, 1}};
                const LieElement y{{b, 1}};
                const auto direct = dual_string_product(p, x, y);
                CHECK(factored_string_product(p, x, y) == direct);
                CHECK(dual_string_product(p, y, x) == direct);
                if (!direct.empty()) {
                    CHECK(cohomological_degree(p, direct.begin()->first) ==
                          cohomological_degree(p, a) + cohomological_degree(p, b) - p.dimension());
                }
            }
        }
    }
}

TEST_CASE("truncated algebras") {
    const auto p = builtin_profile("SU(2)");
    const auto A = lie_algebra(p, 10);
    CHECK(A.dimension() == 22);
    CHECK(A.shift() == 3);
    REQUIRE(A.unit()->size() == 1);
    CHECK(A.basis()->label(A.unit()->front().index) == "y1");
    CHECK(check_associativity(A).passed());
    CHECK(check_commutativity(A, CommutativitySign::literal).passed());
    CHECK(check_unit(A).passed());
    CHECK(A.coproduct_is_zero());
    CHECK(check_frobenius(A).passed());

    const auto B = lie_algebra(builtin_profile("SU(3)"), 3);
    CHECK(B.dimension() == 40);
    CHECK(check_associativity(B).passed());
    CHECK(check_commutativity(B, CommutativitySign::literal).passed());
    CHECK(check_unit(B).passed());
}

TEST_CASE("Koszul-signed commutativity fails for rank two") {
    // y1 ⋆ y2 = y2 ⋆ y1 = 1 while both have odd shifted degree.
    const auto B = lie_algebra(builtin_profile("SU(3)"), 2);
    const auto r = check_graded_commutativity(B);
    CHECK_FALSE(r.passed());
    bool found = false;
    for (const auto& v : r.violations) found = found || v.witness == std::vector<std::string>{"y1", "y2"};
    CHECK(found);
    CHECK(check_graded_commutativity(lie_algebra(builtin_profile("SU(2)"), 4)).passed());
}
