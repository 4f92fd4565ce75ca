#include "strtop/checks.hpp"
#include "strtop/error.hpp"
#include "strtop/sphere.hpp"

#include <doctest.h>

#include <bit>

using namespace strtop;

namespace {

GradedElement el(const FrobeniusData& A, const std::string& l) { return GradedElement::from_label(A.basis(), l); }

std::vector<Face> faces(unsigned n) {
    std::vector<Face> out;
    for (unsigned m = 0; m < (1U << (n + 1)); ++m) {
        if (static_cast<unsigned>(std::popcount(m)) > n) continue;
        Face f;
        for (unsigned i = 0; i <= n; ++i) {
            if (m & (1U << i)) f.push_back(i);
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("labels") {
    CHECK(face_label({}) == "F{}");
    CHECK(face_label({0, 2}) == "F{0,2}");
    CHECK(group_label({1}) == "r{1}");
    CHECK(loop_label({0, 2}, 3, true) == "r{0,2}.u^3.v");
    CHECK(loop_label({}, 0, false) == "r{}");
}

TEST_CASE("face products") {
    const auto S2 = sphere_string_algebra(2);
    CHECK(apply_product(S2, el(S2, "F{0}"), el(S2, "F{1}")) == el(S2, "F{0,1}"));
    CHECK(apply_product(S2, el(S2, "F{0}"), el(S2, "F{0}")).is_zero());
    CHECK(apply_coproduct(S2, el(S2, "F{0}")).is_zero());

    const auto S1 = sphere_string_algebra(1);
    CHECK(apply_product(S1, el(S1, "F{}"), el(S1, "F{0}")) == el(S1, "F{0}"));
    CHECK(apply_product(S1, el(S1, "F{0}"), el(S1, "F{1}")).is_zero());
    CHECK_FALSE(S1.basis()->find("F{0,1}"));
    CHECK(apply_product(S1, el(S1, "F{}"), el(S1, "r{0,1}")) == el(S1, "r{0,1}"));
    CHECK(apply_product(S1, el(S1, "r{0}"), el(S1, "r{1}")).is_zero());
    CHECK(apply_product(S1, el(S1, "F{0}"), el(S1, "r{1}")).is_zero());
    CHECK_FALSE(S1.counit());
    CHECK(S1.shift() == 3);
    CHECK(S1.basis()->degree(*S1.basis()->find("F{0}")) == 1);
    CHECK(S1.basis()->degree(*S1.basis()->find("F{}")) == 3);
}

TEST_CASE("n = 0 is supported") {
    const auto S0 = sphere_string_algebra(0);
    CHECK(S0.dimension() == 2);
    CHECK(check_associativity(S0).passed());
}

TEST_CASE("basis counts and axioms") {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto S = sphere_string_algebra(n);
        CHECK(S.dimension() == 2 * ((1U << (n + 1)) - 1));
        CHECK(check_associativity(S).passed());
        CHECK(check_graded_commutativity(S).passed());
        CHECK(check_frobenius(S).passed());
        CHECK(check_unit(S).passed());
    }
    CHECK(sphere_string_algebra(6).dimension() == 2 * 127);
}

TEST_CASE("excess rank") {
    CHECK(excess_rank(2, {0}, {1}) == 0);
    CHECK(excess_rank(2, {0}, {0}) == 2);
    CHECK(excess_rank(3, {0, 1}, {1, 2}) == 2);
    for (unsigned n = 1; n <= 4; ++n) {
        for (const auto& S : faces(n)) {
            for (const auto& T : faces(n)) {
                std::size_t common = 0;
                for (auto i : S) common += std::count(T.begin(), T.end(), i);
                CHECK(excess_rank(n, S, T) == 2 * static_cast<long>(common));
            }
        }
    }
    CHECK_THROWS_AS(excess_rank(1, {2}, {}), PreconditionError);
}

TEST_CASE("face product oracle matches the table") {
    CHECK(face_product_oracle(2, {0}, {1}) == Face{0, 1});
    CHECK_FALSE(face_product_oracle(2, {0}, {0, 1}));
    CHECK_FALSE(face_product_oracle(1, {0}, {1}));
    for (unsigned n = 1; n <= 4; ++n) {
        const auto A = sphere_string_algebra(n);
        for (const auto& S : faces(n)) {
            for (const auto& T : faces(n)) {
                const auto oracle = face_product_oracle(n, S, T);
                const auto stored = apply_product(A, el(A, face_label(S)), el(A, face_label(T)));
                if (oracle) {
                    CHECK(stored == el(A, face_label(*oracle)));
                    CHECK(*stored.degree() == *el(A, face_label(S)).degree() + *el(A, face_label(T)).degree() - A.shift());
                } else {
                    CHECK(stored.is_zero());
                }
            }
        }
    }
}

TEST_CASE("loop algebra") {
    const auto L = sphere_loop_algebra(1, 4);
    CHECK(apply_product(L, el(L, "r{0}.u^2.v"), el(L, "r{1}.u^1")) == el(L, "r{0,1}.u^3.v"));
    CHECK(apply_product(L, el(L, "r{0}.v"), el(L, "r{1}.v")).is_zero());
    CHECK(check_unit(L).passed());
    CHECK(L.overflowed(*L.basis()->find("r{}.u^3"), *L.basis()->find("r{}.u^2")));
    CHECK(L.shifted_degree(*L.basis()->find("r{}.u^1")) == 2);
    CHECK(L.shifted_degree(*L.basis()->find("r{}.v")) == -3);
    const auto a = check_associativity(L);
    CHECK(a.passed());
    CHECK(a.skipped > 0);
    CHECK(check_graded_commutativity(L).passed());
    CHECK_THROWS_AS(sphere_loop_algebra(0, 2), PreconditionError);
    CHECK_THROWS_AS(sphere_loop_algebra(1, 0), PreconditionError);
}

TEST_CASE("phi is a morphism") {
    const auto f = phi_map(2, 2);
    const auto S = sphere_string_algebra(2);
    const auto L = sphere_loop_algebra(2, 2);
    CHECK(f.apply(el(S, "F{}")) == el(L, "r{}"));
    CHECK(f.apply(el(S, "F{0}")).is_zero());
    CHECK(f.apply(el(S, "r{0,2}")) == el(L, "r{0,2}.v"));
    for (unsigned n = 1; n <= 3; ++n) {
        CHECK(check_morphism(phi_map(n, 3), sphere_string_algebra(n), with_coproduct_zero(sphere_loop_algebra(n, 3)))
                  .passed());
    }
}

TEST_CASE("circle BV fixture") {
    const auto C = circle_loop_algebra(3);
    const auto D = circle_bv_operator(C);
    CHECK(D.apply(el(C, "u^2.v")) == el(C, "u^2") * 2);
    CHECK(D.apply(el(C, "u^-3.v")) == el(C, "u^-3") * -3);
    CHECK(D.apply(el(C, "u^1")).is_zero());
    const auto r = check_bv(C, D);
    CHECK(r.passed());
    CHECK(r.checked > 0);
    CHECK(check_associativity(C).passed());
    CHECK(check_graded_commutativity(C).passed());

    // D = ∂_v ∘ (u ∂_u), rebuilt term by term.
    for (long k = -3; k <= 3; ++k) {
        const auto x = el(C, "u^" + std::to_string(k) + ".v");
        const auto expected = k == 0 ? GradedElement(C.basis()) : el(C, "u^" + std::to_string(k)) * Scalar(k);
        CHECK(D.apply(x) == expected);
    }

    // Perturbing D by a nonzero multiple on one vector breaks the identity.
    std::vector<SparseVec> cols;
    for (std::size_t i = 0; i < C.dimension(); ++i) cols.push_back(D.column(i));
    cols[*C.basis()->find("u^1.v")] = SparseVec{Term{*C.basis()->find("u^1"), 5}};
    CHECK_FALSE(check_bv(C, LinearMap(C.basis(), C.basis(), cols)).passed());
}
