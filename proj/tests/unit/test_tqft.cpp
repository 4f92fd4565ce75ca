#include "strtop/dijkgraaf_witten.hpp"
#include "strtop/error.hpp"
#include "strtop/sphere.hpp"
#include "strtop/tqft.hpp"

#include <doctest.h>

using namespace strtop;

namespace {

FrobeniusData line_algebra(bool with_counit) {
    FrobeniusBuilder b(make_basis({{"u", 0}}), 0);
    b.product("u", "u", {{1, "u"}});
    b.coproduct("u", {{1, "u", "u"}});
    b.unit(SparseVec{Term{0, 1}});
    if (with_counit) b.counit(SparseVec{Term{0, 1}});
    return b.build();
}

MultiTensor single(const FrobeniusData& A, const SparseVec& v) {
    std::map<MultiTensor::Key, Scalar> t;
    for (const auto& x : v) t[{x.index}] = x.coeff;
    return MultiTensor(A.basis(), 1, t);
}

GradedElement el(const FrobeniusData& A, const std::string& l) { return GradedElement::from_label(A.basis(), l); }

}  // namespace

TEST_CASE("handle operator") {
    const auto A = dw_algebra(cyclic_group(2));
    const auto H = handle_operator(A);
    CHECK(H.apply(el(A, "[e]")) == el(A, "[e]") * 2);
    CHECK(H.apply(el(A, "[a]")) == el(A, "[a]") * 2);

    const auto S = sphere_string_algebra(2);
    CHECK(handle_operator(S) == LinearMap::zero(S.basis(), S.basis()));

    const auto L = line_algebra(true);
    CHECK(handle_operator(L) == LinearMap::identity(L.basis()));
}

TEST_CASE("surface operations") {
    const auto A = dw_algebra(cyclic_group(2));
    const auto e = el(A, "[e]");
    const auto a = el(A, "[a]");

    CHECK(surface_operation(A, {2, 1, 0}, {a, a}) == single(A, apply_product(A, a, a).terms()));
    CHECK(surface_operation(A, {1, 1, 1}, {a}) == single(A, (a * 2).terms()));
    CHECK(surface_operation(A, {1, 2, 0}, {e}).to_string() == "([e],[e]) + ([a],[a])");
    CHECK(surface_operation(A, {0, 1, 0}, {}) == single(A, e.terms()));
    CHECK(surface_operation(A, {1, 0, 1}, {e}).coefficient({}) == 2);

    CHECK_THROWS_AS(surface_operation(A, {2, 1, 0}, {a}), PreconditionError);
    const auto S = sphere_string_algebra(1);
    CHECK_THROWS_AS(surface_operation(S, {1, 0, 0}, {GradedElement::basis_vector(S.basis(), 0)}), PreconditionError);
    CHECK_THROWS_AS(surface_operation(with_counit(A, std::nullopt), {1, 0, 0}, {a}), PreconditionError);
}

TEST_CASE("genus additivity and pants gluing") {
    for (const auto* g : {"Z3", "S3", "Q8"}) {
        const auto A = dw_algebra(builtin_group(g));
        const auto H = handle_operator(A);
        for (std::size_t x = 0; x < A.dimension(); ++x) {
            for (std::size_t y = 0; y < A.dimension(); ++y) {
                const auto gx = GradedElement::basis_vector(A.basis(), x);
                const auto gy = GradedElement::basis_vector(A.basis(), y);
                for (unsigned g1 = 0; g1 <= 2; ++g1) {
                    for (unsigned g2 = 0; g2 <= 2; ++g2) {
                        const auto first = surface_operation(A, {2, 1, g1}, {gx, gy});
                        GradedElement mid(A.basis());
                        for (const auto& [k, c] : first.terms()) mid = mid + GradedElement::basis_vector(A.basis(), k[0]) * c;
                        CHECK(surface_operation(A, {1, 1, g2}, {mid}) == surface_operation(A, {2, 1, g1 + g2}, {gx, gy}));
                    }
                }
                for (std::size_t z = 0; z < A.dimension(); ++z) {
                    const auto gz = GradedElement::basis_vector(A.basis(), z);
                    const auto left = apply_product(A, apply_product(A, gx, gy), gz);
                    const auto right = apply_product(A, gx, apply_product(A, gy, gz));
                    CHECK(left == right);
                    CHECK(surface_operation(A, {3, 1, 0}, {gx, gy, gz}) == single(A, left.terms()));
                }
            }
        }
    }
}

TEST_CASE("closed invariants") {
    CHECK(closed_invariant(dw_algebra(cyclic_group(2)), 1) == 2);
    CHECK(closed_invariant(dw_algebra(builtin_group("S3")), 1) == 3);
    for (unsigned g = 0; g <= 4; ++g) CHECK(closed_invariant(line_algebra(true), g) == 1);
    for (const auto& name : builtin_group_names()) {
        const auto G = builtin_group(name);
        const auto A = dw_algebra(G);
        CHECK(closed_invariant(A, 1) == Scalar(static_cast<long>(A.dimension())));
        CHECK(closed_invariant(A, 1) == commuting_tuple_count(G, 1));
    }
    CHECK_THROWS_AS(closed_invariant(line_algebra(false), 1), PreconditionError);
    const auto A = dw_algebra(cyclic_group(2));
    CHECK_THROWS_AS(closed_invariant(with_counit(A, SparseVec{Term{0, 2}}), 1), PreconditionError);
}
