#include "strtop/checks.hpp"
#include "strtop/dijkgraaf_witten.hpp"
#include "strtop/error.hpp"
#include "strtop/serialize.hpp"

#include <doctest.h>

using namespace strtop;

namespace {

BasisPtr basis_of(std::vector<BasisEntry> e) { return make_basis(std::move(e)); }

FrobeniusData dw_z2() { return dw_algebra(cyclic_group(2), "Z2"); }

GradedElement el(const FrobeniusData& A, const std::string& label) { return GradedElement::from_label(A.basis(), label); }

bool has_witness(const Report& r, std::vector<std::string> w) {
    for (const auto& v : r.violations) {
        if (v.witness == w) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("scalars parse canonically and reject junk") {
    CHECK(to_string(parse_scalar("6/4")) == "3/2");
    CHECK(to_string(parse_scalar("-4/2")) == "-2");
    CHECK(to_string(parse_scalar("0/7")) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("+3"), ParseError);
}

TEST_CASE("basis rejects duplicate and blank labels") {
    CHECK_THROWS_AS(basis_of({{"x", 0}, {"x", 1}}), PreconditionError);
    CHECK_THROWS_AS(basis_of({{"a b", 0}}), PreconditionError);
    CHECK_THROWS_AS(basis_of({{"", 0}}), PreconditionError);
}

TEST_CASE("linear_combine") {
    auto B = basis_of({{"x", 0}, {"y", 0}});
    const auto x = GradedElement::from_label(B, "x");
    const auto y = GradedElement::from_label(B, "y");
    CHECK(linear_combine({{1, x}, {-1, x}}).is_zero());
    CHECK(linear_combine({{Scalar(1, 2), x}, {Scalar(1, 2), x}}) == x);
    CHECK(linear_combine({{2, x + y}, {-2, y}}) == x * 2);

    auto other = basis_of({{"x", 0}, {"z", 0}});
    CHECK_THROWS_AS(linear_combine({{1, x}, {1, GradedElement::from_label(other, "x")}}), BasisMismatchError);
}

TEST_CASE("apply_product and apply_coproduct on DW(Z/2)") {
    const auto A = dw_z2();
    CHECK(apply_product(A, el(A, "[a]"), el(A, "[a]")) == el(A, "[e]"));
    CHECK(apply_product(A, GradedElement(A.basis()), el(A, "[a]")).is_zero());

    const auto d = apply_coproduct(A, el(A, "[e]"));
    CHECK(d.to_string() == "([e],[e]) + ([a],[a])");
    CHECK(apply_coproduct(A, el(A, "[a]")).to_string() == "([e],[a]) + ([a],[e])");
    CHECK(apply_coproduct(A, GradedElement(A.basis())).is_zero());

    const auto S = dw_algebra(builtin_group("S3"));
    CHECK_THROWS_AS(apply_product(A, el(A, "[a]"), GradedElement::basis_vector(S.basis(), 0)), BasisMismatchError);
}

TEST_CASE("builder enforces degree homogeneity") {
    auto B = basis_of({{"a", 1}, {"b", 2}});
    FrobeniusBuilder b(B, 0);
    b.product("a", "a", {{1, "a"}});  // 1 + 1 != 1
    CHECK_THROWS_AS(b.build(), DegreeError);

    FrobeniusBuilder c(B, 0);
    c.coproduct("b", {{1, "a", "b"}});  // 1 + 2 != 2
    CHECK_THROWS_AS(c.build(), DegreeError);

    FrobeniusBuilder ok(B, 0);
    ok.product("a", "a", {{1, "b"}});
    CHECK_NOTHROW(ok.build());
}

TEST_CASE("associativity counterexample") {
    auto B = basis_of({{"a", 0}, {"b", 0}});
    FrobeniusBuilder b(B, 0);
    b.product("a", "a", {{1, "b"}});
    b.product("a", "b", {{1, "a"}});
    const auto r = check_associativity(b.build());
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"a", "a", "a"}));
    CHECK(r.violations.front().witness == std::vector<std::string>{"a", "a", "a"});
}

TEST_CASE("graded commutativity uses shifted degrees") {
    auto B = basis_of({{"u", 1}, {"v", 1}, {"w", 2}});
    FrobeniusBuilder b(B, 0);
    b.product("u", "v", {{1, "w"}});
    b.product("v", "u", {{1, "w"}});
    const auto toy = b.build();
    const auto r = check_graded_commutativity(toy);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"u", "v"}));
    CHECK(check_commutativity(toy, CommutativitySign::literal).passed());

    // Same table, shift 1: u and v become even and the check passes.
    auto B1 = basis_of({{"u", 1}, {"v", 1}, {"w", 1}});
    FrobeniusBuilder c(B1, 1);
    c.product("u", "v", {{1, "w"}});
    c.product("v", "u", {{1, "w"}});
    CHECK(check_graded_commutativity(c.build()).passed());

    CHECK(check_graded_commutativity(dw_algebra(builtin_group("S3"))).passed());
}

TEST_CASE("coassociativity and cocommutativity") {
    const auto Z3 = dw_algebra(cyclic_group(3));
    CHECK(check_coassociativity(Z3).passed());
    CHECK(check_cocommutativity(Z3).passed());

    auto B = basis_of({{"a", 0}, {"b", 0}});
    FrobeniusBuilder b(B, 0);
    b.coproduct("a", {{1, "a", "b"}});
    const auto toy = b.build();
    const auto r = check_cocommutativity(toy);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"a"}));

    const auto zero = with_coproduct_zero(Z3);
    CHECK(check_coassociativity(zero).passed());
    CHECK(check_cocommutativity(zero).passed());
    CHECK(check_frobenius(zero).passed());
}

TEST_CASE("frobenius compatibility") {
    const auto A = dw_z2();
    CHECK(check_frobenius(A).passed());

    FrobeniusBuilder b(A);
    b.coproduct("[a]", {{2, "[e]", "[a]"}, {2, "[a]", "[e]"}});
    const auto r = check_frobenius(b.build());
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"[a]", "[e]"}));
}

TEST_CASE("snake identity") {
    const auto A = dw_z2();
    CHECK(check_snake(A).passed());

    const auto e = *A.basis()->find("[e]");
    CHECK_FALSE(check_snake(with_counit(A, SparseVec{Term{e, 2}})).passed());
    CHECK_THROWS_AS(check_snake(with_counit(A, std::nullopt)), PreconditionError);

    auto B = basis_of({{"u", 0}});
    FrobeniusBuilder b(B, 0);
    b.product("u", "u", {{1, "u"}});
    b.coproduct("u", {{1, "u", "u"}});
    b.unit(SparseVec{Term{0, 1}});
    b.counit(SparseVec{Term{0, 1}});
    CHECK(check_snake(b.build()).passed());
}

TEST_CASE("BV checker") {
    auto B = basis_of({{"x", 0}, {"y", 1}, {"z", 2}});
    FrobeniusBuilder b(B, 0);
    b.product("y", "y", {{1, "z"}});
    const auto A = b.build();
    CHECK(check_bv(A, LinearMap::zero(A.basis(), A.basis())).passed());

    LinearMap D(A.basis(), A.basis(), {SparseVec{Term{1, 1}}, SparseVec{Term{2, 1}}, SparseVec{}});
    const auto r = check_bv(A, D);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"x"}));
    CHECK(r.violations.front().note == "D^2 != 0");

    LinearMap bad(A.basis(), A.basis(), {SparseVec{Term{2, 1}}, SparseVec{}, SparseVec{}});
    CHECK_THROWS_AS(check_bv(A, bad), PreconditionError);
}

TEST_CASE("cocycle checker") {
    const auto A = dw_z2();
    CHECK(check_cocycle(A, PairWeights(1)).passed());

    const auto e = *A.basis()->find("[e]");
    const auto a = *A.basis()->find("[a]");
    PairWeights bad(1);
    bad.set(e, a, 2);
    const auto r = check_cocycle(A, bad);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"[a]", "[a]", "[a]"}));

    // α(a,a) = 2 with α(e,·) = α(·,e) = 1 is normalized, and every normalized
    // weight function on Z/2 satisfies the identity.
    PairWeights normalized(1);
    normalized.set(a, a, 2);
    CHECK(check_cocycle(A, normalized).passed());

    const auto G = abelian_group({2, 2});
    const auto V = dw_algebra(G, "Z2xZ2");
    CHECK(check_cocycle(V, z2xz2_bilinear_cocycle(G, V)).passed());

    const auto S3 = dw_algebra(builtin_group("S3"));
    CHECK_THROWS_AS(check_cocycle(S3, PairWeights(1)), UnsupportedStructureError);
}

TEST_CASE("twist_product") {
    const auto A = dw_algebra(abelian_group({2, 2}));
    CHECK(twist_product(A, PairWeights(1)) == A);

    const auto G = abelian_group({2, 2});
    const auto T = twist_product(A, z2xz2_bilinear_cocycle(G, A));
    CHECK(check_associativity(T).passed());
    CHECK(T.coproduct(0) == A.coproduct(0));
    // The bilinear cocycle is not flip-symmetric; the twisted product is noncommutative.
    CHECK_FALSE(check_graded_commutativity(T).passed());

    const auto Z = twist_product(A, PairWeights(0));
    for (std::size_t i = 0; i < Z.dimension(); ++i) {
        for (std::size_t j = 0; j < Z.dimension(); ++j) CHECK(Z.product(i, j).empty());
    }
    CHECK(check_associativity(Z).passed());
}

TEST_CASE("check_morphism") {
    const auto A = dw_z2();
    CHECK(check_morphism(LinearMap::identity(A.basis()), A, A).passed());

    const auto e = *A.basis()->find("[e]");
    const auto a = *A.basis()->find("[a]");
    std::vector<SparseVec> cols(2);
    cols[e] = SparseVec{Term{e, 1}};
    cols[a] = SparseVec{Term{a, 2}};
    const auto r = check_morphism(LinearMap(A.basis(), A.basis(), cols), A, A);
    CHECK_FALSE(r.passed());
    CHECK(has_witness(r, {"[a]", "[a]"}));

    const auto S3 = dw_algebra(builtin_group("S3"));
    CHECK_THROWS_AS(check_morphism(LinearMap::identity(A.basis()), A, S3), BasisMismatchError);
}

TEST_CASE("linear map composition is associative") {
    auto B = basis_of({{"p", 0}, {"q", 0}});
    LinearMap f(B, B, {SparseVec{Term{1, 1}}, SparseVec{Term{0, 2}}});
    LinearMap g(B, B, {SparseVec{Term{0, 1}, Term{1, 1}}, SparseVec{}});
    LinearMap h(B, B, {SparseVec{Term{0, Scalar(1, 3)}}, SparseVec{Term{1, -1}}});
    CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    CHECK(f.compose(LinearMap::identity(B)) == f);
}

TEST_CASE("reports are deterministic") {
    const auto A = dw_algebra(builtin_group("S4"));
    CHECK(run_checks(A, {"all"}) == run_checks(A, {"all"}));
    CHECK_THROWS_AS(run_checks(A, {"nonsense"}), PreconditionError);
}

TEST_CASE("algebra serialization round trip") {
    for (const auto* g : {"Z2", "S3", "Q8"}) {
        const auto A = dw_algebra(builtin_group(g), g);
        const auto text = dump_algebra(A);
        const auto B = parse_algebra(text);
        CHECK(B == A);
        CHECK(dump_algebra(B) == text);
    }
    const auto first = to_json(dw_z2());
    std::vector<std::string> keys;
    for (const auto& [k, v] : first.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"format", "name", "shift", "basis", "product", "coproduct", "unit", "counit",
                                           "truncated", "tags"});
}

TEST_CASE("algebra parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_algebra("{"), ParseError);
    CHECK_THROWS_AS(parse_algebra("[]"), ParseError);
    CHECK_THROWS_AS(parse_algebra(R"({"format":"other"})"), ParseError);
    const std::string unknown =
        R"({"format":"strtop-frobenius/1","shift":0,"basis":[["x",0]],"product":[["x","y",[["1","x"]]]],"coproduct":[]})";
    CHECK_THROWS_AS(parse_algebra(unknown), ParseError);
    const std::string bad_coeff =
        R"({"format":"strtop-frobenius/1","shift":0,"basis":[["x",0]],"product":[["x","x",[["1/0","x"]]]],"coproduct":[]})";
    CHECK_THROWS_AS(parse_algebra(bad_coeff), ParseError);
    const std::string inhomogeneous =
        R"({"format":"strtop-frobenius/1","shift":0,"basis":[["x",1]],"product":[["x","x",[["1","x"]]]],"coproduct":[]})";
    CHECK_THROWS_AS(parse_algebra(inhomogeneous), DegreeError);
}
