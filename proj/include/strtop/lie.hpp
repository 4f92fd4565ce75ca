#pragma once

#include "strtop/frobenius.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace strtop {

/// Rank l and exponents d_1 ≤ … ≤ d_l of a compact connected Lie group.
struct ExponentProfile {
    std::string name;
    std::vector<unsigned> exponents;

    std::size_t rank() const { return exponents.size(); }
    /// l + 2Σd_i.
    long dimension() const;
};

/// "SU(2)".."SU(5)", "SO(5)", "Sp(2)", "G2" (parentheses optional).
/// Throws PreconditionError for anything else.
ExponentProfile builtin_profile(const std::string& name);
const std::vector<std::string>& builtin_profile_names();

/// Sorted, positive exponents; throws PreconditionError otherwise.
ExponentProfile profile_from_exponents(std::vector<unsigned> exponents, std::string name = "");

/// x_1^{a_1}…x_l^{a_l}·y_1^{ε_1}…y_l^{ε_l}.
struct GGMonomial {
    std::vector<unsigned> x;
    std::vector<unsigned char> y;

    auto operator<=>(const GGMonomial&) const = default;
};

/// Monomial over the doubled generators x, x', y, y'.
struct GG2Monomial {
    std::vector<unsigned> x;
    std::vector<unsigned> xp;
    std::vector<unsigned char> y;
    std::vector<unsigned char> yp;

    auto operator<=>(const GG2Monomial&) const = default;
};

using LieElement = std::map<GGMonomial, Scalar>;
using Lie2Element = std::map<GG2Monomial, Scalar>;

/// Σ 2d_i a_i + Σ (2d_i+1) ε_i.
long cohomological_degree(const ExponentProfile& p, const GGMonomial& m);
long cohomological_degree(const ExponentProfile& p, const GG2Monomial& m);

std::string monomial_label(const GGMonomial& m);   // "x1^2*y1*y2", "1"
std::string monomial_label(const GG2Monomial& m);  // "x1*x1'*y1*y2'"
GGMonomial parse_monomial(const ExponentProfile& p, const std::string& label);

/// (P y^ε) ⋆ (Q y^ε') = PQ·y^{ε+ε'−1}, zero when some ε_i + ε'_i = 0.
LieElement dual_string_product(const ExponentProfile& p, const LieElement& a, const LieElement& b);

/// y^ε y'^ε' ↦ y^{ε+ε'−1}, linear over the x variables. Throws
/// PreconditionError if a primed x appears.
LieElement m_shriek(const ExponentProfile& p, const Lie2Element& a);

/// x'_i ↦ x_i; y and y' unchanged.
Lie2Element delta_star(const ExponentProfile& p, const Lie2Element& a);

/// (P y^ε) × (Q y^ε') with the right factor written in primed variables.
Lie2Element cross_product(const ExponentProfile& p, const LieElement& a, const LieElement& b);

/// m_! ∘ Δ^* ∘ ×, evaluated stage by stage.
LieElement factored_string_product(const ExponentProfile& p, const LieElement& a, const LieElement& b);

/// The dual string coproduct, which is identically zero.
std::map<std::pair<GGMonomial, GGMonomial>, Scalar> dual_coproduct(const ExponentProfile& p, const LieElement& a);

/// Monomials of total x-degree Σa_i ≤ max_x_degree, ordered by that degree,
/// then exponent vector, then y-parities.
std::vector<GGMonomial> lie_monomials(const ExponentProfile& p, unsigned max_x_degree);

/// Truncated dual algebra: basis lie_monomials, cohomological degrees, shift
/// dim G, product dual_string_product with overflowing pairs flagged, unit
/// y_1…y_l, coproduct 0.
FrobeniusData lie_algebra(const ExponentProfile& p, unsigned max_x_degree = 10);

}  // namespace strtop
