#pragma once

#include "strtop/frobenius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strtop {

/// Subset of {0,…,n}, sorted ascending.
using Face = std::vector<unsigned>;

std::string face_label(const Face& S);            // "F{}", "F{0,2}"
std::string group_label(const Face& coordinates);  // "r{0,2}": the reflections present

/// Real dimension of the sphere fixed by the reflections in a k-subset:
/// 2(n−k)+1, which is −1 (empty) for k = n+1.
long fixed_sphere_dimension(unsigned n, std::size_t k);

/// Group labels r ≠ 1 in (Z/2)^{n+1} (degree 0) followed by faces F_S with
/// |S| ≤ n (degree 2(n−|S|)+1), shift 2n+1. F_S ⋆ F_T = F_{S∪T} when S, T
/// are disjoint and |S∪T| ≤ n; F_∅ is the unit; any other product with a
/// group label is 0. Coproduct 0, no counit.
FrobeniusData sphere_string_algebra(unsigned n);

/// (2n+1) − dim F_S − dim F_T + dim F_{S∪T}, from fixed-sphere dimensions.
long excess_rank(unsigned n, const Face& S, const Face& T);

/// Face product recomputed from excess ranks and fixed-sphere dimensions:
/// zero (nullopt) when the excess rank is positive or the target sphere is
/// empty, F_{S∪T} otherwise.
std::optional<Face> face_product_oracle(unsigned n, const Face& S, const Face& T);

/// Monomials r·u^a·v^ε over all r ∈ (Z/2)^{n+1}, 0 ≤ a ≤ N, labeled
/// "r{0,2}.u^3.v"; shifted degree 2n·a − (2n+1)ε, shift 2n+1. Products with
/// a₁+a₂ > N are dropped and flagged. Requires n ≥ 1, N ≥ 1.
FrobeniusData sphere_loop_algebra(unsigned n, unsigned truncation);

std::string loop_label(const Face& r, unsigned a, bool v);

/// F_∅ ↦ r{}, F_S ↦ 0 for S ≠ ∅, g ↦ g·v.
LinearMap phi_map(unsigned n, unsigned truncation);

/// Truncated k[u,u^{-1}][v] with |u| = 0, |v| = −1 (shifted), shift 1,
/// exponents |k| ≤ N; labels "u^-2", "u^3.v".
FrobeniusData circle_loop_algebra(unsigned truncation);

/// D(u^k v) = k·u^k, D(u^k) = 0 on circle_loop_algebra.
LinearMap circle_bv_operator(const FrobeniusData& circle);

}  // namespace strtop
