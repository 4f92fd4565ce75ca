#pragma once

#include "strtop/frobenius.hpp"
#include "strtop/group.hpp"

#include <string>
#include <vector>

namespace strtop {

/// One candidate coproduct normalization for the class algebra, with the
/// verdicts of the two axioms that decide between candidates.
struct DwCandidate {
    std::string normalization;  // "raw-count" or "size-normalized"
    FrobeniusData algebra;
    bool frobenius_passed;
    bool snake_passed;
};

/// Both candidates, each with its counit already calibrated. The product is
/// always the class-sum convolution: C ⋆ D = Σ_E N(C,D;E)·E with
/// N(C,D;E) = #{(h,k) ∈ C×D : hk = g_E}. The coproducts are
///   raw-count:        δ(E) = Σ N(C,D;E)·C⊗D
///   size-normalized:  δ(E) = Σ N(C,D;E)·|E|/(|C||D|)·C⊗D
std::vector<DwCandidate> dw_candidates(const FiniteGroupTable& G);

/// Frobenius algebra on the conjugacy-class basis of the group algebra
/// center (all degrees 0, shift 0). Adopts the candidate that passes both
/// check_frobenius and check_snake; the choice and the list of passing
/// candidates are written to the tags. Throws Error if none passes.
///
/// The coproduct is recomputed from every element of each class and must
/// agree with the value at the representative.
FrobeniusData dw_algebra(const FiniteGroupTable& G, const std::string& name = "");

/// Label of the class containing g in the DW basis: "[" + label(rep) + "]".
std::string class_label(const FiniteGroupTable& G, const ConjugacyPartition& P, std::size_t cls);

/// Permutation action of a finite group on a labeled finite set.
struct PermutationAction {
    std::vector<std::string> points;
    std::vector<Permutation> act;  // act[h] for every element index h
};

/// Conjugation action of H on its own elements.
PermutationAction conjugation_action(const FiniteGroupTable& H);

/// Throws GroupError unless `action` is a homomorphism into Sym(points).
void validate_action(const FiniteGroupTable& H, const PermutationAction& action);

/// Orbit basis of the coinvariants k[X]_K for K ⊆ H; orbits are ordered by
/// smallest point and labeled "[point]".
BasisPtr coinvariant_basis(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                           const PermutationAction& action);

enum class CosetChoice { smallest_index, largest_index };

/// Transfer from H-coinvariants to K-coinvariants:
///   [x]_H ↦ Σ_{K h ∈ K\H} [h·x]_K,
/// summing over right cosets so that the sum is independent of both the
/// orbit representative x and the coset representatives.
LinearMap transfer(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                   const PermutationAction& action, CosetChoice choice = CosetChoice::smallest_index);

/// Natural projection k[X]_K → k[X]_H, [y]_K ↦ [y]_H.
LinearMap coinvariant_projection(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                                 const PermutationAction& action);

/// |{(a_1,b_1,…,a_g,b_g) : Π[a_i,b_i] = e}| / |G| by exhaustive counting,
/// accumulated over partial products. Throws PreconditionError for genus 0.
Scalar commuting_tuple_count(const FiniteGroupTable& G, unsigned genus);

/// Bilinear 2-cocycle (−1)^{x_2·y_1} on Z/2×Z/2 (coordinates (x_1,x_2)),
/// as weights on the DW basis of abelian_group({2,2}).
PairWeights z2xz2_bilinear_cocycle(const FiniteGroupTable& G, const FrobeniusData& dw);

}  // namespace strtop
