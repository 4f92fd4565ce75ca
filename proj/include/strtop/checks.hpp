#pragma once

#include "strtop/frobenius.hpp"

#include <string>
#include <vector>

namespace strtop {

struct Violation {
    std::vector<std::string> witness;  // basis labels of the failing tuple
    std::string lhs;
    std::string rhs;
    std::string note;

    bool operator==(const Violation&) const = default;
};

/// Outcome of one exhaustive identity check. Violations are listed in the
/// lexicographic order of their witness tuples (basis order), so a report
/// is a deterministic function of its inputs.
struct Report {
    std::string check;
    std::string algebra;
    std::size_t checked = 0;
    std::size_t skipped = 0;  // instances touching a truncated product
    std::vector<Violation> violations;
    std::vector<std::pair<std::string, std::string>> notes;

    bool passed() const { return violations.empty(); }
    bool operator==(const Report&) const = default;
};

enum class CommutativitySign {
    koszul_shifted,  // a⋆b = (−1)^{(|a|−d)(|b|−d)} b⋆a
    literal,         // a⋆b = b⋆a
};

Report check_associativity(const FrobeniusData& A);
Report check_graded_commutativity(const FrobeniusData& A);
Report check_commutativity(const FrobeniusData& A, CommutativitySign rule);
Report check_coassociativity(const FrobeniusData& A);
Report check_cocommutativity(const FrobeniusData& A);

/// Both equalities δ(a⋆b) = (⋆⊗1)(1⊗δ)(a⊗b) = (1⊗⋆)(δ⊗1)(a⊗b). Passing δ
/// (shifted degree −d) over a contributes (−1)^{d·(|a|−d)}.
Report check_frobenius(const FrobeniusData& A);

/// (ε⊗id)∘δ = id = (id⊗ε)∘δ on every basis vector. Throws
/// PreconditionError when the unit or the counit is absent.
Report check_snake(const FrobeniusData& A);

/// Two-sided unit on every basis vector. Throws PreconditionError without a unit.
Report check_unit(const FrobeniusData& A);

/// D∘D = 0 and the seven-term identity (Getzler form) in shifted degrees.
/// Throws PreconditionError unless D maps A's basis into itself raising the
/// unshifted degree by exactly one.
Report check_bv(const FrobeniusData& A, const LinearMap& D);

/// α(a,b)·α(p,c) = α(b,c)·α(a,r) for every triple with a⋆b ∝ p and b⋆c ∝ r
/// both nonzero. Throws UnsupportedStructureError on multi-term products.
Report check_cocycle(const FrobeniusData& A, const PairWeights& alpha);

/// f(a⋆b) = f(a)⋆f(b) on all pairs and (f⊗f)∘δ_A = δ_B∘f on all vectors.
Report check_morphism(const LinearMap& f, const FrobeniusData& A, const FrobeniusData& B);

/// Suite names accepted by run_checks.
const std::vector<std::string>& suite_names();

/// Runs the named checks ("all" expands to every applicable one; snake only
/// when a unit and counit exist). Unknown names throw PreconditionError.
std::vector<Report> run_checks(const FrobeniusData& A, const std::vector<std::string>& names);

bool all_passed(const std::vector<Report>& reports);

}  // namespace strtop
