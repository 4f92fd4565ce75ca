#pragma once

#include "strtop/frobenius.hpp"

#include <vector>

namespace strtop {

/// Connected oriented surface with p incoming and q outgoing circles.
struct SurfaceSignature {
    unsigned inputs = 0;
    unsigned outputs = 1;
    unsigned genus = 0;
};

/// H = μ∘δ.
LinearMap handle_operator(const FrobeniusData& A);

/// δ^{(q−1)} ∘ H^g ∘ μ^{(p−1)} applied to the p arguments, product and
/// coproduct both left-nested. p = 0 starts from the unit. q = 0 ends with
/// the counit (arity-0 result). Throws PreconditionError when the unit or
/// counit needed is absent or the argument count differs from p.
MultiTensor surface_operation(const FrobeniusData& A, const SurfaceSignature& sig,
                              const std::vector<GradedElement>& args);

/// counit(H^g(unit)). Requires unit and counit, and check_snake to pass.
Scalar closed_invariant(const FrobeniusData& A, unsigned genus);

}  // namespace strtop
