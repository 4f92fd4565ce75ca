#include "strtop/tqft.hpp"

#include "strtop/checks.hpp"
#include "strtop/error.hpp"

namespace strtop {

namespace {

SparseVec apply_handle(const FrobeniusData& A, const SparseVec& x) {
    Accumulator<std::size_t> acc;
    for (const auto& t : comultiply(A, x)) {
        for (const auto& r : A.product(t.left, t.right)) acc.add(r.index, t.coeff * r.coeff);
    }
    return to_sparse(acc);
}

Scalar evaluate_counit(const FrobeniusData& A, const SparseVec& x) {
    Scalar out = 0;
    for (const auto& c : *A.counit()) {
        for (const auto& t : x) {
            if (t.index == c.index) out += c.coeff * t.coeff;
        }
    }
    return out;
}

}  // namespace

LinearMap handle_operator(const FrobeniusData& A) {
    std::vector<SparseVec> cols;
    cols.reserve(A.dimension());
    for (std::size_t i = 0; i < A.dimension(); ++i) cols.push_back(apply_handle(A, SparseVec{Term{i, 1}}));
    return LinearMap(A.basis(), A.basis(), std::move(cols));
}

MultiTensor surface_operation(const FrobeniusData& A, const SurfaceSignature& sig,
                              const std::vector<GradedElement>& args) {
    if (args.size() != sig.inputs) throw PreconditionError("surface operation expects one argument per input");
    for (const auto& a : args) require_same_basis(a.basis(), A.basis(), "surface_operation");
    if (sig.inputs == 0 && !A.unit()) throw PreconditionError("no inputs requires a unit");
    if (sig.outputs == 0 && !A.counit()) throw PreconditionError("no outputs requires a counit");

    SparseVec x = sig.inputs == 0 ? *A.unit() : args.front().terms();
    for (std::size_t i = 1; i < args.size(); ++i) x = multiply(A, x, args[i].terms());
    for (unsigned g = 0; g < sig.genus; ++g) x = apply_handle(A, x);

    if (sig.outputs == 0) {
        std::map<MultiTensor::Key, Scalar> terms;
        auto v = evaluate_counit(A, x);
        if (!is_zero(v)) terms[{}] = v;
        return MultiTensor(A.basis(), 0, std::move(terms));
    }

    std::map<MultiTensor::Key, Scalar> cur;
    for (const auto& t : x) cur[{t.index}] = t.coeff;
    for (unsigned k = 1; k < sig.outputs; ++k) {
        std::map<MultiTensor::Key, Scalar> next;
        for (const auto& [key, c] : cur) {
            for (const auto& t : A.coproduct(key.front())) {
                MultiTensor::Key nk{t.left, t.right};
                nk.insert(nk.end(), key.begin() + 1, key.end());
                next[nk] += c * t.coeff;
            }
        }
        std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
        cur = std::move(next);
    }
    return MultiTensor(A.basis(), sig.outputs, std::move(cur));
}

Scalar closed_invariant(const FrobeniusData& A, unsigned genus) {
    if (!A.unit() || !A.counit()) throw PreconditionError("closed invariant requires a unit and a counit");
    if (!check_snake(A).passed()) throw PreconditionError("counit is not calibrated: snake identity fails");
    SparseVec x = *A.unit();
    for (unsigned g = 0; g < genus; ++g) x = apply_handle(A, x);
    return evaluate_counit(A, x);
}

}  // namespace strtop
