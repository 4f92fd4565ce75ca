#pragma once

#include "strtop/scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace strtop {

struct BasisEntry {
    std::string label;
    long degree = 0;  // unshifted

    bool operator==(const BasisEntry&) const = default;
};

/// Ordered list of labeled homogeneous basis vectors. Labels are unique and
/// contain no whitespace; the stored degree is always the unshifted one.
class GradedBasis {
public:
    explicit GradedBasis(std::vector<BasisEntry> entries);

    std::size_t size() const { return entries_.size(); }
    const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<BasisEntry>& entries() const { return entries_; }

    const std::string& label(std::size_t i) const { return entries_[i].label; }
    long degree(std::size_t i) const { return entries_[i].degree; }

    std::optional<std::size_t> find(const std::string& label) const;
    /// Throws PreconditionError for an unknown label.
    std::size_t index_of(const std::string& label) const;

    bool operator==(const GradedBasis& other) const { return entries_ == other.entries_; }

private:
    std::vector<BasisEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::vector<BasisEntry> entries);

/// Same object or structurally equal.
bool same_basis(const BasisPtr& a, const BasisPtr& b);
void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where);

struct Term {
    std::size_t index;
    Scalar coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse vector: sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

struct TensorTerm {
    std::size_t left;
    std::size_t right;
    Scalar coeff;

    bool operator==(const TensorTerm&) const = default;
};

/// Sparse tensor-square vector: sorted by (left, right), no zeros.
using SparseTensor = std::vector<TensorTerm>;

/// Accumulates coefficients keyed on K and drops zeros on extraction.
template <class Key>
class Accumulator {
public:
    void add(const Key& key, const Scalar& value) {
        if (is_zero(value)) return;
        auto [it, inserted] = terms_.try_emplace(key, value);
        if (!inserted) it->second += value;
    }
    const std::map<Key, Scalar>& raw() const { return terms_; }

    template <class Out, class Make>
    Out extract(Make make) const {
        Out out;
        for (const auto& [key, value] : terms_) {
            if (!is_zero(value)) out.push_back(make(key, value));
        }
        return out;
    }

private:
    std::map<Key, Scalar> terms_;
};

SparseVec to_sparse(const Accumulator<std::size_t>& acc);
SparseTensor to_sparse(const Accumulator<std::pair<std::size_t, std::size_t>>& acc);

/// Linear combination of basis vectors with exact coefficients.
class GradedElement {
public:
    explicit GradedElement(BasisPtr basis) : basis_(std::move(basis)) {}
    GradedElement(BasisPtr basis, SparseVec terms);

    static GradedElement basis_vector(BasisPtr basis, std::size_t index);
    static GradedElement from_label(BasisPtr basis, const std::string& label, Scalar coeff = 1);

    const BasisPtr& basis() const { return basis_; }
    const SparseVec& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(std::size_t index) const;
    Scalar coefficient(const std::string& label) const;

    /// Single common degree, or nullopt for a zero or inhomogeneous element.
    std::optional<long> degree() const;

    GradedElement operator+(const GradedElement& other) const;
    GradedElement operator-(const GradedElement& other) const;
    GradedElement operator*(const Scalar& s) const;
    bool operator==(const GradedElement& other) const;

    std::string to_string() const;

private:
    BasisPtr basis_;
    SparseVec terms_;
};

inline GradedElement operator*(const Scalar& s, const GradedElement& x) { return x * s; }

/// Element of A ⊗ A over one basis.
class TensorElement {
public:
    explicit TensorElement(BasisPtr basis) : basis_(std::move(basis)) {}
    TensorElement(BasisPtr basis, SparseTensor terms);

    const BasisPtr& basis() const { return basis_; }
    const SparseTensor& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const std::string& left, const std::string& right) const;

    TensorElement operator+(const TensorElement& other) const;
    TensorElement operator*(const Scalar& s) const;
    bool operator==(const TensorElement& other) const;

    std::string to_string() const;

private:
    BasisPtr basis_;
    SparseTensor terms_;
};

/// Element of A^{⊗q} for arbitrary arity q (q = 0 is a bare scalar keyed
/// on the empty tuple).
class MultiTensor {
public:
    using Key = std::vector<std::size_t>;

    MultiTensor(BasisPtr basis, std::size_t arity) : basis_(std::move(basis)), arity_(arity) {}
    MultiTensor(BasisPtr basis, std::size_t arity, std::map<Key, Scalar> terms);

    const BasisPtr& basis() const { return basis_; }
    std::size_t arity() const { return arity_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const std::vector<std::string>& labels) const;

    bool operator==(const MultiTensor& other) const;
    std::string to_string() const;

private:
    BasisPtr basis_;
    std::size_t arity_;
    std::map<Key, Scalar> terms_;
};

/// Exact sparse sum of scaled elements; all must share one basis.
GradedElement linear_combine(const std::vector<std::pair<Scalar, GradedElement>>& coeffs);

/// Matrix with columns indexed by source basis vectors.
class LinearMap {
public:
    LinearMap(BasisPtr source, BasisPtr target, std::vector<SparseVec> columns);

    static LinearMap identity(BasisPtr basis);
    static LinearMap zero(BasisPtr source, BasisPtr target);

    const BasisPtr& source() const { return source_; }
    const BasisPtr& target() const { return target_; }
    const SparseVec& column(std::size_t i) const { return columns_[i]; }

    GradedElement apply(const GradedElement& x) const;
    GradedElement apply(std::size_t source_index) const;

    /// (*this) ∘ inner.
    LinearMap compose(const LinearMap& inner) const;

    bool operator==(const LinearMap& other) const;

private:
    BasisPtr source_;
    BasisPtr target_;
    std::vector<SparseVec> columns_;
};

}  // namespace strtop
