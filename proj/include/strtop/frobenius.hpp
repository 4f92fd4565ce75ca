#pragma once

#include "strtop/graded.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace strtop {

/// Graded algebra-and-coalgebra of degree `shift`: the product and the
/// coproduct both lower the unshifted degree by `shift`. Unit and counit are
/// optional. Structure constants are stored for every ordered pair; nothing
/// is inferred from symmetry.
///
/// Truncated models of infinite-dimensional algebras record the basis pairs
/// whose true product left the truncation window. Checkers skip any identity
/// instance that touches such a pair and count it.
class FrobeniusData {
public:
    const std::string& name() const { return name_; }
    const BasisPtr& basis() const { return basis_; }
    std::size_t dimension() const { return basis_->size(); }
    long shift() const { return shift_; }

    /// Degree in the shifted grading, deg − shift.
    long shifted_degree(std::size_t i) const { return basis_->degree(i) - shift_; }

    const SparseVec& product(std::size_t a, std::size_t b) const { return product_[a * dimension() + b]; }
    const SparseTensor& coproduct(std::size_t a) const { return coproduct_[a]; }
    bool overflowed(std::size_t a, std::size_t b) const {
        return !overflow_.empty() && overflow_[a * dimension() + b] != 0;
    }
    bool has_overflow() const { return !overflow_.empty(); }
    std::size_t overflow_count() const;

    const std::optional<SparseVec>& unit() const { return unit_; }
    /// Counit as the list of its nonzero values on basis vectors.
    const std::optional<SparseVec>& counit() const { return counit_; }

    bool coproduct_is_zero() const;

    /// Free-form ordered metadata, serialized with the algebra.
    const std::vector<std::pair<std::string, std::string>>& tags() const { return tags_; }
    std::optional<std::string> tag(const std::string& key) const;

    bool operator==(const FrobeniusData& other) const;

private:
    friend class FrobeniusBuilder;
    FrobeniusData() = default;

    std::string name_;
    BasisPtr basis_;
    long shift_ = 0;
    std::vector<SparseVec> product_;
    std::vector<SparseTensor> coproduct_;
    std::vector<char> overflow_;
    std::optional<SparseVec> unit_;
    std::optional<SparseVec> counit_;
    std::vector<std::pair<std::string, std::string>> tags_;
};

/// Assembles a FrobeniusData; build() enforces degree homogeneity.
class FrobeniusBuilder {
public:
    FrobeniusBuilder(BasisPtr basis, long shift);
    /// Starts from an existing algebra (all tables copied).
    explicit FrobeniusBuilder(const FrobeniusData& from);

    FrobeniusBuilder& name(std::string n);
    FrobeniusBuilder& product(std::size_t a, std::size_t b, SparseVec value);
    FrobeniusBuilder& product(const std::string& a, const std::string& b,
                              const std::vector<std::pair<Scalar, std::string>>& value);
    FrobeniusBuilder& coproduct(std::size_t a, SparseTensor value);
    FrobeniusBuilder& coproduct(const std::string& a,
                                const std::vector<std::tuple<Scalar, std::string, std::string>>& value);
    FrobeniusBuilder& clear_coproduct();
    FrobeniusBuilder& overflow(std::size_t a, std::size_t b);
    FrobeniusBuilder& unit(std::optional<SparseVec> value);
    FrobeniusBuilder& counit(std::optional<SparseVec> value);
    FrobeniusBuilder& tag(std::string key, std::string value);

    const BasisPtr& basis() const { return data_.basis_; }

    /// Throws DegreeError naming the first inhomogeneous structure constant.
    FrobeniusData build() const;

private:
    FrobeniusData data_;
};

GradedElement apply_product(const FrobeniusData& A, const GradedElement& x, const GradedElement& y);
TensorElement apply_coproduct(const FrobeniusData& A, const GradedElement& x);

/// Index-level kernels used by the checkers. `tainted` is set when a
/// truncated (overflowed) basis pair was consulted.
SparseVec multiply(const FrobeniusData& A, const SparseVec& x, const SparseVec& y, bool* tainted = nullptr);
SparseTensor comultiply(const FrobeniusData& A, const SparseVec& x);

/// Weight function α on ordered pairs of basis vectors, with a default value
/// for unlisted pairs.
class PairWeights {
public:
    explicit PairWeights(Scalar default_value = 1) : default_(std::move(default_value)) {}

    PairWeights& set(std::size_t a, std::size_t b, Scalar value);
    Scalar operator()(std::size_t a, std::size_t b) const;
    const Scalar& default_value() const { return default_; }
    const std::map<std::pair<std::size_t, std::size_t>, Scalar>& entries() const { return entries_; }

    /// Builds weights from a callable over every ordered pair.
    static PairWeights tabulate(std::size_t n, const std::function<Scalar(std::size_t, std::size_t)>& f);

private:
    Scalar default_;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> entries_;
};

/// Throws UnsupportedStructureError unless every basis-pair product is zero
/// or a multiple of a single basis vector.
void require_monomial_products(const FrobeniusData& A);

/// Product rescaled pairwise: a ⋆_α b = α(a,b)·(a ⋆ b). Coproduct kept.
FrobeniusData twist_product(const FrobeniusData& A, const PairWeights& alpha);

/// Copy of A with the counit replaced.
FrobeniusData with_counit(const FrobeniusData& A, std::optional<SparseVec> counit, std::string tag_value = "user");
FrobeniusData with_coproduct_zero(const FrobeniusData& A);

}  // namespace strtop
