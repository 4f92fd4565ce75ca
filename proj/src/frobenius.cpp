#include "strtop/frobenius.hpp"

#include "strtop/error.hpp"

#include <algorithm>

namespace strtop {

std::size_t FrobeniusData::overflow_count() const {
    return static_cast<std::size_t>(std::count(overflow_.begin(), overflow_.end(), char{1}));
}

bool FrobeniusData::coproduct_is_zero() const {
    return std::all_of(coproduct_.begin(), coproduct_.end(), [](const SparseTensor& t) { return t.empty(); });
}

std::optional<std::string> FrobeniusData::tag(const std::string& key) const {
    for (const auto& [k, v] : tags_) {
        if (k == key) return v;
    }
    return std::nullopt;
}

bool FrobeniusData::operator==(const FrobeniusData& other) const {
    return name_ == other.name_ && same_basis(basis_, other.basis_) && shift_ == other.shift_ &&
           product_ == other.product_ && coproduct_ == other.coproduct_ && overflow_ == other.overflow_ &&
           unit_ == other.unit_ && counit_ == other.counit_ && tags_ == other.tags_;
}

FrobeniusBuilder::FrobeniusBuilder(BasisPtr basis, long shift) {
    const std::size_t n = basis->size();
    data_.basis_ = std::move(basis);
    data_.shift_ = shift;
    data_.product_.assign(n * n, SparseVec{});
    data_.coproduct_.assign(n, SparseTensor{});
}

FrobeniusBuilder::FrobeniusBuilder(const FrobeniusData& from) { data_ = from; }

FrobeniusBuilder& FrobeniusBuilder::name(std::string n) {
    data_.name_ = std::move(n);
    return *this;
}

namespace {

SparseVec normalized(const SparseVec& v, std::size_t n) {
    Accumulator<std::size_t> acc;
    for (const auto& t : v) {
        if (t.index >= n) throw PreconditionError("structure constant leaves the basis");
        acc.add(t.index, t.coeff);
    }
    return to_sparse(acc);
}

SparseTensor normalized(const SparseTensor& v, std::size_t n) {
    Accumulator<std::pair<std::size_t, std::size_t>> acc;
    for (const auto& t : v) {
        if (t.left >= n || t.right >= n) throw PreconditionError("coproduct term leaves the basis");
        acc.add({t.left, t.right}, t.coeff);
    }
    return to_sparse(acc);
}

}  // namespace

FrobeniusBuilder& FrobeniusBuilder::product(std::size_t a, std::size_t b, SparseVec value) {
    const std::size_t n = data_.dimension();
    if (a >= n || b >= n) throw PreconditionError("product key leaves the basis");
    data_.product_[a * n + b] = normalized(value, n);
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::product(const std::string& a, const std::string& b,
                                            const std::vector<std::pair<Scalar, std::string>>& value) {
    SparseVec v;
    for (const auto& [c, label] : value) v.push_back(Term{data_.basis_->index_of(label), c});
    return product(data_.basis_->index_of(a), data_.basis_->index_of(b), std::move(v));
}

FrobeniusBuilder& FrobeniusBuilder::coproduct(std::size_t a, SparseTensor value) {
    const std::size_t n = data_.dimension();
    if (a >= n) throw PreconditionError("coproduct key leaves the basis");
    data_.coproduct_[a] = normalized(value, n);
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::coproduct(const std::string& a,
                                              const std::vector<std::tuple<Scalar, std::string, std::string>>& value) {
    SparseTensor v;
    for (const auto& [c, l, r] : value) {
        v.push_back(TensorTerm{data_.basis_->index_of(l), data_.basis_->index_of(r), c});
    }
    return coproduct(data_.basis_->index_of(a), std::move(v));
}

FrobeniusBuilder& FrobeniusBuilder::clear_coproduct() {
    for (auto& t : data_.coproduct_) t.clear();
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::overflow(std::size_t a, std::size_t b) {
    const std::size_t n = data_.dimension();
    if (data_.overflow_.empty()) data_.overflow_.assign(n * n, 0);
    data_.overflow_.at(a * n + b) = 1;
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::unit(std::optional<SparseVec> value) {
    if (value) value = normalized(*value, data_.dimension());
    data_.unit_ = std::move(value);
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::counit(std::optional<SparseVec> value) {
    if (value) value = normalized(*value, data_.dimension());
    data_.counit_ = std::move(value);
    return *this;
}

FrobeniusBuilder& FrobeniusBuilder::tag(std::string key, std::string value) {
    for (auto& [k, v] : data_.tags_) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    data_.tags_.emplace_back(std::move(key), std::move(value));
    return *this;
}

FrobeniusData FrobeniusBuilder::build() const {
    const auto& basis = *data_.basis_;
    const std::size_t n = basis.size();
    const long s = data_.shift_;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (const auto& t : data_.product_[a * n + b]) {
                if (basis.degree(t.index) != basis.degree(a) + basis.degree(b) - s) {
                    throw DegreeError("product " + basis.label(a) + " * " + basis.label(b) + " has term " +
                                      basis.label(t.index) + " of degree " + std::to_string(basis.degree(t.index)) +
                                      ", expected " + std::to_string(basis.degree(a) + basis.degree(b) - s));
                }
            }
        }
        for (const auto& t : data_.coproduct_[a]) {
            if (basis.degree(t.left) + basis.degree(t.right) != basis.degree(a) - s) {
                throw DegreeError("coproduct of " + basis.label(a) + " has term (" + basis.label(t.left) + "," +
                                  basis.label(t.right) + ") of total degree " +
                                  std::to_string(basis.degree(t.left) + basis.degree(t.right)) + ", expected " +
                                  std::to_string(basis.degree(a) - s));
            }
        }
    }
    if (data_.unit_) {
        for (const auto& t : *data_.unit_) {
            if (basis.degree(t.index) != s) {
                throw DegreeError("unit term " + basis.label(t.index) + " must sit in degree " + std::to_string(s));
            }
        }
    }
    return data_;
}

SparseVec multiply(const FrobeniusData& A, const SparseVec& x, const SparseVec& y, bool* tainted) {
    if (x.empty() || y.empty()) return {};
    if (x.size() == 1 && y.size() == 1) {
        const auto& a = x.front();
        const auto& b = y.front();
        if (tainted && A.overflowed(a.index, b.index)) *tainted = true;
        const auto& p = A.product(a.index, b.index);
        SparseVec out;
        out.reserve(p.size());
        const Scalar c = a.coeff * b.coeff;
        for (const auto& t : p) out.push_back(Term{t.index, c * t.coeff});
        return out;
    }
    Accumulator<std::size_t> acc;
    for (const auto& a : x) {
        for (const auto& b : y) {
            if (tainted && A.overflowed(a.index, b.index)) *tainted = true;
            const auto& p = A.product(a.index, b.index);
            if (p.empty()) continue;
            const Scalar c = a.coeff * b.coeff;
            for (const auto& t : p) acc.add(t.index, c * t.coeff);
        }
    }
    return to_sparse(acc);
}

SparseTensor comultiply(const FrobeniusData& A, const SparseVec& x) {
    Accumulator<std::pair<std::size_t, std::size_t>> acc;
    for (const auto& a : x) {
        for (const auto& t : A.coproduct(a.index)) acc.add({t.left, t.right}, a.coeff * t.coeff);
    }
    return to_sparse(acc);
}

GradedElement apply_product(const FrobeniusData& A, const GradedElement& x, const GradedElement& y) {
    require_same_basis(A.basis(), x.basis(), "apply_product");
    require_same_basis(A.basis(), y.basis(), "apply_product");
    return GradedElement(A.basis(), multiply(A, x.terms(), y.terms()));
}

TensorElement apply_coproduct(const FrobeniusData& A, const GradedElement& x) {
    require_same_basis(A.basis(), x.basis(), "apply_coproduct");
    return TensorElement(A.basis(), comultiply(A, x.terms()));
}

PairWeights& PairWeights::set(std::size_t a, std::size_t b, Scalar value) {
    entries_[{a, b}] = std::move(value);
    return *this;
}

Scalar PairWeights::operator()(std::size_t a, std::size_t b) const {
    auto it = entries_.find({a, b});
    return it == entries_.end() ? default_ : it->second;
}

PairWeights PairWeights::tabulate(std::size_t n, const std::function<Scalar(std::size_t, std::size_t)>& f) {
    PairWeights w(1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            Scalar v = f(a, b);
            if (v != 1) w.set(a, b, std::move(v));
        }
    }
    return w;
}

void require_monomial_products(const FrobeniusData& A) {
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (A.product(a, b).size() > 1) {
                throw UnsupportedStructureError("product " + A.basis()->label(a) + " * " + A.basis()->label(b) +
                                                " is not a multiple of a single basis vector; weight-function "
                                                "twisting needs monomial structure constants");
            }
        }
    }
}

FrobeniusData twist_product(const FrobeniusData& A, const PairWeights& alpha) {
    require_monomial_products(A);
    FrobeniusBuilder b(A);
    const std::size_t n = A.dimension();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Scalar w = alpha(x, y);
            if (w == 1) continue;
            SparseVec scaled;
            for (const auto& t : A.product(x, y)) scaled.push_back(Term{t.index, t.coeff * w});
            b.product(x, y, std::move(scaled));
        }
    }
    return b.build();
}

FrobeniusData with_counit(const FrobeniusData& A, std::optional<SparseVec> counit, std::string tag_value) {
    FrobeniusBuilder b(A);
    b.counit(std::move(counit));
    b.tag("counit", std::move(tag_value));
    return b.build();
}

FrobeniusData with_coproduct_zero(const FrobeniusData& A) {
    FrobeniusBuilder b(A);
    b.clear_coproduct();
    return b.build();
}

}  // namespace strtop
