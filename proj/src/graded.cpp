#include "strtop/graded.hpp"

#include "strtop/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace strtop {

GradedBasis::GradedBasis(std::vector<BasisEntry> entries) : entries_(std::move(entries)) {
    index_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& label = entries_[i].label;
        if (label.empty()) throw PreconditionError("empty basis label at position " + std::to_string(i));
        for (char c : label) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                throw PreconditionError("basis label contains whitespace: '" + label + "'");
            }
        }
        if (!index_.emplace(label, i).second) {
            throw PreconditionError("duplicate basis label '" + label + "'");
        }
    }
}

std::optional<std::size_t> GradedBasis::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedBasis::index_of(const std::string& label) const {
    auto found = find(label);
    if (!found) throw PreconditionError("unknown basis label '" + label + "'");
    return *found;
}

BasisPtr make_basis(std::vector<BasisEntry> entries) {
    return std::make_shared<const GradedBasis>(std::move(entries));
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b, const char* where) {
    if (!same_basis(a, b)) throw BasisMismatchError(std::string(where) + ": operands live over different bases");
}

SparseVec to_sparse(const Accumulator<std::size_t>& acc) {
    return acc.extract<SparseVec>([](std::size_t i, const Scalar& c) { return Term{i, c}; });
}

SparseTensor to_sparse(const Accumulator<std::pair<std::size_t, std::size_t>>& acc) {
    return acc.extract<SparseTensor>(
        [](const std::pair<std::size_t, std::size_t>& k, const Scalar& c) { return TensorTerm{k.first, k.second, c}; });
}

namespace {

std::string render_coeff(const Scalar& c, bool first) {
    std::string out;
    if (sgn(c) < 0) {
        out = first ? "-" : " - ";
    } else if (!first) {
        out = " + ";
    }
    Scalar mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    return out;
}

}  // namespace

GradedElement::GradedElement(BasisPtr basis, SparseVec terms) : basis_(std::move(basis)) {
    Accumulator<std::size_t> acc;
    for (const auto& t : terms) {
        if (t.index >= basis_->size()) throw PreconditionError("term index out of basis range");
        acc.add(t.index, t.coeff);
    }
    terms_ = to_sparse(acc);
}

GradedElement GradedElement::basis_vector(BasisPtr basis, std::size_t index) {
    return GradedElement(std::move(basis), SparseVec{Term{index, 1}});
}

GradedElement GradedElement::from_label(BasisPtr basis, const std::string& label, Scalar coeff) {
    const auto i = basis->index_of(label);
    return GradedElement(std::move(basis), SparseVec{Term{i, std::move(coeff)}});
}

Scalar GradedElement::coefficient(std::size_t index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::size_t i) { return t.index < i; });
    if (it != terms_.end() && it->index == index) return it->coeff;
    return 0;
}

Scalar GradedElement::coefficient(const std::string& label) const {
    auto i = basis_->find(label);
    return i ? coefficient(*i) : Scalar(0);
}

std::optional<long> GradedElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    const long d = basis_->degree(terms_.front().index);
    for (const auto& t : terms_) {
        if (basis_->degree(t.index) != d) return std::nullopt;
    }
    return d;
}

GradedElement GradedElement::operator+(const GradedElement& other) const {
    require_same_basis(basis_, other.basis_, "element sum");
    Accumulator<std::size_t> acc;
    for (const auto& t : terms_) acc.add(t.index, t.coeff);
    for (const auto& t : other.terms_) acc.add(t.index, t.coeff);
    GradedElement out(basis_);
    out.terms_ = to_sparse(acc);
    return out;
}

GradedElement GradedElement::operator-(const GradedElement& other) const { return *this + other * Scalar(-1); }

GradedElement GradedElement::operator*(const Scalar& s) const {
    GradedElement out(basis_);
    if (strtop::is_zero(s)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back(Term{t.index, t.coeff * s});
    return out;
}

bool GradedElement::operator==(const GradedElement& other) const {
    return same_basis(basis_, other.basis_) && terms_ == other.terms_;
}

std::string GradedElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        out += render_coeff(t.coeff, first) + basis_->label(t.index);
        first = false;
    }
    return out;
}

TensorElement::TensorElement(BasisPtr basis, SparseTensor terms) : basis_(std::move(basis)) {
    Accumulator<std::pair<std::size_t, std::size_t>> acc;
    for (const auto& t : terms) {
        if (t.left >= basis_->size() || t.right >= basis_->size()) {
            throw PreconditionError("tensor term index out of basis range");
        }
        acc.add({t.left, t.right}, t.coeff);
    }
    terms_ = to_sparse(acc);
}

Scalar TensorElement::coefficient(const std::string& left, const std::string& right) const {
    auto l = basis_->find(left);
    auto r = basis_->find(right);
    if (!l || !r) return 0;
    for (const auto& t : terms_) {
        if (t.left == *l && t.right == *r) return t.coeff;
    }
    return 0;
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
    require_same_basis(basis_, other.basis_, "tensor sum");
    SparseTensor all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return TensorElement(basis_, std::move(all));
}

TensorElement TensorElement::operator*(const Scalar& s) const {
    SparseTensor scaled;
    if (!strtop::is_zero(s)) {
        for (const auto& t : terms_) scaled.push_back(TensorTerm{t.left, t.right, t.coeff * s});
    }
    return TensorElement(basis_, std::move(scaled));
}

bool TensorElement::operator==(const TensorElement& other) const {
    return same_basis(basis_, other.basis_) && terms_ == other.terms_;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        out += render_coeff(t.coeff, first) + "(" + basis_->label(t.left) + "," + basis_->label(t.right) + ")";
        first = false;
    }
    return out;
}

MultiTensor::MultiTensor(BasisPtr basis, std::size_t arity, std::map<Key, Scalar> terms)
    : basis_(std::move(basis)), arity_(arity) {
    for (auto& [key, value] : terms) {
        if (key.size() != arity_) throw PreconditionError("multi-tensor key has wrong arity");
        if (!strtop::is_zero(value)) terms_.emplace(key, std::move(value));
    }
}

Scalar MultiTensor::coefficient(const std::vector<std::string>& labels) const {
    Key key;
    for (const auto& l : labels) {
        auto i = basis_->find(l);
        if (!i) return 0;
        key.push_back(*i);
    }
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool MultiTensor::operator==(const MultiTensor& other) const {
    return arity_ == other.arity_ && same_basis(basis_, other.basis_) && terms_ == other.terms_;
}

std::string MultiTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, value] : terms_) {
        if (arity_ == 0) return value.get_str();
        out += render_coeff(value, first);
        if (arity_ == 1) {
            out += basis_->label(key[0]);
        } else {
            out += "(";
            for (std::size_t k = 0; k < key.size(); ++k) {
                if (k) out += ",";
                out += basis_->label(key[k]);
            }
            out += ")";
        }
        first = false;
    }
    return out;
}

GradedElement linear_combine(const std::vector<std::pair<Scalar, GradedElement>>& coeffs) {
    if (coeffs.empty()) throw PreconditionError("linear_combine needs at least one element to fix the basis");
    const BasisPtr& basis = coeffs.front().second.basis();
    Accumulator<std::size_t> acc;
    for (const auto& [c, x] : coeffs) {
        require_same_basis(basis, x.basis(), "linear_combine");
        for (const auto& t : x.terms()) acc.add(t.index, c * t.coeff);
    }
    return GradedElement(basis, to_sparse(acc));
}

LinearMap::LinearMap(BasisPtr source, BasisPtr target, std::vector<SparseVec> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
    if (columns_.size() != source_->size()) throw PreconditionError("linear map needs one column per source vector");
    for (auto& col : columns_) {
        Accumulator<std::size_t> acc;
        for (const auto& t : col) {
            if (t.index >= target_->size()) throw PreconditionError("linear map column leaves the target basis");
            acc.add(t.index, t.coeff);
        }
        col = to_sparse(acc);
    }
}

LinearMap LinearMap::identity(BasisPtr basis) {
    std::vector<SparseVec> cols(basis->size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = {Term{i, 1}};
    return LinearMap(basis, basis, std::move(cols));
}

LinearMap LinearMap::zero(BasisPtr source, BasisPtr target) {
    std::vector<SparseVec> cols(source->size());
    return LinearMap(std::move(source), std::move(target), std::move(cols));
}

GradedElement LinearMap::apply(const GradedElement& x) const {
    require_same_basis(source_, x.basis(), "linear map application");
    Accumulator<std::size_t> acc;
    for (const auto& t : x.terms()) {
        for (const auto& c : columns_[t.index]) acc.add(c.index, t.coeff * c.coeff);
    }
    return GradedElement(target_, to_sparse(acc));
}

GradedElement LinearMap::apply(std::size_t source_index) const { return GradedElement(target_, columns_.at(source_index)); }

LinearMap LinearMap::compose(const LinearMap& inner) const {
    require_same_basis(inner.target_, source_, "linear map composition");
    std::vector<SparseVec> cols;
    cols.reserve(inner.source_->size());
    for (std::size_t i = 0; i < inner.source_->size(); ++i) {
        cols.push_back(apply(inner.apply(i)).terms());
    }
    return LinearMap(inner.source_, target_, std::move(cols));
}

bool LinearMap::operator==(const LinearMap& other) const {
    return same_basis(source_, other.source_) && same_basis(target_, other.target_) && columns_ == other.columns_;
}

}  // namespace strtop
