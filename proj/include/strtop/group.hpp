#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace strtop {

/// A permutation of {0, ..., n-1}; image[i] is where i goes.
using Permutation = std::vector<std::size_t>;

class FiniteGroupTable;

namespace detail {
FiniteGroupTable validated_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> rows,
                                 bool verify_associativity);
}  // namespace detail

/// Finite group as a validated Cayley table.
class FiniteGroupTable {
public:
    std::size_t order() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t g) const { return labels_[g]; }
    std::size_t index_of(const std::string& label) const;

    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t identity() const { return identity_; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    std::size_t element_order(std::size_t g) const;
    std::size_t conjugate(std::size_t g, std::size_t by) const { return mul(mul(by, g), inverse(by)); }
    std::size_t commutator(std::size_t a, std::size_t b) const {
        return mul(mul(a, b), mul(inverse(a), inverse(b)));
    }
    bool is_abelian() const;

    const std::vector<std::size_t>& table() const { return table_; }

    /// Exponent tuples for groups built by abelian_group(); empty otherwise.
    const std::vector<std::vector<std::size_t>>& coordinates() const { return coordinates_; }
    const std::vector<std::size_t>& moduli() const { return moduli_; }

private:
    friend FiniteGroupTable abelian_group(const std::vector<std::size_t>&);
    friend FiniteGroupTable detail::validated_table(std::vector<std::string>, std::vector<std::vector<std::size_t>>,
                                                    bool);
    std::vector<std::string> labels_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    std::vector<std::vector<std::size_t>> coordinates_;
    std::vector<std::size_t> moduli_;
};

/// Validates closure, associativity (exhaustively), identity and inverses.
/// Throws GroupError naming the witness.
FiniteGroupTable group_from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> rows);

/// Parses cycle notation over points 1..degree: "(1 2)(3 4)", "(1,2,3)", "()".
Permutation parse_cycles(const std::string& text, std::size_t degree);
std::string cycle_string(const Permutation& p);

/// Closure of the generators under composition, enumerated breadth-first
/// from the identity. Elements are labeled by cycle notation. Composition
/// convention: (p*q)(i) = p(q(i)). Throws GroupError for degree 0.
FiniteGroupTable group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators);
FiniteGroupTable group_from_permutations(std::size_t degree, const std::vector<std::string>& generators);

/// Direct product of cyclic groups Z/m_1 × ... × Z/m_k with elements labeled
/// by exponent tuples.
FiniteGroupTable abelian_group(const std::vector<std::size_t>& moduli);
FiniteGroupTable cyclic_group(std::size_t n);

/// Z/n (n ≤ 12, written "Z3" or "Z/3"), "Z2xZ2", "S3", "S4", "D4", "Q8", "A4".
FiniteGroupTable builtin_group(const std::string& name);
const std::vector<std::string>& builtin_group_names();

/// Elements of G closed under the group law; checked, not assumed.
bool is_subgroup(const FiniteGroupTable& G, const std::vector<std::size_t>& subset);

struct ConjugacyPartition {
    std::vector<std::vector<std::size_t>> classes;  // each sorted ascending
    std::vector<std::size_t> representative;        // per class
    std::vector<std::size_t> class_of;              // per element

    std::size_t size() const { return classes.size(); }
};

/// Orbits of G acting on itself by conjugation, ordered by their smallest
/// element index (the identity class comes first). The representative is
/// the element of smallest order, ties broken by index; all elements of a
/// class share one order, so this is the smallest index.
ConjugacyPartition conjugacy_classes(const FiniteGroupTable& G);

}  // namespace strtop
