#pragma once

#include "strtop/checks.hpp"
#include "strtop/scalar.hpp"

#include <string>
#include <vector>

namespace strtop {

/// Eigenvalue exponents k_j ∈ [0,1) of a diagonal element on C^m.
struct EigenData {
    std::vector<Scalar> exponents;

    std::size_t complex_dimension() const { return exponents.size(); }
};

/// Throws PreconditionError unless every exponent lies in [0,1).
void validate(const EigenData& e);

/// Exponents (1 − k_j) mod 1.
EigenData inverse(const EigenData& e);
/// Exponents (k_j + l_j) mod 1.
EigenData compose(const EigenData& g, const EigenData& h);

/// Σ k_j.
Scalar age(const EigenData& e);
/// 2·#{j : k_j = 0}.
long sector_dimension(const EigenData& e);
/// 2·#{j : k_j = 0 and l_j = 0}, the real dimension fixed by both.
long double_sector_dimension(const EigenData& g, const EigenData& h);

/// dim = 2m − 2·age(g) − 2·age(g⁻¹), exactly.
Report check_age_dimension(const EigenData& e, const std::string& label = "g");

/// 2(age_g + age_h − age_gh) + dim_double − dim_gh. Throws
/// InconsistentSectorError (naming the inputs) unless the result is an
/// even nonnegative integer.
long obstruction_rank(const Scalar& age_g, const Scalar& age_h, const Scalar& age_gh, long dim_double, long dim_gh);

/// i + 2·age.
Scalar orbifold_degree(long degree, const Scalar& age);

/// One twisted sector: ages of g and g⁻¹ are both recorded, since the
/// pairing uses the inverse obstruction bundle.
struct SectorRecord {
    std::string label;
    Scalar age;
    Scalar inverse_age;
    long dimension = 0;
    long ambient_dimension = 0;
};

SectorRecord sector_record(const std::string& label, const EigenData& e);

struct PairingData {
    SectorRecord g;
    SectorRecord h;
    SectorRecord gh;
    long double_dimension = 0;
};

/// Sector data of g, h, gh and the double sector for diagonal elements.
PairingData pairing_data(const EigenData& g, const EigenData& h);

/// Replays the degree count of the intersection pairing: classes of
/// orbifold degree i on g and j on h have ordinary degrees i − 2age_g and
/// j − 2age_h; restriction to the double sector costs the codimension
/// dim_g + dim_h − dim_double, capping with the Euler class of the inverse
/// obstruction bundle costs its rank, and the pushforward to gh is
/// regraded by 2age_gh. The result must have orbifold degree i + j − d.
/// A mismatch is reported with the imbalance; malformed sector data throws
/// InconsistentSectorError.
Report check_pairing_degree(const PairingData& data, long i, long j);

/// Diagonal action of Z/m_1 × … × Z/m_r on C^k: generator t acts on the
/// j-th coordinate by exp(2πi·w_tj/m_t).
struct DiagonalGenerator {
    unsigned order = 1;
    std::vector<long> weights;
};

struct SectorRow {
    std::string label;
    EigenData eigen;
    Scalar age;
    Scalar inverse_age;
    long dimension = 0;
    Scalar degree_offset;  // 2·age
};

/// One row per group element, elements ordered as in abelian_group().
std::vector<SectorRow> sector_table(const std::vector<DiagonalGenerator>& action);

}  // namespace strtop
