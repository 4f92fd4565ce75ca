#include "strtop/grading.hpp"

#include "strtop/error.hpp"
#include "strtop/group.hpp"

namespace strtop {

namespace {

Scalar frac(const Scalar& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Scalar out = x - Scalar(q);
    out.canonicalize();
    return out;
}

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

std::string exponents_string(const EigenData& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.exponents.size(); ++i) out += (i ? "," : "") + to_string(e.exponents[i]);
    return out + ")";
}

void same_dimension(const EigenData& g, const EigenData& h) {
    if (g.complex_dimension() != h.complex_dimension()) {
        throw PreconditionError("eigen data live on different dimensions");
    }
}

}  // namespace

void validate(const EigenData& e) {
    for (const auto& k : e.exponents) {
        if (sgn(k) < 0 || k >= 1) throw PreconditionError("eigen exponent " + to_string(k) + " not in [0,1)");
    }
}

EigenData inverse(const EigenData& e) {
    validate(e);
    EigenData out;
    for (const auto& k : e.exponents) out.exponents.push_back(frac(Scalar(1) - k));
    return out;
}

EigenData compose(const EigenData& g, const EigenData& h) {
    validate(g);
    validate(h);
    same_dimension(g, h);
    EigenData out;
    for (std::size_t j = 0; j < g.exponents.size(); ++j) out.exponents.push_back(frac(g.exponents[j] + h.exponents[j]));
    return out;
}

Scalar age(const EigenData& e) {
    validate(e);
    Scalar sum = 0;
    for (const auto& k : e.exponents) sum += k;
    return sum;
}

long sector_dimension(const EigenData& e) {
    validate(e);
    long n = 0;
    for (const auto& k : e.exponents) n += is_zero(k) ? 1 : 0;
    return 2 * n;
}

long double_sector_dimension(const EigenData& g, const EigenData& h) {
    validate(g);
    validate(h);
    same_dimension(g, h);
    long n = 0;
    for (std::size_t j = 0; j < g.exponents.size(); ++j) n += (is_zero(g.exponents[j]) && is_zero(h.exponents[j])) ? 1 : 0;
    return 2 * n;
}

Report check_age_dimension(const EigenData& e, const std::string& label) {
    Report r;
    r.check = "age-dimension";
    r.algebra = label;
    const long dim = sector_dimension(e);
    const Scalar a = age(e);
    const Scalar ai = age(inverse(e));
    const Scalar rhs = Scalar(2 * static_cast<long>(e.complex_dimension())) - 2 * a - 2 * ai;
    r.checked = 1;
    r.notes = {{"exponents", exponents_string(e)}, {"age", to_string(a)}, {"inverse_age", to_string(ai)},
               {"dimension", std::to_string(dim)}};
    if (Scalar(dim) != rhs) r.violations.push_back({{label}, std::to_string(dim), to_string(rhs), "dim != d - 2age - 2age(inverse)"});
    return r;
}

long obstruction_rank(const Scalar& age_g, const Scalar& age_h, const Scalar& age_gh, long dim_double, long dim_gh) {
    Scalar rank = 2 * (age_g + age_h - age_gh) + Scalar(dim_double - dim_gh);
    rank.canonicalize();
    if (!is_integer(rank) || sgn(rank) < 0 || is_odd(rank.get_num().get_si())) {
        throw InconsistentSectorError("obstruction rank " + to_string(rank) + " is not an even nonnegative integer (ages " +
                                      to_string(age_g) + ", " + to_string(age_h) + ", " + to_string(age_gh) +
                                      "; dims " + std::to_string(dim_double) + ", " + std::to_string(dim_gh) + ")");
    }
    return rank.get_num().get_si();
}

Scalar orbifold_degree(long degree, const Scalar& age) { return Scalar(degree) + 2 * age; }

SectorRecord sector_record(const std::string& label, const EigenData& e) {
    return SectorRecord{label, age(e), age(inverse(e)), sector_dimension(e), 2 * static_cast<long>(e.complex_dimension())};
}

PairingData pairing_data(const EigenData& g, const EigenData& h) {
    return PairingData{sector_record("g", g), sector_record("h", h), sector_record("gh", compose(g, h)),
                       double_sector_dimension(g, h)};
}

Report check_pairing_degree(const PairingData& s, long i, long j) {
    const long d = s.g.ambient_dimension;
    for (const auto* rec : {&s.g, &s.h, &s.gh}) {
        if (rec->ambient_dimension != d) throw InconsistentSectorError("sectors disagree on the ambient dimension");
        if (rec->dimension < 0 || is_odd(rec->dimension) || rec->dimension > d) {
            throw InconsistentSectorError("sector " + rec->label + " has invalid dimension " + std::to_string(rec->dimension));
        }
    }
    if (s.double_dimension < 0 || is_odd(s.double_dimension) || s.double_dimension > s.g.dimension ||
        s.double_dimension > s.h.dimension) {
        throw InconsistentSectorError("double sector dimension " + std::to_string(s.double_dimension) + " is invalid");
    }
    // Both ranks must be genuine; only the inverse one enters the count.
    const long rank = obstruction_rank(s.g.age, s.h.age, s.gh.age, s.double_dimension, s.gh.dimension);
    const long inverse_rank =
        obstruction_rank(s.g.inverse_age, s.h.inverse_age, s.gh.inverse_age, s.double_dimension, s.gh.dimension);

    const Scalar a = Scalar(i) - 2 * s.g.age;
    const Scalar b = Scalar(j) - 2 * s.h.age;
    const long codim = s.g.dimension + s.h.dimension - s.double_dimension;
    const Scalar c = a + b - Scalar(codim) - Scalar(inverse_rank);
    const Scalar got = orbifold_degree(0, s.gh.age) + c;
    const Scalar want = Scalar(i + j - d);

    Report r;
    r.check = "pairing-degree";
    r.algebra = s.g.label + "*" + s.h.label + "->" + s.gh.label;
    r.checked = 1;
    r.notes = {{"degree_on_g", to_string(a)},
               {"degree_on_h", to_string(b)},
               {"codimension", std::to_string(codim)},
               {"obstruction_rank", std::to_string(rank)},
               {"inverse_obstruction_rank", std::to_string(inverse_rank)},
               {"degree_on_gh", to_string(c)},
               {"orbifold_degree", to_string(got)},
               {"target", to_string(want)}};
    if (got != want) {
        Scalar imbalance = got - want;
        r.violations.push_back({{s.g.label, s.h.label, s.gh.label}, to_string(got), to_string(want),
                                "imbalance " + to_string(imbalance)});
    }
    return r;
}

std::vector<SectorRow> sector_table(const std::vector<DiagonalGenerator>& action) {
    if (action.empty()) throw PreconditionError("action needs at least one generator");
    const std::size_t k = action.front().weights.size();
    std::vector<std::size_t> moduli;
    for (const auto& gen : action) {
        if (gen.order == 0) throw PreconditionError("generator order must be positive");
        if (gen.weights.size() != k) throw PreconditionError("generators act on different dimensions");
        moduli.push_back(gen.order);
    }
    const auto G = abelian_group(moduli);
    std::vector<SectorRow> rows;
    for (std::size_t g = 0; g < G.order(); ++g) {
        EigenData e;
        for (std::size_t j = 0; j < k; ++j) {
            Scalar x = 0;
            for (std::size_t t = 0; t < action.size(); ++t) {
                x += Scalar(static_cast<long>(G.coordinates()[g][t]) * action[t].weights[j],
                            static_cast<unsigned long>(action[t].order));
            }
            x.canonicalize();
            e.exponents.push_back(frac(x));
        }
        const Scalar a = age(e);
        rows.push_back(SectorRow{G.label(g), e, a, age(inverse(e)), sector_dimension(e), 2 * a});
    }
    return rows;
}

}  // namespace strtop
