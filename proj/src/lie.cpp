#include "strtop/lie.hpp"

#include "strtop/error.hpp"

#include <algorithm>
#include <numeric>

namespace strtop {

namespace {

std::string normalize_name(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c != '(' && c != ')' && c != ' ') out += c;
    }
    return out;
}

void require_rank(const ExponentProfile& p, std::size_t l, const char* what) {
    if (l != p.rank()) throw PreconditionError(std::string(what) + ": monomial length does not match the rank");
}

void check(const ExponentProfile& p, const GGMonomial& m) {
    require_rank(p, m.x.size(), "monomial");
    require_rank(p, m.y.size(), "monomial");
}

void check(const ExponentProfile& p, const GG2Monomial& m) {
    for (auto n : {m.x.size(), m.xp.size(), m.y.size(), m.yp.size()}) require_rank(p, n, "monomial");
}

void append_factor(std::string& out, const std::string& name, unsigned power) {
    if (power == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (power > 1) out += "^" + std::to_string(power);
}

template <class Map>
void add_term(Map& out, const typename Map::key_type& key, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = out.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) out.erase(it);
    }
}

}  // namespace

long ExponentProfile::dimension() const {
    long sum = 0;
    for (auto d : exponents) sum += d;
    return static_cast<long>(rank()) + 2 * sum;
}

const std::vector<std::string>& builtin_profile_names() {
    static const std::vector<std::string> names = {"SU(2)", "SU(3)", "SU(4)", "SU(5)", "SO(5)", "Sp(2)", "G2"};
    return names;
}

ExponentProfile builtin_profile(const std::string& name) {
    const auto key = normalize_name(name);
    for (unsigned n = 2; n <= 5; ++n) {
        if (key == "SU" + std::to_string(n)) {
            std::vector<unsigned> d(n - 1);
            std::iota(d.begin(), d.end(), 1U);
            return profile_from_exponents(d, "SU(" + std::to_string(n) + ")");
        }
    }
    if (key == "SO5") return profile_from_exponents({1, 3}, "SO(5)");
    if (key == "Sp2") return profile_from_exponents({1, 3}, "Sp(2)");
    if (key == "G2") return profile_from_exponents({1, 5}, "G2");
    throw PreconditionError("unknown Lie group '" + name + "'");
}

ExponentProfile profile_from_exponents(std::vector<unsigned> exponents, std::string name) {
    if (exponents.empty()) throw PreconditionError("exponent list must be nonempty");
    for (auto d : exponents) {
        if (d == 0) throw PreconditionError("exponents must be positive");
    }
    std::sort(exponents.begin(), exponents.end());
    ExponentProfile p{std::move(name), std::move(exponents)};
    if (p.name.empty()) {
        p.name = "exponents(";
        for (std::size_t i = 0; i < p.rank(); ++i) p.name += (i ? "," : "") + std::to_string(p.exponents[i]);
        p.name += ")";
    }
    return p;
}

long cohomological_degree(const ExponentProfile& p, const GGMonomial& m) {
    check(p, m);
    long deg = 0;
    for (std::size_t i = 0; i < p.rank(); ++i) {
        const long d = p.exponents[i];
        deg += 2 * d * m.x[i] + (2 * d + 1) * m.y[i];
    }
    return deg;
}

long cohomological_degree(const ExponentProfile& p, const GG2Monomial& m) {
    check(p, m);
    long deg = 0;
    for (std::size_t i = 0; i < p.rank(); ++i) {
        const long d = p.exponents[i];
        deg += 2 * d * (m.x[i] + m.xp[i]) + (2 * d + 1) * (m.y[i] + m.yp[i]);
    }
    return deg;
}

std::string monomial_label(const GGMonomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.x.size(); ++i) append_factor(out, "x" + std::to_string(i + 1), m.x[i]);
    for (std::size_t i = 0; i < m.y.size(); ++i) append_factor(out, "y" + std::to_string(i + 1), m.y[i]);
    return out.empty() ? "1" : out;
}

std::string monomial_label(const GG2Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        append_factor(out, "x" + std::to_string(i + 1), m.x[i]);
        append_factor(out, "x" + std::to_string(i + 1) + "'", m.xp[i]);
    }
    for (std::size_t i = 0; i < m.y.size(); ++i) {
        append_factor(out, "y" + std::to_string(i + 1), m.y[i]);
        append_factor(out, "y" + std::to_string(i + 1) + "'", m.yp[i]);
    }
    return out.empty() ? "1" : out;
}

GGMonomial parse_monomial(const ExponentProfile& p, const std::string& label) {
    const std::size_t l = p.rank();
    GGMonomial m{std::vector<unsigned>(l, 0), std::vector<unsigned char>(l, 0)};
    if (label == "1") return m;
    std::size_t pos = 0;
    while (pos <= label.size()) {
        auto end = label.find('*', pos);
        if (end == std::string::npos) end = label.size();
        const std::string factor = label.substr(pos, end - pos);
        if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'y')) {
            throw ParseError("bad monomial factor '" + factor + "'");
        }
        const auto caret = factor.find('^');
        const std::string idx = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        unsigned power = 1;
        std::size_t i = 0;
        try {
            std::size_t used = 0;
            i = std::stoul(idx, &used);
            if (used != idx.size()) throw ParseError("bad index");
            if (caret != std::string::npos) {
                const std::string pw = factor.substr(caret + 1);
                power = static_cast<unsigned>(std::stoul(pw, &used));
                if (used != pw.size()) throw ParseError("bad power");
            }
        } catch (const std::logic_error&) {
            throw ParseError("bad monomial factor '" + factor + "'");
        } catch (const ParseError&) {
            throw ParseError("bad monomial factor '" + factor + "'");
        }
        if (i < 1 || i > l) throw ParseError("generator index out of range in '" + factor + "'");
        if (factor[0] == 'x') {
            m.x[i - 1] += power;
        } else {
            if (power > 1 || m.y[i - 1] != 0) throw ParseError("odd generator squared in '" + label + "'");
            m.y[i - 1] = 1;
        }
        pos = end + 1;
    }
    return m;
}

LieElement dual_string_product(const ExponentProfile& p, const LieElement& a, const LieElement& b) {
    LieElement out;
    for (const auto& [ma, ca] : a) {
        check(p, ma);
        for (const auto& [mb, cb] : b) {
            check(p, mb);
            GGMonomial r{ma.x, ma.y};
            bool zero = false;
            for (std::size_t i = 0; i < p.rank() && !zero; ++i) {
                r.x[i] += mb.x[i];
                const int e = ma.y[i] + mb.y[i] - 1;
                if (e < 0) zero = true;
                r.y[i] = static_cast<unsigned char>(e < 0 ? 0 : e);
            }
            if (!zero) add_term(out, r, ca * cb);
        }
    }
    return out;
}

LieElement m_shriek(const ExponentProfile& p, const Lie2Element& a) {
    LieElement out;
    for (const auto& [m, c] : a) {
        check(p, m);
        if (std::any_of(m.xp.begin(), m.xp.end(), [](unsigned v) { return v != 0; })) {
            throw PreconditionError("m_shriek is defined after x' has been identified with x");
        }
        GGMonomial r{m.x, std::vector<unsigned char>(p.rank(), 0)};
        bool zero = false;
        for (std::size_t i = 0; i < p.rank(); ++i) {
            const int e = m.y[i] + m.yp[i] - 1;
            if (e < 0) zero = true;
            r.y[i] = static_cast<unsigned char>(e < 0 ? 0 : e);
        }
        if (!zero) add_term(out, r, c);
    }
    return out;
}

Lie2Element delta_star(const ExponentProfile& p, const Lie2Element& a) {
    Lie2Element out;
    for (const auto& [m, c] : a) {
        check(p, m);
        GG2Monomial r = m;
        for (std::size_t i = 0; i < p.rank(); ++i) {
            r.x[i] += r.xp[i];
            r.xp[i] = 0;
        }
        add_term(out, r, c);
    }
    return out;
}

Lie2Element cross_product(const ExponentProfile& p, const LieElement& a, const LieElement& b) {
    Lie2Element out;
    for (const auto& [ma, ca] : a) {
        check(p, ma);
        for (const auto& [mb, cb] : b) {
            check(p, mb);
            add_term(out, GG2Monomial{ma.x, mb.x, ma.y, mb.y}, ca * cb);
        }
    }
    return out;
}

LieElement factored_string_product(const ExponentProfile& p, const LieElement& a, const LieElement& b) {
    return m_shriek(p, delta_star(p, cross_product(p, a, b)));
}

std::map<std::pair<GGMonomial, GGMonomial>, Scalar> dual_coproduct(const ExponentProfile& p, const LieElement& a) {
    for (const auto& [m, c] : a) check(p, m);
    return {};
}

std::vector<GGMonomial> lie_monomials(const ExponentProfile& p, unsigned max_x_degree) {
    const std::size_t l = p.rank();
    std::vector<std::vector<unsigned>> xs;
    std::vector<unsigned> cur(l, 0);
    // Exponent vectors with Σa_i ≤ max, via odometer.
    while (true) {
        xs.push_back(cur);
        std::size_t i = 0;
        for (; i < l; ++i) {
            ++cur[i];
            if (std::accumulate(cur.begin(), cur.end(), 0U) <= max_x_degree) break;
            cur[i] = 0;
        }
        if (i == l) break;
    }
    std::stable_sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) {
        const auto sa = std::accumulate(a.begin(), a.end(), 0U);
        const auto sb = std::accumulate(b.begin(), b.end(), 0U);
        if (sa != sb) return sa < sb;
        return a > b;
    });
    std::vector<GGMonomial> out;
    for (const auto& x : xs) {
        for (unsigned mask = 0; mask < (1U << l); ++mask) {
            GGMonomial m{x, std::vector<unsigned char>(l, 0)};
            for (std::size_t i = 0; i < l; ++i) m.y[i] = (mask >> i) & 1U;
            out.push_back(std::move(m));
        }
    }
    return out;
}

FrobeniusData lie_algebra(const ExponentProfile& p, unsigned max_x_degree) {
    const auto monos = lie_monomials(p, max_x_degree);
    std::vector<BasisEntry> entries;
    std::map<GGMonomial, std::size_t> index;
    for (const auto& m : monos) {
        index[m] = entries.size();
        entries.push_back({monomial_label(m), cohomological_degree(p, m)});
    }
    FrobeniusBuilder b(make_basis(std::move(entries)), p.dimension());
    b.name("dual-" + p.name);
    for (std::size_t i = 0; i < monos.size(); ++i) {
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const auto r = dual_string_product(p, LieElement{{monos[i], 1}}, LieElement{{monos[j], 1}});
            if (r.empty()) continue;
            const auto& m = r.begin()->first;
            auto it = index.find(m);
            if (it == index.end()) {
                b.overflow(i, j);
                continue;
            }
            b.product(i, j, SparseVec{Term{it->second, r.begin()->second}});
        }
    }
    GGMonomial unit{std::vector<unsigned>(p.rank(), 0), std::vector<unsigned char>(p.rank(), 1)};
    b.unit(SparseVec{Term{index.at(unit), 1}});
    b.tag("truncation.max_x_degree", std::to_string(max_x_degree));
    return b.build();
}

}  // namespace strtop
