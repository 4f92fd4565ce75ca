#include "strtop/group.hpp"

#include "strtop/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace strtop {

using detail::validated_table;

std::size_t FiniteGroupTable::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw GroupError("no group element labeled '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteGroupTable::element_order(std::size_t g) const {
    std::size_t k = 1;
    for (std::size_t x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
}

bool FiniteGroupTable::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a) {
        for (std::size_t b = a + 1; b < order(); ++b) {
            if (mul(a, b) != mul(b, a)) return false;
        }
    }
    return true;
}

FiniteGroupTable group_from_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> rows) {
    return validated_table(std::move(labels), std::move(rows), true);
}

FiniteGroupTable detail::validated_table(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> rows,
                                         bool verify_associativity) {
    const std::size_t n = labels.size();
    if (n == 0) throw GroupError("a group needs at least one element");
    if (rows.size() != n) throw GroupError("multiplication table must have one row per element");
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i].empty()) throw GroupError("empty element label");
        for (char c : labels[i]) {
            if (std::isspace(static_cast<unsigned char>(c))) throw GroupError("element label has whitespace: " + labels[i]);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (labels[i] == labels[j]) throw GroupError("duplicate element label '" + labels[i] + "'");
        }
    }
    FiniteGroupTable G;
    G.labels_ = std::move(labels);
    G.table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw GroupError("row for '" + G.labels_[i] + "' has the wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] >= n) {
                throw GroupError("product " + G.labels_[i] + "*" + G.labels_[j] + " is not an element");
            }
            G.table_.push_back(rows[i][j]);
        }
    }
    if (verify_associativity) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t ab = G.mul(a, b);
                for (std::size_t c = 0; c < n; ++c) {
                    if (G.mul(ab, c) != G.mul(a, G.mul(b, c))) {
                        throw GroupError("table is not associative: (" + G.labels_[a] + "," + G.labels_[b] + "," +
                                         G.labels_[c] + ")");
                    }
                }
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = G.mul(e, x) == x && G.mul(x, e) == x;
        if (ok) {
            G.identity_ = e;
            found = true;
        }
    }
    if (!found) throw GroupError("table has no identity element");
    G.inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            if (G.mul(g, h) == G.identity_ && G.mul(h, g) == G.identity_) {
                G.inverse_[g] = h;
                break;
            }
        }
        if (G.inverse_[g] == n) throw GroupError("element '" + G.labels_[g] + "' has no inverse");
    }
    return G;
}

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
    if (degree == 0) throw GroupError("permutation degree must be positive");
    Permutation p(degree);
    for (std::size_t i = 0; i < degree; ++i) p[i] = i;
    std::vector<bool> seen(degree, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw GroupError("empty permutation string");
    while (pos < text.size()) {
        if (text[pos] != '(') throw GroupError("expected '(' in cycle notation: " + text);
        ++pos;
        std::vector<std::size_t> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw GroupError("malformed cycle notation: " + text);
            const std::size_t point = std::stoul(text.substr(start, pos - start));
            if (point < 1 || point > degree) {
                throw GroupError("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
            }
            if (seen[point - 1]) throw GroupError("point " + std::to_string(point) + " repeated in " + text);
            seen[point - 1] = true;
            cycle.push_back(point - 1);
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return p;
}

std::string cycle_string(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

FiniteGroupTable group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators) {
    if (degree == 0) throw GroupError("permutation degree must be positive");
    Permutation id(degree);
    for (std::size_t i = 0; i < degree; ++i) id[i] = i;
    for (const auto& g : generators) {
        if (g.size() != degree) throw GroupError("generator has the wrong degree");
        std::vector<bool> hit(degree, false);
        for (auto x : g) {
            if (x >= degree || hit[x]) throw GroupError("generator is not a permutation");
            hit[x] = true;
        }
    }
    std::vector<Permutation> elements{id};
    std::map<Permutation, std::size_t> index{{id, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation y = compose(elements[x], g);
            if (index.emplace(y, elements.size()).second) {
                queue.push_back(elements.size());
                elements.push_back(std::move(y));
            }
        }
    }
    const std::size_t n = elements.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements) labels.push_back(cycle_string(p));
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) rows[a][b] = index.at(compose(elements[a], elements[b]));
    }
    // Composition of permutations is associative; only identity and inverses are re-derived.
    return validated_table(std::move(labels), std::move(rows), false);
}

FiniteGroupTable group_from_permutations(std::size_t degree, const std::vector<std::string>& generators) {
    std::vector<Permutation> perms;
    perms.reserve(generators.size());
    for (const auto& g : generators) perms.push_back(parse_cycles(g, degree));
    return group_from_permutations(degree, perms);
}

FiniteGroupTable abelian_group(const std::vector<std::size_t>& moduli) {
    for (auto m : moduli) {
        if (m == 0) throw GroupError("cyclic factor of order 0");
    }
    std::size_t n = 1;
    for (auto m : moduli) n *= m;
    std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(moduli.size()));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rest = i;
        for (std::size_t k = 0; k < moduli.size(); ++k) {
            coords[i][k] = rest % moduli[k];
            rest /= moduli[k];
        }
    }
    auto encode = [&](const std::vector<std::size_t>& c) {
        std::size_t idx = 0;
        for (std::size_t k = moduli.size(); k-- > 0;) idx = idx * moduli[k] + c[k];
        return idx;
    };
    std::vector<std::string> labels;
    for (const auto& c : coords) {
        std::string label;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            label += static_cast<char>('a' + k);
            if (c[k] > 1) label += "^" + std::to_string(c[k]);
        }
        labels.push_back(label.empty() ? "e" : label);
    }
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<std::size_t> c(moduli.size());
            for (std::size_t k = 0; k < moduli.size(); ++k) c[k] = (coords[a][k] + coords[b][k]) % moduli[k];
            rows[a][b] = encode(c);
        }
    }
    FiniteGroupTable G = validated_table(std::move(labels), std::move(rows), false);
    G.coordinates_ = std::move(coords);
    G.moduli_ = moduli;
    return G;
}

FiniteGroupTable cyclic_group(std::size_t n) { return abelian_group({n}); }

const std::vector<std::string>& builtin_group_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int n = 1; n <= 12; ++n) v.push_back("Z" + std::to_string(n));
        for (const char* s : {"Z2xZ2", "S3", "S4", "D4", "Q8", "A4"}) v.emplace_back(s);
        return v;
    }();
    return names;
}

FiniteGroupTable builtin_group(const std::string& raw) {
    std::string name;
    for (char c : raw) {
        if (c != '/' && c != '_' && !std::isspace(static_cast<unsigned char>(c))) name += c;
    }
    if (name == "Z2xZ2") return abelian_group({2, 2});
    if (name == "S3") return group_from_permutations(3, std::vector<std::string>{"(1,2)", "(1,2,3)"});
    if (name == "S4") return group_from_permutations(4, std::vector<std::string>{"(1,2)", "(1,2,3,4)"});
    if (name == "D4") return group_from_permutations(4, std::vector<std::string>{"(1,2,3,4)", "(1,3)"});
    if (name == "A4") return group_from_permutations(4, std::vector<std::string>{"(1,2,3)", "(1,2)(3,4)"});
    // Left-regular action of {1, i, j, k, -1, -i, -j, -k} on itself.
    if (name == "Q8") {
        return group_from_permutations(8, std::vector<std::string>{"(1,2,5,6)(3,4,7,8)", "(1,3,5,7)(2,8,6,4)"});
    }
    if (name.size() > 1 && name[0] == 'Z' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const std::size_t n = std::stoul(name.substr(1));
        if (n >= 1 && n <= 12) return cyclic_group(n);
    }
    throw GroupError("unknown built-in group '" + raw + "'");
}

bool is_subgroup(const FiniteGroupTable& G, const std::vector<std::size_t>& subset) {
    if (subset.empty()) return false;
    std::vector<bool> in(G.order(), false);
    for (auto g : subset) {
        if (g >= G.order()) return false;
        in[g] = true;
    }
    if (!in[G.identity()]) return false;
    for (auto a : subset) {
        if (!in[G.inverse(a)]) return false;
        for (auto b : subset) {
            if (!in[G.mul(a, b)]) return false;
        }
    }
    return true;
}

ConjugacyPartition conjugacy_classes(const FiniteGroupTable& G) {
    const std::size_t n = G.order();
    ConjugacyPartition P;
    P.class_of.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        if (P.class_of[g] != n) continue;
        const std::size_t id = P.classes.size();
        std::vector<std::size_t> cls;
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t c = G.conjugate(g, x);
            if (P.class_of[c] == n) {
                P.class_of[c] = id;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        std::size_t rep = cls.front();
        for (auto c : cls) {
            if (G.element_order(c) < G.element_order(rep)) rep = c;
        }
        P.representative.push_back(rep);
        P.classes.push_back(std::move(cls));
    }
    return P;
}

}  // namespace strtop
