#pragma once

// Brute-force reference computations, written against the raw group table
// and independent of the library's structure-constant code.

#include "strtop/group.hpp"
#include "strtop/scalar.hpp"

#include <map>
#include <set>
#include <vector>

namespace oracle {

using strtop::FiniteGroupTable;
using strtop::Scalar;

/// Conjugation orbits as sets, found by applying every conjugation.
inline std::vector<std::set<std::size_t>> classes(const FiniteGroupTable& G) {
    std::vector<std::set<std::size_t>> out;
    std::vector<bool> seen(G.order(), false);
    for (std::size_t g = 0; g < G.order(); ++g) {
        if (seen[g]) continue;
        std::set<std::size_t> orbit;
        for (std::size_t x = 0; x < G.order(); ++x) {
            const std::size_t c = G.mul(G.mul(x, g), G.inverse(x));
            orbit.insert(c);
            seen[c] = true;
        }
        out.push_back(orbit);
    }
    return out;
}

/// Element of Q[G] as a dense coefficient vector.
using GroupVec = std::vector<Scalar>;

inline GroupVec class_sum(const FiniteGroupTable& G, const std::set<std::size_t>& C) {
    GroupVec v(G.order(), 0);
    for (auto g : C) v[g] = 1;
    return v;
}

inline GroupVec convolve(const FiniteGroupTable& G, const GroupVec& x, const GroupVec& y) {
    GroupVec out(G.order(), 0);
    for (std::size_t a = 0; a < G.order(); ++a) {
        if (strtop::is_zero(x[a])) continue;
        for (std::size_t b = 0; b < G.order(); ++b) out[G.mul(a, b)] += x[a] * y[b];
    }
    return out;
}

/// #{(a_1,b_1,…,a_g,b_g) : Π[a_i,b_i] = e} / |G|, enumerating every tuple.
inline Scalar naive_tuple_count(const FiniteGroupTable& G, unsigned genus) {
    const std::size_t n = G.order();
    std::vector<std::size_t> t(2 * genus, 0);
    long hits = 0;
    while (true) {
        std::size_t prod = G.identity();
        for (unsigned i = 0; i < genus; ++i) {
            const std::size_t a = t[2 * i];
            const std::size_t b = t[2 * i + 1];
            const std::size_t comm = G.mul(G.mul(a, b), G.mul(G.inverse(a), G.inverse(b)));
            prod = G.mul(prod, comm);
        }
        if (prod == G.identity()) ++hits;
        std::size_t k = 0;
        while (k < t.size() && ++t[k] == n) t[k++] = 0;
        if (k == t.size()) break;
    }
    Scalar out(hits, static_cast<unsigned long>(n));
    out.canonicalize();
    return out;
}

}  // namespace oracle
