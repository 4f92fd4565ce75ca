#include "strtop/sphere.hpp"

#include "strtop/error.hpp"

#include <algorithm>
#include <bit>

namespace strtop {

namespace {

Face bits_of(unsigned mask) {
    Face out;
    for (unsigned i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1U) out.push_back(i);
    }
    return out;
}

unsigned mask_of(unsigned n, const Face& S) {
    unsigned m = 0;
    for (auto i : S) {
        if (i > n) throw PreconditionError("face index out of range");
        if (m & (1U << i)) throw PreconditionError("face indices must be distinct");
        m |= 1U << i;
    }
    return m;
}

std::string index_set(const Face& S) {
    std::string out = "{";
    for (std::size_t i = 0; i < S.size(); ++i) out += (i ? "," : "") + std::to_string(S[i]);
    return out + "}";
}

// Masks with popcount ≤ limit, by size then lexicographic index list.
std::vector<unsigned> faces_in_order(unsigned n, unsigned limit) {
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1U << (n + 1)); ++m) {
        if (static_cast<unsigned>(std::popcount(m)) <= limit) masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return bits_of(a) < bits_of(b);
    });
    return masks;
}

void require_small(unsigned n) {
    if (n > 12) throw PreconditionError("sphere dimension parameter n must be at most 12");
}

}  // namespace

std::string face_label(const Face& S) { return "F" + index_set(S); }
std::string group_label(const Face& coordinates) { return "r" + index_set(coordinates); }

std::string loop_label(const Face& r, unsigned a, bool v) {
    std::string out = group_label(r);
    if (a > 0) out += ".u^" + std::to_string(a);
    if (v) out += ".v";
    return out;
}

long fixed_sphere_dimension(unsigned n, std::size_t k) { return 2 * (static_cast<long>(n) - static_cast<long>(k)) + 1; }

FrobeniusData sphere_string_algebra(unsigned n) {
    require_small(n);
    const unsigned groups = (1U << (n + 1)) - 1;
    std::vector<BasisEntry> entries;
    for (unsigned m = 1; m <= groups; ++m) entries.push_back({group_label(bits_of(m)), 0});
    const auto faces = faces_in_order(n, n);
    for (auto m : faces) entries.push_back({face_label(bits_of(m)), fixed_sphere_dimension(n, std::popcount(m))});
    auto basis = make_basis(std::move(entries));

    std::vector<std::size_t> face_index(1U << (n + 1), 0);
    for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = groups + i;
    const std::size_t unit = face_index[0];

    FrobeniusBuilder b(basis, 2 * static_cast<long>(n) + 1);
    b.name("sphere(" + std::to_string(n) + ")");
    for (std::size_t g = 0; g < groups; ++g) {
        b.product(unit, g, SparseVec{Term{g, 1}});
        b.product(g, unit, SparseVec{Term{g, 1}});
    }
    for (auto s : faces) {
        for (auto t : faces) {
            const unsigned u = s | t;
            if ((s & t) == 0 && static_cast<unsigned>(std::popcount(u)) <= n) {
                b.product(face_index[s], face_index[t], SparseVec{Term{face_index[u], 1}});
            }
        }
    }
    b.unit(SparseVec{Term{unit, 1}});
    return b.build();
}

long excess_rank(unsigned n, const Face& S, const Face& T) {
    const unsigned s = mask_of(n, S);
    const unsigned t = mask_of(n, T);
    return (2 * static_cast<long>(n) + 1) - fixed_sphere_dimension(n, std::popcount(s)) -
           fixed_sphere_dimension(n, std::popcount(t)) + fixed_sphere_dimension(n, std::popcount(s | t));
}

std::optional<Face> face_product_oracle(unsigned n, const Face& S, const Face& T) {
    if (excess_rank(n, S, T) > 0) return std::nullopt;
    const unsigned u = mask_of(n, S) | mask_of(n, T);
    if (fixed_sphere_dimension(n, std::popcount(u)) < 0) return std::nullopt;
    return bits_of(u);
}

FrobeniusData sphere_loop_algebra(unsigned n, unsigned truncation) {
    if (n < 1) throw PreconditionError("sphere loop algebra needs n >= 1");
    if (truncation < 1) throw PreconditionError("truncation must be at least 1");
    require_small(n);
    const long shift = 2 * static_cast<long>(n) + 1;
    const unsigned groups = 1U << (n + 1);
    const unsigned N = truncation;
    auto index = [&](unsigned r, unsigned a, unsigned v) { return (static_cast<std::size_t>(r) * (N + 1) + a) * 2 + v; };

    std::vector<BasisEntry> entries;
    for (unsigned r = 0; r < groups; ++r) {
        for (unsigned a = 0; a <= N; ++a) {
            for (unsigned v = 0; v < 2; ++v) {
                const long shifted = 2 * static_cast<long>(n) * a - shift * v;
                entries.push_back({loop_label(bits_of(r), a, v == 1), shifted + shift});
            }
        }
    }
    FrobeniusBuilder b(make_basis(std::move(entries)), shift);
    b.name("loop-sphere(" + std::to_string(n) + "," + std::to_string(N) + ")");
    for (unsigned r1 = 0; r1 < groups; ++r1) {
        for (unsigned a1 = 0; a1 <= N; ++a1) {
            for (unsigned v1 = 0; v1 < 2; ++v1) {
                for (unsigned r2 = 0; r2 < groups; ++r2) {
                    for (unsigned a2 = 0; a2 <= N; ++a2) {
                        for (unsigned v2 = 0; v2 < 2; ++v2) {
                            if (v1 + v2 > 1) continue;
                            const auto x = index(r1, a1, v1);
                            const auto y = index(r2, a2, v2);
                            if (a1 + a2 > N) {
                                b.overflow(x, y);
                                continue;
                            }
                            b.product(x, y, SparseVec{Term{index(r1 ^ r2, a1 + a2, v1 + v2), 1}});
                        }
                    }
                }
            }
        }
    }
    b.unit(SparseVec{Term{index(0, 0, 0), 1}});
    return b.build();
}

LinearMap phi_map(unsigned n, unsigned truncation) {
    const auto S = sphere_string_algebra(n);
    const auto L = sphere_loop_algebra(n, truncation);
    std::vector<SparseVec> cols(S.dimension());
    const unsigned groups = (1U << (n + 1)) - 1;
    for (unsigned m = 1; m <= groups; ++m) {
        cols[m - 1] = SparseVec{Term{*L.basis()->find(loop_label(bits_of(m), 0, true)), 1}};
    }
    cols[*S.basis()->find(face_label({}))] = SparseVec{Term{*L.basis()->find(loop_label({}, 0, false)), 1}};
    return LinearMap(S.basis(), L.basis(), std::move(cols));
}

FrobeniusData circle_loop_algebra(unsigned truncation) {
    const long N = truncation;
    auto label = [](long k, bool v) { return "u^" + std::to_string(k) + (v ? ".v" : ""); };
    auto index = [N](long k, int v) { return static_cast<std::size_t>((k + N) * 2 + v); };
    std::vector<BasisEntry> entries;
    for (long k = -N; k <= N; ++k) {
        entries.push_back({label(k, false), 1});
        entries.push_back({label(k, true), 0});
    }
    FrobeniusBuilder b(make_basis(std::move(entries)), 1);
    b.name("loop-circle(" + std::to_string(N) + ")");
    for (long k1 = -N; k1 <= N; ++k1) {
        for (int v1 = 0; v1 < 2; ++v1) {
            for (long k2 = -N; k2 <= N; ++k2) {
                for (int v2 = 0; v2 < 2; ++v2) {
                    if (v1 + v2 > 1) continue;
                    if (k1 + k2 < -N || k1 + k2 > N) {
                        b.overflow(index(k1, v1), index(k2, v2));
                        continue;
                    }
                    b.product(index(k1, v1), index(k2, v2), SparseVec{Term{index(k1 + k2, v1 + v2), 1}});
                }
            }
        }
    }
    b.unit(SparseVec{Term{index(0, 0), 1}});
    return b.build();
}

LinearMap circle_bv_operator(const FrobeniusData& circle) {
    const auto& basis = *circle.basis();
    const long N = static_cast<long>(basis.size() / 2 - 1) / 2;
    std::vector<SparseVec> cols(basis.size());
    for (long k = -N; k <= N; ++k) {
        const auto src = basis.find("u^" + std::to_string(k) + ".v");
        const auto dst = basis.find("u^" + std::to_string(k));
        if (!src || !dst) throw BasisMismatchError("not a circle loop algebra");
        if (k != 0) cols[*src] = SparseVec{Term{*dst, Scalar(k)}};
    }
    return LinearMap(circle.basis(), circle.basis(), std::move(cols));
}

}  // namespace strtop
