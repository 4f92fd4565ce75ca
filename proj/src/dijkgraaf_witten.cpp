#include "strtop/dijkgraaf_witten.hpp"

#include "strtop/checks.hpp"
#include "strtop/error.hpp"

#include <algorithm>
#include <numeric>

namespace strtop {

namespace {

// counts[C][D] = #{(h,k) : hk = g, h ∈ C, k ∈ D}
std::vector<std::vector<long>> split_counts(const FiniteGroupTable& G, const ConjugacyPartition& P, std::size_t g) {
    std::vector<std::vector<long>> counts(P.size(), std::vector<long>(P.size(), 0));
    for (std::size_t h = 0; h < G.order(); ++h) {
        const std::size_t k = G.mul(G.inverse(h), g);
        ++counts[P.class_of[h]][P.class_of[k]];
    }
    return counts;
}

BasisPtr class_basis(const FiniteGroupTable& G, const ConjugacyPartition& P) {
    std::vector<BasisEntry> entries;
    for (std::size_t c = 0; c < P.size(); ++c) entries.push_back({class_label(G, P, c), 0});
    return make_basis(std::move(entries));
}

// Calibrates λ so that (ε⊗id)δ fixes the identity class, ε = λ·[class = e].
FrobeniusData calibrate_counit(const FrobeniusData& A, std::size_t identity_class) {
    Scalar mu = 0;
    for (const auto& t : A.coproduct(identity_class)) {
        if (t.left == identity_class && t.right == identity_class) mu = t.coeff;
    }
    const Scalar lambda = is_zero(mu) ? Scalar(1) : Scalar(1 / mu);
    FrobeniusBuilder b(A);
    b.counit(SparseVec{Term{identity_class, lambda}});
    b.tag("counit", "calibrated, not canonical");
    b.tag("counit.lambda", to_string(lambda));
    return b.build();
}

bool same_coproduct(const FrobeniusData& A, const FrobeniusData& B) {
    for (std::size_t i = 0; i < A.dimension(); ++i) {
        if (A.coproduct(i) != B.coproduct(i)) return false;
    }
    return A.counit() == B.counit();
}

std::vector<std::size_t> orbit_ids(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                                   const PermutationAction& action, std::size_t* count) {
    const std::size_t n = action.points.size();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(n, unset);
    std::size_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (id[x] != unset) continue;
        for (auto k : subgroup) id[action.act[k][x]] = next;
        ++next;
    }
    (void)H;
    *count = next;
    return id;
}

void require_subgroup(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup) {
    for (auto k : subgroup) {
        if (k >= H.order()) throw GroupError("subgroup element index out of range");
    }
    if (subgroup.empty() || !is_subgroup(H, subgroup)) throw GroupError("not a subgroup");
}

std::vector<std::size_t> whole_group(const FiniteGroupTable& H) {
    std::vector<std::size_t> all(H.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

}  // namespace

std::string class_label(const FiniteGroupTable& G, const ConjugacyPartition& P, std::size_t cls) {
    return "[" + G.label(P.representative[cls]) + "]";
}

std::vector<DwCandidate> dw_candidates(const FiniteGroupTable& G) {
    const auto P = conjugacy_classes(G);
    const auto basis = class_basis(G, P);
    const std::size_t n = P.size();
    const std::size_t id_class = P.class_of[G.identity()];

    std::vector<std::vector<std::vector<long>>> N(n);
    for (std::size_t e = 0; e < n; ++e) {
        N[e] = split_counts(G, P, P.representative[e]);
        for (auto g : P.classes[e]) {
            if (split_counts(G, P, g) != N[e]) {
                throw Error("coproduct depends on the class representative at " + G.label(g));
            }
        }
    }

    FrobeniusBuilder base(basis, 0);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
            SparseVec v;
            for (std::size_t e = 0; e < n; ++e) {
                if (N[e][c][d] != 0) v.push_back(Term{e, Scalar(N[e][c][d])});
            }
            base.product(c, d, std::move(v));
        }
    }
    base.unit(SparseVec{Term{id_class, 1}});
    base.tag("product.normalization", "orbit-sum");

    std::vector<DwCandidate> out;
    for (const char* kind : {"raw-count", "size-normalized"}) {
        const bool sized = std::string(kind) == "size-normalized";
        FrobeniusBuilder b = base;
        for (std::size_t e = 0; e < n; ++e) {
            SparseTensor t;
            for (std::size_t c = 0; c < n; ++c) {
                for (std::size_t d = 0; d < n; ++d) {
                    if (N[e][c][d] == 0) continue;
                    Scalar coeff(N[e][c][d]);
                    if (sized) {
                        coeff *= Scalar(static_cast<long>(P.classes[e].size()),
                                        static_cast<long>(P.classes[c].size() * P.classes[d].size()));
                        coeff.canonicalize();
                    }
                    t.push_back(TensorTerm{c, d, coeff});
                }
            }
            b.coproduct(e, std::move(t));
        }
        b.tag("coproduct.normalization", kind);
        auto A = calibrate_counit(b.build(), id_class);
        const bool frob = check_frobenius(A).passed();
        const bool snake = check_snake(A).passed();
        out.push_back(DwCandidate{kind, std::move(A), frob, snake});
    }
    return out;
}

FrobeniusData dw_algebra(const FiniteGroupTable& G, const std::string& name) {
    auto candidates = dw_candidates(G);
    std::vector<const DwCandidate*> passing;
    for (const auto& c : candidates) {
        if (c.frobenius_passed && c.snake_passed) passing.push_back(&c);
    }
    if (passing.empty()) throw Error("no coproduct normalization passes the Frobenius and snake checks");
    for (const auto* c : passing) {
        if (!same_coproduct(c->algebra, passing.front()->algebra)) {
            throw Error("coproduct normalizations disagree and both pass; choice is ambiguous");
        }
    }
    // Prefer the size-normalized label when the candidates coincide.
    const DwCandidate* chosen = passing.back();
    std::string list;
    for (const auto* c : passing) list += (list.empty() ? "" : ",") + c->normalization;

    FrobeniusBuilder b(chosen->algebra);
    b.name(name.empty() ? "DW" : "DW(" + name + ")");
    b.tag("coproduct.candidates_passing", list);
    b.tag("coproduct.representative_check", "verified");
    return b.build();
}

PermutationAction conjugation_action(const FiniteGroupTable& H) {
    PermutationAction a;
    a.points = H.labels();
    a.act.assign(H.order(), Permutation(H.order()));
    for (std::size_t h = 0; h < H.order(); ++h) {
        for (std::size_t g = 0; g < H.order(); ++g) a.act[h][g] = H.conjugate(g, h);
    }
    return a;
}

void validate_action(const FiniteGroupTable& H, const PermutationAction& action) {
    const std::size_t n = action.points.size();
    if (action.act.size() != H.order()) throw GroupError("action must list one permutation per group element");
    for (std::size_t h = 0; h < H.order(); ++h) {
        const auto& p = action.act[h];
        if (p.size() != n) throw GroupError("action of " + H.label(h) + " has the wrong degree");
        std::vector<char> hit(n, 0);
        for (auto i : p) {
            if (i >= n || hit[i]) throw GroupError("action of " + H.label(h) + " is not a permutation");
            hit[i] = 1;
        }
    }
    for (std::size_t a = 0; a < H.order(); ++a) {
        for (std::size_t b = 0; b < H.order(); ++b) {
            const auto& ab = action.act[H.mul(a, b)];
            for (std::size_t i = 0; i < n; ++i) {
                if (ab[i] != action.act[a][action.act[b][i]]) {
                    throw GroupError("action is not a homomorphism at (" + H.label(a) + "," + H.label(b) + ")");
                }
            }
        }
    }
}

BasisPtr coinvariant_basis(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                           const PermutationAction& action) {
    std::size_t count = 0;
    const auto id = orbit_ids(H, subgroup, action, &count);
    std::vector<BasisEntry> entries(count);
    std::vector<char> seen(count, 0);
    for (std::size_t x = 0; x < id.size(); ++x) {
        if (seen[id[x]]) continue;
        seen[id[x]] = 1;
        entries[id[x]] = {"[" + action.points[x] + "]", 0};
    }
    return make_basis(std::move(entries));
}

LinearMap transfer(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                   const PermutationAction& action, CosetChoice choice) {
    require_subgroup(H, subgroup);
    validate_action(H, action);
    const auto all = whole_group(H);

    // Right cosets Kh, one representative each.
    std::vector<std::size_t> coset_of(H.order(), H.order());
    std::vector<std::size_t> reps;
    for (std::size_t h = 0; h < H.order(); ++h) {
        if (coset_of[h] != H.order()) continue;
        std::vector<std::size_t> members;
        for (auto k : subgroup) members.push_back(H.mul(k, h));
        for (auto m : members) coset_of[m] = reps.size();
        reps.push_back(choice == CosetChoice::smallest_index ? *std::min_element(members.begin(), members.end())
                                                             : *std::max_element(members.begin(), members.end()));
    }

    std::size_t n_src = 0;
    std::size_t n_tgt = 0;
    const auto src_id = orbit_ids(H, all, action, &n_src);
    const auto tgt_id = orbit_ids(H, subgroup, action, &n_tgt);
    auto source = coinvariant_basis(H, all, action);
    auto target = coinvariant_basis(H, subgroup, action);

    std::vector<SparseVec> cols(n_src);
    std::vector<char> done(n_src, 0);
    for (std::size_t x = 0; x < src_id.size(); ++x) {
        if (done[src_id[x]]) continue;
        done[src_id[x]] = 1;
        Accumulator<std::size_t> acc;
        for (auto h : reps) acc.add(tgt_id[action.act[h][x]], 1);
        cols[src_id[x]] = to_sparse(acc);
    }
    return LinearMap(source, target, std::move(cols));
}

LinearMap coinvariant_projection(const FiniteGroupTable& H, const std::vector<std::size_t>& subgroup,
                                 const PermutationAction& action) {
    require_subgroup(H, subgroup);
    validate_action(H, action);
    const auto all = whole_group(H);
    std::size_t n_small = 0;
    std::size_t n_big = 0;
    const auto sub_id = orbit_ids(H, subgroup, action, &n_small);
    const auto big_id = orbit_ids(H, all, action, &n_big);
    std::vector<SparseVec> cols(n_small);
    for (std::size_t x = 0; x < sub_id.size(); ++x) cols[sub_id[x]] = SparseVec{Term{big_id[x], 1}};
    return LinearMap(coinvariant_basis(H, subgroup, action), coinvariant_basis(H, all, action), std::move(cols));
}

Scalar commuting_tuple_count(const FiniteGroupTable& G, unsigned genus) {
    if (genus == 0) throw PreconditionError("commuting_tuple_count needs genus >= 1");
    const std::size_t n = G.order();
    std::vector<Integer> by_commutator(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) by_commutator[G.commutator(a, b)] += 1;
    }
    std::vector<Integer> partial(n, 0);
    partial[G.identity()] = 1;
    for (unsigned i = 0; i < genus; ++i) {
        std::vector<Integer> next(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            if (partial[x] == 0) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (by_commutator[c] != 0) next[G.mul(x, c)] += partial[x] * by_commutator[c];
            }
        }
        partial = std::move(next);
    }
    Scalar out(partial[G.identity()], Integer(static_cast<unsigned long>(n)));
    out.canonicalize();
    return out;
}

PairWeights z2xz2_bilinear_cocycle(const FiniteGroupTable& G, const FrobeniusData& dw) {
    if (G.moduli() != std::vector<std::size_t>{2, 2}) {
        throw PreconditionError("bilinear cocycle needs abelian_group({2,2})");
    }
    const auto P = conjugacy_classes(G);
    std::vector<std::size_t> elem(dw.dimension());
    for (std::size_t c = 0; c < P.size(); ++c) {
        auto i = dw.basis()->find(class_label(G, P, c));
        if (!i) throw BasisMismatchError("algebra is not the DW algebra of this group");
        elem[*i] = P.representative[c];
    }
    const auto& coords = G.coordinates();
    return PairWeights::tabulate(dw.dimension(), [&](std::size_t a, std::size_t b) {
        return Scalar((coords[elem[a]][1] * coords[elem[b]][0]) % 2 == 1 ? -1 : 1);
    });
}

}  // namespace strtop
