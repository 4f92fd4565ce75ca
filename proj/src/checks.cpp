#include "strtop/checks.hpp"

#include "strtop/error.hpp"

#include <array>
#include <map>

namespace strtop {

namespace {

using Triple = std::array<std::size_t, 3>;
using TripleTensor = std::map<Triple, Scalar>;

void add_to(TripleTensor& t, const Triple& k, const Scalar& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = t.try_emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) t.erase(it);
    }
}

std::string render(const FrobeniusData& A, const SparseVec& v) { return GradedElement(A.basis(), v).to_string(); }
std::string render(const FrobeniusData& A, const SparseTensor& v) { return TensorElement(A.basis(), v).to_string(); }

std::string render(const FrobeniusData& A, const TripleTensor& t) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : t) {
        if (!first) out += sgn(v) < 0 ? " - " : " + ";
        else if (sgn(v) < 0) out += "-";
        Scalar mag = abs(v);
        if (mag != 1) out += mag.get_str() + "*";
        out += "(" + A.basis()->label(k[0]) + "," + A.basis()->label(k[1]) + "," + A.basis()->label(k[2]) + ")";
        first = false;
    }
    return out;
}

Report make_report(const char* name, const FrobeniusData& A) {
    Report r;
    r.check = name;
    r.algebra = A.name();
    return r;
}

SparseVec unit_vec(std::size_t i) { return SparseVec{Term{i, 1}}; }

std::vector<std::string> labels(const FrobeniusData& A, std::initializer_list<std::size_t> idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(A.basis()->label(i));
    return out;
}

SparseVec scaled(const SparseVec& v, const Scalar& s) {
    SparseVec out;
    if (is_zero(s)) return out;
    out.reserve(v.size());
    for (const auto& t : v) out.push_back(Term{t.index, t.coeff * s});
    return out;
}

SparseVec sum(std::initializer_list<const SparseVec*> parts) {
    Accumulator<std::size_t> acc;
    for (const auto* p : parts) {
        for (const auto& t : *p) acc.add(t.index, t.coeff);
    }
    return to_sparse(acc);
}

int sign_of(long exponent_parity_source) { return is_odd(exponent_parity_source) ? -1 : 1; }

}  // namespace

Report check_associativity(const FrobeniusData& A) {
    Report r = make_report("associativity", A);
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool tainted_ab = false;
            const SparseVec ab = multiply(A, unit_vec(a), unit_vec(b), &tainted_ab);
            for (std::size_t c = 0; c < n; ++c) {
                bool tainted = tainted_ab;
                const SparseVec left = multiply(A, ab, unit_vec(c), &tainted);
                const SparseVec bc = multiply(A, unit_vec(b), unit_vec(c), &tainted);
                const SparseVec right = multiply(A, unit_vec(a), bc, &tainted);
                if (tainted) {
                    ++r.skipped;
                    continue;
                }
                ++r.checked;
                if (left != right) {
                    r.violations.push_back({labels(A, {a, b, c}), render(A, left), render(A, right), ""});
                }
            }
        }
    }
    return r;
}

Report check_commutativity(const FrobeniusData& A, CommutativitySign rule) {
    Report r = make_report(rule == CommutativitySign::literal ? "literal-commutativity" : "graded-commutativity", A);
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (A.overflowed(a, b) || A.overflowed(b, a)) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            const int sign =
                rule == CommutativitySign::literal ? 1 : koszul_sign(A.shifted_degree(a), A.shifted_degree(b));
            const SparseVec& left = A.product(a, b);
            const SparseVec right = scaled(A.product(b, a), sign);
            if (left != right) {
                r.violations.push_back({labels(A, {a, b}), render(A, left), render(A, right),
                                        sign < 0 ? "sign -1 (both shifted degrees odd)" : ""});
            }
        }
    }
    return r;
}

Report check_graded_commutativity(const FrobeniusData& A) {
    return check_commutativity(A, CommutativitySign::koszul_shifted);
}

Report check_coassociativity(const FrobeniusData& A) {
    Report r = make_report("coassociativity", A);
    const std::size_t n = A.dimension();
    const long s = A.shift();
    for (std::size_t a = 0; a < n; ++a) {
        ++r.checked;
        TripleTensor left;
        TripleTensor right;
        for (const auto& t : A.coproduct(a)) {
            for (const auto& u : A.coproduct(t.left)) add_to(left, {u.left, u.right, t.right}, t.coeff * u.coeff);
            const int sign = sign_of(s * A.shifted_degree(t.left));
            for (const auto& u : A.coproduct(t.right)) {
                add_to(right, {t.left, u.left, u.right}, t.coeff * u.coeff * sign);
            }
        }
        if (left != right) r.violations.push_back({labels(A, {a}), render(A, left), render(A, right), ""});
    }
    return r;
}

Report check_cocommutativity(const FrobeniusData& A) {
    Report r = make_report("cocommutativity", A);
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        ++r.checked;
        const SparseTensor& delta = A.coproduct(a);
        SparseTensor flipped;
        flipped.reserve(delta.size());
        for (const auto& t : delta) {
            const int sign = koszul_sign(A.shifted_degree(t.left), A.shifted_degree(t.right));
            flipped.push_back(TensorTerm{t.right, t.left, t.coeff * sign});
        }
        const SparseTensor right = TensorElement(A.basis(), flipped).terms();
        if (delta != right) r.violations.push_back({labels(A, {a}), render(A, delta), render(A, right), ""});
    }
    return r;
}

Report check_frobenius(const FrobeniusData& A) {
    Report r = make_report("frobenius", A);
    const std::size_t n = A.dimension();
    const long s = A.shift();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool tainted = false;
            const SparseVec ab = multiply(A, unit_vec(a), unit_vec(b), &tainted);
            const SparseTensor left = comultiply(A, ab);

            Accumulator<std::pair<std::size_t, std::size_t>> mid;
            const int sign_a = sign_of(s * A.shifted_degree(a));
            for (const auto& t : A.coproduct(b)) {
                for (const auto& p : multiply(A, unit_vec(a), unit_vec(t.left), &tainted)) {
                    mid.add({p.index, t.right}, p.coeff * t.coeff * sign_a);
                }
            }
            Accumulator<std::pair<std::size_t, std::size_t>> rgt;
            for (const auto& t : A.coproduct(a)) {
                for (const auto& p : multiply(A, unit_vec(t.right), unit_vec(b), &tainted)) {
                    rgt.add({t.left, p.index}, p.coeff * t.coeff);
                }
            }
            if (tainted) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            const SparseTensor middle = to_sparse(mid);
            const SparseTensor right = to_sparse(rgt);
            if (left != middle) {
                r.violations.push_back(
                    {labels(A, {a, b}), render(A, left), render(A, middle), "delta(a*b) vs (mu x 1)(1 x delta)"});
            }
            if (left != right) {
                r.violations.push_back(
                    {labels(A, {a, b}), render(A, left), render(A, right), "delta(a*b) vs (1 x mu)(delta x 1)"});
            }
        }
    }
    return r;
}

Report check_snake(const FrobeniusData& A) {
    if (!A.unit() || !A.counit()) throw PreconditionError("check_snake needs both a unit and a counit");
    Report r = make_report("snake", A);
    const std::size_t n = A.dimension();
    std::vector<Scalar> eps(n, 0);
    for (const auto& t : *A.counit()) eps[t.index] = t.coeff;
    for (std::size_t a = 0; a < n; ++a) {
        ++r.checked;
        Accumulator<std::size_t> left;
        Accumulator<std::size_t> right;
        for (const auto& t : A.coproduct(a)) {
            left.add(t.right, eps[t.left] * t.coeff);
            right.add(t.left, eps[t.right] * t.coeff);
        }
        const SparseVec expected = unit_vec(a);
        const SparseVec l = to_sparse(left);
        const SparseVec rr = to_sparse(right);
        if (l != expected) r.violations.push_back({labels(A, {a}), render(A, l), render(A, expected), "(eps x id) delta"});
        if (rr != expected) {
            r.violations.push_back({labels(A, {a}), render(A, rr), render(A, expected), "(id x eps) delta"});
        }
    }
    return r;
}

Report check_unit(const FrobeniusData& A) {
    if (!A.unit()) throw PreconditionError("check_unit needs a unit");
    Report r = make_report("unit", A);
    const SparseVec& u = *A.unit();
    for (std::size_t a = 0; a < A.dimension(); ++a) {
        bool tainted = false;
        const SparseVec left = multiply(A, u, unit_vec(a), &tainted);
        const SparseVec right = multiply(A, unit_vec(a), u, &tainted);
        if (tainted) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (left != unit_vec(a)) r.violations.push_back({labels(A, {a}), render(A, left), A.basis()->label(a), "u*a"});
        if (right != unit_vec(a)) r.violations.push_back({labels(A, {a}), render(A, right), A.basis()->label(a), "a*u"});
    }
    return r;
}

Report check_bv(const FrobeniusData& A, const LinearMap& D) {
    require_same_basis(A.basis(), D.source(), "check_bv");
    require_same_basis(A.basis(), D.target(), "check_bv");
    const auto& basis = *A.basis();
    const std::size_t n = A.dimension();
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& t : D.column(i)) {
            if (basis.degree(t.index) != basis.degree(i) + 1) {
                throw PreconditionError("BV operator must raise degree by one: D(" + basis.label(i) + ") contains " +
                                        basis.label(t.index));
            }
        }
    }
    Report r = make_report("bv", A);
    auto apply_d = [&](const SparseVec& x) {
        Accumulator<std::size_t> acc;
        for (const auto& t : x) {
            for (const auto& c : D.column(t.index)) acc.add(c.index, t.coeff * c.coeff);
        }
        return to_sparse(acc);
    };

    for (std::size_t a = 0; a < n; ++a) {
        ++r.checked;
        const SparseVec dd = apply_d(D.column(a));
        if (!dd.empty()) r.violations.push_back({labels(A, {a}), render(A, dd), "0", "D^2 != 0"});
    }

    std::vector<SparseVec> d_of(n);
    for (std::size_t a = 0; a < n; ++a) d_of[a] = D.column(a);

    for (std::size_t a = 0; a < n; ++a) {
        const long pa = A.shifted_degree(a);
        for (std::size_t b = 0; b < n; ++b) {
            const long pb = A.shifted_degree(b);
            bool taint_ab = false;
            const SparseVec ab = multiply(A, unit_vec(a), unit_vec(b), &taint_ab);
            const SparseVec d_ab = apply_d(ab);
            for (std::size_t c = 0; c < n; ++c) {
                bool tainted = taint_ab;
                const SparseVec va = unit_vec(a);
                const SparseVec vb = unit_vec(b);
                const SparseVec vc = unit_vec(c);
                const SparseVec abc = multiply(A, ab, vc, &tainted);
                const SparseVec lhs = apply_d(abc);

                const SparseVec bc = multiply(A, vb, vc, &tainted);
                const SparseVec ac = multiply(A, va, vc, &tainted);
                const SparseVec t1 = multiply(A, d_ab, vc, &tainted);
                const SparseVec t2 = scaled(multiply(A, va, apply_d(bc), &tainted), sign_of(pa));
                const SparseVec t3 = scaled(multiply(A, vb, apply_d(ac), &tainted), sign_of((pa + 1) * pb));
                const SparseVec t4 = scaled(multiply(A, multiply(A, d_of[a], vb, &tainted), vc, &tainted), -1);
                const SparseVec t5 =
                    scaled(multiply(A, multiply(A, va, d_of[b], &tainted), vc, &tainted), -sign_of(pa));
                const SparseVec t6 = scaled(multiply(A, ab, d_of[c], &tainted), -sign_of(pa + pb));
                if (tainted) {
                    ++r.skipped;
                    continue;
                }
                ++r.checked;
                const SparseVec rhs = sum({&t1, &t2, &t3, &t4, &t5, &t6});
                if (lhs != rhs) {
                    r.violations.push_back({labels(A, {a, b, c}), render(A, lhs), render(A, rhs), "seven-term identity"});
                }
            }
        }
    }
    return r;
}

Report check_cocycle(const FrobeniusData& A, const PairWeights& alpha) {
    require_monomial_products(A);
    Report r = make_report("cocycle", A);
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const SparseVec& ab = A.product(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                const SparseVec& bc = A.product(b, c);
                if (ab.empty() || bc.empty() || A.overflowed(a, b) || A.overflowed(b, c)) {
                    ++r.skipped;
                    continue;
                }
                ++r.checked;
                const std::size_t p = ab.front().index;
                const std::size_t q = bc.front().index;
                const Scalar left = alpha(a, b) * alpha(p, c);
                const Scalar right = alpha(b, c) * alpha(a, q);
                if (left != right) {
                    r.violations.push_back({labels(A, {a, b, c}), left.get_str(), right.get_str(),
                                            "alpha(a,b)*alpha(ab,c) vs alpha(b,c)*alpha(a,bc)"});
                }
            }
        }
    }
    return r;
}

Report check_morphism(const LinearMap& f, const FrobeniusData& A, const FrobeniusData& B) {
    require_same_basis(f.source(), A.basis(), "check_morphism source");
    require_same_basis(f.target(), B.basis(), "check_morphism target");
    Report r = make_report("morphism", A);
    r.notes.emplace_back("target", B.name());
    const std::size_t n = A.dimension();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            bool tainted = A.overflowed(a, b);
            const SparseVec left = f.apply(GradedElement(A.basis(), A.product(a, b))).terms();
            const SparseVec right = multiply(B, f.column(a), f.column(b), &tainted);
            if (tainted) {
                ++r.skipped;
                continue;
            }
            ++r.checked;
            if (left != right) {
                r.violations.push_back(
                    {labels(A, {a, b}), render(B, left), render(B, right), "f(a*b) vs f(a)*f(b)"});
            }
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        ++r.checked;
        Accumulator<std::pair<std::size_t, std::size_t>> acc;
        for (const auto& t : A.coproduct(a)) {
            for (const auto& x : f.column(t.left)) {
                for (const auto& y : f.column(t.right)) acc.add({x.index, y.index}, t.coeff * x.coeff * y.coeff);
            }
        }
        const SparseTensor left = to_sparse(acc);
        const SparseTensor right = comultiply(B, f.column(a));
        if (left != right) {
            r.violations.push_back({labels(A, {a}), render(B, left), render(B, right), "(f x f) delta vs delta f"});
        }
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"associativity",   "commutativity", "coassociativity",
                                                   "cocommutativity", "frobenius",     "snake"};
    return names;
}

std::vector<Report> run_checks(const FrobeniusData& A, const std::vector<std::string>& names) {
    std::vector<std::string> expanded;
    for (const auto& name : names) {
        if (name == "all") {
            for (const auto& s : suite_names()) {
                if (s == "snake" && (!A.unit() || !A.counit())) continue;
                expanded.push_back(s);
            }
        } else {
            expanded.push_back(name);
        }
    }
    std::vector<Report> out;
    for (const auto& name : expanded) {
        if (name == "associativity") out.push_back(check_associativity(A));
        else if (name == "commutativity") out.push_back(check_graded_commutativity(A));
        else if (name == "literal-commutativity") out.push_back(check_commutativity(A, CommutativitySign::literal));
        else if (name == "coassociativity") out.push_back(check_coassociativity(A));
        else if (name == "cocommutativity") out.push_back(check_cocommutativity(A));
        else if (name == "frobenius") out.push_back(check_frobenius(A));
        else if (name == "snake") out.push_back(check_snake(A));
        else if (name == "unit") out.push_back(check_unit(A));
        else throw PreconditionError("unknown check '" + name + "'");
    }
    return out;
}

bool all_passed(const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        if (!r.passed()) return false;
    }
    return true;
}

}  // namespace strtop
