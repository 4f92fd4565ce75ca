#include "strtop/serialize.hpp"

#include "strtop/error.hpp"

namespace strtop {

namespace {

constexpr const char* kFormat = "strtop-frobenius/1";

Json coeff_list(const GradedBasis& basis, const SparseVec& v) {
    Json out = Json::array();
    for (const auto& t : v) out.push_back(Json::array({to_string(t.coeff), basis.label(t.index)}));
    return out;
}

Json tensor_list(const GradedBasis& basis, const SparseTensor& v) {
    Json out = Json::array();
    for (const auto& t : v) {
        out.push_back(Json::array({to_string(t.coeff), basis.label(t.left), basis.label(t.right)}));
    }
    return out;
}

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Scalar as_scalar(const Json& j, const char* what) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    return parse_scalar(as_string(j, what));
}

std::size_t lookup(const GradedBasis& basis, const Json& j, const char* what) {
    const auto label = as_string(j, what);
    auto i = basis.find(label);
    if (!i) throw ParseError(std::string(what) + " refers to unknown label '" + label + "'");
    return *i;
}

SparseVec parse_coeff_list(const GradedBasis& basis, const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be a list");
    SparseVec out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw ParseError(std::string(what) + ": terms are [coeff, label]");
        out.push_back(Term{lookup(basis, term[1], what), as_scalar(term[0], what)});
    }
    return out;
}

SparseTensor parse_tensor_list(const GradedBasis& basis, const Json& j) {
    if (!j.is_array()) throw ParseError("coproduct value must be a list");
    SparseTensor out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) throw ParseError("coproduct terms are [coeff, left, right]");
        out.push_back(TensorTerm{lookup(basis, term[1], "coproduct"), lookup(basis, term[2], "coproduct"),
                                 as_scalar(term[0], "coproduct")});
    }
    return out;
}

}  // namespace

Json to_json(const FrobeniusData& A) {
    const auto& basis = *A.basis();
    const std::size_t n = basis.size();
    Json doc;
    doc["format"] = kFormat;
    doc["name"] = A.name();
    doc["shift"] = A.shift();
    Json b = Json::array();
    for (const auto& e : basis.entries()) b.push_back(Json::array({e.label, e.degree}));
    doc["basis"] = std::move(b);
    Json prod = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const auto& v = A.product(x, y);
            if (!v.empty()) prod.push_back(Json::array({basis.label(x), basis.label(y), coeff_list(basis, v)}));
        }
    }
    doc["product"] = std::move(prod);
    Json cop = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
        const auto& v = A.coproduct(x);
        if (!v.empty()) cop.push_back(Json::array({basis.label(x), tensor_list(basis, v)}));
    }
    doc["coproduct"] = std::move(cop);
    doc["unit"] = A.unit() ? coeff_list(basis, *A.unit()) : Json(nullptr);
    doc["counit"] = A.counit() ? coeff_list(basis, *A.counit()) : Json(nullptr);
    Json trunc = Json::array();
    if (A.has_overflow()) {
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (A.overflowed(x, y)) trunc.push_back(Json::array({basis.label(x), basis.label(y)}));
            }
        }
    }
    doc["truncated"] = std::move(trunc);
    Json tags = Json::object();
    for (const auto& [k, v] : A.tags()) tags[k] = v;
    doc["tags"] = std::move(tags);
    return doc;
}

FrobeniusData frobenius_from_json(const Json& doc) {
    if (as_string(field(doc, "format"), "format") != kFormat) throw ParseError("unsupported algebra format");
    const Json& shift = field(doc, "shift");
    if (!shift.is_number_integer()) throw ParseError("shift must be an integer");
    const Json& jb = field(doc, "basis");
    if (!jb.is_array()) throw ParseError("basis must be a list");
    std::vector<BasisEntry> entries;
    for (const auto& e : jb) {
        if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer()) {
            throw ParseError("basis entries are [label, integer degree]");
        }
        entries.push_back({as_string(e[0], "basis label"), e[1].get<long>()});
    }
    BasisPtr basis;
    try {
        basis = make_basis(std::move(entries));
    } catch (const PreconditionError& err) {
        throw ParseError(err.what());
    }
    FrobeniusBuilder b(basis, shift.get<long>());
    if (doc.contains("name")) b.name(as_string(doc.at("name"), "name"));
    for (const auto& entry : field(doc, "product")) {
        if (!entry.is_array() || entry.size() != 3) throw ParseError("product entries are [left, right, terms]");
        b.product(lookup(*basis, entry[0], "product"), lookup(*basis, entry[1], "product"),
                  parse_coeff_list(*basis, entry[2], "product"));
    }
    for (const auto& entry : field(doc, "coproduct")) {
        if (!entry.is_array() || entry.size() != 2) throw ParseError("coproduct entries are [source, terms]");
        b.coproduct(lookup(*basis, entry[0], "coproduct"), parse_tensor_list(*basis, entry[1]));
    }
    if (doc.contains("unit") && !doc.at("unit").is_null()) b.unit(parse_coeff_list(*basis, doc.at("unit"), "unit"));
    if (doc.contains("counit") && !doc.at("counit").is_null()) {
        b.counit(parse_coeff_list(*basis, doc.at("counit"), "counit"));
    }
    if (doc.contains("truncated")) {
        for (const auto& pair : doc.at("truncated")) {
            if (!pair.is_array() || pair.size() != 2) throw ParseError("truncated entries are [left, right]");
            b.overflow(lookup(*basis, pair[0], "truncated"), lookup(*basis, pair[1], "truncated"));
        }
    }
    if (doc.contains("tags")) {
        const Json& tags = doc.at("tags");
        if (!tags.is_object()) throw ParseError("tags must be an object");
        for (const auto& [k, v] : tags.items()) b.tag(k, as_string(v, "tag value"));
    }
    return b.build();
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string dump_algebra(const FrobeniusData& A) { return dump(to_json(A)); }

FrobeniusData parse_algebra(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return frobenius_from_json(doc);
}

Json to_json(const Report& r) {
    Json doc;
    doc["check"] = r.check;
    doc["algebra"] = r.algebra;
    doc["passed"] = r.passed();
    doc["checked"] = r.checked;
    doc["skipped"] = r.skipped;
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        Json j;
        j["witness"] = viol.witness;
        j["lhs"] = viol.lhs;
        j["rhs"] = viol.rhs;
        if (!viol.note.empty()) j["note"] = viol.note;
        v.push_back(std::move(j));
    }
    doc["violations"] = std::move(v);
    if (!r.notes.empty()) {
        Json notes = Json::object();
        for (const auto& [k, val] : r.notes) notes[k] = val;
        doc["notes"] = std::move(notes);
    }
    return doc;
}

Json to_json(const std::vector<Report>& reports) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    return out;
}

Json to_json(const GradedElement& x) { return coeff_list(*x.basis(), x.terms()); }

Json to_json(const TensorElement& x) { return tensor_list(*x.basis(), x.terms()); }

Json to_json(const MultiTensor& x) {
    Json out = Json::array();
    for (const auto& [key, value] : x.terms()) {
        Json term = Json::array({to_string(value)});
        for (auto i : key) term.push_back(x.basis()->label(i));
        out.push_back(std::move(term));
    }
    return out;
}

Json to_json(const LinearMap& f) {
    Json cols = Json::array();
    for (std::size_t i = 0; i < f.source()->size(); ++i) {
        if (!f.column(i).empty()) {
            cols.push_back(Json::array({f.source()->label(i), coeff_list(*f.target(), f.column(i))}));
        }
    }
    return cols;
}

PairWeights weights_from_json(const Json& doc, const GradedBasis& basis) {
    Scalar def = 1;
    if (doc.contains("default")) def = as_scalar(doc.at("default"), "default");
    PairWeights w(def);
    const Json& list = field(doc, "weights");
    if (!list.is_array()) throw ParseError("weights must be a list");
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != 3) throw ParseError("weight entries are [left, right, coeff]");
        w.set(lookup(basis, e[0], "weights"), lookup(basis, e[1], "weights"), as_scalar(e[2], "weights"));
    }
    return w;
}

Json to_json(const PairWeights& w, const GradedBasis& basis) {
    Json doc;
    doc["default"] = to_string(w.default_value());
    Json list = Json::array();
    for (const auto& [k, v] : w.entries()) {
        list.push_back(Json::array({basis.label(k.first), basis.label(k.second), to_string(v)}));
    }
    doc["weights"] = std::move(list);
    return doc;
}

}  // namespace strtop
