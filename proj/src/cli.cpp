#include "strtop/cli.hpp"

#include "strtop/dijkgraaf_witten.hpp"
#include "strtop/error.hpp"
#include "strtop/grading.hpp"
#include "strtop/lie.hpp"
#include "strtop/serialize.hpp"
#include "strtop/sphere.hpp"
#include "strtop/tqft.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace strtop::cli {

namespace {

struct Options {
    std::string group;
    std::string table;
    std::vector<std::string> perms;
    std::size_t degree = 0;
    std::string algebra;
    unsigned n = 1;
    unsigned truncate = 0;
    bool loop = false;
    std::string lie_name;
    std::vector<unsigned> exponents;
    unsigned genus = 0;
    unsigned inputs = 1;
    unsigned outputs = 1;
    std::vector<std::string> args;
    std::string cocycle;
    std::vector<std::string> checks;
    std::vector<std::string> actions;
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_file(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

FiniteGroupTable table_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("elements") || !doc.contains("rows")) {
        throw ParseError("group table needs 'elements' and 'rows'");
    }
    std::vector<std::string> labels;
    for (const auto& e : doc.at("elements")) {
        if (!e.is_string()) throw ParseError("group elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& row : doc.at("rows")) {
        if (!row.is_array()) throw ParseError("group rows must be lists");
        std::vector<std::size_t> r;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw ParseError("group table cells must be element labels");
            auto it = std::find(labels.begin(), labels.end(), cell.get<std::string>());
            if (it == labels.end()) throw ParseError("unknown element '" + cell.get<std::string>() + "' in table");
            r.push_back(static_cast<std::size_t>(it - labels.begin()));
        }
        rows.push_back(std::move(r));
    }
    return group_from_table(std::move(labels), std::move(rows));
}

std::size_t largest_point(const std::vector<std::string>& perms) {
    std::size_t best = 0;
    for (const auto& p : perms) {
        std::size_t cur = 0;
        bool in_number = false;
        for (char c : p) {
            if (c >= '0' && c <= '9') {
                cur = cur * 10 + static_cast<std::size_t>(c - '0');
                in_number = true;
            } else {
                if (in_number) best = std::max(best, cur);
                cur = 0;
                in_number = false;
            }
        }
        if (in_number) best = std::max(best, cur);
    }
    return best;
}

bool has_group(const Options& o) { return !o.group.empty() || !o.table.empty() || !o.perms.empty(); }

std::pair<FiniteGroupTable, std::string> load_group(const Options& o) {
    const int sources = !o.group.empty() + !o.table.empty() + !o.perms.empty();
    if (sources != 1) throw PreconditionError("give exactly one of --group, --table, --perms");
    if (!o.group.empty()) return {builtin_group(o.group), o.group};
    if (!o.table.empty()) return {table_from_json(parse_json_file(o.table)), "table"};
    const std::size_t degree = o.degree ? o.degree : largest_point(o.perms);
    return {group_from_permutations(degree, o.perms), "perms"};
}

FrobeniusData load_algebra(const Options& o) {
    if (!o.algebra.empty()) {
        if (has_group(o)) throw PreconditionError("give either --algebra or a group, not both");
        return parse_algebra(read_file(o.algebra));
    }
    auto [G, name] = load_group(o);
    return dw_algebra(G, name);
}

std::vector<std::string> check_names(const Options& o, bool default_all) {
    if (o.checks.empty() && default_all) return {"all"};
    return o.checks;
}

Json reports_json(const std::vector<Report>& reports) { return to_json(reports); }

bool reports_pass(const Json& doc) {
    if (!doc.contains("reports")) return true;
    for (const auto& r : doc.at("reports")) {
        if (!r.at("passed").get<bool>()) return false;
    }
    return true;
}

Json cmd_dw(const Options& o) {
    auto [G, name] = load_group(o);
    auto A = dw_algebra(G, name);
    Json doc;
    doc["command"] = "dw";
    doc["algebra"] = to_json(A);
    doc["reports"] = reports_json(run_checks(A, check_names(o, false)));
    return doc;
}

Json cmd_sphere(const Options& o) {
    Json doc;
    doc["command"] = "sphere";
    if (o.loop) {
        if (o.truncate == 0) throw PreconditionError("--loop needs --truncate N >= 1");
        auto A = sphere_loop_algebra(o.n, o.truncate);
        doc["algebra"] = to_json(A);
        doc["reports"] = reports_json(run_checks(A, check_names(o, false)));
        return doc;
    }
    auto A = sphere_string_algebra(o.n);
    doc["algebra"] = to_json(A);
    doc["reports"] = reports_json(run_checks(A, check_names(o, false)));
    return doc;
}

Json cmd_lie(const Options& o) {
    if (o.lie_name.empty() == o.exponents.empty()) throw PreconditionError("give exactly one of --lie-name, --exponents");
    const auto p = o.lie_name.empty() ? profile_from_exponents(o.exponents) : builtin_profile(o.lie_name);
    auto A = lie_algebra(p, o.truncate ? o.truncate : 10);
    Json doc;
    doc["command"] = "lie";
    Json prof;
    prof["name"] = p.name;
    prof["rank"] = p.rank();
    prof["exponents"] = p.exponents;
    prof["dimension"] = p.dimension();
    doc["profile"] = std::move(prof);
    doc["algebra"] = to_json(A);
    doc["reports"] = reports_json(run_checks(A, check_names(o, false)));
    return doc;
}

DiagonalGenerator parse_action(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("action '" + text + "' must look like m:w1,w2,...");
    DiagonalGenerator g;
    try {
        std::size_t used = 0;
        const std::string order = text.substr(0, colon);
        const long m = std::stol(order, &used);
        if (used != order.size() || m <= 0) throw ParseError("bad order");
        g.order = static_cast<unsigned>(m);
        std::stringstream ss(text.substr(colon + 1));
        std::string w;
        while (std::getline(ss, w, ',')) {
            g.weights.push_back(std::stol(w, &used));
            if (used != w.size()) throw ParseError("bad weight");
        }
    } catch (const std::logic_error&) {
        throw ParseError("action '" + text + "' must look like m:w1,w2,...");
    } catch (const ParseError&) {
        throw ParseError("action '" + text + "' must look like m:w1,w2,...");
    }
    if (g.weights.empty()) throw ParseError("action '" + text + "' has no weights");
    return g;
}

Json cmd_grading(const Options& o) {
    if (o.actions.empty()) throw PreconditionError("grading needs at least one --action m:w1,...");
    std::vector<DiagonalGenerator> action;
    for (const auto& a : o.actions) action.push_back(parse_action(a));
    const auto rows = sector_table(action);
    Json sectors = Json::array();
    std::vector<Report> reports;
    for (const auto& r : rows) {
        Json s;
        s["element"] = r.label;
        Json ex = Json::array();
        for (const auto& k : r.eigen.exponents) ex.push_back(to_string(k));
        s["exponents"] = std::move(ex);
        s["age"] = to_string(r.age);
        s["inverse_age"] = to_string(r.inverse_age);
        s["dimension"] = r.dimension;
        s["degree_offset"] = to_string(r.degree_offset);
        sectors.push_back(std::move(s));
        reports.push_back(check_age_dimension(r.eigen, r.label));
    }
    Json obstruction = Json::array();
    for (const auto& g : rows) {
        for (const auto& h : rows) {
            const auto gh = compose(g.eigen, h.eigen);
            const long rank = obstruction_rank(g.age, h.age, age(gh), double_sector_dimension(g.eigen, h.eigen),
                                               sector_dimension(gh));
            obstruction.push_back(Json::array({g.label, h.label, rank}));
        }
    }
    Json doc;
    doc["command"] = "grading";
    doc["sectors"] = std::move(sectors);
    doc["obstruction_ranks"] = std::move(obstruction);
    doc["reports"] = reports_json(reports);
    return doc;
}

Json cmd_tqft(const Options& o) {
    auto A = load_algebra(o);
    std::vector<GradedElement> args;
    for (const auto& label : o.args) {
        if (!A.basis()->find(label)) throw ParseError("unknown basis label '" + label + "'");
        args.push_back(GradedElement::from_label(A.basis(), label));
    }
    Json doc;
    doc["command"] = "tqft";
    doc["algebra"] = A.name();
    doc["signature"] = {{"inputs", o.inputs}, {"outputs", o.outputs}, {"genus", o.genus}};
    if (o.inputs == 0 && o.outputs == 0) {
        doc["invariant"] = to_string(closed_invariant(A, o.genus));
    } else {
        doc["result"] = to_json(surface_operation(A, SurfaceSignature{o.inputs, o.outputs, o.genus}, args));
    }
    if (o.outputs == 0) doc["counit"] = A.tag("counit").value_or("user");
    return doc;
}

Json cmd_twist(const Options& o) {
    if (o.cocycle.empty()) throw PreconditionError("twist needs --cocycle FILE");
    auto A = load_algebra(o);
    const auto alpha = weights_from_json(parse_json_file(o.cocycle), *A.basis());
    std::vector<Report> reports{check_cocycle(A, alpha)};
    auto T = twist_product(A, alpha);
    auto extra = run_checks(T, check_names(o, false));
    reports.insert(reports.end(), extra.begin(), extra.end());
    Json doc;
    doc["command"] = "twist";
    doc["algebra"] = to_json(T);
    doc["reports"] = reports_json(reports);
    return doc;
}

Json cmd_check(const Options& o) {
    if (o.algebra.empty()) throw PreconditionError("check needs --algebra FILE");
    auto A = parse_algebra(read_file(o.algebra));
    Json doc;
    doc["command"] = "check";
    doc["algebra"] = A.name();
    doc["reports"] = reports_json(run_checks(A, check_names(o, true)));
    return doc;
}

Json cmd_phi(const Options& o) {
    const unsigned N = o.truncate ? o.truncate : 2;
    const auto S = sphere_string_algebra(o.n);
    const auto L = sphere_loop_algebra(o.n, N);
    const auto f = phi_map(o.n, N);
    Json doc;
    doc["command"] = "phi";
    doc["source"] = S.name();
    doc["target"] = L.name();
    doc["map"] = to_json(f);
    doc["reports"] = reports_json({check_morphism(f, S, with_coproduct_zero(L))});
    return doc;
}

void add_group_flags(CLI::App* c, Options& o) {
    c->add_option("--group", o.group, "built-in group: Z1..Z12, Z2xZ2, S3, S4, D4, Q8, A4");
    c->add_option("--table", o.table, "JSON file {\"elements\": [...], \"rows\": [[...], ...]}");
    c->add_option("--perms", o.perms, "generator in cycle notation, repeatable");
    c->add_option("--degree", o.degree, "number of permuted points (default: largest point mentioned)");
}

void add_check_flag(CLI::App* c, Options& o) {
    c->add_option("--check", o.checks, "check name or 'all', comma separated")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact string-topology algebra engine"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--out", o.out, "write the JSON result here instead of stdout");

    auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten algebra of a finite group");
    add_group_flags(dw, o);
    add_check_flag(dw, o);

    auto* sphere = app.add_subcommand("sphere", "string or loop algebra of the reflection sphere orbifold");
    sphere->add_option("--n", o.n, "sphere S^{2n+1}")->check(CLI::Range(0U, 12U));
    sphere->add_flag("--loop", o.loop, "loop algebra instead of the string algebra");
    sphere->add_option("--truncate", o.truncate, "largest u exponent (loop algebra)");
    add_check_flag(sphere, o);

    auto* lie = app.add_subcommand("lie", "dual string algebra of a compact Lie group");
    lie->add_option("--lie-name", o.lie_name, "SU(2)..SU(5), SO(5), Sp(2), G2");
    lie->add_option("--exponents", o.exponents, "exponents d_1,...,d_l")->delimiter(',');
    lie->add_option("--truncate", o.truncate, "largest total x-degree (default 10)");
    add_check_flag(lie, o);

    auto* grading = app.add_subcommand("grading", "sector table of a diagonal abelian action");
    grading->add_option("--action", o.actions, "generator as order:weights, e.g. 3:1,2; repeatable")->required();

    auto* tqft = app.add_subcommand("tqft", "surface operation of a Frobenius algebra");
    tqft->add_option("--algebra", o.algebra, "algebra JSON file");
    add_group_flags(tqft, o);
    tqft->add_option("--genus", o.genus);
    tqft->add_option("--inputs", o.inputs);
    tqft->add_option("--outputs", o.outputs);
    tqft->add_option("--arg", o.args, "input basis label, one per input")->allow_extra_args(false);

    auto* twist = app.add_subcommand("twist", "product twisted by a weight function");
    twist->add_option("--algebra", o.algebra, "algebra JSON file");
    add_group_flags(twist, o);
    twist->add_option("--cocycle", o.cocycle, "weights JSON file");
    add_check_flag(twist, o);

    auto* check = app.add_subcommand("check", "run axiom checks on an algebra file");
    check->add_option("--algebra", o.algebra, "algebra JSON file");
    add_check_flag(check, o);

    auto* phi = app.add_subcommand("phi", "the morphism from the sphere string algebra to its loop algebra");
    phi->add_option("--n", o.n)->check(CLI::Range(1U, 12U));
    phi->add_option("--truncate", o.truncate, "largest u exponent (default 2)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    Json doc;
    try {
        if (*dw) doc = cmd_dw(o);
        else if (*sphere) doc = cmd_sphere(o);
        else if (*lie) doc = cmd_lie(o);
        else if (*grading) doc = cmd_grading(o);
        else if (*tqft) doc = cmd_tqft(o);
        else if (*twist) doc = cmd_twist(o);
        else if (*check) doc = cmd_check(o);
        else doc = cmd_phi(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const std::string text = dump(doc);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f || !(f << text)) {
            err << "error: cannot write '" << o.out << "'\n";
            return kInputError;
        }
    }
    return reports_pass(doc) ? kOk : kCheckFailed;
}

}  // namespace strtop::cli
