#include "strtop/checks.hpp"
#include "strtop/cli.hpp"
#include "strtop/dijkgraaf_witten.hpp"
#include "strtop/error.hpp"
#include "strtop/grading.hpp"
#include "strtop/lie.hpp"
#include "strtop/serialize.hpp"
#include "strtop/sphere.hpp"
#include "strtop/tqft.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace strtop;

namespace {

GradedElement element(const FrobeniusData& A, const std::string& label) { return GradedElement::from_label(A.basis(), label); }

std::vector<std::pair<std::string, std::string>> terms(const GradedElement& x) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& t : x.terms()) out.emplace_back(x.basis()->label(t.index), to_string(t.coeff));
    return out;
}

FrobeniusData group_algebra(const std::string& group) { return dw_algebra(builtin_group(group), group); }

}  // namespace

PYBIND11_MODULE(_strtop, m) {
    m.doc() = "Exact string-topology Frobenius algebras";

    py::register_exception<Error>(m, "StrtopError", PyExc_ValueError);

    py::class_<FrobeniusData>(m, "Algebra")
        .def_property_readonly("name", &FrobeniusData::name)
        .def_property_readonly("shift", &FrobeniusData::shift)
        .def_property_readonly("dimension", &FrobeniusData::dimension)
        .def_property_readonly("labels",
                               [](const FrobeniusData& A) {
                                   std::vector<std::string> out;
                                   for (std::size_t i = 0; i < A.dimension(); ++i) out.push_back(A.basis()->label(i));
                                   return out;
                               })
        .def("product",
             [](const FrobeniusData& A, const std::string& a, const std::string& b) {
                 return terms(apply_product(A, element(A, a), element(A, b)));
             })
        .def("tag", &FrobeniusData::tag)
        .def("check",
             [](const FrobeniusData& A, const std::vector<std::string>& names) { return dump(to_json(run_checks(A, names))); },
             py::arg("names") = std::vector<std::string>{"all"})
        .def("to_json", [](const FrobeniusData& A) { return dump_algebra(A); });

    m.def("parse_algebra", &parse_algebra);
    m.def("dw_algebra", &group_algebra, py::arg("group"));
    m.def("builtin_groups", &builtin_group_names);
    m.def("commuting_tuple_count",
          [](const std::string& group, unsigned genus) { return to_string(commuting_tuple_count(builtin_group(group), genus)); });
    m.def("closed_invariant", [](const FrobeniusData& A, unsigned genus) { return to_string(closed_invariant(A, genus)); });
    m.def(
        "surface_operation",
        [](const FrobeniusData& A, unsigned inputs, unsigned outputs, unsigned genus, const std::vector<std::string>& args) {
            std::vector<GradedElement> xs;
            for (const auto& a : args) xs.push_back(element(A, a));
            return dump(to_json(surface_operation(A, SurfaceSignature{inputs, outputs, genus}, xs)));
        },
        py::arg("algebra"), py::arg("inputs"), py::arg("outputs"), py::arg("genus"), py::arg("args"));
    m.def("twist_check", [](const std::string& group, const std::string& weights_json) {
        const auto A = group_algebra(group);
        const auto alpha = weights_from_json(Json::parse(weights_json), *A.basis());
        return dump(to_json(std::vector<Report>{check_cocycle(A, alpha), check_associativity(twist_product(A, alpha))}));
    });
    m.def("sphere_string_algebra", &sphere_string_algebra, py::arg("n"));
    m.def("sphere_loop_algebra", &sphere_loop_algebra, py::arg("n"), py::arg("truncate"));
    m.def("lie_algebra", [](const std::string& name, unsigned truncate) { return lie_algebra(builtin_profile(name), truncate); },
          py::arg("name"), py::arg("truncate") = 10);
    m.def("lie_profiles", &builtin_profile_names);
    m.def("sector_table", [](const std::vector<std::pair<unsigned, std::vector<long>>>& action) {
        std::vector<DiagonalGenerator> gens;
        for (const auto& [order, w] : action) gens.push_back(DiagonalGenerator{order, w});
        std::vector<std::tuple<std::string, std::string, long, std::string>> rows;
        for (const auto& r : sector_table(gens)) rows.emplace_back(r.label, to_string(r.age), r.dimension, to_string(r.degree_offset));
        return rows;
    });
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(args, out, err);
        return std::make_tuple(status, out.str(), err.str());
    });
}
