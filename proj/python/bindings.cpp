#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "alphawidth/brambles.hpp"
#include "alphawidth/certificates.hpp"
#include "alphawidth/cli.hpp"
#include "alphawidth/errors.hpp"
#include "alphawidth/graph_algorithms.hpp"
#include "alphawidth/graph_io.hpp"
#include "alphawidth/induced_minor.hpp"
#include "alphawidth/suites.hpp"
#include "alphawidth/treedepth.hpp"
#include "alphawidth/width.hpp"

namespace py = pybind11;
using namespace alphawidth;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tree-independence number, alpha-treedepth, brambles and wheel detection";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return emit_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

    m.def("independence_number", [](const Graph& g) { return independence_number(g); });
    m.def("clique_number", [](const Graph& g) { return clique_number(g); });
    m.def("is_chordal", &is_chordal);
    m.def("is_quasi_threshold", &is_quasi_threshold);
    m.def("is_k1d_free", [](const Graph& g, int d) { return is_k1d_free(g, d).free; });
    m.def("alpha_tw", [](const Graph& g) { return alpha_tw_exact(g).value; });
    m.def("treewidth", [](const Graph& g) { return treewidth_exact(g).value; });
    m.def("alpha_td", [](const Graph& g) { return alpha_td_exact(g).value; });
    m.def("alpha_tw_certificate", [](const Graph& g) { return to_python(to_json(alpha_tw_exact(g).decomposition)); });
    m.def("alpha_td_certificate", [](const Graph& g) { return to_python(to_json(alpha_td_exact(g).forest)); });
    m.def("path_alpha_td_formula", &path_alpha_td_formula);
    m.def(
        "strong_bramble",
        [](const Graph& g, int k) -> py::object {
            auto w = strong_bramble_of_order(g, k);
            if (!w) return py::none();
            return to_python(bramble_to_json(w->bramble, alpha_order_exact(g, w->bramble)));
        },
        py::arg("g"), py::arg("k"));
    m.def(
        "has_induced_minor",
        [](const Graph& g, const std::string& pattern) { return find_induced_minor(g, pattern_graph(pattern)).has_value(); },
        py::arg("g"), py::arg("pattern"));
    m.def(
        "detect_wheel",
        [](const Graph& g, int d, int l) -> py::object {
            auto r = detect_wheel(g, d, l);
            if (r.model) return to_python(model_to_json(*r.model, "W" + std::to_string(l)));
            return to_python(Json{{"alpha_tw", *r.alpha_tw}, {"decomposition", to_json(*r.decomposition)}});
        },
        py::arg("g"), py::arg("d"), py::arg("l"));
    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, const std::vector<Graph>& graphs, int k, int d, int l, int workers) {
            RunReport r = run_suite(name, graphs, SuiteParams{k, d, l}, workers);
            return to_python(r.summary(false));
        },
        py::arg("name"), py::arg("graphs"), py::arg("k") = 1, py::arg("d") = 3, py::arg("l") = 4,
        py::arg("workers") = 1);
    m.def(
        "cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            const int code = cli_main(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "");
}
