// Python bindings for the link classification core.  Reports and
// certificates cross the boundary as plain dicts (via their stable JSON
// forms); big integers become Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wplink/classify.hpp"
#include "wplink/divisor_ring.hpp"
#include "wplink/errors.hpp"
#include "wplink/families.hpp"
#include "wplink/polynomial.hpp"
#include "wplink/search.hpp"
#include "wplink/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace wplink;

namespace {

py::int_ big_to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

QsMode mode_from(const std::string& mode) {
    if (mode == "support") return QsMode::support;
    if (mode == "linear_system") return QsMode::linear_system;
    throw py::value_error("mode must be 'support' or 'linear_system'");
}

py::dict family_dict(const FamilyInstance& inst) {
    py::dict d;
    d["family"] = inst.family;
    d["params"] = inst.params;
    d["weights"] = inst.polynomial.system.weights;
    d["degree"] = inst.polynomial.system.degree;
    d["polynomial"] = to_string(inst.polynomial);
    py::dict exp;
    exp["b2"] = inst.expected.b2 ? py::object(py::int_(*inst.expected.b2))
                                 : py::object(py::none());
    exp["index_gap"] = inst.expected.index_gap
                           ? py::object(py::int_(*inst.expected.index_gap))
                           : py::object(py::none());
    py::list branch;
    for (const std::pair<long long, Int>& bc : inst.expected.branch)
        branch.append(py::make_tuple(bc.first, big_to_py(bc.second)));
    exp["branch"] = branch;
    d["expected"] = exp;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact link classification for weighted homogeneous "
              "hypersurface singularities in four variables";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "betti2",
        [](const std::vector<long long>& weights, long long degree) {
            return betti2(WeightSystem(weights, degree));
        },
        py::arg("weights"), py::arg("degree"),
        "Second Betti number of the link, from the divisor expansion.");

    m.def(
        "betti2_oracle",
        [](const std::vector<long long>& weights, long long degree, long long cap) {
            return betti2_oracle(WeightSystem(weights, degree), cap);
        },
        py::arg("weights"), py::arg("degree"), py::arg("cap") = 1000000,
        "Second Betti number recomputed by convolution in the group ring "
        "Z[Z/lcm(u_i)].");

    m.def(
        "curve_genus",
        [](const std::vector<long long>& weights, long long degree) {
            return big_to_py(curve_genus(weights, degree));
        },
        py::arg("weights"), py::arg("degree"),
        "Genus of a quasismooth curve of the given degree in P(w0,w1,w2).");

    m.def(
        "alexander_divisor",
        [](const std::vector<long long>& weights, long long degree) {
            DivisorElement e = alexander_divisor(WeightSystem(weights, degree));
            py::list out;
            for (const auto& [index, coeff] : e.terms())
                out.append(py::make_tuple(big_to_py(index),
                                          big_to_py(numerator(coeff)),
                                          big_to_py(denominator(coeff))));
            return out;
        },
        py::arg("weights"), py::arg("degree"),
        "Characteristic divisor as a sorted list of "
        "(index, numerator, denominator) triples.");

    m.def(
        "classify",
        [](const std::vector<long long>& weights, long long degree,
           const std::optional<std::string>& poly, const std::string& mode,
           long long oracle_cap) {
            ClassifyOptions opt;
            opt.mode = mode_from(mode);
            opt.oracle_cap = oracle_cap;
            LinkReport r = poly ? classify_link(parse_polynomial(*poly, weights), opt)
                                : classify_link(WeightSystem(weights, degree), opt);
            return json_to_py(report_json(r));
        },
        py::arg("weights"), py::arg("degree") = 0, py::arg("poly") = py::none(),
        py::arg("mode") = "support", py::arg("oracle_cap") = 1000000,
        "Full pipeline; returns the report as a dict.  Pass either a "
        "polynomial or a degree (general member).");

    m.def(
        "cyclic_weights",
        [](long long a0, long long a1, long long a2, long long a3) {
            WeightSystem ws = cyclic_weights(a0, a1, a2, a3);
            return py::make_tuple(ws.weights, ws.degree);
        },
        py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
        "Primitive solution of the loop system a_i w_i + w_{i+1} = d.");

    m.def(
        "case_I", [](long long k) { return family_dict(case_I(k)); }, py::arg("k"),
        "x^4 + y^2 + z^k + t^k in P(k,2k,4,4), odd k >= 3.");

    m.def(
        "case_II", [](long long k) { return family_dict(case_II(k)); }, py::arg("k"),
        "The twisted family in P((4k+1)(4k+3), 2(4k+3), 4(4k+1), 8(4k+1)).");

    m.def(
        "cyclic_instance",
        [](long long a0, long long a1, long long a2, long long a3) {
            return family_dict(cyclic_instance(a0, a1, a2, a3));
        },
        py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
        "Loop polynomial instance on the weights from cyclic_weights.");

    m.def(
        "search",
        [](const py::dict& config) {
            std::string dumped =
                py::cast<std::string>(py::module_::import("json").attr("dumps")(config));
            SearchConfig cfg = search_config_from_json(nlohmann::json::parse(dumped));
            py::list out;
            for (const Certificate& c : enumerate_links(cfg))
                out.append(json_to_py(certificate_json(c)));
            return out;
        },
        py::arg("config"),
        "Enumerate quasismooth links in a weight/degree box; returns "
        "certificates as dicts.  Config keys mirror the CLI search flags.");
}
