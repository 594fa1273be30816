#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "excycles/classify.hpp"
#include "excycles/common.hpp"
#include "excycles/cycles.hpp"
#include "excycles/enumeration.hpp"
#include "excycles/experiments.hpp"
#include "excycles/gf.hpp"
#include "excycles/graph.hpp"
#include "excycles/invariants.hpp"
#include "excycles/rng.hpp"
#include "excycles/samplers.hpp"
#include "excycles/series.hpp"

#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace excycles;

namespace {

py::int_ big_to_py(const BigInt& v) { return py::int_(py::str(v.to_string())); }

py::object rational_to_py(const BigRational& q) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(py::int_(py::str(q.num().to_string())),
                                      py::int_(py::str(q.den().to_string())));
}

py::dict count_record_to_dict(const CountRecord& r) {
    py::dict d;
    d["n"] = r.n;
    d["kmax"] = r.kmax;
    d["forests"] = big_to_py(r.forests);
    d["trees"] = big_to_py(r.trees);
    py::list apex, exc, diff;
    for (int k = 0; k <= r.kmax; ++k) {
        apex.append(big_to_py(r.apex[k]));
        exc.append(big_to_py(r.exc[k]));
        diff.append(big_to_py(r.diff[k]));
    }
    d["apex"] = apex;
    d["ex"] = exc;
    d["diff"] = diff;
    if (r.kmax >= 1) {
        d["wheel"] = big_to_py(r.wheel);
        d["wheel_rooted"] = big_to_py(r.wheel_rooted);
        d["btype"] = big_to_py(r.btype);
        d["ktype"] = big_to_py(r.ktype);
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact disjoint-cycle packing, blockers, censuses, samplers and constants";
    m.attr("__version__") = kVersion;
    m.attr("RNG_ID") = kRngId;

    py::register_exception<SizeGuardError>(m, "SizeGuardError");
    py::register_exception<NotInExCyclesError>(m, "NotInExCyclesError");

    py::class_<LabeledGraph>(m, "LabeledGraph", "simple graph with 0-based vertices")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return build_graph(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &LabeledGraph::n)
        .def("edges", &LabeledGraph::edges)
        .def("degree", &LabeledGraph::degree)
        .def("has_edge", &LabeledGraph::has_edge)
        .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
        .def("__repr__", [](const LabeledGraph& g) {
            std::ostringstream os;
            os << "LabeledGraph(n=" << g.n() << ", m=" << g.edge_count() << ")";
            return os.str();
        });

    py::class_<Multigraph>(m, "Multigraph")
        .def_property_readonly("n", &Multigraph::n)
        .def("label", &Multigraph::label)
        .def("multiplicity", &Multigraph::multiplicity)
        .def("loop_count", &Multigraph::loop_count)
        .def("degree", &Multigraph::degree)
        .def("to_json", &Multigraph::to_json);

    py::class_<SeededRng>(m, "SeededRng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("split", &SeededRng::split)
        .def("next_u64", &SeededRng::next_u64);

    // graph core
    m.def("build_graph", &build_graph, py::arg("n"), py::arg("edges"));
    m.def("is_forest", &is_forest);
    m.def("components", &components);
    m.def("big_frag", [](const LabeledGraph& g) {
        BigFrag bf = big_frag(g);
        return py::make_tuple(bf.big, bf.frag);
    });
    m.def("two_core", &two_core);
    m.def("two_core_vertices", &two_core_vertices);
    m.def("topological_core", &topological_core);
    m.def("spikes", &spikes);
    m.def("chordless_cycles", &chordless_cycles);
    m.def("graph_to_mask", &graph_to_mask);
    m.def("mask_to_graph", &mask_to_graph, py::arg("n"), py::arg("mask"));
    m.def("read_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    });
    m.def("write_edge_list", &write_edge_list);

    // cycles and blockers
    m.def("cycle_packing_number", [](const LabeledGraph& g) {
        auto [count, witness] = cycle_packing_number(g);
        return py::make_tuple(count, witness.cycles);
    });
    m.def("is_in_ex_cycles", &is_in_ex_cycles, py::arg("g"), py::arg("k"));
    m.def("min_blocker", &min_blocker);
    m.def("is_apex_forest", [](const LabeledGraph& g, int k) {
        auto [ok, witness] = is_apex_forest(g, k);
        return py::make_tuple(ok, witness);
    });
    m.def("redundant_blocker", [](const LabeledGraph& g, int k, const std::vector<int>& q) {
        BlockerCertificate cert = redundant_blocker(g, k, q);
        py::dict d;
        d["Q"] = cert.Q;
        d["S"] = cert.S;
        d["A"] = cert.A;
        d["B"] = cert.B;
        d["k"] = cert.k;
        d["json"] = cert.to_json();
        return d;
    });
    m.def("verify_redundant", &verify_redundant, py::arg("g"), py::arg("b"), py::arg("k"));

    // invariants
    m.def("chromatic_number", &chromatic_number, py::arg("g"),
          py::arg("blocker_hint") = std::nullopt);
    m.def("clique_number", &clique_number, py::arg("g"), py::arg("blocker_hint") = std::nullopt);

    // enumeration
    m.def("tree_count", [](int n) { return big_to_py(tree_count(n)); });
    m.def("forest_count", [](int n) { return big_to_py(forest_count(n)); });
    m.def("forest_count_by_components",
          [](int n, int j) { return big_to_py(forest_count_by_components(n, j)); });
    m.def("census", [](int n, int kmax, int workers, bool allow_n8) {
              CountRecord rec = [&] {
                  py::gil_scoped_release release;
                  return census(n, kmax, workers, allow_n8);
              }();
              return count_record_to_dict(rec);
          },
          py::arg("n"), py::arg("kmax"), py::arg("workers") = 1, py::arg("allow_n8") = false);

    // classifier
    m.def("classify_ex2c", [](const LabeledGraph& g) {
        Ex2CLabel lab = classify_ex2c(g);
        py::dict d;
        d["member"] = lab.member;
        py::list labels;
        for (auto c : lab.labels) labels.append(to_string(c));
        d["labels"] = labels;
        d["apex_witness"] = lab.apex_witness ? py::cast(*lab.apex_witness) : py::none();
        d["core_witness"] = lab.core_witness ? py::cast(*lab.core_witness) : py::none();
        d["json"] = lab.to_json();
        return d;
    });
    m.def("ex2c_oracle_check", [](int n, int workers) {
              OracleReport rep = [&] {
                  py::gil_scoped_release release;
                  return ex2c_oracle_check(n, workers);
              }();
              return py::make_tuple(rep.graphs_checked, rep.mismatches);
          },
          py::arg("n"), py::arg("workers") = 1);

    // samplers
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("rng"));
    m.def("random_forest", &random_forest, py::arg("n"), py::arg("rng"));
    m.def("random_apex_construction", [](int n, int k, SeededRng& rng) {
        auto [g, cons] = random_apex_construction(n, k, rng);
        py::dict d;
        d["S"] = cons.s;
        d["s_edges"] = cons.s_edges;
        d["forest_edges"] = cons.forest_edges;
        d["bipartite_edges"] = cons.bipartite_edges;
        return py::make_tuple(g, d);
    });
    m.def("exact_uniform_ex", &exact_uniform_ex, py::arg("n"), py::arg("k"), py::arg("rng"));
    m.def("warm_forest_tables", &warm_forest_tables, py::call_guard<py::gil_scoped_release>());

    // generating-function numerics
    m.def("tree_function_point", [](double z) {
        TreePoint p = tree_function_point(Fixed::from_double(z));
        return py::make_tuple(p.r.to_double(), p.t.to_double());
    });
    m.def("connectivity_constant",
          [](int k, unsigned digits) { return connectivity_constant(k).to_decimal(digits); },
          py::arg("k"), py::arg("digits") = 6);
    m.def("apex_constant",
          [](int k, unsigned digits) { return apex_constant(k).to_decimal(digits); },
          py::arg("k"), py::arg("digits") = 15);
    m.def("wheel_constants", [](unsigned digits) {
              GfConstants gc = wheel_constants();
              py::dict d;
              d["x"] = gc.x.to_decimal(digits);
              d["r"] = gc.r.to_decimal(digits);
              d["gamma"] = gc.gamma.to_decimal(digits);
              d["c"] = gc.c.to_decimal(digits);
              return d;
          },
          py::arg("digits") = 15);
    m.def("wheel_series", [](int order) {
              WheelSeriesSet ws = wheel_series(order);
              py::dict d;
              auto pack = [&](const RationalSeries& s) {
                  py::list l;
                  for (int n = 0; n <= s.order(); ++n) l.append(rational_to_py(s.coeff(n)));
                  return l;
              };
              d["hplus"] = pack(ws.hplus);
              d["h"] = pack(ws.h);
              d["wplus"] = pack(ws.wplus);
              d["w"] = pack(ws.w);
              return d;
          },
          py::arg("order"));

    // experiments
    auto report_to_dict = [](const ExperimentReport& r) {
        py::dict d;
        d["json"] = r.to_json();
        d["csv"] = r.to_csv();
        py::list stats;
        for (const auto& s : r.statistics) {
            py::dict sd;
            sd["name"] = s.name;
            sd["estimate"] = s.estimate;
            sd["std_error"] = s.std_error;
            sd["target"] = s.target ? py::cast(*s.target) : py::none();
            stats.append(sd);
        }
        d["statistics"] = stats;
        return d;
    };
    m.def("experiment_connectivity",
          [report_to_dict](int n, int k, std::uint64_t samples, std::uint64_t seed, int workers) {
              py::gil_scoped_release release;
              ExperimentReport r = experiment_connectivity(n, k, samples, seed, workers);
              py::gil_scoped_acquire acquire;
              return report_to_dict(r);
          },
          py::arg("n"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
    m.def("experiment_degrees",
          [report_to_dict](int n, int k, std::uint64_t samples, std::uint64_t seed, double eps,
                           int workers) {
              py::gil_scoped_release release;
              ExperimentReport r = experiment_degrees(n, k, samples, seed, eps, workers);
              py::gil_scoped_acquire acquire;
              return report_to_dict(r);
          },
          py::arg("n"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("eps") = 0.05,
          py::arg("workers") = 1);
    m.def("experiment_chi_omega",
          [report_to_dict](int n, int k, std::uint64_t samples, std::uint64_t seed, int workers) {
              py::gil_scoped_release release;
              ExperimentReport r = experiment_chi_omega(n, k, samples, seed, workers);
              py::gil_scoped_acquire acquire;
              return report_to_dict(r);
          },
          py::arg("n"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
}
