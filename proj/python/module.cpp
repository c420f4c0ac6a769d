// Python bindings for the hypershift core. Masks cross the boundary as
// sorted vertex tuples; everything else mirrors the C++ surface.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypershift/hypergraph.hpp"
#include "hypershift/matching.hpp"
#include "hypershift/norms.hpp"
#include "hypershift/search.hpp"
#include "hypershift/shifting.hpp"
#include "hypershift/sunflower.hpp"
#include "hypershift/verify.hpp"

namespace py = pybind11;
namespace hs = hypershift;

namespace {

std::vector<int> as_vertices(hs::VertexSet s) { return hs::to_vertices(s); }

std::vector<std::vector<int>> as_edge_lists(const std::vector<hs::VertexSet>& edges) {
    std::vector<std::vector<int>> out;
    out.reserve(edges.size());
    for (hs::VertexSet e : edges) out.push_back(as_vertices(e));
    return out;
}

hs::VertexSet as_mask(const hs::Hypergraph& h, const std::vector<int>& vs) {
    return hs::from_vertices(vs, h.vertex_count());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "shifting, sunflower counting and exact extremal search on uniform "
              "hypergraphs";

    py::register_exception<hs::guard_error>(m, "GuardError");
    py::register_exception<hs::parse_error>(m, "FormatError");

    py::class_<hs::Hypergraph>(m, "Hypergraph")
        .def(py::init([](int n, int r, const std::vector<std::vector<int>>& edges) {
                 return hs::Hypergraph::from_vertex_lists(n, r, edges);
             }),
             py::arg("n"), py::arg("r"), py::arg("edges") = std::vector<std::vector<int>>{})
        .def_property_readonly("n", &hs::Hypergraph::vertex_count)
        .def_property_readonly("r", &hs::Hypergraph::uniformity)
        .def_property_readonly("edge_count", &hs::Hypergraph::edge_count)
        .def("edges", [](const hs::Hypergraph& h) { return as_edge_lists(h.edges()); })
        .def("has_edge",
             [](const hs::Hypergraph& h, const std::vector<int>& e) {
                 return h.has_edge(as_mask(h, e));
             })
        .def("__eq__", [](const hs::Hypergraph& a, const hs::Hypergraph& b) { return a == b; })
        .def("__repr__", [](const hs::Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.vertex_count()) +
                   ", r=" + std::to_string(h.uniformity()) +
                   ", edges=" + std::to_string(h.edge_count()) + ")";
        });

    // constructions and core queries
    m.def("complete", &hs::complete, py::arg("n"), py::arg("r"));
    m.def("star_extremal", &hs::star_extremal, py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("cover2_extremal", &hs::cover2_extremal, py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("delete_vertices",
          [](const hs::Hypergraph& h, const std::vector<int>& u) {
              return hs::delete_vertices(h, as_mask(h, u));
          },
          py::arg("h"), py::arg("vertices"));
    m.def("link", &hs::link, py::arg("h"), py::arg("v"));
    m.def("degree",
          [](const hs::Hypergraph& h, const std::vector<int>& t) {
              return hs::degree(h, as_mask(h, t));
          },
          py::arg("h"), py::arg("t"));
    m.def("relabel", &hs::relabel, py::arg("h"), py::arg("perm"));
    m.def("canonical_form",
          [](const hs::Hypergraph& h) { return as_edge_lists(hs::canonical_form(h)); },
          py::arg("h"));
    m.def("is_isomorphic", &hs::is_isomorphic, py::arg("a"), py::arg("b"));
    m.def("parse", [](const std::string& text) { return hs::parse_hypergraph(text); },
          py::arg("text"));
    m.def("serialize", &hs::serialize, py::arg("h"));

    // matchings and patterns
    m.def("matching_number",
          [](const hs::Hypergraph& h) {
              const auto res = hs::matching_number(h);
              return py::make_tuple(res.size, as_edge_lists(res.witness));
          },
          py::arg("h"), "returns (size, witness_edges)");
    m.def("is_matching_free", &hs::is_matching_free, py::arg("h"), py::arg("s"));
    m.def("contains_subhypergraph", &hs::contains_subhypergraph, py::arg("h"),
          py::arg("pattern"));
    m.def("count_complete_subgraphs", &hs::count_complete_subgraphs, py::arg("h"),
          py::arg("t"));
    m.def("path_pattern", &hs::path_pattern, py::arg("ell"), py::arg("r"));
    m.def("cycle_pattern", &hs::cycle_pattern, py::arg("ell"), py::arg("r"));
    m.def("star_pattern", &hs::star_pattern, py::arg("ell"), py::arg("r"));
    m.def("clique_pattern", &hs::clique_pattern, py::arg("t"), py::arg("r"));
    m.def("matching_pattern", &hs::matching_pattern, py::arg("s"), py::arg("r"));

    // shifting
    m.def("shift",
          [](const hs::Hypergraph& h, int i, int j) { return hs::shift(h, {i, j}); },
          py::arg("h"), py::arg("i"), py::arg("j"));
    m.def("is_shifted", &hs::is_shifted, py::arg("h"));
    m.def("shift_to_stable",
          [](const hs::Hypergraph& h) {
              const auto [stable, trace] = hs::shift_to_stable(h);
              std::vector<std::tuple<int, int, std::size_t>> steps;
              for (const auto& s : trace.steps)
                  steps.emplace_back(s.pair.i, s.pair.j, s.moved);
              return py::make_tuple(stable, steps);
          },
          py::arg("h"), "returns (stable_hypergraph, [(i, j, moved), ...])");
    m.def("transport_sunflower",
          [](const hs::Hypergraph& h, int i, int j,
             const std::vector<std::vector<int>>& petals) {
              hs::Sunflower f;
              for (const auto& p : petals) f.petals.push_back(as_mask(h, p));
              std::sort(f.petals.begin(), f.petals.end());
              if (f.petals.size() >= 2) f.core = f.petals[0] & f.petals[1];
              const auto img = hs::transport_sunflower(h, {i, j}, f);
              return py::make_tuple(as_vertices(img.core), as_edge_lists(img.petals));
          },
          py::arg("h"), py::arg("i"), py::arg("j"), py::arg("petals"),
          "returns (core, petals) of the transported copy");
    m.def("verify_transport_injective",
          [](const hs::Hypergraph& h, int i, int j, int k) {
              return hs::verify_transport_injective(h, {i, j}, k);
          },
          py::arg("h"), py::arg("i"), py::arg("j"), py::arg("k"));

    // sunflower counting
    m.def("count_sunflowers", &hs::count_sunflowers, py::arg("h"), py::arg("t"),
          py::arg("k"));
    m.def("enumerate_sunflowers",
          [](const hs::Hypergraph& h, int t, int k) {
              std::vector<py::tuple> out;
              hs::for_each_sunflower(h, t, k, [&](const hs::Sunflower& f) {
                  out.push_back(
                      py::make_tuple(as_vertices(f.core), as_edge_lists(f.petals)));
              });
              return out;
          },
          py::arg("h"), py::arg("t"), py::arg("k"),
          "list of (core, petals) copies in deterministic order");
    m.def("count_via_degrees", &hs::count_via_degrees, py::arg("h"), py::arg("k"));
    m.def("count_breakdown",
          [](const hs::Hypergraph& h, int v, int k) {
              const auto bd = hs::count_breakdown(h, v, k);
              return py::make_tuple(bd.not_containing, bd.core_at, bd.petal_at);
          },
          py::arg("h"), py::arg("v"), py::arg("k"),
          "returns (not_containing, core_at, petal_at)");
    m.def("count_recursion_check", &hs::count_recursion_check, py::arg("h"), py::arg("v"),
          py::arg("k"));

    // norms
    m.def("stirling2", &hs::stirling2, py::arg("k"), py::arg("m"));
    m.def("newton_expand_check", &hs::newton_expand_check, py::arg("d"), py::arg("k"));
    m.def("norm_direct", &hs::norm_direct, py::arg("h"), py::arg("t"), py::arg("k"));
    m.def("norm_via_identity", &hs::norm_via_identity, py::arg("h"), py::arg("k"));

    // closed forms and search
    m.def("star_count_formula", &hs::star_count_formula, py::arg("n"), py::arg("r"),
          py::arg("s"), py::arg("k"));
    m.def("cover2_count_formula", &hs::cover2_count_formula, py::arg("n"), py::arg("r"),
          py::arg("s"), py::arg("k"));
    m.def("star_edge_bound", &hs::star_edge_bound, py::arg("n"), py::arg("r"), py::arg("s"));
    m.def("emc_bound", &hs::emc_bound, py::arg("n"), py::arg("r"), py::arg("s"));

    py::class_<hs::SearchReport>(m, "SearchReport")
        .def_property_readonly("objective",
                               [](const hs::SearchReport& r) {
                                   return std::string(hs::objective_name(r.objective));
                               })
        .def_readonly("n", &hs::SearchReport::n)
        .def_readonly("r", &hs::SearchReport::r)
        .def_readonly("s", &hs::SearchReport::s)
        .def_readonly("k", &hs::SearchReport::k)
        .def_readonly("max_value", &hs::SearchReport::max_value)
        .def_readonly("witnesses", &hs::SearchReport::witnesses)
        .def_readonly("explored", &hs::SearchReport::explored)
        .def_readonly("restricted_to_shifted", &hs::SearchReport::restricted_to_shifted)
        .def_readonly("seed", &hs::SearchReport::seed)
        .def_readonly("witnesses_truncated", &hs::SearchReport::witnesses_truncated)
        .def("to_text", [](const hs::SearchReport& r) { return hs::to_report_text(r); })
        .def("to_csv", [](const hs::SearchReport& r) { return hs::to_csv(r); });

    m.def("brute_force_max",
          [](int n, int r, int s, int k, const std::string& objective, bool shifted_only,
             int jobs, std::uint64_t seed) {
              const auto obj = hs::parse_objective(objective);
              if (!obj) throw std::invalid_argument("unknown objective '" + objective + "'");
              hs::SearchOptions opt;
              opt.n = n;
              opt.r = r;
              opt.s = s;
              opt.k = k;
              opt.objective = *obj;
              opt.restrict_shifted = shifted_only;
              opt.jobs = jobs;
              opt.seed = seed;
              return hs::brute_force_max(opt);
          },
          py::arg("n"), py::arg("r"), py::arg("s"), py::arg("k") = 1,
          py::arg("objective") = "sunflower-count", py::arg("shifted_only") = false,
          py::arg("jobs") = 1, py::arg("seed") = 1);

    py::class_<hs::NormExtremalResult>(m, "NormExtremalResult")
        .def_readonly("holds", &hs::NormExtremalResult::holds)
        .def_readonly("star_attains", &hs::NormExtremalResult::star_attains)
        .def_readonly("tie", &hs::NormExtremalResult::tie)
        .def_readonly("star_value", &hs::NormExtremalResult::star_value)
        .def_readonly("report", &hs::NormExtremalResult::report);
    m.def("norm_extremal_check", &hs::norm_extremal_check, py::arg("n"), py::arg("r"),
          py::arg("s"), py::arg("k"));

    py::class_<hs::CounterexampleReport>(m, "CounterexampleReport")
        .def_readonly("found", &hs::CounterexampleReport::found)
        .def_readonly("target", &hs::CounterexampleReport::target)
        .def_readonly("property", &hs::CounterexampleReport::property)
        .def_readonly("before", &hs::CounterexampleReport::before)
        .def_readonly("after", &hs::CounterexampleReport::after)
        .def_property_readonly("pair",
                               [](const hs::CounterexampleReport& r) {
                                   return py::make_tuple(r.pair.i, r.pair.j);
                               })
        .def_readonly("value_before", &hs::CounterexampleReport::value_before)
        .def_readonly("value_after", &hs::CounterexampleReport::value_after)
        .def_readonly("explored", &hs::CounterexampleReport::explored)
        .def_readonly("seed", &hs::CounterexampleReport::seed)
        .def("to_text",
             [](const hs::CounterexampleReport& r) { return hs::to_report_text(r); });
    m.def("find_shift_counterexample",
          [](const std::string& target, int r, int n_max, std::uint64_t seed,
             std::uint64_t trials) {
              hs::CounterexampleQuery q;
              q.target = target;
              q.r = r;
              q.n_max = n_max;
              q.seed = seed;
              q.trials = trials;
              return hs::find_shift_counterexample(q);
          },
          py::arg("target"), py::arg("r") = 3, py::arg("n_max") = 7, py::arg("seed") = 1,
          py::arg("trials") = 400);
    m.def("reverify", &hs::reverify, py::arg("report"));

    // property suites
    m.def("run_suite",
          [](const std::string& name, std::uint64_t seed, std::uint64_t trials) {
              const auto res = hs::run_suite(name, seed, trials);
              return py::make_tuple(res.pass, res.fail, res.failures);
          },
          py::arg("name"), py::arg("seed") = 1, py::arg("trials") = 1000,
          "returns (pass, fail, failure_descriptions)");
    m.def("suite_names", &hs::suite_names);
}
