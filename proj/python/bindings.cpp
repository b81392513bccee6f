#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "lightspan/certify.hpp"
#include "lightspan/error.hpp"
#include "lightspan/generators.hpp"
#include "lightspan/girth.hpp"
#include "lightspan/hikers.hpp"
#include "lightspan/lemmas.hpp"
#include "lightspan/reduction.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/tradeoff.hpp"

namespace py = pybind11;
using namespace lightspan;

namespace {

// Weights cross the boundary as fractions.Fraction; int, Fraction and
// "p/q" strings are accepted on the way in.
Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::float_>(h)) throw py::type_error("weights must be exact: pass an int, Fraction or 'p/q'");
    return Rational::parse(py::str(h).cast<std::string>());
}

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.num(), r.den()); }

py::object optional_fraction(const std::optional<Rational>& r) { return r ? fraction(*r) : py::none(); }

std::vector<Edge> to_edges(const py::iterable& items) {
    std::vector<Edge> out;
    for (const py::handle& item : items) {
        auto t = py::reinterpret_borrow<py::sequence>(item);
        if (t.size() != 3) throw py::value_error("edges are (u, v, w) triples");
        out.push_back({t[0].cast<NodeId>(), t[1].cast<NodeId>(), to_rational(t[2])});
    }
    return out;
}

py::list from_edges(const std::vector<Edge>& edges) {
    py::list out;
    for (const Edge& e : edges) out.append(py::make_tuple(e.u, e.v, fraction(e.w)));
    return out;
}

PathMode to_mode(const std::string& mode) {
    if (mode == "warmup") return PathMode::EdgeSafeMonotone;
    if (mode == "full") return PathMode::BucketMonotone;
    throw py::value_error("mode must be 'warmup' or 'full'");
}

py::object report_dict(const LemmaReport& r) {
    return py::module_::import("json").attr("loads")(r.to_json().dump());
}

}  // namespace

PYBIND11_MODULE(lightspan, m) {
    m.doc() = "Greedy spanners, weighted girth and safe-path certifiers";

    static py::exception<Error> error_type(m, "LightspanError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object instance = py::handle(error_type.ptr())(e.what());
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), instance.ptr());
        }
    });

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init([](std::size_t n, const py::iterable& edges) { return WeightedGraph(n, to_edges(edges)); }),
             py::arg("n"), py::arg("edges"))
        .def_static("parse", [](const std::string& text) { return parse_graph(text); })
        .def_property_readonly("node_count", &WeightedGraph::node_count)
        .def_property_readonly("edge_count", &WeightedGraph::edge_count)
        .def_property_readonly("edges", [](const WeightedGraph& g) { return from_edges(g.edges()); })
        .def_property_readonly("total_weight", [](const WeightedGraph& g) { return fraction(g.total_weight()); })
        .def("weight", [](const WeightedGraph& g, NodeId u, NodeId v) { return optional_fraction(g.weight(u, v)); })
        .def("is_connected", [](const WeightedGraph& g) { return is_connected(g); })
        .def("to_text", [](const WeightedGraph& g) { return serialize_graph(g); })
        .def("__eq__", [](const WeightedGraph& a, const WeightedGraph& b) { return a == b; })
        .def("__repr__", [](const WeightedGraph& g) {
            return "Graph(n=" + std::to_string(g.node_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<SpanningCycleGraph>(m, "SpanningCycleGraph")
        .def(py::init([](std::size_t n, const py::iterable& chords) {
                 auto e = to_edges(chords);
                 return SpanningCycleGraph(n, e);
             }),
             py::arg("n"), py::arg("chords"))
        .def_static("parse", [](const std::string& text) { return parse_spanning_cycle(text); })
        .def_property_readonly("node_count", &SpanningCycleGraph::node_count)
        .def_property_readonly("chord_count", &SpanningCycleGraph::chord_count)
        .def_property_readonly("chords", [](const SpanningCycleGraph& s) { return from_edges(s.chords()); })
        .def_property_readonly("chord_weight", [](const SpanningCycleGraph& s) { return fraction(s.chord_weight()); })
        .def("to_graph", &SpanningCycleGraph::to_graph)
        .def("to_text", [](const SpanningCycleGraph& s) { return serialize_spanning_cycle(s); })
        .def("__eq__", [](const SpanningCycleGraph& a, const SpanningCycleGraph& b) { return a == b; })
        .def("__repr__", [](const SpanningCycleGraph& s) {
            return "SpanningCycleGraph(n=" + std::to_string(s.node_count()) +
                   ", chords=" + std::to_string(s.chord_count()) + ")";
        });

    m.def(
        "greedy_spanner", [](const WeightedGraph& g, const py::object& t) { return greedy_spanner(g, to_rational(t)).spanner; },
        py::arg("g"), py::arg("t"));
    m.def(
        "verify_stretch",
        [](const WeightedGraph& g, const WeightedGraph& h, const py::object& t) {
            py::list out;
            for (const auto& v : verify_stretch(g, h, to_rational(t)))
                out.append(py::make_tuple(v.u, v.v, optional_fraction(v.dist_h), fraction(v.dist_g)));
            return out;
        },
        py::arg("g"), py::arg("h"), py::arg("t"));
    m.def("minimum_spanning_tree", [](const WeightedGraph& g) { return from_edges(minimum_spanning_tree(g)); });
    m.def(
        "weighted_girth",
        [](const WeightedGraph& g, std::size_t node_limit) {
            auto wg = weighted_girth(g, node_limit);
            py::object cycle = py::none();
            if (wg.witness) cycle = py::cast(wg.witness->cycle);
            return py::make_tuple(optional_fraction(wg.value), cycle);
        },
        py::arg("g"), py::arg("node_limit") = kDefaultGirthNodeLimit,
        "(w*, cycle) for the lightest normalized cycle, or (None, None) for a forest.");
    m.def("unweighted_girth", [](const WeightedGraph& g) { return unweighted_girth(g); });
    m.def(
        "lightness", [](const WeightedGraph& h, const WeightedGraph& g) { return fraction(lightness(h, g)); },
        py::arg("h"), py::arg("g"));

    m.def(
        "full_reduction",
        [](const WeightedGraph& h, std::optional<std::size_t> node_limit) {
            auto [scg, trace] = full_reduction(h, node_limit);
            py::dict info;
            info["scale_factor"] = fraction(trace.scale_factor);
            info["subdivided_edges"] = trace.subdivisions.size();
            info["node_map"] = trace.node_map;
            info["lightness_ratio"] = fraction(trace.lightness_ratio());
            if (trace.original.weighted_girth) {
                info["original_girth"] = optional_fraction(trace.original.weighted_girth->value);
                info["reduced_girth"] = optional_fraction(trace.reduced.weighted_girth->value);
            }
            return py::make_tuple(scg, info);
        },
        py::arg("h"), py::arg("node_limit") = py::none());

    m.def("bucketize", [](const SpanningCycleGraph& scg) {
        py::dict out;
        for (const Bucket& b : bucketize(scg)) out[py::int_(b.index)] = b.chords;
        return out;
    });
    m.def(
        "safe_k_paths",
        [](const SpanningCycleGraph& scg, std::int64_t k, const py::object& eps, const std::string& mode) {
            std::vector<std::string> out;
            for (const auto& p : enumerate_safe_k_paths(scg, k, to_rational(eps), to_mode(mode)))
                out.push_back(format_path(scg, p));
            return out;
        },
        py::arg("scg"), py::arg("k"), py::arg("eps"), py::arg("mode") = "full",
        "Every monotone ('warmup') or bucket-monotone ('full') safe k-path, one path line each.");
    m.def(
        "classify_path",
        [](const SpanningCycleGraph& scg, const std::string& line, std::int64_t k, const py::object& eps,
           const std::string& mode, bool extra) -> py::object {
            auto [start, steps] = parse_path(scg, line);
            auto d = classify_path(scg, steps, k, to_rational(eps), to_mode(mode), extra);
            if (!d) return py::none();
            py::list out;
            for (const Segment& s : *d) {
                py::dict seg;
                if (s.kind == Segment::Kind::EdgeSafe) {
                    seg["kind"] = "edge";
                    seg["chord"] = s.chord;
                } else {
                    seg["kind"] = "bucket";
                    seg["bucket"] = s.bucket;
                }
                seg["s"] = s.s;
                seg["steps"] = py::make_tuple(s.begin, s.end);
                out.append(seg);
            }
            return out;
        },
        py::arg("scg"), py::arg("path"), py::arg("k"), py::arg("eps"), py::arg("mode") = "full",
        py::arg("extra") = false);
    m.def(
        "edge_simple_k_paths", [](const WeightedGraph& g, std::int64_t k) { return enumerate_edge_simple_k_paths(g, k); },
        py::arg("g"), py::arg("k"));
    m.def(
        "hike",
        [](const SpanningCycleGraph& scg, std::int64_t k, const py::object& eps, const std::string& mode) {
            const Rational e = to_rational(eps);
            HikerRun run = to_mode(mode) == PathMode::EdgeSafeMonotone ? hiker_protocol_warmup(scg, k, e)
                                                                      : hiker_protocol_full(scg, k, e);
            std::vector<std::string> journeys;
            for (const auto& j : run.journeys) journeys.push_back(format_path(scg, j.path));
            py::dict out;
            out["journeys"] = journeys;
            out["chord_traversals"] = run.chord_traversals;
            out["positions_always_permutation"] = run.positions_always_permutation;
            out["t_by_bucket"] = run.t_by_bucket;
            out["max_chords"] = run.max_chords();
            return out;
        },
        py::arg("scg"), py::arg("k"), py::arg("eps"), py::arg("mode") = "full");

    m.def("certifiers", &certifier_ids);
    m.def(
        "verify",
        [](const std::string& lemma, const py::object& instance, std::int64_t k, const py::object& eps,
           const py::object& t, const py::object& keep_prob, std::int64_t trials, std::uint64_t seed,
           const std::string& mode, std::size_t node_limit) {
            CertifyParams p;
            p.k = k;
            p.eps = to_rational(eps);
            p.t = to_rational(t);
            p.keep_prob = to_rational(keep_prob);
            p.trials = trials;
            p.seed = seed;
            p.mode = to_mode(mode);
            p.girth_node_limit = node_limit;
            std::string text;
            if (py::isinstance<WeightedGraph>(instance)) {
                text = serialize_graph(instance.cast<const WeightedGraph&>());
            } else if (py::isinstance<SpanningCycleGraph>(instance)) {
                text = serialize_spanning_cycle(instance.cast<const SpanningCycleGraph&>());
            } else {
                text = instance.cast<std::string>();
            }
            return report_dict(run_certifier(lemma, text, p));
        },
        py::arg("lemma"), py::arg("instance"), py::arg("k") = 2, py::arg("eps") = "1/4", py::arg("t") = 3,
        py::arg("keep_prob") = "1/2", py::arg("trials") = 2000, py::arg("seed") = 1, py::arg("mode") = "full",
        py::arg("node_limit") = kDefaultGirthNodeLimit,
        "Run a certifier on a Graph, SpanningCycleGraph or instance text; returns the report as a dict.");

    m.def(
        "generate",
        [](const std::string& family, std::size_t n, std::size_t m_edges, std::size_t rows, std::size_t cols,
           const py::object& wmin, const py::object& wmax, std::int64_t wden, const py::object& radius,
           std::uint64_t seed) {
            GeneratorSpec spec;
            spec.family = family;
            spec.n = n;
            spec.m = m_edges;
            spec.rows = rows;
            spec.cols = cols;
            spec.weights = {to_rational(wmin), to_rational(wmax), wden};
            spec.radius = to_rational(radius);
            spec.seed = seed;
            return generate(spec);
        },
        py::arg("family"), py::arg("n") = 10, py::arg("m") = 20, py::arg("rows") = 3, py::arg("cols") = 3,
        py::arg("wmin") = 1, py::arg("wmax") = 1, py::arg("wden") = 1, py::arg("radius") = 0, py::arg("seed") = 1);
    m.def(
        "cycle_plus_chords",
        [](std::size_t n, std::size_t chords, const py::object& wmin, const py::object& wmax, std::int64_t wden,
           std::uint64_t seed) { return cycle_plus_chords(n, chords, {to_rational(wmin), to_rational(wmax), wden}, seed); },
        py::arg("n"), py::arg("chords"), py::arg("wmin") = 1, py::arg("wmax") = 1, py::arg("wden") = 1,
        py::arg("seed") = 1);

    m.def(
        "tradeoff",
        [](std::vector<std::size_t> sizes, std::vector<std::int64_t> ks, const py::object& eps,
           std::size_t edges_per_node, std::size_t reps, const py::object& wmax, std::uint64_t seed) {
            ExperimentConfig cfg;
            cfg.sizes = std::move(sizes);
            cfg.ks = std::move(ks);
            cfg.eps = to_rational(eps);
            cfg.edges_per_node = edges_per_node;
            cfg.repetitions = reps;
            cfg.generator.weights.hi = to_rational(wmax);
            cfg.generator.seed = seed;
            return to_csv(run_tradeoff(cfg));
        },
        py::arg("sizes") = std::vector<std::size_t>{32, 64, 128}, py::arg("ks") = std::vector<std::int64_t>{1, 2},
        py::arg("eps") = "1/2", py::arg("edges_per_node") = 4, py::arg("reps") = 1, py::arg("wmax") = 100,
        py::arg("seed") = 1, "Stretch/lightness table as CSV text.");
}
