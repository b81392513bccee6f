#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lightspan/certify.hpp"
#include "lightspan/error.hpp"
#include "lightspan/generators.hpp"
#include "lightspan/girth.hpp"
#include "lightspan/reduction.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/tradeoff.hpp"

using namespace lightspan;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error&) {
        throw UsageError(flag + ": not a rational number: '" + text + "'");
    }
}

std::string render(const LemmaReport& report, const std::string& format) {
    if (format == "json") return report.to_json().dump(2) + "\n";
    return report.to_text();
}

struct Common {
    std::string out;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t limit_n = kDefaultGirthNodeLimit;
};

void add_common(CLI::App* cmd, Common& c, bool with_seed) {
    cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_seed) cmd->add_option("--seed", c.seed, "Random seed");
    cmd->add_option("--limit-n", c.limit_n, "Node limit for brute-force weighted girth");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy spanners, weighted girth and safe-path certifiers"};
    app.require_subcommand(1);
    Common common;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    GeneratorSpec spec;
    std::string wmin = "1", wmax = "1", radius = "0";
    bool as_scg = false;
    gen->add_option("family", spec.family, "gnm, geometric, grid, cycle-plus-chords, petersen, complete")->required();
    gen->add_option("--n", spec.n, "Node count");
    gen->add_option("--m", spec.m, "Edge count (gnm)");
    gen->add_option("--rows", spec.rows, "Grid rows");
    gen->add_option("--cols", spec.cols, "Grid columns");
    gen->add_option("--chords", spec.chords, "Chord count (cycle-plus-chords)");
    gen->add_option("--wmin", wmin, "Smallest weight");
    gen->add_option("--wmax", wmax, "Largest weight");
    gen->add_option("--wden", spec.weights.denominator, "Weight grid denominator");
    gen->add_option("--radius", radius, "Connection radius (geometric, 0 = all pairs)");
    gen->add_flag("--scg", as_scg, "Emit cycle-plus-chords in the spanning-cycle format");
    add_common(gen, common, true);

    // spanner
    auto* span_cmd = app.add_subcommand("spanner", "Greedy t-spanner of a graph");
    std::string input;
    std::string t_text = "3";
    span_cmd->add_option("input", input, "Graph file ('-' for stdin)")->required();
    span_cmd->add_option("--t", t_text, "Stretch t >= 1");
    add_common(span_cmd, common, false);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Girth, MST weight and lightness of a graph");
    analyze->add_option("input", input, "Graph file")->required();
    add_common(analyze, common, false);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Reduce a graph to a unit spanning cycle instance");
    reduce->add_option("input", input, "Graph file")->required();
    add_common(reduce, common, false);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a certifier");
    std::string lemma;
    std::int64_t k = 2;
    std::string eps_text = "1/4";
    std::string keep_text = "1/2";
    std::int64_t trials = 2000;
    std::string mode_text = "full";
    verify->add_option("lemma", lemma, "Certifier id")
        ->required()
        ->check(CLI::IsMember(certifier_ids()));
    verify->add_option("input", input, "Graph or spanning-cycle file")->required();
    verify->add_option("--k", k, "Path length parameter k");
    verify->add_option("--eps", eps_text, "Epsilon (rational)");
    verify->add_option("--t", t_text, "Stretch t");
    verify->add_option("--keep-prob", keep_text, "Chord keep probability (full-counting-mc)");
    verify->add_option("--trials", trials, "Monte Carlo trials");
    verify->add_option("--mode", mode_text, "Path family")->check(CLI::IsMember({"warmup", "full"}));
    add_common(verify, common, true);

    // bench
    auto* bench = app.add_subcommand("bench", "Stretch/lightness tradeoff table");
    ExperimentConfig config;
    std::string bench_eps = "1/2";
    bench->add_option("--family", config.generator.family, "Generator family");
    bench->add_option("--sizes", config.sizes, "Node counts")->delimiter(',');
    bench->add_option("--ks", config.ks, "Values of k")->delimiter(',');
    bench->add_option("--eps", bench_eps, "Epsilon (rational)");
    bench->add_option("--edges-per-node", config.edges_per_node, "gnm density");
    bench->add_option("--reps", config.repetitions, "Instances per size");
    std::string bench_wmax = "100";
    bench->add_option("--wmax", bench_wmax, "Largest integer weight");
    add_common(bench, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            spec.seed = common.seed;
            spec.weights.lo = parse_rational("--wmin", wmin);
            spec.weights.hi = parse_rational("--wmax", wmax);
            spec.radius = parse_rational("--radius", radius);
            if (as_scg) {
                if (spec.family != "cycle-plus-chords") throw UsageError("--scg needs cycle-plus-chords");
                write_output(common.out, serialize_spanning_cycle(cycle_plus_chords(spec.n, spec.chords, spec.weights, spec.seed)));
            } else {
                write_output(common.out, serialize_graph(generate(spec)));
            }
            return 0;
        }
        if (span_cmd->parsed()) {
            WeightedGraph g = parse_graph(read_file(input));
            Rational t = parse_rational("--t", t_text);
            auto result = greedy_spanner(g, t);
            if (common.format == "json") {
                nlohmann::ordered_json j;
                j["t"] = t.to_string();
                j["edges"] = result.spanner.edge_count();
                j["weight"] = result.spanner.total_weight().to_string();
                j["rejected"] = result.rejected.size();
                j["graph"] = serialize_graph(result.spanner);
                write_output(common.out, j.dump(2) + "\n");
            } else {
                write_output(common.out, serialize_graph(result.spanner));
            }
            return 0;
        }
        if (analyze->parsed()) {
            WeightedGraph g = parse_graph(read_file(input));
            LemmaReport r;
            r.lemma = "analyze";
            r.instance = "n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count());
            r.set("n", static_cast<std::int64_t>(g.node_count()));
            r.set("m", static_cast<std::int64_t>(g.edge_count()));
            r.set("components", static_cast<std::int64_t>(component_count(g)));
            r.set("total_weight", g.total_weight());
            r.set("mst_weight", total_weight(minimum_spanning_tree(g)));
            if (is_connected(g) && g.edge_count() > 0) r.set("lightness", lightness(g, g));
            auto ug = unweighted_girth(g);
            r.set("girth", ug ? ReportValue(static_cast<std::int64_t>(*ug)) : ReportValue(std::string("inf")));
            if (g.node_count() <= common.limit_n) {
                auto wg = weighted_girth(g, common.limit_n);
                r.set("weighted_girth", wg.to_string());
                if (wg.witness) r.notes.push_back("girth cycle " + wg.witness->to_string());
            } else {
                r.notes.push_back("weighted girth skipped: n above --limit-n");
            }
            write_output(common.out, render(r, common.format));
            return 0;
        }
        if (reduce->parsed()) {
            WeightedGraph g = parse_graph(read_file(input));
            auto [scg, trace] = full_reduction(g);
            if (common.format == "json") {
                nlohmann::ordered_json j;
                j["scale_factor"] = trace.scale_factor.to_string();
                j["subdivisions"] = trace.subdivisions.size();
                j["original_nodes"] = trace.original.node_count;
                j["reduced_nodes"] = trace.reduced.node_count;
                j["lightness_ratio"] = trace.lightness_ratio().to_string();
                j["instance"] = serialize_spanning_cycle(scg);
                write_output(common.out, j.dump(2) + "\n");
            } else {
                write_output(common.out, serialize_spanning_cycle(scg));
            }
            return 0;
        }
        if (verify->parsed()) {
            CertifyParams params;
            params.k = k;
            params.eps = parse_rational("--eps", eps_text);
            params.t = parse_rational("--t", t_text);
            params.keep_prob = parse_rational("--keep-prob", keep_text);
            params.trials = trials;
            params.seed = common.seed;
            params.mode = mode_text == "warmup" ? PathMode::EdgeSafeMonotone : PathMode::BucketMonotone;
            params.girth_node_limit = common.limit_n;
            LemmaReport report = run_certifier(lemma, read_file(input), params);
            write_output(common.out, render(report, common.format));
            return report.passed() ? 0 : kExitFail;
        }
        if (bench->parsed()) {
            config.eps = parse_rational("--eps", bench_eps);
            config.generator.seed = common.seed;
            config.generator.weights.hi = parse_rational("--wmax", bench_wmax);
            auto rows = run_tradeoff(config);
            auto summary = summarize(rows);
            std::ostringstream out;
            if (common.format == "json") {
                nlohmann::ordered_json j;
                j["rows"] = nlohmann::ordered_json::array();
                for (const auto& r : rows) j["rows"].push_back(to_csv(r));
                j["max_ratio"] = summary.max_ratio;
                j["all_lightness_at_least_one"] = summary.all_lightness_at_least_one;
                j["all_stretch_verified"] = summary.all_stretch_verified;
                j["trends"] = summary.trends;
                out << j.dump(2) << "\n";
            } else {
                out << to_csv(rows);
                if (common.format == "text") {
                    out << "# max ratio " << summary.max_ratio << "\n";
                    out << "# stretch verified " << (summary.all_stretch_verified ? "yes" : "no") << "\n";
                    for (const auto& t : summary.trends) out << "# " << t << "\n";
                }
            }
            write_output(common.out, out.str());
            return summary.all_stretch_verified && summary.all_lightness_at_least_one ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
