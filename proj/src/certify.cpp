#include "lightspan/certify.hpp"

#include <algorithm>

#include "lightspan/error.hpp"
#include "lightspan/lemmas.hpp"

namespace lightspan {

const std::vector<std::string>& certifier_ids() {
    static const std::vector<std::string> ids{
        "greedy-girth",         "max-weight",         "moore-dispersion",         "moore-bound",
        "warmup-dispersion",    "full-dispersion",    "edge-safe-matching",       "bucket-safe-matching",
        "bucket-monotone-distinct", "weak-counting",  "medium-counting",          "full-counting-mc",
        "main-theorem"};
    return ids;
}

bool certifier_takes_graph(std::string_view id) {
    return id == "greedy-girth" || id == "moore-dispersion" || id == "moore-bound" || id == "main-theorem";
}

LemmaReport run_certifier(std::string_view id, std::string_view input, const CertifyParams& p) {
    const auto& ids = certifier_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw Error(ErrorKind::BadParams, "unknown certifier '" + std::string(id) + "'");
    LemmaOptions opt;
    opt.girth_node_limit = p.girth_node_limit;
    if (certifier_takes_graph(id)) {
        WeightedGraph g = parse_graph(input);
        if (id == "greedy-girth") return certify_greedy_girth(g, p.t, p.girth_node_limit);
        if (id == "moore-dispersion") return check_unweighted_dispersion(g, p.k, opt);
        if (id == "moore-bound") return moore_bound_report(g, p.k, opt);
        return main_theorem_report(g, p.k, p.eps, opt);
    }
    SpanningCycleGraph scg = parse_spanning_cycle(input);
    if (id == "max-weight") return check_max_weight_bound(scg, p.t);
    if (id == "warmup-dispersion") return check_monotone_dispersion(scg, p.k, p.eps, opt);
    if (id == "full-dispersion") return check_bucket_monotone_dispersion(scg, p.k, p.eps, opt);
    if (id == "edge-safe-matching") return check_edge_safe_matching(scg, p.eps, opt);
    if (id == "bucket-safe-matching") return check_bucket_safe_matching(scg, p.k, p.eps, opt);
    if (id == "bucket-monotone-distinct") return check_bucket_monotone_distinct(scg, p.k, p.eps, opt);
    if (id == "weak-counting") return check_weak_counting(scg, p.k, p.eps, p.mode);
    if (id == "medium-counting") return run_medium_counting(scg, p.k, p.eps, p.mode);
    return monte_carlo_full_counting(scg, p.k, p.eps, p.keep_prob, p.trials, p.seed, p.mode, opt);
}

}  // namespace lightspan
