#include "lightspan/girth.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "lightspan/error.hpp"
#include "lightspan/spanner.hpp"
#include "lightspan/spanning_cycle.hpp"

namespace lightspan {

std::string CycleWitness::to_string() const {
    std::ostringstream out;
    out << "cycle(";
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? "," : "") << cycle[i];
    out << ") w=" << total_weight << " max=" << max_edge_weight << " w*=" << normalized_weight;
    return out.str();
}

CycleWitness normalized_cycle_weight(const WeightedGraph& g, std::span<const NodeId> cycle) {
    std::vector<NodeId> nodes(cycle.begin(), cycle.end());
    if (nodes.size() > 1 && nodes.front() == nodes.back()) nodes.pop_back();
    if (nodes.size() < 3) throw Error(ErrorKind::NotACycle, "a cycle needs at least 3 nodes");
    std::vector<NodeId> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::NotACycle, "node repeated in cycle");
    }
    CycleWitness w;
    w.cycle = nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeId a = nodes[i];
        NodeId b = nodes[(i + 1) % nodes.size()];
        if (a >= g.node_count() || b >= g.node_count()) {
            throw Error(ErrorKind::IdOutOfRange, "cycle node out of range");
        }
        auto weight = g.weight(a, b);
        if (!weight) {
            throw Error(ErrorKind::MissingEdge, "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
        w.total_weight += *weight;
        w.max_edge_weight = std::max(w.max_edge_weight, *weight);
    }
    w.normalized_weight = w.total_weight / w.max_edge_weight;
    return w;
}

namespace {

class CycleSearch {
public:
    explicit CycleSearch(const WeightedGraph& g) : g_(g), on_path_(g.node_count(), 0) {
        for (const Edge& e : g.edges()) {
            if (!min_w_ || e.w < *min_w_) min_w_ = e.w;
            if (!max_w_ || e.w > *max_w_) max_w_ = e.w;
        }
    }

    WeightedGirth run() {
        if (g_.edge_count() < 3) return {};
        const auto n = static_cast<NodeId>(g_.node_count());
        for (NodeId s = 0; s < n; ++s) {
            start_ = s;
            path_.assign(1, s);
            on_path_[s] = 1;
            extend(s, Rational(0), Rational(0));
            on_path_[s] = 0;
        }
        WeightedGirth result;
        if (best_) {
            result.value = best_->normalized_weight;
            result.witness = best_;
        }
        return result;
    }

private:
    // Lower bound on w* of any cycle that completes the current path.
    Rational lower_bound(const Rational& sum, const Rational& max) const {
        Rational via_new_max = Rational(1) + sum / *max_w_;
        if (max.num() == 0) return via_new_max;
        Rational keep_max = (sum + *min_w_) / max;
        return std::min(via_new_max, keep_max);
    }

    void extend(NodeId x, const Rational& sum, const Rational& max) {
        for (const Arc& a : g_.neighbors(x)) {
            if (a.to == start_) {
                if (path_.size() >= 3) close(sum + a.w, std::max(max, a.w));
                continue;
            }
            if (a.to < start_ || on_path_[a.to]) continue;
            Rational next_sum = sum + a.w;
            Rational next_max = std::max(max, a.w);
            if (best_ && lower_bound(next_sum, next_max) > best_->normalized_weight) continue;
            path_.push_back(a.to);
            on_path_[a.to] = 1;
            extend(a.to, next_sum, next_max);
            on_path_[a.to] = 0;
            path_.pop_back();
        }
    }

    std::vector<EdgeKey> keys_of(const std::vector<NodeId>& cycle) const {
        std::vector<EdgeKey> keys;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            NodeId a = cycle[i];
            NodeId b = cycle[(i + 1) % cycle.size()];
            keys.push_back(EdgeKey{*g_.weight(a, b), std::min(a, b), std::max(a, b)});
        }
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    void close(const Rational& total, const Rational& max) {
        Rational ratio = total / max;
        if (best_) {
            if (ratio > best_->normalized_weight) return;
            if (ratio == best_->normalized_weight && !(keys_of(path_) < best_keys_)) return;
        }
        best_ = CycleWitness{path_, total, max, ratio};
        best_keys_ = keys_of(path_);
    }

    const WeightedGraph& g_;
    std::optional<Rational> min_w_;
    std::optional<Rational> max_w_;
    NodeId start_ = 0;
    std::vector<NodeId> path_;
    std::vector<char> on_path_;
    std::optional<CycleWitness> best_;
    std::vector<EdgeKey> best_keys_;
};

}  // namespace

WeightedGirth weighted_girth(const WeightedGraph& g, std::size_t node_limit) {
    if (g.node_count() > node_limit) {
        throw Error(ErrorKind::TooLarge, "weighted girth enumeration limited to " + std::to_string(node_limit) +
                                             " nodes, graph has " + std::to_string(g.node_count()));
    }
    return CycleSearch(g).run();
}

std::optional<std::size_t> unweighted_girth(const WeightedGraph& g) {
    const auto n = static_cast<NodeId>(g.node_count());
    std::optional<std::size_t> best;
    std::vector<std::int64_t> dist(n);
    std::vector<NodeId> parent(n);
    for (NodeId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = root;
        std::queue<NodeId> q;
        q.push(root);
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop();
            for (const Arc& a : g.neighbors(x)) {
                if (dist[a.to] < 0) {
                    dist[a.to] = dist[x] + 1;
                    parent[a.to] = x;
                    q.push(a.to);
                } else if (parent[x] != a.to) {
                    auto len = static_cast<std::size_t>(dist[x] + dist[a.to] + 1);
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

Rational lightness(const WeightedGraph& h, const WeightedGraph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "lightness needs a connected base graph");
    require_subgraph(g, h);
    auto mst = minimum_spanning_tree(g);
    Rational mst_weight = total_weight(mst);
    if (mst_weight.num() == 0) throw Error(ErrorKind::Disconnected, "base graph has no edges");
    return h.total_weight() / mst_weight;
}

LemmaReport certify_greedy_girth(const WeightedGraph& g, const Rational& t, std::size_t node_limit) {
    LemmaReport report;
    report.lemma = "greedy-girth";
    report.instance = "n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) +
                      " t=" + t.to_string();
    if (g.node_count() > node_limit) {
        throw Error(ErrorKind::TooLarge, "greedy-girth certifier limited to " + std::to_string(node_limit) + " nodes");
    }
    auto result = greedy_spanner(g, t);
    auto girth = weighted_girth(result.spanner, node_limit);
    Rational threshold = t + Rational(1);
    report.set("spanner_edges", static_cast<std::int64_t>(result.spanner.edge_count()));
    report.set("threshold", threshold);
    report.set("weighted_girth", girth.value ? ReportValue(*girth.value) : ReportValue(std::string("inf")));
    if (girth.value && *girth.value <= threshold) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back(girth.witness->to_string());
    }
    return report;
}

LemmaReport check_max_weight_bound(const SpanningCycleGraph& scg, const Rational& t) {
    if (t <= Rational(1)) throw Error(ErrorKind::BadParams, "max-weight bound needs t > 1");
    LemmaReport report;
    report.lemma = "max-weight";
    report.instance = "n=" + std::to_string(scg.node_count()) + " chords=" + std::to_string(scg.chord_count()) +
                      " t=" + t.to_string();
    Rational bound = Rational(static_cast<std::int64_t>(scg.node_count())) / (Rational(2) * (t - Rational(1)));
    report.set("bound", bound);
    report.set("max_weight", std::max(Rational(1), scg.max_chord_weight()));
    if (Rational(1) >= bound) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back("cycle edges of weight 1 reach the bound " + bound.to_string());
    }
    for (const Edge& e : scg.chords()) {
        if (e.w >= bound) {
            report.verdict = Verdict::Fail;
            report.witnesses.push_back("chord (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " +
                                       e.w.to_string() + ") >= " + bound.to_string());
        }
    }
    return report;
}

}  // namespace lightspan
