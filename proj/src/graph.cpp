#include "lightspan/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "lightspan/error.hpp"
#include "text_lines.hpp"
#include "union_find.hpp"

namespace lightspan {

namespace {

std::string describe(const Edge& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", " + e.w.to_string() + ")";
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t node_count, std::span<const Edge> edges) : n_(node_count) {
    edges_.reserve(edges.size());
    for (const Edge& raw : edges) {
        if (raw.u >= n_ || raw.v >= n_) throw Error(ErrorKind::IdOutOfRange, "edge " + describe(raw));
        if (raw.u == raw.v) throw Error(ErrorKind::SelfLoop, "edge " + describe(raw));
        if (!raw.w.is_positive()) throw Error(ErrorKind::NonPositiveWeight, "edge " + describe(raw));
        Edge e = raw;
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
    adj_.assign(n_, {});
    index_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!index_.emplace(pair_id(e.u, e.v), i).second) {
            throw Error(ErrorKind::DuplicateEdge, "edge " + describe(e));
        }
        adj_[e.u].push_back({e.v, e.w});
        adj_[e.v].push_back({e.u, e.w});
    }
}

std::optional<Rational> WeightedGraph::weight(NodeId u, NodeId v) const {
    auto it = index_.find(pair_id(u, v));
    if (it == index_.end() || u == v) return std::nullopt;
    return edges_[it->second].w;
}

Rational WeightedGraph::total_weight() const { return lightspan::total_weight(edges_); }

WeightedGraph build_graph(std::size_t node_count, std::span<const Edge> edges) {
    return WeightedGraph(node_count, edges);
}

namespace {

struct QueueEntry {
    Rational dist;
    NodeId node;
    bool operator>(const QueueEntry& o) const { return dist > o.dist || (dist == o.dist && node > o.node); }
};

}  // namespace

std::optional<Rational> bounded_distance(const std::vector<std::vector<Arc>>& adj, NodeId source, NodeId target,
                                         const std::optional<Rational>& cutoff) {
    if (source == target) return Rational(0);
    std::vector<std::optional<Rational>> dist(adj.size());
    std::vector<char> done(adj.size(), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pq;
    dist[source] = Rational(0);
    pq.push({Rational(0), source});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (done[x]) continue;
        if (cutoff && d > *cutoff) return std::nullopt;
        if (x == target) return d;
        done[x] = 1;
        for (const Arc& a : adj[x]) {
            if (done[a.to]) continue;
            Rational nd = d + a.w;
            if (cutoff && nd > *cutoff) continue;
            if (!dist[a.to] || nd < *dist[a.to]) {
                dist[a.to] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    return std::nullopt;
}

std::optional<Rational> shortest_path_distance(const WeightedGraph& g, NodeId u, NodeId v,
                                               std::optional<Rational> cutoff) {
    if (u >= g.node_count() || v >= g.node_count()) {
        throw Error(ErrorKind::IdOutOfRange,
                    "query (" + std::to_string(u) + ", " + std::to_string(v) + ") on " +
                        std::to_string(g.node_count()) + " nodes");
    }
    return bounded_distance(g.adjacency(), u, v, cutoff);
}

std::vector<std::optional<Rational>> distances_from(const std::vector<std::vector<Arc>>& adj, NodeId source) {
    std::vector<std::optional<Rational>> dist(adj.size());
    std::vector<char> done(adj.size(), 0);
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> pq;
    dist[source] = Rational(0);
    pq.push({Rational(0), source});
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (done[x]) continue;
        done[x] = 1;
        for (const Arc& a : adj[x]) {
            if (done[a.to]) continue;
            Rational nd = d + a.w;
            if (!dist[a.to] || nd < *dist[a.to]) {
                dist[a.to] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    return dist;
}

std::vector<Edge> minimum_spanning_tree(const WeightedGraph& g) {
    detail::UnionFind uf(g.node_count());
    std::vector<Edge> tree;
    for (const Edge& e : g.edges()) {
        if (uf.unite(e.u, e.v)) tree.push_back(e);
    }
    return tree;
}

std::size_t component_count(const WeightedGraph& g) {
    detail::UnionFind uf(g.node_count());
    std::size_t components = g.node_count();
    for (const Edge& e : g.edges())
        if (uf.unite(e.u, e.v)) --components;
    return components;
}

bool is_connected(const WeightedGraph& g) { return component_count(g) <= 1; }

Rational total_weight(std::span<const Edge> edges) {
    Rational sum;
    for (const Edge& e : edges) sum += e.w;
    return sum;
}

WeightedGraph parse_graph(std::string_view text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header) throw Error(ErrorKind::ParseError, "line 1: missing header 'n m'");
    if (header->tokens.size() != 2) reader.fail(*header, "expected 'n m'");
    std::size_t n = reader.parse_count(*header, header->tokens[0]);
    std::size_t m = reader.parse_count(*header, header->tokens[1]);
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        auto line = reader.next();
        if (!line) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(reader.line_number() + 1) + ": expected " +
                                                   std::to_string(m) + " edges, found " + std::to_string(i));
        }
        if (line->tokens.size() != 3) reader.fail(*line, "expected 'u v w'");
        Edge e;
        e.u = reader.parse_node(*line, line->tokens[0]);
        e.v = reader.parse_node(*line, line->tokens[1]);
        e.w = reader.parse_rational(*line, line->tokens[2]);
        if (!e.w.is_positive()) reader.fail(*line, "non-positive weight " + e.w.to_string());
        edges.push_back(e);
    }
    if (auto extra = reader.next()) reader.fail(*extra, "unexpected content after edge list");
    try {
        return WeightedGraph(n, edges);
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, err.what());
    }
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

}  // namespace lightspan
