#include "lightspan/spanning_cycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lightspan/error.hpp"
#include "text_lines.hpp"

namespace lightspan {

SpanningCycleGraph::SpanningCycleGraph(std::size_t node_count, std::span<const Edge> chords) : n_(node_count) {
    if (n_ < 3) throw Error(ErrorKind::BadParams, "a spanning cycle needs at least 3 nodes, got " + std::to_string(n_));
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Edge& raw : chords) {
        std::string name = "chord (" + std::to_string(raw.u) + ", " + std::to_string(raw.v) + ", " +
                           raw.w.to_string() + ")";
        if (raw.u >= n_ || raw.v >= n_) throw Error(ErrorKind::IdOutOfRange, name);
        if (raw.u == raw.v) throw Error(ErrorKind::SelfLoop, name);
        if (raw.w < Rational(1)) throw Error(ErrorKind::PreconditionViolated, name + " has weight below 1");
        if (is_cycle_edge(raw.u, raw.v)) throw Error(ErrorKind::DuplicateEdge, name + " parallels a cycle edge");
        Edge e = raw;
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.emplace(e.u, e.v).second) throw Error(ErrorKind::DuplicateEdge, name);
        chords_.push_back(e);
    }
    std::sort(chords_.begin(), chords_.end(), [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
    incident_.assign(n_, {});
    for (std::size_t i = 0; i < chords_.size(); ++i) {
        incident_[chords_[i].u].push_back(i);
        incident_[chords_[i].v].push_back(i);
    }
}

std::optional<std::size_t> SpanningCycleGraph::find_chord(NodeId u, NodeId v) const {
    if (u >= n_) return std::nullopt;
    for (std::size_t i : incident_[u]) {
        const Edge& e = chords_[i];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
    }
    return std::nullopt;
}

NodeId SpanningCycleGraph::advance(NodeId v, std::int64_t steps) const {
    auto n = static_cast<std::int64_t>(n_);
    std::int64_t r = (static_cast<std::int64_t>(v) + steps) % n;
    if (r < 0) r += n;
    return static_cast<NodeId>(r);
}

std::size_t SpanningCycleGraph::cycle_distance(NodeId a, NodeId b) const {
    std::size_t f = forward_distance(a, b);
    return std::min(f, n_ - f == n_ ? 0 : n_ - f);
}

Rational SpanningCycleGraph::chord_weight() const { return lightspan::total_weight(chords_); }

Rational SpanningCycleGraph::max_chord_weight() const {
    Rational best;
    for (const Edge& e : chords_) best = std::max(best, e.w);
    return best;
}

WeightedGraph SpanningCycleGraph::to_graph() const {
    std::vector<Edge> edges;
    edges.reserve(n_ + chords_.size());
    for (NodeId v = 0; v < n_; ++v) edges.push_back({v, forward(v), Rational(1)});
    edges.insert(edges.end(), chords_.begin(), chords_.end());
    return WeightedGraph(n_, edges);
}

SpanningCycleGraph SpanningCycleGraph::without_chord(std::size_t index) const {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < chords_.size(); ++i)
        if (i != index) rest.push_back(chords_[i]);
    return SpanningCycleGraph(n_, rest);
}

SpanningCycleGraph parse_spanning_cycle(std::string_view text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header) throw Error(ErrorKind::ParseError, "line 1: missing header 'n c'");
    if (header->tokens.size() != 2) reader.fail(*header, "expected 'n c'");
    std::size_t n = reader.parse_count(*header, header->tokens[0]);
    std::size_t c = reader.parse_count(*header, header->tokens[1]);
    std::vector<Edge> chords;
    for (std::size_t i = 0; i < c; ++i) {
        auto line = reader.next();
        if (!line) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(reader.line_number() + 1) + ": expected " +
                                                   std::to_string(c) + " chords, found " + std::to_string(i));
        }
        if (line->tokens.size() != 3) reader.fail(*line, "expected 'u v w'");
        Edge e{reader.parse_node(*line, line->tokens[0]), reader.parse_node(*line, line->tokens[1]),
               reader.parse_rational(*line, line->tokens[2])};
        if (e.w < Rational(1)) reader.fail(*line, "chord weight " + e.w.to_string() + " is below 1");
        chords.push_back(e);
    }
    if (auto extra = reader.next()) reader.fail(*extra, "unexpected content after chord list");
    try {
        return SpanningCycleGraph(n, chords);
    } catch (const Error& err) {
        throw Error(ErrorKind::ParseError, err.what());
    }
}

std::string serialize_spanning_cycle(const SpanningCycleGraph& scg) {
    std::ostringstream out;
    out << scg.node_count() << ' ' << scg.chord_count() << '\n';
    for (const Edge& e : scg.chords()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

}  // namespace lightspan
