#include "lightspan/safe_paths.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lightspan/error.hpp"

namespace lightspan {

Step forward_step(const SpanningCycleGraph& scg, NodeId from) {
    return {StepKind::Forward, from, scg.forward(from), kNoChord};
}

Step backward_step(const SpanningCycleGraph& scg, NodeId from) {
    return {StepKind::Backward, from, scg.backward(from), kNoChord};
}

Step chord_step(const SpanningCycleGraph& scg, std::size_t chord, NodeId from) {
    const Edge& e = scg.chord(chord);
    if (from == e.u) return {StepKind::Chord, e.u, e.v, chord};
    if (from == e.v) return {StepKind::Chord, e.v, e.u, chord};
    throw Error(ErrorKind::NotAWalk, "node " + std::to_string(from) + " is not an endpoint of chord " +
                                         std::to_string(chord));
}

bool backtracks(const Step& a, const Step& b) {
    if (a.to != b.from || a.from != b.to) return false;
    if (a.kind == StepKind::Chord || b.kind == StepKind::Chord) return a.chord == b.chord;
    return a.kind != b.kind;
}

void require_walk(const SpanningCycleGraph& scg, std::span<const Step> steps) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step& st = steps[i];
        auto bad = [&](const std::string& why) {
            throw Error(ErrorKind::NotAWalk, "step " + std::to_string(i) + ": " + why);
        };
        if (st.from >= scg.node_count() || st.to >= scg.node_count()) bad("node out of range");
        switch (st.kind) {
            case StepKind::Forward:
                if (st.to != scg.forward(st.from)) bad("not a forward cycle step");
                break;
            case StepKind::Backward:
                if (st.to != scg.backward(st.from)) bad("not a backward cycle step");
                break;
            case StepKind::Chord: {
                if (st.chord >= scg.chord_count()) bad("unknown chord");
                const Edge& e = scg.chord(st.chord);
                if (!((e.u == st.from && e.v == st.to) || (e.v == st.from && e.u == st.to))) bad("chord mismatch");
                break;
            }
        }
        if (i > 0 && steps[i - 1].to != st.from) bad("does not continue from the previous step");
    }
}

std::string_view to_string(PathMode mode) {
    return mode == PathMode::EdgeSafeMonotone ? "edge-safe-monotone" : "bucket-monotone";
}

std::vector<std::size_t> SafePath::chord_sequence() const {
    std::vector<std::size_t> seq;
    for (const Step& st : steps)
        if (st.kind == StepKind::Chord) seq.push_back(st.chord);
    return seq;
}

std::size_t SafePath::chord_count() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const Step& st) { return st.kind == StepKind::Chord; }));
}

int bucket_index(const Rational& w) {
    if (w < Rational(1)) throw Error(ErrorKind::PreconditionViolated, "bucket of weight " + w.to_string() + " < 1");
    auto whole = static_cast<std::uint64_t>(w.floor());
    return static_cast<int>(std::bit_width(whole)) - 1;
}

std::vector<Bucket> bucketize(const SpanningCycleGraph& scg) {
    std::map<int, Bucket> by_index;
    for (std::size_t i = 0; i < scg.chord_count(); ++i) {
        int b = bucket_index(scg.chord(i).w);
        auto& bucket = by_index[b];
        bucket.index = b;
        bucket.chords.push_back(i);
    }
    std::vector<Bucket> out;
    for (auto& [_, b] : by_index) out.push_back(std::move(b));
    return out;
}

std::int64_t edge_safe_cap(const Rational& w, const Rational& eps, bool extra) {
    Rational bound = eps * w;
    if (extra) bound /= Rational(2);
    return bound.floor();
}

std::int64_t bucket_safe_cap(int bucket, std::int64_t k, const Rational& eps, bool extra) {
    return (eps * Rational(k) * pow2(extra ? bucket - 1 : bucket)).floor();
}

namespace {

using Steps = std::span<const Step>;

std::optional<std::vector<Segment>> classify_edge_safe(const SpanningCycleGraph& scg, Steps steps,
                                                       const std::vector<std::size_t>& chord_pos, const Rational& eps,
                                                       bool extra) {
    const std::size_t k = chord_pos.size();
    std::vector<Segment> segments(k);
    // Prefix before the first chord: forward steps only.
    for (std::size_t i = 0; i < chord_pos[0]; ++i)
        if (steps[i].kind != StepKind::Forward) return std::nullopt;
    segments[0].s = static_cast<std::int64_t>(chord_pos[0]);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t gap_begin = chord_pos[j] + 1;
        std::size_t gap_end = j + 1 < k ? chord_pos[j + 1] : steps.size();
        std::size_t i = gap_begin;
        while (i < gap_end && steps[i].kind == StepKind::Backward) ++i;
        auto backward = static_cast<std::int64_t>(i - gap_begin);
        std::size_t f = i;
        while (i < gap_end && steps[i].kind == StepKind::Forward) ++i;
        if (i != gap_end) return std::nullopt;
        auto forward = static_cast<std::int64_t>(i - f);
        if (j + 1 == k && forward != 0) return std::nullopt;
        if (backward != segments[j].s) return std::nullopt;
        if (j + 1 < k) segments[j + 1].s = forward;
    }
    for (std::size_t j = 0; j < k; ++j) {
        Segment& seg = segments[j];
        seg.kind = Segment::Kind::EdgeSafe;
        seg.chord = steps[chord_pos[j]].chord;
        if (seg.s > edge_safe_cap(scg.chord(seg.chord).w, eps, extra)) return std::nullopt;
        if (j > 0 && !(segments[j - 1].chord < seg.chord)) return std::nullopt;  // chord index order == EdgeKey order
        seg.begin = chord_pos[j] - static_cast<std::size_t>(seg.s);
        seg.end = chord_pos[j] + 1 + static_cast<std::size_t>(seg.s);
    }
    return segments;
}

std::optional<std::vector<Segment>> classify_bucket(const SpanningCycleGraph& scg, Steps steps,
                                                    const std::vector<std::size_t>& chord_pos, std::int64_t k,
                                                    const Rational& eps, bool extra) {
    // Group chords into maximal runs of equal bucket; buckets must increase.
    std::vector<Segment> segments;
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // [first chord pos idx, last chord pos idx]
    int prev_bucket = -1;
    for (std::size_t j = 0; j < chord_pos.size(); ++j) {
        int b = bucket_index(scg.chord(steps[chord_pos[j]].chord).w);
        if (b < prev_bucket) return std::nullopt;
        if (b != prev_bucket) {
            groups.emplace_back(j, j);
            Segment seg;
            seg.kind = Segment::Kind::BucketSafe;
            seg.bucket = b;
            segments.push_back(seg);
        } else {
            groups.back().second = j;
        }
        prev_bucket = b;
    }
    // Boundaries: head of each group is the forward run before its first
    // chord, tail the backward run after its last chord.
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::size_t first = chord_pos[groups[g].first];
        std::size_t last = chord_pos[groups[g].second];
        std::size_t lo = g == 0 ? 0 : chord_pos[groups[g - 1].second] + 1;
        std::size_t hi = g + 1 < groups.size() ? chord_pos[groups[g + 1].first] : steps.size();
        std::size_t begin = first;
        while (begin > lo && steps[begin - 1].kind == StepKind::Forward) --begin;
        std::size_t end = last + 1;
        while (end < hi && steps[end].kind == StepKind::Backward) ++end;
        if (g == 0 && begin != 0) return std::nullopt;
        if (g + 1 == groups.size() && end != steps.size()) return std::nullopt;
        segments[g].begin = begin;
        segments[g].end = end;
    }
    for (std::size_t g = 0; g + 1 < groups.size(); ++g)
        if (segments[g].end != segments[g + 1].begin) return std::nullopt;

    for (Segment& seg : segments) {
        std::int64_t forward = 0;
        std::int64_t backward = 0;
        for (std::size_t i = seg.begin; i < seg.end; ++i) {
            const Step& st = steps[i];
            if (i > seg.begin && backtracks(steps[i - 1], st)) return std::nullopt;
            if (st.kind == StepKind::Forward) {
                if (backward > 0) return std::nullopt;
                ++forward;
            } else if (st.kind == StepKind::Backward) {
                ++backward;
            }
        }
        if (forward != backward) return std::nullopt;
        seg.s = forward;
        if (seg.s > bucket_safe_cap(seg.bucket, k, eps, extra)) return std::nullopt;
    }
    return segments;
}

}  // namespace

std::optional<std::vector<Segment>> decompose_path(const SpanningCycleGraph& scg, std::span<const Step> steps,
                                                   std::int64_t k, const Rational& eps, PathMode mode, bool extra) {
    require_walk(scg, steps);
    std::vector<std::size_t> chord_pos;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i].kind == StepKind::Chord) chord_pos.push_back(i);
    if (chord_pos.empty()) {
        if (steps.empty()) return std::vector<Segment>{};
        return std::nullopt;
    }
    if (mode == PathMode::EdgeSafeMonotone) return classify_edge_safe(scg, steps, chord_pos, eps, extra);
    return classify_bucket(scg, steps, chord_pos, k, eps, extra);
}

std::optional<std::vector<Segment>> classify_path(const SpanningCycleGraph& scg, std::span<const Step> steps,
                                                  std::int64_t k, const Rational& eps, PathMode mode, bool extra) {
    require_walk(scg, steps);
    auto chords = std::count_if(steps.begin(), steps.end(), [](const Step& st) { return st.kind == StepKind::Chord; });
    if (k < 1 || chords != k) return std::nullopt;
    return decompose_path(scg, steps, k, eps, mode, extra);
}

namespace {

class Collector {
public:
    Collector(const SpanningCycleGraph& scg, EnumerationLimits limits) : scg_(scg), limits_(limits) {}

    void emit(NodeId start, const std::vector<Step>& steps, std::vector<Segment> decomposition) {
        if (out_.size() >= limits_.max_paths) {
            throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limits_.max_paths) + " paths");
        }
        out_.push_back(SafePath{start, steps, std::move(decomposition)});
    }

    void emit_checked(NodeId start, const std::vector<Step>& steps, std::int64_t k, const Rational& eps,
                      PathMode mode) {
        auto d = classify_path(scg_, steps, k, eps, mode, false);
        if (!d) throw std::logic_error("enumerated path failed classification: " + format_path(scg_, start, steps));
        emit(start, steps, std::move(*d));
    }

    std::vector<SafePath> take() { return std::move(out_); }

private:
    const SpanningCycleGraph& scg_;
    EnumerationLimits limits_;
    std::vector<SafePath> out_;
};

// An edge-safe piece: s forward steps into the chord, the chord, s backward.
struct Piece {
    std::size_t chord;
    NodeId entry;  // chord endpoint traversed from
    std::int64_t s;
};

std::vector<Step> piece_steps(const SpanningCycleGraph& scg, const Piece& p) {
    std::vector<Step> steps;
    NodeId x = scg.advance(p.entry, -p.s);
    for (std::int64_t i = 0; i < p.s; ++i) {
        steps.push_back(forward_step(scg, x));
        x = steps.back().to;
    }
    steps.push_back(chord_step(scg, p.chord, x));
    x = steps.back().to;
    for (std::int64_t i = 0; i < p.s; ++i) {
        steps.push_back(backward_step(scg, x));
        x = steps.back().to;
    }
    return steps;
}

std::vector<std::vector<Piece>> pieces_by_start(const SpanningCycleGraph& scg, const Rational& eps) {
    std::vector<std::vector<Piece>> by_start(scg.node_count());
    for (std::size_t c = 0; c < scg.chord_count(); ++c) {
        const Edge& e = scg.chord(c);
        std::int64_t cap = edge_safe_cap(e.w, eps, false);
        for (std::int64_t s = 0; s <= cap; ++s) {
            for (NodeId entry : {e.u, e.v}) by_start[scg.advance(entry, -s)].push_back({c, entry, s});
        }
    }
    return by_start;
}

// Depth-first generator for bucket-safe segments and their monotone
// concatenations.
class BucketWalker {
public:
    struct Options {
        std::int64_t k = 1;           // budget parameter in the caps
        std::int64_t max_chords = 1;  // chords in an emitted path
        bool single_segment = false;  // emit lone bucket-safe paths of 1..max_chords chords
    };

    BucketWalker(const SpanningCycleGraph& scg, const Rational& eps, Options opt, Collector& out)
        : scg_(scg), eps_(eps), opt_(opt), out_(out) {
        for (std::size_t c = 0; c < scg.chord_count(); ++c) chord_bucket_.push_back(bucket_index(scg.chord(c).w));
        for (const Bucket& b : bucketize(scg)) buckets_.push_back(b.index);
        int top = buckets_.empty() ? 0 : buckets_.back();
        for (int i = 0; i <= top; ++i) caps_.push_back(bucket_safe_cap(i, opt_.k, eps_, false));
    }

    void run() {
        for (NodeId x = 0; x < scg_.node_count(); ++x) {
            start_ = x;
            for (int b : buckets_) extend(x, 0, SegmentState{b, 0, 0, 0, 0});
        }
    }

private:
    struct SegmentState {
        int bucket;
        std::int64_t forward;
        std::int64_t backward;
        std::int64_t chords;
        std::size_t begin;  // index in steps_ where this segment starts
    };

    void emit() {
        if (!opt_.single_segment) {
            out_.emit_checked(start_, steps_, opt_.max_chords, eps_, PathMode::BucketMonotone);
            return;
        }
        // A lone bucket-safe path: caps use the budget k, not its chord count.
        auto d = decompose_path(scg_, steps_, opt_.k, eps_, PathMode::BucketMonotone, false);
        if (!d || d->size() != 1) {
            throw std::logic_error("enumerated path is not bucket-safe: " + format_path(scg_, start_, steps_));
        }
        out_.emit(start_, steps_, std::move(*d));
    }

    void push_and_extend(const Step& st, std::int64_t chords, SegmentState seg) {
        steps_.push_back(st);
        extend(st.to, chords, seg);
        steps_.pop_back();
    }

    void extend(NodeId x, std::int64_t chords, SegmentState seg) {
        const bool closed = seg.chords > 0 && seg.backward == seg.forward;
        if (closed) {
            if (opt_.single_segment) {
                emit();
            } else if (chords == opt_.max_chords) {
                emit();
                return;
            }
        }
        // Copied: recursion below may reallocate steps_.
        const std::optional<Step> last = steps_.size() > seg.begin ? std::optional<Step>(steps_.back()) : std::nullopt;
        const std::int64_t cap = caps_[static_cast<std::size_t>(seg.bucket)];

        if (seg.backward == 0 && seg.forward < cap && chords < opt_.max_chords) {
            SegmentState next = seg;
            ++next.forward;
            push_and_extend(forward_step(scg_, x), chords, next);
        }
        if (chords < opt_.max_chords) {
            for (std::size_t c : scg_.chords_at(x)) {
                if (chord_bucket_[c] != seg.bucket) continue;
                Step st = chord_step(scg_, c, x);
                if (last && backtracks(*last, st)) continue;
                SegmentState next = seg;
                ++next.chords;
                push_and_extend(st, chords + 1, next);
            }
        }
        if (seg.backward < seg.forward && last && last->kind != StepKind::Forward) {
            SegmentState next = seg;
            ++next.backward;
            push_and_extend(backward_step(scg_, x), chords, next);
        }
        if (!opt_.single_segment && closed && chords < opt_.max_chords) {
            for (int b : buckets_) {
                if (b <= seg.bucket) continue;
                extend(x, chords, SegmentState{b, 0, 0, 0, steps_.size()});
            }
        }
    }

    const SpanningCycleGraph& scg_;
    Rational eps_;
    Options opt_;
    Collector& out_;
    std::vector<int> chord_bucket_;
    std::vector<int> buckets_;
    std::vector<std::int64_t> caps_;
    NodeId start_ = 0;
    std::vector<Step> steps_;
};

}  // namespace

std::vector<SafePath> enumerate_safe_k_paths(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                             PathMode mode, EnumerationLimits limits) {
    if (k < 1) throw Error(ErrorKind::BadParams, "k must be at least 1");
    if (!eps.is_positive()) throw Error(ErrorKind::BadParams, "eps must be positive");
    Collector out(scg, limits);
    if (mode == PathMode::BucketMonotone) {
        BucketWalker walker(scg, eps, {k, k, false}, out);
        walker.run();
        return out.take();
    }
    auto by_start = pieces_by_start(scg, eps);
    std::vector<Step> steps;
    std::function<void(NodeId, NodeId, std::size_t, std::int64_t)> grow = [&](NodeId start, NodeId at,
                                                                             std::size_t min_chord,
                                                                             std::int64_t depth) {
        for (const Piece& p : by_start[at]) {
            if (p.chord < min_chord) continue;
            auto piece = piece_steps(scg, p);
            steps.insert(steps.end(), piece.begin(), piece.end());
            if (depth + 1 == k) {
                out.emit_checked(start, steps, k, eps, mode);
            } else {
                grow(start, steps.back().to, p.chord + 1, depth + 1);
            }
            steps.resize(steps.size() - piece.size());
        }
    };
    for (NodeId x = 0; x < scg.node_count(); ++x) grow(x, x, 0, 0);
    return out.take();
}

std::vector<SafePath> enumerate_edge_safe_paths(const SpanningCycleGraph& scg, const Rational& eps,
                                                EnumerationLimits limits) {
    Collector out(scg, limits);
    auto by_start = pieces_by_start(scg, eps);
    for (NodeId x = 0; x < scg.node_count(); ++x) {
        for (const Piece& p : by_start[x]) out.emit_checked(x, piece_steps(scg, p), 1, eps, PathMode::EdgeSafeMonotone);
    }
    return out.take();
}

std::vector<SafePath> enumerate_bucket_safe_paths(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps,
                                                  std::int64_t max_chords, EnumerationLimits limits) {
    if (k < 1 || max_chords < 1) throw Error(ErrorKind::BadParams, "k and max_chords must be at least 1");
    Collector out(scg, limits);
    BucketWalker walker(scg, eps, {k, max_chords, true}, out);
    walker.run();
    return out.take();
}

std::vector<std::vector<NodeId>> enumerate_edge_simple_k_paths(const WeightedGraph& g, std::int64_t k,
                                                               EnumerationLimits limits) {
    if (k < 1) throw Error(ErrorKind::BadParams, "k must be at least 1");
    std::vector<std::vector<NodeId>> out;
    std::vector<char> used(g.edge_count(), 0);
    std::map<std::pair<NodeId, NodeId>, std::size_t> edge_id;
    for (std::size_t i = 0; i < g.edges().size(); ++i) edge_id[{g.edges()[i].u, g.edges()[i].v}] = i;
    std::vector<NodeId> nodes;
    std::function<void(NodeId)> grow = [&](NodeId x) {
        if (static_cast<std::int64_t>(nodes.size()) == k + 1) {
            std::vector<NodeId> rev(nodes.rbegin(), nodes.rend());
            if (nodes < rev) {
                if (out.size() >= limits.max_paths) {
                    throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limits.max_paths) + " paths");
                }
                out.push_back(nodes);
            }
            return;
        }
        for (const Arc& a : g.neighbors(x)) {
            std::size_t id = edge_id.at({std::min(x, a.to), std::max(x, a.to)});
            if (used[id]) continue;
            used[id] = 1;
            nodes.push_back(a.to);
            grow(a.to);
            nodes.pop_back();
            used[id] = 0;
        }
    };
    for (NodeId x = 0; x < g.node_count(); ++x) {
        nodes.assign(1, x);
        grow(x);
    }
    return out;
}

std::string format_path(const SpanningCycleGraph& scg, NodeId start, std::span<const Step> steps) {
    (void)scg;
    std::ostringstream out;
    out << start << ':';
    for (const Step& st : steps) {
        switch (st.kind) {
            case StepKind::Forward: out << " F"; break;
            case StepKind::Backward: out << " B"; break;
            case StepKind::Chord: out << " C:" << st.from << '-' << st.to; break;
        }
    }
    return out.str();
}

std::string format_path(const SpanningCycleGraph& scg, const SafePath& path) {
    return format_path(scg, path.start, path.steps);
}

std::pair<NodeId, std::vector<Step>> parse_path(const SpanningCycleGraph& scg, std::string_view line) {
    auto fail = [&](const std::string& why) -> std::pair<NodeId, std::vector<Step>> {
        throw Error(ErrorKind::ParseError, "path '" + std::string(line) + "': " + why);
    };
    auto parse_node = [&](std::string_view tok, NodeId& out) {
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
        return ec == std::errc() && ptr == tok.data() + tok.size();
    };
    std::istringstream in{std::string(line)};
    std::string tok;
    if (!(in >> tok) || tok.back() != ':') return fail("missing start node");
    NodeId start = 0;
    if (!parse_node(std::string_view(tok).substr(0, tok.size() - 1), start) || start >= scg.node_count()) {
        return fail("bad start node");
    }
    std::vector<Step> steps;
    NodeId at = start;
    while (in >> tok) {
        if (tok == "F") {
            steps.push_back(forward_step(scg, at));
        } else if (tok == "B") {
            steps.push_back(backward_step(scg, at));
        } else if (tok.rfind("C:", 0) == 0) {
            auto body = std::string_view(tok).substr(2);
            auto dash = body.find('-');
            NodeId u = 0;
            NodeId v = 0;
            if (dash == std::string_view::npos || !parse_node(body.substr(0, dash), u) ||
                !parse_node(body.substr(dash + 1), v)) {
                return fail("bad chord token '" + tok + "'");
            }
            auto c = scg.find_chord(u, v);
            if (!c) throw Error(ErrorKind::NotAWalk, "no chord " + tok);
            if (u != at) throw Error(ErrorKind::NotAWalk, "chord " + tok + " does not start at " + std::to_string(at));
            steps.push_back(chord_step(scg, *c, u));
        } else {
            return fail("unknown token '" + tok + "'");
        }
        at = steps.back().to;
    }
    return {start, steps};
}

}  // namespace lightspan
