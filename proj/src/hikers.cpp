#include "lightspan/hikers.hpp"

#include <algorithm>
#include <stdexcept>

#include "lightspan/error.hpp"

namespace lightspan {

std::int64_t HikerRun::total_traversals() const {
    std::int64_t total = 0;
    for (auto c : chord_traversals) total += c;
    return total;
}

std::size_t HikerRun::max_chords() const {
    std::size_t best = 0;
    for (const auto& j : journeys) best = std::max(best, j.chords_hiked);
    return best;
}

namespace {

void check_args(std::int64_t k, const Rational& eps) {
    if (k < 1) throw Error(ErrorKind::BadParams, "k must be at least 1");
    if (!eps.is_positive()) throw Error(ErrorKind::BadParams, "eps must be positive");
}

bool is_permutation(const std::vector<NodeId>& pos) {
    std::vector<char> seen(pos.size(), 0);
    for (NodeId p : pos) {
        if (p >= pos.size() || seen[p]) return false;
        seen[p] = 1;
    }
    return true;
}

HikerRun finish(const SpanningCycleGraph& scg, std::vector<HikerJourney> journeys, std::int64_t k,
                const Rational& eps, PathMode mode) {
    HikerRun run;
    run.chord_traversals.assign(scg.chord_count(), 0);
    for (auto& j : journeys) {
        j.path.start = j.hiker;
        j.path.steps.clear();
        for (const auto& d : j.days) j.path.steps.insert(j.path.steps.end(), d.steps.begin(), d.steps.end());
        for (const Step& st : j.path.steps)
            if (st.kind == StepKind::Chord) ++run.chord_traversals[st.chord];
        j.chords_hiked = j.path.chord_count();
        auto d = decompose_path(scg, j.path.steps, k, eps, mode, true);
        if (d) j.path.decomposition = std::move(*d);
    }
    run.journeys = std::move(journeys);
    return run;
}

std::vector<HikerJourney> fresh_journeys(std::size_t n) {
    std::vector<HikerJourney> journeys(n);
    for (std::size_t h = 0; h < n; ++h) journeys[h].hiker = static_cast<NodeId>(h);
    return journeys;
}

}  // namespace

HikerRun hiker_protocol_warmup(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps) {
    check_args(k, eps);
    const std::size_t n = scg.node_count();
    for (std::size_t c = 0; c < scg.chord_count(); ++c) {
        const Edge& e = scg.chord(c);
        auto cap = edge_safe_cap(e.w, eps, true);
        if (static_cast<std::size_t>(cap) >= scg.cycle_distance(e.u, e.v)) {
            throw Error(ErrorKind::PreconditionViolated,
                        "endpoint windows of chord (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") overlap: floor(eps*w/2) = " + std::to_string(cap) + " >= cycle distance " +
                            std::to_string(scg.cycle_distance(e.u, e.v)));
        }
    }
    auto journeys = fresh_journeys(n);
    std::vector<NodeId> pos(n);
    std::vector<NodeId> at(n);
    for (NodeId v = 0; v < n; ++v) pos[v] = at[v] = v;

    auto walk = [&](NodeId hiker, std::size_t chord, std::int64_t s, NodeId from) {
        HikerDay day{static_cast<int>(chord), s, {}};
        NodeId x = from;
        for (std::int64_t i = 0; i < s; ++i) {
            day.steps.push_back(forward_step(scg, x));
            x = day.steps.back().to;
        }
        day.steps.push_back(chord_step(scg, chord, x));
        x = day.steps.back().to;
        for (std::int64_t i = 0; i < s; ++i) {
            day.steps.push_back(backward_step(scg, x));
            x = day.steps.back().to;
        }
        journeys[hiker].days.push_back(std::move(day));
        return x;
    };

    for (std::size_t c = 0; c < scg.chord_count(); ++c) {
        const Edge& e = scg.chord(c);
        const auto cap = edge_safe_cap(e.w, eps, true);
        for (std::int64_t s = 0; s <= cap; ++s) {
            NodeId from_u = scg.advance(e.u, -s);
            NodeId from_v = scg.advance(e.v, -s);
            NodeId a = at[from_u];
            NodeId b = at[from_v];
            pos[a] = walk(a, c, s, from_u);
            pos[b] = walk(b, c, s, from_v);
            at[pos[a]] = a;
            at[pos[b]] = b;
        }
    }
    HikerRun run = finish(scg, std::move(journeys), k, eps, PathMode::EdgeSafeMonotone);
    run.positions_always_permutation = is_permutation(pos);
    return run;
}

HikerRun hiker_protocol_full(const SpanningCycleGraph& scg, std::int64_t k, const Rational& eps) {
    check_args(k, eps);
    const std::size_t n = scg.node_count();
    auto journeys = fresh_journeys(n);
    std::vector<NodeId> pos(n);
    for (NodeId v = 0; v < n; ++v) pos[v] = v;
    bool permutation = true;
    std::vector<std::pair<int, std::int64_t>> t_by_bucket;

    for (const Bucket& bucket : bucketize(scg)) {
        const std::int64_t t = bucket_safe_cap(bucket.index, k, eps, true);
        t_by_bucket.emplace_back(bucket.index, t);
        if (t == 0) continue;
        const auto len = static_cast<std::size_t>(t);

        // Dawn: every hiker plans t forward steps. plan[h] is the planned
        // walk; node_at[h][s] is where it stands before its (s+1)-th
        // forward step; reach[s][v] inverts node_at.
        std::vector<std::vector<Step>> plan(n);
        std::vector<std::vector<NodeId>> node_at(n, std::vector<NodeId>(len + 1));
        std::vector<std::vector<NodeId>> reach(len + 1, std::vector<NodeId>(n));
        for (NodeId h = 0; h < n; ++h) {
            NodeId x = pos[h];
            for (std::size_t s = 0; s <= len; ++s) {
                node_at[h][s] = x;
                reach[s][x] = h;
                if (s < len) {
                    plan[h].push_back(forward_step(scg, x));
                    x = plan[h].back().to;
                }
            }
        }
        // Index in plan[h] of the (s+1)-th forward step (plan size for s = t).
        auto split_point = [&](NodeId h, std::size_t s) {
            std::size_t seen = 0;
            for (std::size_t i = 0; i < plan[h].size(); ++i) {
                if (plan[h][i].kind != StepKind::Forward) continue;
                if (seen == s) return i;
                ++seen;
            }
            return plan[h].size();
        };

        // Morning: insert every chord at every s = 1..t, swapping suffixes.
        for (std::size_t c : bucket.chords) {
            const Edge& e = scg.chord(c);
            for (std::size_t s = 1; s <= len; ++s) {
                NodeId a = reach[s][e.u];
                NodeId b = reach[s][e.v];
                std::size_t ia = split_point(a, s);
                std::size_t ib = split_point(b, s);
                std::vector<Step> suffix_a(plan[a].begin() + static_cast<std::ptrdiff_t>(ia), plan[a].end());
                std::vector<Step> suffix_b(plan[b].begin() + static_cast<std::ptrdiff_t>(ib), plan[b].end());
                plan[a].resize(ia);
                plan[b].resize(ib);
                plan[a].push_back(chord_step(scg, c, e.u));
                plan[a].insert(plan[a].end(), suffix_b.begin(), suffix_b.end());
                plan[b].push_back(chord_step(scg, c, e.v));
                plan[b].insert(plan[b].end(), suffix_a.begin(), suffix_a.end());
                for (std::size_t r = s; r <= len; ++r) {
                    std::swap(node_at[a][r], node_at[b][r]);
                    reach[r][node_at[a][r]] = a;
                    reach[r][node_at[b][r]] = b;
                }
            }
        }

        // Afternoon: drop trailing forward steps and walk back t - f steps.
        for (NodeId h = 0; h < n; ++h) {
            std::vector<Step>& p = plan[h];
            std::int64_t f = 0;
            while (!p.empty() && p.back().kind == StepKind::Forward) {
                p.pop_back();
                ++f;
            }
            NodeId x = p.empty() ? pos[h] : p.back().to;
            for (std::int64_t i = f; i < t; ++i) {
                p.push_back(backward_step(scg, x));
                x = p.back().to;
            }
            pos[h] = x;
            if (!p.empty()) journeys[h].days.push_back(HikerDay{bucket.index, t, std::move(p)});
        }
        permutation = permutation && is_permutation(pos);
    }
    HikerRun run = finish(scg, std::move(journeys), k, eps, PathMode::BucketMonotone);
    run.positions_always_permutation = permutation;
    run.t_by_bucket = std::move(t_by_bucket);
    return run;
}

}  // namespace lightspan
