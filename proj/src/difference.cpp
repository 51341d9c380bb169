#include "enpg/difference.hpp"

#include <algorithm>
#include <stdexcept>

namespace enpg {

std::size_t BipartiteGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj) twice += nb.size();
    return twice / 2;
}

void BipartiteGraph::add_edge(const Label& x, const Label& y) {
    adj[x].insert(y);
    adj[y].insert(x);
}

BipartiteGraph bipartite_view(const Graph& g, const LabelSet& X, const LabelSet& Y) {
    BipartiteGraph gb;
    gb.X.assign(X.begin(), X.end());
    gb.Y.assign(Y.begin(), Y.end());
    for (const auto& x : X) {
        if (Y.count(x)) throw std::invalid_argument("sides overlap at '" + x + "'");
        for (const auto& w : g.neighbors(x)) {
            if (X.count(w)) continue;  // clique edge of the side, implicit
            if (!Y.count(w)) throw std::invalid_argument("edge leaves the two sides at '" + w + "'");
            gb.add_edge(x, w);
        }
    }
    for (const auto& y : Y)
        for (const auto& w : g.neighbors(y))
            if (!X.count(w) && !Y.count(w))
                throw std::invalid_argument("edge leaves the two sides at '" + w + "'");
    return gb;
}

namespace {

struct Levels {
    int t = 0;
    std::map<Label, int> level;       // per vertex of one side
    std::vector<std::size_t> count;   // vertices per level, index 0..t
};

// bucket degrees of `side` and rank the distinct nonzero values
Levels side_levels(const BipartiteGraph& gb, const std::vector<Label>& side,
                   std::size_t other_size) {
    std::vector<std::size_t> bucket(other_size + 1, 0);
    for (const auto& v : side) bucket[gb.degree(v)]++;
    std::vector<int> rank(other_size + 1, 0);
    int next = 0;
    for (std::size_t d = 1; d <= other_size; ++d)
        if (bucket[d] > 0) rank[d] = ++next;
    Levels ls;
    ls.t = next;
    ls.count.assign(next + 1, 0);
    for (const auto& v : side) {
        int lv = rank[gb.degree(v)];
        ls.level[v] = lv;
        ls.count[lv]++;
    }
    return ls;
}

// Walks one side in descending degree order and returns the first consecutive
// pair with non-nested neighborhoods, expanded to a 2K2.
std::optional<TwoKTwo> find_2k2(const BipartiteGraph& gb, const std::vector<Label>& side) {
    std::vector<Label> order(side.begin(), side.end());
    std::stable_sort(order.begin(), order.end(), [&](const Label& a, const Label& b) {
        return gb.degree(a) > gb.degree(b);
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const Label& big = order[i];
        const Label& small = order[i + 1];
        if (gb.degree(small) == 0) break;
        const LabelSet& big_nb = gb.adj.at(big);  // degree(big) >= degree(small) > 0
        std::optional<Label> outside;
        for (const auto& y : gb.adj.at(small))
            if (!big_nb.count(y)) { outside = y; break; }
        if (!outside) continue;  // nested, keep walking
        for (const auto& y : big_nb)
            if (!gb.has_edge(small, y))
                return TwoKTwo{big, y, small, *outside};
    }
    return std::nullopt;
}

}  // namespace

DifferenceOutcome is_difference(const BipartiteGraph& gb) {
    Levels lx = side_levels(gb, gb.X, gb.Y.size());
    Levels ly = side_levels(gb, gb.Y, gb.X.size());

    bool ok = lx.t == ly.t;
    if (ok) {
        // suffix_count[j] = number of Y vertices with level > j
        int t = lx.t;
        std::vector<std::size_t> y_above(t + 2, 0);
        for (int j = t; j >= 0; --j) y_above[j] = y_above[j + 1] + ly.count[j];
        for (const auto& x : gb.X) {
            int i = lx.level.at(x);
            if (gb.degree(x) != y_above[t - i + 1]) { ok = false; break; }
            if (i > 0)
                for (const auto& y : gb.adj.at(x))
                    if (i + ly.level.at(y) <= t) { ok = false; break; }
            if (!ok) break;
        }
    }
    if (ok) {
        DegreeLevels out;
        out.t = lx.t;
        out.x_levels = std::move(lx.level);
        out.y_levels = std::move(ly.level);
        return out;
    }

    if (auto cert = find_2k2(gb, gb.X)) return *cert;
    if (auto sw = find_2k2(gb, gb.Y))  // found with sides swapped; re-orient
        return TwoKTwo{sw->y1, sw->x1, sw->y2, sw->x2};
    throw std::logic_error("degree-level law failed but no 2K2 was found");
}

Representation build_meeting_rep(const BipartiteGraph& gb, const MeetingSpec& spec) {
    DifferenceOutcome outcome = is_difference(gb);
    if (!is_difference_yes(outcome))
        throw std::invalid_argument("graph is not a difference graph");
    const DegreeLevels& levels = std::get<DegreeLevels>(outcome);
    int t = levels.t;

    const GridPoint a = spec.segment_start;
    const GridPoint b = spec.segment_end;
    std::int64_t dx = 0, dy = 0, len = 0;
    if (a.y == b.y && a.x != b.x) {
        if (spec.orientation != Orientation::Horizontal)
            throw std::invalid_argument("segment orientation mismatch");
        dx = b.x > a.x ? 1 : -1;
        len = std::llabs(b.x - a.x);
    } else if (a.x == b.x && a.y != b.y) {
        if (spec.orientation != Orientation::Vertical)
            throw std::invalid_argument("segment orientation mismatch");
        dy = b.y > a.y ? 1 : -1;
        len = std::llabs(b.y - a.y);
    } else {
        throw std::invalid_argument("segment must be axis-parallel and non-degenerate");
    }
    if (len < t + 2)
        throw std::invalid_argument("segment shorter than t+2 edges");

    auto at = [&](std::int64_t q) { return GridPoint{a.x + dx * q, a.y + dy * q}; };

    Representation rep;
    // X side anchors at the start: level i spans offsets [0, i+1]
    for (const auto& x : gb.X) {
        int i = levels.x_levels.at(x);
        rep.set_path(x, path_through({at(0), at(i + 1)}));
    }
    // Y side anchors at offset t+2: level j spans [t-j+1, t+2]
    for (const auto& y : gb.Y) {
        int j = levels.y_levels.at(y);
        rep.set_path(y, path_through({at(t - j + 1), at(t + 2)}));
    }
    return rep;
}

}  // namespace enpg
