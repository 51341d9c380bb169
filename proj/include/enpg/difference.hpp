#ifndef ENPG_DIFFERENCE_HPP
#define ENPG_DIFFERENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "enpg/graph.hpp"
#include "enpg/grid.hpp"

namespace enpg {

/// Bipartite graph in compact form: two sides plus cross edges only.
/// Side cliques, when the sides are cliques of a larger graph, stay implicit.
struct BipartiteGraph {
    std::vector<Label> X;
    std::vector<Label> Y;
    std::map<Label, LabelSet> adj;  // cross adjacency, symmetric

    std::size_t degree(const Label& v) const {
        auto it = adj.find(v);
        return it == adj.end() ? 0 : it->second.size();
    }
    bool has_edge(const Label& u, const Label& v) const {
        auto it = adj.find(u);
        return it != adj.end() && it->second.count(v) > 0;
    }
    std::size_t edge_count() const;
    void add_edge(const Label& x, const Label& y);
};

/// Extracts the cross-edge structure of g w.r.t. the two given sides.
/// Throws if an edge of g joins two vertices of the same side.
BipartiteGraph bipartite_view(const Graph& g, const LabelSet& X, const LabelSet& Y);

/// Degree levels of a difference graph: level 0 holds the isolated vertices,
/// levels 1..t follow the sorted distinct nonzero degrees, and adjacency is
/// exactly i + j > t.
struct DegreeLevels {
    int t = 0;
    std::map<Label, int> x_levels;
    std::map<Label, int> y_levels;
};

struct TwoKTwo {
    // edges x1-y1 and x2-y2 with x1-y2 and x2-y1 absent
    Label x1, y1, x2, y2;
};

using DifferenceOutcome = std::variant<DegreeLevels, TwoKTwo>;

/// Decides whether gb is a difference (bipartite chain) graph. Yes outcomes
/// carry the degree levels, no outcomes four vertices inducing a 2K2.
/// Runs in O(n + m) after a bucket sort of the degrees.
DifferenceOutcome is_difference(const BipartiteGraph& gb);

inline bool is_difference_yes(const DifferenceOutcome& o) {
    return std::holds_alternative<DegreeLevels>(o);
}

enum class Orientation { Horizontal, Vertical };

struct MeetingSpec {
    GridPoint segment_start;
    GridPoint segment_end;
    Orientation orientation = Orientation::Horizontal;
};

/// Lays zero-bend paths along the segment so that the cross intersection
/// graph realizes gb: the X side anchors at segment_start, the Y side at the
/// point t+2 steps in; extra segment length stays unused at the far end.
/// A path at level i spans i+1 edges from its anchor. Throws when gb is not
/// a difference graph or the segment is shorter than t+2.
Representation build_meeting_rep(const BipartiteGraph& gb, const MeetingSpec& spec);

}  // namespace enpg

#endif
