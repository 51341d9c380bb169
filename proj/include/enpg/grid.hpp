#ifndef ENPG_GRID_HPP
#define ENPG_GRID_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enpg/graph.hpp"

namespace enpg {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const GridPoint& a, const GridPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const GridPoint& a, const GridPoint& b) { return !(a == b); }
    friend bool operator<(const GridPoint& a, const GridPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

/// Unit grid edge, endpoints stored in sorted order.
struct GridEdge {
    GridPoint a, b;
    GridEdge(GridPoint p, GridPoint q) : a(p < q ? p : q), b(p < q ? q : p) {}
    friend bool operator==(const GridEdge& e, const GridEdge& f) {
        return e.a == f.a && e.b == f.b;
    }
    friend bool operator<(const GridEdge& e, const GridEdge& f) {
        return e.a != f.a ? e.a < f.a : e.b < f.b;
    }
};

/// Simple rectilinear path: consecutive points one unit apart on one axis,
/// no repeated point, at least one edge.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<GridPoint> pts);  // validates

    const std::vector<GridPoint>& points() const { return points_; }
    std::size_t edge_length() const { return points_.size() - 1; }
    std::vector<GridEdge> edges() const;
    GridEdge edge(std::size_t i) const { return GridEdge(points_[i], points_[i + 1]); }

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<GridPoint> points_;
};

/// Convenience builder: walks from `start` through axis-aligned waypoints.
LatticePath make_path(std::initializer_list<GridPoint> waypoints);
LatticePath path_through(const std::vector<GridPoint>& waypoints);

struct BendInfo {
    int count = 0;
    std::vector<GridPoint> bend_points;
};

BendInfo path_bends(const LatticePath& p);

enum class RelationKind { Disjoint, Splitting, NonSplitting };

struct PathRelation {
    RelationKind kind = RelationKind::Disjoint;
    std::vector<LatticePath> segments;   // CS(P,P'): maximal common subpaths
    std::vector<GridPoint> split_points; // degree >= 3 in the simple union
};

PathRelation path_relation(const LatticePath& p, const LatticePath& q);

struct BoundingBox {
    GridPoint lo, hi;
};

/// Vertex label -> lattice path. The host grid is implicit: coordinates are
/// signed and unbounded.
class Representation {
public:
    void set_path(const Label& v, LatticePath p) { paths_.insert_or_assign(v, std::move(p)); }
    bool has_path(const Label& v) const { return paths_.count(v) > 0; }
    const LatticePath& path(const Label& v) const;
    const std::map<Label, LatticePath>& paths() const { return paths_; }
    std::size_t size() const { return paths_.size(); }
    BoundingBox bounds() const;

private:
    std::map<Label, LatticePath> paths_;
};

struct RepGraphs {
    Graph enpg;  // edges: pairs of paths sharing an edge whose union is a path
    Graph epg;   // edges: pairs of paths sharing an edge
};

RepGraphs enpg_from_rep(const Representation& rep);

struct VerifyResult {
    bool ok = false;
    std::string message;
    std::optional<Label> offending_path;          // too many bends
    std::vector<std::pair<Label, Label>> missing; // in g, absent from the representation
    std::vector<std::pair<Label, Label>> extra;   // induced by the representation, absent from g
};

/// True iff every path has at most max_bends bends and the induced ENPG graph
/// equals g as a labeled graph. Throws std::invalid_argument when the vertex
/// sets differ.
VerifyResult verify_rep(const Representation& rep, const Graph& g, int max_bends);

struct CliqueUnionResult {
    bool ok = false;
    std::optional<LatticePath> union_path;  // the path formed by all clique paths
    std::optional<GridEdge> common_edge;    // an edge contained in every clique path
};

/// Checks that the union of the clique's paths is a path with at most two
/// bends and that some grid edge lies on every one of them. Throws when
/// `clique` is not a clique of the represented graph.
CliqueUnionResult clique_union_check(const Representation& rep, const LabelSet& clique);

}  // namespace enpg

#endif
