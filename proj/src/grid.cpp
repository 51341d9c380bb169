#include "enpg/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <stdexcept>

namespace enpg {

namespace {

bool unit_step(const GridPoint& a, const GridPoint& b) {
    std::int64_t dx = std::llabs(a.x - b.x), dy = std::llabs(a.y - b.y);
    return dx + dy == 1;
}

}  // namespace

LatticePath::LatticePath(std::vector<GridPoint> pts) : points_(std::move(pts)) {
    if (points_.size() < 2)
        throw std::invalid_argument("lattice path needs at least one edge");
    std::set<GridPoint> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!seen.insert(points_[i]).second)
            throw std::invalid_argument("lattice path repeats a point");
        if (i > 0 && !unit_step(points_[i - 1], points_[i]))
            throw std::invalid_argument("lattice path step is not a unit grid move");
    }
}

std::vector<GridEdge> LatticePath::edges() const {
    std::vector<GridEdge> out;
    out.reserve(edge_length());
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        out.emplace_back(points_[i], points_[i + 1]);
    return out;
}

LatticePath path_through(const std::vector<GridPoint>& waypoints) {
    if (waypoints.size() < 2) throw std::invalid_argument("need at least two waypoints");
    std::vector<GridPoint> pts{waypoints.front()};
    for (std::size_t i = 1; i < waypoints.size(); ++i) {
        GridPoint cur = pts.back(), tgt = waypoints[i];
        if (cur.x != tgt.x && cur.y != tgt.y)
            throw std::invalid_argument("waypoints must be axis-aligned");
        while (cur != tgt) {
            if (cur.x < tgt.x) ++cur.x;
            else if (cur.x > tgt.x) --cur.x;
            else if (cur.y < tgt.y) ++cur.y;
            else --cur.y;
            pts.push_back(cur);
        }
    }
    return LatticePath(std::move(pts));
}

LatticePath make_path(std::initializer_list<GridPoint> waypoints) {
    return path_through(std::vector<GridPoint>(waypoints));
}

BendInfo path_bends(const LatticePath& p) {
    BendInfo info;
    const auto& pts = p.points();
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        bool before_horizontal = pts[i].y == pts[i - 1].y;
        bool after_horizontal = pts[i + 1].y == pts[i].y;
        if (before_horizontal != after_horizontal) {
            ++info.count;
            info.bend_points.push_back(pts[i]);
        }
    }
    return info;
}

PathRelation path_relation(const LatticePath& p, const LatticePath& q) {
    PathRelation rel;

    std::set<GridEdge> p_edges;
    for (const auto& e : p.edges()) p_edges.insert(e);
    std::set<GridEdge> shared;
    for (const auto& e : q.edges())
        if (p_edges.count(e)) shared.insert(e);

    // split points: degree >= 3 in the simple union graph
    std::map<GridPoint, std::set<GridPoint>> union_adj;
    auto add = [&](const LatticePath& path) {
        for (const auto& e : path.edges()) {
            union_adj[e.a].insert(e.b);
            union_adj[e.b].insert(e.a);
        }
    };
    add(p);
    add(q);
    for (const auto& [pt, nb] : union_adj)
        if (nb.size() >= 3) rel.split_points.push_back(pt);

    if (shared.empty()) {
        rel.kind = RelationKind::Disjoint;
        return rel;
    }

    // CS(P,P'): connected runs of shared edges, walked in p's direction.
    // Shared edges sit inside the simple path p, so each run is a common
    // subpath of both and maximality is automatic.
    const auto& pts = p.points();
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        if (!shared.count(GridEdge(pts[i], pts[i + 1]))) { ++i; continue; }
        std::size_t j = i;
        while (j + 1 < pts.size() && shared.count(GridEdge(pts[j], pts[j + 1]))) ++j;
        rel.segments.emplace_back(std::vector<GridPoint>(pts.begin() + i, pts.begin() + j + 1));
        i = j;
    }

    rel.kind = rel.split_points.empty() ? RelationKind::NonSplitting : RelationKind::Splitting;
    return rel;
}

const LatticePath& Representation::path(const Label& v) const {
    auto it = paths_.find(v);
    if (it == paths_.end()) throw std::invalid_argument("no path for vertex '" + v + "'");
    return it->second;
}

BoundingBox Representation::bounds() const {
    BoundingBox box;
    box.lo = {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::max()};
    box.hi = {std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::min()};
    for (const auto& [v, p] : paths_)
        for (const auto& pt : p.points()) {
            box.lo.x = std::min(box.lo.x, pt.x);
            box.lo.y = std::min(box.lo.y, pt.y);
            box.hi.x = std::max(box.hi.x, pt.x);
            box.hi.y = std::max(box.hi.y, pt.y);
        }
    return box;
}

RepGraphs enpg_from_rep(const Representation& rep) {
    RepGraphs out;
    std::vector<Label> verts;
    for (const auto& [v, p] : rep.paths()) {
        verts.push_back(v);
        out.enpg.add_vertex(v);
        out.epg.add_vertex(v);
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            PathRelation rel = path_relation(rep.path(verts[i]), rep.path(verts[j]));
            if (rel.kind == RelationKind::Disjoint) continue;
            out.epg.add_edge(verts[i], verts[j]);
            if (rel.kind == RelationKind::NonSplitting) out.enpg.add_edge(verts[i], verts[j]);
        }
    return out;
}

VerifyResult verify_rep(const Representation& rep, const Graph& g, int max_bends) {
    VerifyResult res;
    std::vector<Label> gv = g.vertices();
    std::vector<Label> rv;
    for (const auto& [v, p] : rep.paths()) rv.push_back(v);
    if (gv != rv) throw std::invalid_argument("representation and graph have different vertex sets");

    for (const auto& [v, p] : rep.paths()) {
        BendInfo b = path_bends(p);
        if (b.count > max_bends) {
            res.offending_path = v;
            res.message = "path of '" + v + "' has " + std::to_string(b.count) + " bends, limit " +
                          std::to_string(max_bends);
            return res;
        }
    }

    Graph induced = enpg_from_rep(rep).enpg;
    for (const auto& [u, v] : g.edges())
        if (!induced.has_edge(u, v)) res.missing.emplace_back(u, v);
    for (const auto& [u, v] : induced.edges())
        if (!g.has_edge(u, v)) res.extra.emplace_back(u, v);
    if (!res.missing.empty() || !res.extra.empty()) {
        const auto& [u, v] = res.missing.empty() ? res.extra.front() : res.missing.front();
        res.message = std::string(res.missing.empty() ? "extra" : "missing") + " edge {" + u +
                      "," + v + "}";
        return res;
    }
    res.ok = true;
    return res;
}

CliqueUnionResult clique_union_check(const Representation& rep, const LabelSet& clique) {
    CliqueUnionResult res;
    if (clique.empty()) throw std::invalid_argument("empty clique");

    // precondition: the labels form a clique of the represented graph
    std::vector<Label> members(clique.begin(), clique.end());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (path_relation(rep.path(members[i]), rep.path(members[j])).kind !=
                RelationKind::NonSplitting)
                throw std::invalid_argument("vertex set is not a clique of the represented graph");

    // common edge: intersect edge sets, pick the smallest
    std::set<GridEdge> common;
    for (const auto& e : rep.path(members[0]).edges()) common.insert(e);
    for (std::size_t i = 1; i < members.size(); ++i) {
        std::set<GridEdge> cur;
        for (const auto& e : rep.path(members[i]).edges())
            if (common.count(e)) cur.insert(e);
        common = std::move(cur);
    }
    if (!common.empty()) res.common_edge = *common.begin();

    // union must form a single path
    std::map<GridPoint, std::set<GridPoint>> adj;
    for (const auto& m : members)
        for (const auto& e : rep.path(m).edges()) {
            adj[e.a].insert(e.b);
            adj[e.b].insert(e.a);
        }
    std::vector<GridPoint> endpoints;
    for (const auto& [pt, nb] : adj) {
        if (nb.size() > 2) return res;  // not a path
        if (nb.size() == 1) endpoints.push_back(pt);
    }
    if (endpoints.size() != 2) return res;  // cycle or disconnected pieces

    std::vector<GridPoint> walk{endpoints[0]};
    std::set<GridPoint> visited{endpoints[0]};
    while (true) {
        const auto& nb = adj[walk.back()];
        GridPoint next;
        bool found = false;
        for (const auto& cand : nb)
            if (!visited.count(cand)) { next = cand; found = true; break; }
        if (!found) break;
        visited.insert(next);
        walk.push_back(next);
    }
    std::size_t union_edges = 0;
    for (const auto& [pt, nb] : adj) union_edges += nb.size();
    union_edges /= 2;
    if (walk.size() != union_edges + 1) return res;  // disconnected

    LatticePath union_path{walk};
    if (path_bends(union_path).count > 2) return res;
    if (!res.common_edge) return res;

    res.ok = true;
    res.union_path = union_path;
    return res;
}

}  // namespace enpg
