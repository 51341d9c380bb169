#ifndef ENPG_TESTUTIL_HPP
#define ENPG_TESTUTIL_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "enpg/constructions.hpp"
#include "enpg/graph.hpp"
#include "enpg/grid.hpp"

namespace enpg::test {

// Brute-force helpers kept independent of the library's algorithmic paths:
// they enumerate definitions directly and exist to pin expected values.

inline bool brute_is_twin_pair(const Graph& g, const Label& u, const Label& v) {
    if (!g.has_edge(u, v)) return false;
    LabelSet nu = g.neighbors(u), nv = g.neighbors(v);
    nu.erase(v);
    nv.erase(u);
    return nu == nv;
}

inline bool brute_has_twins(const Graph& g) {
    auto verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (brute_is_twin_pair(g, verts[i], verts[j])) return true;
    return false;
}

inline bool brute_has_false_twins(const Graph& g) {
    auto verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (g.has_edge(verts[i], verts[j])) continue;
            if (g.neighbors(verts[i]) == g.neighbors(verts[j])) return true;
        }
    return false;
}

// odd-cycle search in the complement by exhaustive DFS over vertex sequences
inline bool brute_complement_bipartite(const Graph& g) {
    Graph comp = complement_graph(g);
    // 2-colorability by brute force over all 2^n colorings (n small)
    auto verts = comp.vertices();
    std::size_t n = verts.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (comp.has_edge(verts[i], verts[j]) && (((mask >> i) ^ (mask >> j)) & 1) == 0)
                    ok = false;
        if (ok) return true;
    }
    return n == 0;
}

// every split bipartition, by brute force
inline bool brute_is_split(const Graph& g) {
    auto verts = g.vertices();
    std::size_t n = verts.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                bool both_k = ((mask >> i) & 1) && ((mask >> j) & 1);
                bool both_s = !((mask >> i) & 1) && !((mask >> j) & 1);
                if (both_k && !g.has_edge(verts[i], verts[j])) ok = false;
                if (both_s && g.has_edge(verts[i], verts[j])) ok = false;
            }
        if (ok) return true;
    }
    return n == 0;
}

// 2K2 in a bipartite side-labeled graph by scanning disjoint edge pairs
inline bool brute_has_2k2(const Graph& g, const LabelSet& X, const LabelSet& Y) {
    std::vector<std::pair<Label, Label>> cross;
    for (const auto& [u, v] : g.edges()) {
        if (X.count(u) && Y.count(v)) cross.emplace_back(u, v);
        else if (X.count(v) && Y.count(u)) cross.emplace_back(v, u);
    }
    for (std::size_t a = 0; a < cross.size(); ++a)
        for (std::size_t b = a + 1; b < cross.size(); ++b) {
            auto [x1, y1] = cross[a];
            auto [x2, y2] = cross[b];
            if (x1 == x2 || y1 == y2) continue;
            if (!g.has_edge(x1, y2) && !g.has_edge(x2, y1)) return true;
        }
    return false;
}

inline std::vector<LabelSet> maximal_cliques(const Graph& g) {
    std::vector<LabelSet> out;
    std::vector<Label> verts = g.vertices();
    // Bron-Kerbosch without pivoting; fine at test scale
    auto expand = [&](auto&& self, LabelSet r, std::vector<Label> p, LabelSet x) -> void {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        std::vector<Label> p_copy = p;
        for (const auto& v : p_copy) {
            LabelSet r2 = r;
            r2.insert(v);
            std::vector<Label> p2;
            LabelSet x2;
            for (const auto& u : p)
                if (g.has_edge(u, v)) p2.push_back(u);
            for (const auto& u : x)
                if (g.has_edge(u, v)) x2.insert(u);
            self(self, r2, p2, x2);
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(v);
        }
    };
    expand(expand, {}, verts, {});
    return out;
}

// acyclicity of the union of all path edges
inline bool union_is_forest(const Representation& rep) {
    std::set<GridEdge> edges;
    std::set<GridPoint> points;
    for (const auto& [v, p] : rep.paths())
        for (const auto& e : p.edges()) {
            edges.insert(e);
            points.insert(e.a);
            points.insert(e.b);
        }
    // union-find over points
    std::map<GridPoint, GridPoint> parent;
    for (const auto& p : points) parent[p] = p;
    auto find = [&](GridPoint p) {
        while (!(parent[p] == p)) p = parent[p] = parent[parent[p]];
        return p;
    };
    for (const auto& e : edges) {
        GridPoint ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;
        parent[ra] = rb;
    }
    return true;
}

inline Graph path_graph(int n) {
    Graph g;
    g.add_vertex("0");
    for (int i = 1; i < n; ++i) g.add_edge(std::to_string(i - 1), std::to_string(i));
    return g;
}

inline Graph complete_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(std::to_string(i), std::to_string(j));
    if (n == 1) g.add_vertex("0");
    return g;
}

// co-bipartite graph whose cross edges form k disjoint K2s
inline CobipGraph matching_cobip(int k) {
    CobipGraph g;
    for (int i = 0; i < k; ++i) {
        g.labels.push_back("a" + std::to_string(i));
        g.side.push_back(0);
    }
    for (int i = 0; i < k; ++i) {
        g.labels.push_back("b" + std::to_string(i));
        g.side.push_back(1);
    }
    g.cross.assign(2 * k, {});
    for (int i = 0; i < k; ++i) {
        g.cross[i].push_back(k + i);
        g.cross[k + i].push_back(i);
    }
    return g;
}

}  // namespace enpg::test

#endif
