#include "enpg/cobipartite.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace enpg {

std::size_t CobipGraph::cross_edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : cross) twice += nb.size();
    return twice / 2;
}

int CobipGraph::index_of(const Label& v) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == v) return static_cast<int>(i);
    return -1;
}

CobipGraph CobipGraph::from_graph(const Graph& g, const CoBipartition& part) {
    if (part.K.size() + part.K_prime.size() != g.vertex_count())
        throw std::invalid_argument("co-bipartition does not cover the vertex set");
    for (const auto& side : {part.K, part.K_prime})
        for (const auto& u : side)
            for (const auto& v : side)
                if (u < v && !g.has_edge(u, v))
                    throw std::invalid_argument("co-bipartition side is not a clique");

    CobipGraph c;
    std::map<Label, int> idx;
    for (const auto& v : part.K) {
        idx[v] = static_cast<int>(c.labels.size());
        c.labels.push_back(v);
        c.side.push_back(0);
    }
    for (const auto& v : part.K_prime) {
        idx[v] = static_cast<int>(c.labels.size());
        c.labels.push_back(v);
        c.side.push_back(1);
    }
    c.cross.assign(c.labels.size(), {});
    for (const auto& [u, v] : g.edges()) {
        auto iu = idx.find(u), iv = idx.find(v);
        if (iu == idx.end() || iv == idx.end())
            throw std::invalid_argument("edge endpoint outside the co-bipartition");
        if (c.side[iu->second] != c.side[iv->second]) {
            c.cross[iu->second].push_back(iv->second);
            c.cross[iv->second].push_back(iu->second);
        }
    }
    for (auto& nb : c.cross) std::sort(nb.begin(), nb.end());
    return c;
}

Graph CobipGraph::to_graph() const {
    Graph g;
    for (const auto& v : labels) g.add_vertex(v);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (side[i] == side[j]) g.add_edge(labels[i], labels[j]);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (int j : cross[i])
            if (static_cast<int>(i) < j) g.add_edge(labels[i], labels[j]);
    return g;
}

BipartiteGraph CobipGraph::cross_view() const {
    BipartiteGraph gb;
    for (std::size_t i = 0; i < labels.size(); ++i)
        (side[i] == 0 ? gb.X : gb.Y).push_back(labels[i]);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (int j : cross[i])
            if (static_cast<int>(i) < j) gb.add_edge(labels[i], labels[j]);
    return gb;
}

std::pair<CobipGraph, TwinMap> remove_twins_compact(const CobipGraph& g) {
    std::size_t n = g.size();
    // adjacency must be sorted for class comparison; copy only when needed
    std::vector<std::vector<int>> scratch;
    scratch.reserve(n);  // pointers into scratch must stay valid
    std::vector<const std::vector<int>*> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (std::is_sorted(g.cross[v].begin(), g.cross[v].end())) {
            adj[v] = &g.cross[v];
        } else {
            scratch.push_back(g.cross[v]);
            std::sort(scratch.back().begin(), scratch.back().end());
            adj[v] = &scratch.back();
        }
    }

    // same-side classes keyed by cross neighborhood
    auto key_hash = [](int side, const std::vector<int>& nb) {
        std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(side);
        for (int x : nb) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    };
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(2 * n + 1);
    std::vector<int> cls(n, -1);
    int class_count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::uint64_t h = key_hash(g.side[v], *adj[v]);
        auto& bucket = buckets[h];
        for (int rep : bucket) {
            if (g.side[rep] == g.side[v] && *adj[rep] == *adj[v]) {
                cls[v] = cls[rep];
                break;
            }
        }
        if (cls[v] < 0) {
            cls[v] = class_count++;
            bucket.push_back(static_cast<int>(v));
        }
    }

    // universal vertices on both sides are twins across sides: merge classes
    std::size_t k_count = 0, k2_count = 0;
    for (std::size_t v = 0; v < n; ++v) (g.side[v] == 0 ? k_count : k2_count)++;
    int universal_k = -1, universal_k2 = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (g.side[v] == 0 && g.cross[v].size() == k2_count && k2_count > 0)
            universal_k = cls[v];
        if (g.side[v] == 1 && g.cross[v].size() == k_count && k_count > 0)
            universal_k2 = cls[v];
    }
    if (universal_k >= 0 && universal_k2 >= 0 && universal_k != universal_k2)
        for (std::size_t v = 0; v < n; ++v)
            if (cls[v] == universal_k2) cls[v] = universal_k;

    // lexicographically smallest member represents its class
    std::vector<int> class_rep(class_count, -1);
    for (std::size_t v = 0; v < n; ++v) {
        int& rep = class_rep[cls[v]];
        if (rep < 0 || g.labels[v] < g.labels[rep]) rep = static_cast<int>(v);
    }
    std::vector<bool> kept(n, false);
    for (int c = 0; c < class_count; ++c)
        if (class_rep[c] >= 0) kept[class_rep[c]] = true;

    TwinMap twin_map;
    twin_map.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!kept[v]) twin_map.emplace_back(g.labels[v], g.labels[class_rep[cls[v]]]);

    CobipGraph reduced;
    std::vector<int> remap(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        if (!kept[v]) continue;
        remap[v] = static_cast<int>(reduced.labels.size());
        reduced.labels.push_back(g.labels[v]);
        reduced.side.push_back(g.side[v]);
    }
    reduced.cross.assign(reduced.labels.size(), {});
    for (std::size_t v = 0; v < n; ++v) {
        if (!kept[v]) continue;
        for (int u : g.cross[v])
            if (kept[u] && reduced.side[remap[v]] != reduced.side[remap[u]])
                reduced.cross[remap[v]].push_back(remap[u]);
    }
    for (auto& nb : reduced.cross) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return {reduced, twin_map};
}

namespace {

std::vector<int> indices_of(const CobipGraph& g, const std::vector<Label>& verts) {
    std::vector<int> out;
    for (const auto& v : verts) {
        int i = g.index_of(v);
        if (i < 0) throw std::invalid_argument("unknown vertex '" + v + "'");
        out.push_back(i);
    }
    return out;
}

bool cobip_adjacent(const CobipGraph& g, int u, int v) {
    if (u == v) return false;
    if (g.side[u] == g.side[v]) return true;
    return std::binary_search(g.cross[u].begin(), g.cross[u].end(), v);
}

bool is_zed_indices(const CobipGraph& g, const std::vector<int>& q) {
    std::size_t n = q.size();
    if (n > 4) return false;
    if (n <= 1) return true;
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cobip_adjacent(g, q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
    if (n == 2) return true;           // K2 and 2K1 both embed in a P4
    if (n == 3) return edges == 1 || edges == 2;  // K2+K1 or P3; excludes 3K1, K3
    if (edges != 3) return false;      // P4 has exactly three edges
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] == 0 || deg[i] > 2) return false;  // excludes K3+K1 and stars
    return true;
}

std::vector<Label> sorted_labels(const CobipGraph& g, std::vector<int> q) {
    std::vector<Label> out;
    for (int i : q) out.push_back(g.labels[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// symmetric difference of cross neighborhoods (both lists sorted)
std::vector<int> neighborhood_delta(const CobipGraph& g, int u1, int u2) {
    std::vector<int> out;
    std::set_symmetric_difference(g.cross[u1].begin(), g.cross[u1].end(),
                                  g.cross[u2].begin(), g.cross[u2].end(),
                                  std::back_inserter(out));
    return out;
}

// bipartite view of the reduced graph with a vertex subset removed
BipartiteGraph cross_view_without(const CobipGraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.size(), false);
    for (int v : removed) gone[v] = true;
    BipartiteGraph gb;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (gone[i]) continue;
        (g.side[i] == 0 ? gb.X : gb.Y).push_back(g.labels[i]);
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (gone[i]) continue;
        for (int j : g.cross[i])
            if (static_cast<int>(i) < j && !gone[j]) gb.add_edge(g.labels[i], g.labels[j]);
    }
    return gb;
}

std::optional<std::vector<int>> bimodule_zed_closure(const CobipGraph& g, std::vector<int> z) {
    auto count_side = [&](const std::vector<int>& q, int s) {
        int c = 0;
        for (int v : q)
            if (g.side[v] == s) ++c;
        return c;
    };
    if (count_side(z, 0) <= 1 && count_side(z, 1) <= 1) return z;

    int first_side = count_side(z, 0) >= 2 ? 0 : 1;
    std::vector<int> pair;
    for (int v : z)
        if (g.side[v] == first_side) pair.push_back(v);
    // a zed has at most two vertices per side
    std::vector<int> zp = z;
    for (int w : neighborhood_delta(g, pair[0], pair[1]))
        if (std::find(zp.begin(), zp.end(), w) == zp.end()) zp.push_back(w);
    if (!is_zed_indices(g, zp)) return std::nullopt;

    std::vector<int> other;
    for (int v : zp)
        if (g.side[v] != first_side) other.push_back(v);
    if (other.size() <= 1) return zp;

    std::vector<int> zpp = zp;
    for (int w : neighborhood_delta(g, other[0], other[1]))
        if (std::find(zpp.begin(), zpp.end(), w) == zpp.end()) zpp.push_back(w);
    if (zpp.size() == zp.size()) return zp;
    return std::nullopt;
}

std::optional<TypeICert> type_i_search(const CobipGraph& g, std::vector<int> z,
                                       RecognizerStats* stats,
                                       std::vector<TraceEntry>* trace) {
    if (!is_zed_indices(g, z)) {
        if (trace) trace->push_back({sorted_labels(g, z), "not a zed", std::nullopt});
        return std::nullopt;
    }
    if (stats) stats->bimodule_calls++;
    auto closure = bimodule_zed_closure(g, z);
    if (!closure) {
        if (trace) trace->push_back({sorted_labels(g, z), "bimodule closure is not a zed", std::nullopt});
        return std::nullopt;
    }
    if (closure->size() != z.size())
        return type_i_search(g, *closure, stats, trace);

    if (stats) stats->difference_checks++;
    DifferenceOutcome diff = is_difference(cross_view_without(g, z));
    if (is_difference_yes(diff)) {
        TypeICert cert;
        cert.zed = sorted_labels(g, z);
        cert.levels = std::get<DegreeLevels>(diff);
        return cert;
    }
    const TwoKTwo& cert2k2 = std::get<TwoKTwo>(diff);
    if (trace) trace->push_back({sorted_labels(g, z), "remainder is not a difference graph", cert2k2});
    for (const Label& u : {cert2k2.x1, cert2k2.y1, cert2k2.x2, cert2k2.y2}) {
        std::vector<int> next = z;
        next.push_back(g.index_of(u));
        if (auto r = type_i_search(g, next, stats, trace)) return r;
    }
    return std::nullopt;
}

}  // namespace

bool is_zed(const CobipGraph& g, const std::vector<Label>& verts) {
    return is_zed_indices(g, indices_of(g, verts));
}

std::optional<ZedSet> find_bimodule_zed(const CobipGraph& g, const ZedSet& z) {
    std::vector<int> idx = indices_of(g, z.vertices);
    if (!is_zed_indices(g, idx)) throw std::invalid_argument("seed set is not a zed");
    auto closure = bimodule_zed_closure(g, idx);
    if (!closure) return std::nullopt;
    return ZedSet{sorted_labels(g, *closure)};
}

std::optional<TypeICert> is_type_i(const CobipGraph& g, const ZedSet& z,
                                   RecognizerStats* stats, std::vector<TraceEntry>* trace) {
    return type_i_search(g, indices_of(g, z.vertices), stats, trace);
}

std::optional<TypeIICert> is_type_ii(const CobipGraph& g, std::vector<TraceEntry>* trace) {
    std::size_t n = g.size();
    // isolated cross vertices: twin-freeness leaves at most one per side
    int iso_k = 0, iso_k2 = 0;
    TypeIICert cert;
    for (std::size_t v = 0; v < n; ++v)
        if (g.cross[v].empty()) {
            (g.side[v] == 0 ? iso_k : iso_k2)++;
            cert.isolated.push_back(g.labels[v]);
        }
    if (iso_k > 1 || iso_k2 > 1)
        throw std::logic_error("two isolated cross vertices on one side: input is not twin-free");

    std::vector<int> comp(n, -1);
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0 || g.cross[s].empty()) continue;
        std::deque<int> queue{static_cast<int>(s)};
        comp[s] = comps;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int u : g.cross[v])
                if (comp[u] < 0) {
                    comp[u] = comps;
                    queue.push_back(u);
                }
        }
        ++comps;
    }
    if (comps > 2) {
        if (trace) trace->push_back({{}, "cross graph has more than two non-trivial components", std::nullopt});
        return std::nullopt;
    }

    for (int c = 0; c < comps; ++c) {
        BipartiteGraph gb;
        TypeIIComponent out;
        for (std::size_t v = 0; v < n; ++v) {
            if (comp[v] != c) continue;
            if (g.side[v] == 0) {
                gb.X.push_back(g.labels[v]);
                out.k_part.insert(g.labels[v]);
            } else {
                gb.Y.push_back(g.labels[v]);
                out.k2_part.insert(g.labels[v]);
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (comp[v] != c) continue;
            for (int u : g.cross[v])
                if (static_cast<int>(v) < u) gb.add_edge(g.labels[v], g.labels[u]);
        }
        DifferenceOutcome diff = is_difference(gb);
        if (!is_difference_yes(diff)) {
            if (trace)
                trace->push_back({{}, "a cross component is not a difference graph",
                                  std::get<TwoKTwo>(diff)});
            return std::nullopt;
        }
        out.levels = std::get<DegreeLevels>(diff);
        cert.components.push_back(std::move(out));
    }
    return cert;
}

CobipOutcome recognize_cobipartite_compact(const CobipGraph& g) {
    CobipOutcome out;
    auto [reduced, twin_map] = remove_twins_compact(g);
    out.reduced = std::move(reduced);
    out.twin_map = std::move(twin_map);

    if (auto ii = is_type_ii(out.reduced, &out.refutation)) {
        out.decision = true;
        out.kind = CobipKind::TypeII;
        out.type_ii = std::move(ii);
        out.refutation.clear();
        return out;
    }
    if (auto i = is_type_i(out.reduced, ZedSet{}, &out.stats, &out.refutation)) {
        out.decision = true;
        out.kind = CobipKind::TypeI;
        out.type_i = std::move(i);
        out.refutation.clear();
        return out;
    }
    out.decision = false;
    out.kind = CobipKind::None;
    return out;
}

CobipOutcome recognize_cobipartite(const Graph& g, std::optional<CoBipartition> part) {
    if (!part) {
        part = find_cobipartition(g);
        if (!part) throw std::invalid_argument("graph is not co-bipartite");
    }
    return recognize_cobipartite_compact(CobipGraph::from_graph(g, *part));
}

namespace {

struct ZedRoles {
    std::optional<Label> x, y, x2, y2;
};

ZedRoles assign_zed_roles(const CobipGraph& g, const std::vector<Label>& zed) {
    ZedRoles roles;
    std::vector<int> k_members, k2_members;
    for (const auto& v : zed) {
        int i = g.index_of(v);
        if (i < 0) throw std::invalid_argument("zed vertex '" + v + "' not in graph");
        (g.side[i] == 0 ? k_members : k2_members).push_back(i);
    }
    auto has_cross_inside = [&](int v, const std::vector<int>& others) {
        for (int w : others)
            if (std::binary_search(g.cross[v].begin(), g.cross[v].end(), w)) return true;
        return false;
    };

    if (k_members.size() == 2) {
        int a = k_members[0], b = k_members[1];
        bool ca = has_cross_inside(a, k2_members), cb = has_cross_inside(b, k2_members);
        if (cb && !ca) std::swap(a, b);
        if (!ca && !cb && g.labels[b] < g.labels[a]) std::swap(a, b);
        roles.x = g.labels[a];
        roles.y = g.labels[b];
    } else if (k_members.size() == 1) {
        int a = k_members[0];
        if (has_cross_inside(a, k2_members) || k2_members.size() <= 1)
            roles.x = g.labels[a];
        else
            roles.y = g.labels[a];
    }

    if (k2_members.size() == 2) {
        int a = k2_members[0], b = k2_members[1];
        bool ca = has_cross_inside(a, k_members), cb = has_cross_inside(b, k_members);
        if (cb && !ca) std::swap(a, b);
        if (!ca && !cb && g.labels[b] < g.labels[a]) std::swap(a, b);
        roles.x2 = g.labels[a];
        roles.y2 = g.labels[b];
    } else if (k2_members.size() == 1) {
        int a = k2_members[0];
        if (has_cross_inside(a, k_members) || k_members.empty())
            roles.x2 = g.labels[a];
        else
            roles.y2 = g.labels[a];
    }
    return roles;
}

}  // namespace

Representation build_type_i_rep(const CobipGraph& reduced, const TypeICert& cert) {
    const CobipGraph& g = reduced;
    std::size_t k_size = 0, k2_size = 0;
    for (int s : g.side) (s == 0 ? k_size : k2_size)++;
    const std::int64_t ell = static_cast<std::int64_t>(std::min(k_size, k2_size)) + 2;
    const int t = cert.levels.t;

    ZedRoles roles = assign_zed_roles(g, cert.zed);
    LabelSet zed_set(cert.zed.begin(), cert.zed.end());

    Representation rep;
    if (roles.x) rep.set_path(*roles.x, make_path({{0, 0}, {ell, 0}, {ell, 1}}));
    if (roles.y) rep.set_path(*roles.y, make_path({{-1, 0}, {ell, 0}, {ell, 1}}));
    if (roles.x2) rep.set_path(*roles.x2, make_path({{ell, 0}, {0, 0}, {0, -1}}));
    if (roles.y2) rep.set_path(*roles.y2, make_path({{ell + 1, 0}, {0, 0}, {0, -1}}));

    // adjacency probes against the zed decide the outer endpoints
    std::optional<int> zk;   // x if present, else y
    std::optional<int> zk2;  // y' if present, else x'
    if (roles.x) zk = g.index_of(*roles.x);
    else if (roles.y) zk = g.index_of(*roles.y);
    if (roles.y2) zk2 = g.index_of(*roles.y2);
    else if (roles.x2) zk2 = g.index_of(*roles.x2);

    auto adjacent_to = [&](int probe, int v) {
        return std::binary_search(g.cross[probe].begin(), g.cross[probe].end(), v);
    };

    for (std::size_t v = 0; v < g.size(); ++v) {
        const Label& lab = g.labels[v];
        if (zed_set.count(lab)) continue;
        if (g.side[v] == 0) {
            int i = cert.levels.x_levels.at(lab);
            std::int64_t outer = 0;
            if (zk2 && !adjacent_to(*zk2, static_cast<int>(v))) outer = -1;
            rep.set_path(lab, make_path({{outer, 0}, {i + 1, 0}}));
        } else {
            int j = cert.levels.y_levels.at(lab);
            std::int64_t outer = ell;
            if (zk && !adjacent_to(*zk, static_cast<int>(v))) outer = ell + 1;
            rep.set_path(lab, make_path({{t - j + 1, 0}, {outer, 0}}));
        }
    }
    return rep;
}

Representation build_type_ii_rep(const CobipGraph& reduced, const TypeIICert& cert) {
    if (cert.components.size() > 2)
        throw std::invalid_argument("Type II certificate with more than two components");
    std::int64_t h = 2;
    for (const auto& comp : cert.components)
        h = std::max(h, static_cast<std::int64_t>(
                            std::min(comp.k_part.size(), comp.k2_part.size())) +
                            2);

    Representation rep;
    for (std::size_t c = 0; c < cert.components.size(); ++c) {
        const auto& comp = cert.components[c];
        const std::int64_t lx = static_cast<std::int64_t>(c);  // 0 = left line, 1 = right
        const std::int64_t ox = 1 - lx;                        // opposite top/bottom corner
        const int t = comp.levels.t;
        for (const auto& v : comp.k_part) {
            int i = comp.levels.x_levels.at(v);
            rep.set_path(v, make_path({{ox, h}, {lx, h}, {lx, h - (i + 1)}}));
        }
        for (const auto& v : comp.k2_part) {
            int j = comp.levels.y_levels.at(v);
            rep.set_path(v, make_path({{ox, 0}, {lx, 0}, {lx, h - (t - j + 1)}}));
        }
    }
    for (const auto& v : cert.isolated) {
        int idx = reduced.index_of(v);
        if (idx < 0) throw std::invalid_argument("isolated vertex '" + v + "' not in graph");
        if (reduced.side[idx] == 0)
            rep.set_path(v, make_path({{0, h}, {1, h}}));
        else
            rep.set_path(v, make_path({{0, 0}, {1, 0}}));
    }
    return rep;
}

Representation build_cobip_rep(const CobipOutcome& outcome) {
    if (!outcome.decision) throw std::invalid_argument("no certificate on a negative outcome");
    Representation rep = outcome.kind == CobipKind::TypeII
                             ? build_type_ii_rep(outcome.reduced, *outcome.type_ii)
                             : build_type_i_rep(outcome.reduced, *outcome.type_i);
    // twins ride on their representative's path: identical paths never split
    for (const auto& [removed, kept] : outcome.twin_map)
        rep.set_path(removed, rep.path(kept));
    return rep;
}

// ---------------------------------------------------------------------------
// brute-force oracle, kept definition-level on purpose

namespace {

struct OracleGraph {
    std::vector<Label> labels;
    std::vector<int> side;
    std::vector<std::uint32_t> adj;  // cross adjacency bitmask
    std::uint32_t k_mask = 0, k2_mask = 0;

    std::size_t size() const { return labels.size(); }
    bool cross_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    bool adjacent(int u, int v) const {
        return u != v && (side[u] == side[v] || cross_edge(u, v));
    }
};

OracleGraph oracle_graph(const CobipGraph& g) {
    OracleGraph o;
    o.labels = g.labels;
    o.side = g.side;
    o.adj.assign(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        for (int u : g.cross[v]) o.adj[v] |= 1u << u;
        (g.side[v] == 0 ? o.k_mask : o.k2_mask) |= 1u << v;
    }
    return o;
}

OracleGraph oracle_remove(const OracleGraph& g, int gone) {
    OracleGraph o;
    std::vector<int> remap(g.size(), -1);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (static_cast<int>(v) == gone) continue;
        remap[v] = static_cast<int>(o.labels.size());
        o.labels.push_back(g.labels[v]);
        o.side.push_back(g.side[v]);
    }
    o.adj.assign(o.labels.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (static_cast<int>(v) == gone) continue;
        for (std::size_t u = 0; u < g.size(); ++u)
            if (static_cast<int>(u) != gone && g.cross_edge(v, u))
                o.adj[remap[v]] |= 1u << remap[u];
        (o.side[remap[v]] == 0 ? o.k_mask : o.k2_mask) |= 1u << remap[v];
    }
    return o;
}

// literal definition: some assignment of the vertices onto a P4 such that
// adjacency matches the induced pattern exactly
bool oracle_is_zed(const OracleGraph& g, const std::vector<int>& q) {
    std::size_t n = q.size();
    if (n > 4) return false;
    if (n == 0) return true;
    static const bool p4[4][4] = {{false, true, false, false},
                                  {true, false, true, false},
                                  {false, true, false, true},
                                  {false, false, true, false}};
    int slots[4] = {0, 1, 2, 3};
    std::vector<int> chosen;
    // try every injective placement of q into the four P4 slots
    std::vector<int> perm(4);
    for (perm[0] = 0; perm[0] < 4; ++perm[0])
        for (perm[1] = 0; perm[1] < 4; ++perm[1])
            for (perm[2] = 0; perm[2] < 4; ++perm[2])
                for (perm[3] = 0; perm[3] < 4; ++perm[3]) {
                    bool inj = true;
                    for (std::size_t i = 0; i < n && inj; ++i)
                        for (std::size_t j = i + 1; j < n && inj; ++j)
                            if (perm[i] == perm[j]) inj = false;
                    if (!inj) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i < n && ok; ++i)
                        for (std::size_t j = i + 1; j < n && ok; ++j)
                            if (g.adjacent(q[i], q[j]) != p4[perm[i]][perm[j]]) ok = false;
                    if (ok) return true;
                }
    (void)slots;
    (void)chosen;
    return false;
}

bool oracle_is_bimodule(const OracleGraph& g, std::uint32_t m_mask) {
    if (m_mask == 0) return true;
    std::uint32_t in_k = m_mask & g.k_mask, in_k2 = m_mask & g.k2_mask;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if ((m_mask >> v) & 1u) continue;
        std::uint32_t opposite = g.side[v] == 0 ? in_k2 : in_k;
        std::uint32_t nb = g.adj[v] & opposite;
        if (nb != 0 && nb != opposite) return false;  // v distinguishes M
    }
    return true;
}

// 2K2 in the cross graph avoiding `excluded`, by scanning ordered edge pairs
bool oracle_has_2k2(const OracleGraph& g, std::uint32_t excluded) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.side[v] != 0 || ((excluded >> v) & 1u)) continue;
        for (std::size_t u = 0; u < g.size(); ++u)
            if (!((excluded >> u) & 1u) && g.cross_edge(v, u))
                edges.emplace_back(static_cast<int>(v), static_cast<int>(u));
    }
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            auto [x1, y1] = edges[a];
            auto [x2, y2] = edges[b];
            if (x1 == x2 || y1 == y2) continue;
            if (!g.cross_edge(x1, y2) && !g.cross_edge(x2, y1)) return true;
        }
    return false;
}

OracleGraph oracle_twin_free(const OracleGraph& input) {
    OracleGraph g = input;
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t u = 0; u < g.size() && !again; ++u)
            for (std::size_t v = u + 1; v < g.size() && !again; ++v) {
                if (!g.adjacent(u, v)) continue;
                bool twins = true;
                for (std::size_t w = 0; w < g.size() && twins; ++w)
                    if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) twins = false;
                if (twins) {
                    g = oracle_remove(g, g.labels[u] < g.labels[v] ? static_cast<int>(v)
                                                                   : static_cast<int>(u));
                    again = true;
                }
            }
    }
    return g;
}

}  // namespace

CobipOutcome brute_force_zed_oracle(const CobipGraph& g, std::size_t guard) {
    if (g.size() > guard || g.size() > 31)
        throw std::invalid_argument("brute-force zed oracle guard exceeded");
    CobipOutcome out;
    OracleGraph o = oracle_twin_free(oracle_graph(g));
    std::size_t n = o.size();

    // literal Type II condition
    {
        std::vector<int> comp(n, -1);
        int comps = 0;
        bool comps_ok = true;
        for (std::size_t s = 0; s < n && comps_ok; ++s) {
            if (comp[s] >= 0 || o.adj[s] == 0) continue;
            std::deque<int> queue{static_cast<int>(s)};
            comp[s] = comps;
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (std::size_t u = 0; u < n; ++u)
                    if (o.cross_edge(v, static_cast<int>(u)) && comp[u] < 0) {
                        comp[u] = comps;
                        queue.push_back(static_cast<int>(u));
                    }
            }
            ++comps;
        }
        if (comps <= 2) {
            bool all_diff = true;
            for (int c = 0; c < comps && all_diff; ++c) {
                std::uint32_t excluded = 0;
                for (std::size_t v = 0; v < n; ++v)
                    if (comp[v] != c) excluded |= 1u << v;
                if (oracle_has_2k2(o, excluded)) all_diff = false;
            }
            if (all_diff) {
                out.decision = true;
                out.kind = CobipKind::TypeII;
                return out;
            }
        }
    }

    // literal Type I condition over every subset of size <= 4
    std::vector<int> subset;
    auto try_subsets = [&](auto&& self, std::size_t start) -> bool {
        std::uint32_t mask = 0;
        for (int v : subset) mask |= 1u << v;
        if (oracle_is_zed(o, subset) && oracle_is_bimodule(o, mask) && !oracle_has_2k2(o, mask))
            return true;
        if (subset.size() == 4) return false;
        for (std::size_t v = start; v < n; ++v) {
            subset.push_back(static_cast<int>(v));
            if (self(self, v + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    if (try_subsets(try_subsets, 0)) {
        out.decision = true;
        out.kind = CobipKind::TypeI;
        return out;
    }
    out.decision = false;
    out.kind = CobipKind::None;
    return out;
}

}  // namespace enpg
