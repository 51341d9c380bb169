#include "enpg/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace enpg {

void Graph::add_vertex(const Label& v) {
    adj_.try_emplace(v);
}

void Graph::add_edge(const Label& u, const Label& v) {
    if (u == v) throw std::invalid_argument("loop edge at '" + u + "'");
    add_vertex(u);
    add_vertex(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

bool Graph::has_edge(const Label& u, const Label& v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj_) twice += nb.size();
    return twice / 2;
}

std::vector<Label> Graph::vertices() const {
    std::vector<Label> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
}

std::vector<std::pair<Label, Label>> Graph::edges() const {
    std::vector<std::pair<Label, Label>> out;
    for (const auto& [v, nb] : adj_)
        for (const auto& w : nb)
            if (v < w) out.emplace_back(v, w);
    return out;
}

const LabelSet& Graph::neighbors(const Label& v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw std::invalid_argument("unknown vertex '" + v + "'");
    return it->second;
}

Graph Graph::induced(const LabelSet& verts) const {
    Graph h;
    for (const auto& v : verts) {
        if (!has_vertex(v)) throw std::invalid_argument("unknown vertex '" + v + "'");
        h.add_vertex(v);
    }
    for (const auto& v : verts)
        for (const auto& w : neighbors(v))
            if (v < w && verts.count(w)) h.add_edge(v, w);
    return h;
}

void Graph::set_annotation(const std::string& name, const LabelSet& verts) {
    annotations_[name] = verts;
}

const LabelSet* Graph::annotation(const std::string& name) const {
    auto it = annotations_.find(name);
    return it == annotations_.end() ? nullptr : &it->second;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> comps;
    LabelSet seen;
    for (const auto& start : g.vertices()) {
        if (seen.count(start)) continue;
        LabelSet comp;
        std::deque<Label> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            Label v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (const auto& w : g.neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        comps.push_back(g.induced(comp));
    }
    return comps;
}

std::pair<Graph, std::map<Label, Label>> remove_twins(const Graph& g) {
    // Partition refinement with closed neighborhoods: start from one block and
    // split every block by N[v] for each pivot v. Blocks of the result are
    // exactly the classes of equal closed neighborhood, i.e. twin classes
    // (plus singletons). Adjacent twins are precisely pairs with N[u] = N[v].
    std::vector<Label> verts = g.vertices();
    std::vector<std::vector<Label>> blocks{verts};
    for (const auto& pivot : verts) {
        LabelSet closed = g.neighbors(pivot);
        closed.insert(pivot);
        std::vector<std::vector<Label>> next;
        for (auto& block : blocks) {
            std::vector<Label> in, out;
            for (auto& v : block)
                (closed.count(v) ? in : out).push_back(v);
            if (!in.empty()) next.push_back(std::move(in));
            if (!out.empty()) next.push_back(std::move(out));
        }
        blocks = std::move(next);
    }

    std::map<Label, Label> removed_to_kept;
    LabelSet keep;
    for (const auto& block : blocks) {
        const Label& rep = *std::min_element(block.begin(), block.end());
        keep.insert(rep);
        for (const auto& v : block)
            if (v != rep) removed_to_kept[v] = rep;
    }
    Graph reduced = g.induced(keep);
    return {reduced, removed_to_kept};
}

std::optional<CoBipartition> find_cobipartition(const Graph& g) {
    // 2-color the complement with BFS; in every complement component the
    // smallest vertex is colored K.
    std::vector<Label> verts = g.vertices();
    std::map<Label, int> color;
    CoBipartition part;
    for (const auto& start : verts) {
        if (color.count(start)) continue;
        color[start] = 0;
        std::deque<Label> queue{start};
        while (!queue.empty()) {
            Label v = queue.front();
            queue.pop_front();
            const LabelSet& nb = g.neighbors(v);
            for (const auto& w : verts) {
                if (w == v || nb.count(w)) continue;  // complement edge v-w
                auto it = color.find(w);
                if (it == color.end()) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (it->second == color[v]) {
                    return std::nullopt;  // odd cycle in the complement
                }
            }
        }
    }
    for (const auto& v : verts)
        (color[v] == 0 ? part.K : part.K_prime).insert(v);
    if (part.K_prime.empty() && g.vertex_count() >= 2) {
        // a clique 2-colors trivially; keep both parts non-empty
        Label smallest = *part.K.begin();
        part.K_prime = part.K;
        part.K_prime.erase(smallest);
        part.K = {smallest};
    }
    return part;
}

std::optional<SplitPartition> find_split_partition(const Graph& g) {
    // Degree-sequence criterion: sort degrees descending, take the largest k
    // with d_k >= k-1; split iff sum of the top k degrees equals
    // k(k-1) + sum of the rest. The top-k vertices then form the clique.
    std::vector<Label> verts = g.vertices();
    std::size_t n = verts.size();
    if (n == 0) return SplitPartition{};
    std::stable_sort(verts.begin(), verts.end(), [&](const Label& a, const Label& b) {
        return g.degree(a) > g.degree(b);
    });
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(verts[i]) >= i) k = i + 1;  // d_{i+1} >= (i+1)-1

    long long top = 0, rest = 0;
    for (std::size_t i = 0; i < n; ++i)
        (i < k ? top : rest) += static_cast<long long>(g.degree(verts[i]));
    if (top != static_cast<long long>(k) * (static_cast<long long>(k) - 1) + rest)
        return std::nullopt;

    SplitPartition part;
    for (std::size_t i = 0; i < n; ++i)
        (i < k ? part.K : part.S).insert(verts[i]);

    // normalize: no vertex of S may see all of K
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& s : part.S) {
            bool all = true;
            for (const auto& v : part.K)
                if (!g.has_edge(s, v)) { all = false; break; }
            if (all) {
                part.K.insert(s);
                part.S.erase(s);
                moved = true;
                break;
            }
        }
    }

    // the extracted parts must be a clique and a stable set
    for (const auto& u : part.K)
        for (const auto& v : part.K)
            if (u < v && !g.has_edge(u, v))
                throw std::logic_error("degree-sequence split extraction produced a non-clique");
    for (const auto& u : part.S)
        for (const auto& v : part.S)
            if (u < v && g.has_edge(u, v))
                throw std::logic_error("degree-sequence split extraction produced a non-stable set");
    return part;
}

Graph line_graph(const Graph& g) {
    auto edge_label = [](const Label& u, const Label& v) {
        return "e:" + std::min(u, v) + "-" + std::max(u, v);
    };
    Graph h;
    auto es = g.edges();
    for (const auto& [u, v] : es) h.add_vertex(edge_label(u, v));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                h.add_edge(edge_label(a, b), edge_label(c, d));
        }
    return h;
}

RegularityCheck check_regular_diamond_free(const Graph& g, std::size_t d) {
    RegularityCheck res;
    for (const auto& v : g.vertices())
        if (g.degree(v) != d) {
            res.bad_degree_vertex = v;
            return res;
        }
    // induced diamond = 4 vertices spanning exactly 5 edges
    std::vector<Label> verts = g.vertices();
    std::size_t n = verts.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = c + 1; e < n; ++e) {
                    const Label* q[4] = {&verts[a], &verts[b], &verts[c], &verts[e]};
                    int cnt = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(*q[i], *q[j])) ++cnt;
                    if (cnt == 5) {
                        res.diamond = {*q[0], *q[1], *q[2], *q[3]};
                        return res;
                    }
                }
    res.ok = true;
    return res;
}

Graph complement_graph(const Graph& g) {
    Graph h;
    auto verts = g.vertices();
    for (const auto& v : verts) h.add_vertex(v);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) h.add_edge(verts[i], verts[j]);
    return h;
}

}  // namespace enpg
