#include "enpg/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace enpg {

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g;
    for (int i = 0; i < k; ++i)
        g.add_edge(std::to_string(i), std::to_string((i + 1) % k));
    return g;
}

namespace {

Representation cycle_rep_rectangle(int k) {
    // Overlapping arcs around a rectangle: consecutive arcs share one edge,
    // every arc has two or three edges, so it carries at most one corner of
    // the rectangle in its interior (sides have length >= 3).
    int perimeter = std::max(k, 12);
    if (perimeter % 2) ++perimeter;
    const int height = 3;
    const int width = perimeter / 2 - height;
    const int long_arcs = perimeter - k;  // arcs of three edges; the rest have two

    auto walk_point = [&](int q) {
        q %= perimeter;
        if (q < width) return GridPoint{q, 0};
        q -= width;
        if (q < height) return GridPoint{width, q};
        q -= height;
        if (q < width) return GridPoint{width - q, height};
        q -= width;
        return GridPoint{0, height - q};
    };

    Representation rep;
    int pos = 0;
    for (int i = 0; i < k; ++i) {
        int len = i < long_arcs ? 3 : 2;
        std::vector<GridPoint> pts;
        for (int j = 0; j <= len; ++j) pts.push_back(walk_point(pos + j));
        rep.set_path(std::to_string(i), LatticePath(pts));
        pos += len - 1;
    }
    return rep;
}

}  // namespace

Representation build_cycle_rep(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Representation rep;
    if (k == 3) {
        for (int i = 0; i < 3; ++i)
            rep.set_path(std::to_string(i), make_path({{0, 0}, {1, 0}}));
        return rep;
    }
    if (k == 4) {
        rep.set_path("0", make_path({{0, 1}, {0, 0}, {1, 0}}));
        rep.set_path("1", make_path({{0, 0}, {1, 0}, {1, 1}}));
        rep.set_path("2", make_path({{1, 0}, {1, 1}, {0, 1}}));
        rep.set_path("3", make_path({{1, 1}, {0, 1}, {0, 0}}));
        return rep;
    }
    if (k == 5) {
        rep.set_path("0", make_path({{0, 0}, {3, 0}}));
        rep.set_path("1", make_path({{2, 0}, {3, 0}, {3, 2}}));
        rep.set_path("2", make_path({{3, 1}, {3, 2}, {1, 2}}));
        rep.set_path("3", make_path({{2, 2}, {0, 2}, {0, 1}}));
        rep.set_path("4", make_path({{0, 2}, {0, 0}, {1, 0}}));
        return rep;
    }
    return cycle_rep_rectangle(k);
}

// ---------------------------------------------------------------------------
// trees

namespace {

struct SubtreeRep {
    std::map<Label, LatticePath> paths;
    // final-frame bookkeeping for the construction invariants
    std::map<Label, BoundingBox> boxes;
    std::map<Label, GridPoint> a_corner;  // endpoint corner of the subtree root path
    std::map<Label, GridPoint> b_corner;  // bend corner
    BoundingBox box;
};

GridPoint transform(const GridPoint& p, int mode, GridPoint shift) {
    // mode 0: translate only; mode 1: rotate (x,y) -> (y,-x) then translate
    GridPoint q = mode == 0 ? p : GridPoint{p.y, -p.x};
    return {q.x + shift.x, q.y + shift.y};
}

void apply_transform(SubtreeRep& rep, int mode, GridPoint shift) {
    for (auto& [v, path] : rep.paths) {
        std::vector<GridPoint> pts;
        for (const auto& p : path.points()) pts.push_back(transform(p, mode, shift));
        path = LatticePath(pts);
    }
    auto fix_box = [&](BoundingBox& b) {
        GridPoint c1 = transform(b.lo, mode, shift), c2 = transform(b.hi, mode, shift);
        b.lo = {std::min(c1.x, c2.x), std::min(c1.y, c2.y)};
        b.hi = {std::max(c1.x, c2.x), std::max(c1.y, c2.y)};
    };
    fix_box(rep.box);
    for (auto& [v, b] : rep.boxes) fix_box(b);
    for (auto& [v, p] : rep.a_corner) p = transform(p, mode, shift);
    for (auto& [v, p] : rep.b_corner) p = transform(p, mode, shift);
}

/// Canonical layout contract: the subtree sits in its bounding box with the
/// root path covering the whole top row plus a downward arm on the right
/// corner; the left column carries no edge of any path.
SubtreeRep layout_subtree(const Graph& t, const Label& r, const Label& parent) {
    std::vector<Label> kids;
    for (const auto& c : t.neighbors(r))
        if (c != parent) kids.push_back(c);

    SubtreeRep out;
    if (kids.empty()) {
        out.paths.emplace(r, make_path({{0, 1}, {1, 1}, {1, 0}}));
        out.box = {{0, 0}, {1, 1}};
        out.boxes[r] = out.box;
        out.a_corner[r] = {0, 1};
        out.b_corner[r] = {1, 1};
        return out;
    }

    std::sort(kids.begin(), kids.end());
    std::vector<SubtreeRep> parts;
    for (const auto& c : kids) parts.push_back(layout_subtree(t, c, r));

    // children side by side, tops on one line, one empty column between boxes
    std::int64_t xoff = 0, ymin = 0;
    std::vector<std::int64_t> left_at;
    for (auto& part : parts) {
        GridPoint shift{xoff - part.box.lo.x, -part.box.hi.y};
        apply_transform(part, 0, shift);
        left_at.push_back(xoff);
        ymin = std::min(ymin, part.box.lo.y);
        xoff = part.box.hi.x + 2;
    }

    // extend every later root path leftward along the shared top line
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const Label& ri = kids[i];
        std::vector<GridPoint> pts;
        for (std::int64_t x = 0; x < left_at[i]; ++x) pts.push_back({x, 0});
        for (const auto& p : parts[i].paths.at(ri).points()) pts.push_back(p);
        parts[i].paths.at(ri) = LatticePath(pts);
    }

    for (auto& part : parts)
        for (auto& [v, path] : part.paths) out.paths.emplace(v, std::move(path));
    for (auto& part : parts) {
        for (auto& [v, b] : part.boxes) out.boxes.emplace(v, b);
        for (auto& [v, p] : part.a_corner) out.a_corner.emplace(v, p);
        for (auto& [v, p] : part.b_corner) out.b_corner.emplace(v, p);
    }

    // root path: along the top of the first child's box, then down the left
    const std::int64_t w1 = parts[0].box.hi.x;  // first box spans [0, w1]
    std::vector<GridPoint> rp;
    for (std::int64_t x = w1; x >= 0; --x) rp.push_back({x, 0});
    for (std::int64_t y = -1; y >= ymin - 1; --y) rp.push_back({0, y});
    out.paths.emplace(r, LatticePath(rp));

    out.box = {{0, ymin - 1}, {xoff - 2, 0}};
    out.boxes[r] = out.box;
    out.a_corner[r] = {0, ymin - 1};
    out.b_corner[r] = {0, 0};

    // rotate to the canonical orientation: left side becomes the top row
    apply_transform(out, 1, {0, 0});
    GridPoint shift{-out.box.lo.x, -out.box.lo.y};
    apply_transform(out, 0, shift);

    // the parent prepends its extension at the endpoint corner, so the root
    // path must start there
    if (!(out.paths.at(r).points().front() == out.a_corner.at(r))) {
        std::vector<GridPoint> pts(out.paths.at(r).points().rbegin(),
                                   out.paths.at(r).points().rend());
        out.paths.at(r) = LatticePath(pts);
    }
    return out;
}

}  // namespace

Representation build_tree_rep_traced(const Graph& t, const Label& root, TreeTrace& trace) {
    if (!t.has_vertex(root)) throw std::invalid_argument("root is not a vertex");
    if (t.edge_count() + 1 != t.vertex_count() || connected_components(t).size() != 1)
        throw std::invalid_argument("input is not a tree");
    SubtreeRep rep = layout_subtree(t, root, root);
    Representation out;
    for (auto& [v, path] : rep.paths) out.set_path(v, std::move(path));
    trace.subtree_box = std::move(rep.boxes);
    trace.endpoint_corner = std::move(rep.a_corner);
    trace.bend_corner = std::move(rep.b_corner);
    return out;
}

Representation build_tree_rep(const Graph& t, const Label& root) {
    TreeTrace trace;
    return build_tree_rep_traced(t, root, trace);
}

// ---------------------------------------------------------------------------
// generators

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

Graph pruefer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int v : seq) degree[v]++;
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1) leaves.insert(i);
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(std::to_string(leaf), std::to_string(v));
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    g.add_edge(std::to_string(a), std::to_string(b));
    return g;
}

std::vector<int> pruefer_encode(const Graph& t) {
    const int n = static_cast<int>(t.vertex_count());
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    std::map<int, std::set<int>> adj;
    for (const auto& [u, v] : t.edges()) {
        adj[std::stoi(u)].insert(std::stoi(v));
        adj[std::stoi(v)].insert(std::stoi(u));
    }
    for (int i = 0; i < n; ++i) adj.try_emplace(i);
    std::set<int> leaves;
    for (const auto& [v, nb] : adj)
        if (nb.size() == 1) leaves.insert(v);
    std::vector<int> seq;
    for (int step = 0; step + 2 < n; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int parent = *adj[leaf].begin();
        seq.push_back(parent);
        adj[parent].erase(leaf);
        adj.erase(leaf);
        if (adj[parent].size() == 1) leaves.insert(parent);
    }
    return seq;
}

Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    Graph g;
    if (n == 1) {
        g.add_vertex("0");
        return g;
    }
    if (n == 2) {
        g.add_edge("0", "1");
        return g;
    }
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (auto& v : seq) v = static_cast<int>(rng.below(n));
    return pruefer_decode(seq);
}

CobipGraph gen_random_cobip_compact(int kn, int kn2, CobipModel model, std::uint64_t seed) {
    if (kn < 1 || kn2 < 1) throw std::invalid_argument("both sides need a vertex");
    Rng rng(seed);
    CobipGraph g;
    for (int i = 0; i < kn; ++i) {
        g.labels.push_back("a" + std::to_string(i));
        g.side.push_back(0);
    }
    for (int i = 0; i < kn2; ++i) {
        g.labels.push_back("b" + std::to_string(i));
        g.side.push_back(1);
    }
    g.cross.assign(g.labels.size(), {});
    auto join = [&](int a, int b) {
        g.cross[a].push_back(kn + b);
        g.cross[kn + b].push_back(a);
    };

    auto difference_block = [&](int a0, int an, int b0, int bn) {
        int t = std::max(1, std::min({an - a0, bn - b0, 6}));
        std::vector<int> la(an - a0), lb(bn - b0);
        for (auto& l : la) l = static_cast<int>(rng.below(t + 1));
        for (auto& l : lb) l = static_cast<int>(rng.below(t + 1));
        for (int i = 0; i < an - a0; ++i)
            for (int j = 0; j < bn - b0; ++j)
                if (la[i] + lb[j] > t) join(a0 + i, b0 + j);
    };

    switch (model) {
        case CobipModel::Difference:
            difference_block(0, kn, 0, kn2);
            break;
        case CobipModel::TwoComponents: {
            int ah = std::max(1, kn / 2), bh = std::max(1, kn2 / 2);
            difference_block(0, ah, 0, bh);
            if (ah < kn && bh < kn2) difference_block(ah, kn, bh, kn2);
            break;
        }
        case CobipModel::Noise:
            for (int i = 0; i < kn; ++i)
                for (int j = 0; j < kn2; ++j)
                    if (rng.below(3) == 0) join(i, j);
            break;
    }
    for (auto& nb : g.cross) std::sort(nb.begin(), nb.end());
    return g;
}

Graph gen_random_cobip(int kn, int kn2, CobipModel model, std::uint64_t seed) {
    CobipGraph c = gen_random_cobip_compact(kn, kn2, model, seed);
    Graph g = c.to_graph();
    LabelSet K, K2;
    for (std::size_t i = 0; i < c.labels.size(); ++i)
        (c.side[i] == 0 ? K : K2).insert(c.labels[i]);
    g.set_annotation("K", K);
    g.set_annotation("K2", K2);
    return g;
}

std::pair<Graph, HamDecomposition> gen_ham_decomposable_4regular(int n, std::uint64_t seed,
                                                                 int max_tries) {
    if (n < 5) throw std::invalid_argument("need at least five vertices");
    Rng rng(seed);
    auto random_cycle = [&]() {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        return perm;
    };
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::vector<int> ca = random_cycle(), cb = random_cycle();
        std::set<std::pair<int, int>> ea;
        auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (!ea.insert(norm(ca[i], ca[(i + 1) % n])).second) ok = false;
        for (int i = 0; i < n && ok; ++i)
            if (!ea.insert(norm(cb[i], cb[(i + 1) % n])).second) ok = false;
        if (!ok) continue;

        Graph g;
        for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
        for (const auto& [a, b] : ea) g.add_edge(std::to_string(a), std::to_string(b));
        if (!check_regular_diamond_free(g, 4).ok) continue;

        HamDecomposition d;
        for (int v : ca) d.cycle_a.push_back(std::to_string(v));
        for (int v : cb) d.cycle_b.push_back(std::to_string(v));
        return {g, d};
    }
    throw std::runtime_error("no Hamiltonian-decomposable instance found within max_tries");
}

}  // namespace enpg
