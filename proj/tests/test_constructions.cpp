#include "doctest.h"

#include "enpg/constructions.hpp"
#include "testutil.hpp"

using namespace enpg;

TEST_CASE("cycle representations for k = 3..20") {
    for (int k = 3; k <= 20; ++k) {
        auto rep = build_cycle_rep(k);
        auto res = verify_rep(rep, cycle_graph(k), 1);
        CAPTURE(k);
        CAPTURE(res.message);
        CHECK(res.ok);
    }
    CHECK_THROWS_AS(build_cycle_rep(2), std::invalid_argument);
}

TEST_CASE("C3 uses three identical one-edge paths") {
    auto rep = build_cycle_rep(3);
    CHECK(rep.path("0") == rep.path("1"));
    CHECK(rep.path("1") == rep.path("2"));
    CHECK(rep.path("0").edge_length() == 1);
}

TEST_CASE("single vertex tree is one path with one bend") {
    Graph t;
    t.add_vertex("r");
    auto rep = build_tree_rep(t, "r");
    CHECK(rep.size() == 1);
    CHECK(path_bends(rep.path("r")).count == 1);
}

TEST_CASE("star rooted at the center") {
    Graph t;
    t.add_edge("c", "a");
    t.add_edge("c", "b");
    t.add_edge("c", "d");
    auto rep = build_tree_rep(t, "c");
    auto res = verify_rep(rep, t, 1);
    CAPTURE(res.message);
    CHECK(res.ok);
    for (const auto& leaf : {"a", "b", "d"})
        CHECK(path_relation(rep.path("c"), rep.path(leaf)).kind == RelationKind::NonSplitting);
}

TEST_CASE("path P5") {
    Graph t = test::path_graph(5);
    auto res = verify_rep(build_tree_rep(t, "0"), t, 1);
    CAPTURE(res.message);
    CHECK(res.ok);
}

TEST_CASE("tree builder rejects non-trees") {
    CHECK_THROWS_AS(build_tree_rep(cycle_graph(4), "0"), std::invalid_argument);
    Graph forest;
    forest.add_edge("a", "b");
    forest.add_vertex("c");
    CHECK_THROWS_AS(build_tree_rep(forest, "a"), std::invalid_argument);
}

TEST_CASE("random trees: oracle, one bend each, union stays a tree") {
    Rng seeds(2718);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(seeds.below(40));
        Graph t = gen_random_tree(n, seeds.next());
        Label root = t.vertices()[seeds.below(n)];
        TreeTrace trace;
        auto rep = build_tree_rep_traced(t, root, trace);
        auto res = verify_rep(rep, t, 1);
        CAPTURE(n);
        CAPTURE(root);
        CAPTURE(res.message);
        REQUIRE(res.ok);
        for (const auto& [v, p] : rep.paths()) CHECK(path_bends(p).count == 1);
        CHECK(test::union_is_forest(rep));

        // layout invariants: every path bends exactly on its recorded box
        // corner; the endpoint corner stays on the path (the composition moves
        // the endpoints of extended siblings along the shared line, so it is
        // an interior point for those). The overall root is never extended.
        for (const auto& [v, p] : rep.paths()) {
            const auto& pts = p.points();
            bool corner_on_path = false;
            for (const auto& q : pts)
                if (q == trace.endpoint_corner.at(v)) corner_on_path = true;
            CHECK(corner_on_path);
            auto bends = path_bends(p).bend_points;
            REQUIRE(bends.size() == 1);
            CHECK(bends[0] == trace.bend_corner.at(v));
        }
        {
            const auto& pts = rep.path(root).points();
            CHECK((pts.front() == trace.endpoint_corner.at(root) ||
                   pts.back() == trace.endpoint_corner.at(root)));
        }
        // sibling subtree boxes are disjoint
        std::map<Label, std::vector<Label>> children;
        std::map<Label, Label> parent;
        {
            std::vector<Label> stack{root};
            LabelSet seen{root};
            while (!stack.empty()) {
                Label v = stack.back();
                stack.pop_back();
                for (const auto& u : t.neighbors(v))
                    if (seen.insert(u).second) {
                        children[v].push_back(u);
                        parent[u] = v;
                        stack.push_back(u);
                    }
            }
        }
        for (const auto& [v, kids] : children)
            for (std::size_t i = 0; i < kids.size(); ++i)
                for (std::size_t j = i + 1; j < kids.size(); ++j) {
                    const auto& a = trace.subtree_box.at(kids[i]);
                    const auto& b = trace.subtree_box.at(kids[j]);
                    bool disjoint = a.hi.x < b.lo.x || b.hi.x < a.lo.x || a.hi.y < b.lo.y ||
                                    b.hi.y < a.lo.y;
                    CHECK(disjoint);
                }
    }
}

TEST_CASE("pruefer round trip") {
    Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng.below(20));
        Graph t = gen_random_tree(n, rng.next());
        CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
        Graph back = pruefer_decode(pruefer_encode(t));
        CHECK(back == t);
    }
}

TEST_CASE("generators are deterministic per seed") {
    Graph t1 = gen_random_tree(17, 42), t2 = gen_random_tree(17, 42);
    CHECK(t1 == t2);
    Graph c1 = gen_random_cobip(6, 5, CobipModel::Noise, 7);
    Graph c2 = gen_random_cobip(6, 5, CobipModel::Noise, 7);
    CHECK(c1 == c2);
    auto [g1, d1] = gen_ham_decomposable_4regular(10, 3, 2000);
    auto [g2, d2] = gen_ham_decomposable_4regular(10, 3, 2000);
    CHECK(g1 == g2);
    CHECK(d1.cycle_a == d2.cycle_a);
    CHECK(d1.cycle_b == d2.cycle_b);
}

TEST_CASE("difference-model instances are always recognized") {
    Rng seeds(5150);
    for (int trial = 0; trial < 20; ++trial) {
        int kn = 1 + static_cast<int>(seeds.below(10));
        int kn2 = 1 + static_cast<int>(seeds.below(10));
        auto g = gen_random_cobip_compact(kn, kn2, CobipModel::Difference, seeds.next());
        auto out = recognize_cobipartite_compact(g);
        CHECK(out.decision);
        auto rep = build_cobip_rep(out);
        CHECK(verify_rep(rep, g.to_graph(), 1).ok);
    }
}

TEST_CASE("noise-model instances agree with the oracle") {
    Rng seeds(606);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = gen_random_cobip_compact(1 + static_cast<int>(seeds.below(5)),
                                          1 + static_cast<int>(seeds.below(5)),
                                          CobipModel::Noise, seeds.next());
        CHECK(recognize_cobipartite_compact(g).decision ==
              brute_force_zed_oracle(g).decision);
    }
}

TEST_CASE("one cross edge between singleton cliques is representable") {
    auto g = gen_random_cobip_compact(1, 1, CobipModel::Difference, 1);
    auto out = recognize_cobipartite_compact(g);
    CHECK(out.decision);
}

TEST_CASE("two-components instances are always recognized as Type II") {
    Rng seeds(31);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = gen_random_cobip_compact(2 + static_cast<int>(seeds.below(8)),
                                          2 + static_cast<int>(seeds.below(8)),
                                          CobipModel::TwoComponents, seeds.next());
        auto out = recognize_cobipartite_compact(g);
        CHECK(out.decision);
        CHECK(verify_rep(build_cobip_rep(out), g.to_graph(), 1).ok);
    }
}

TEST_CASE("every builder output satisfies the clique union property") {
    std::vector<std::pair<Representation, Graph>> cases;
    for (int k : {3, 4, 5, 8, 11})
        cases.emplace_back(build_cycle_rep(k), cycle_graph(k));
    for (std::uint64_t s : {1ull, 2ull}) {
        Graph t = gen_random_tree(12, s);
        cases.emplace_back(build_tree_rep(t, "0"), t);
    }
    {
        auto g = test::matching_cobip(3);
        auto out = recognize_cobipartite_compact(g);
        REQUIRE(out.decision);
        cases.emplace_back(build_cobip_rep(out), g.to_graph());
    }
    {
        auto g = gen_random_cobip_compact(5, 6, CobipModel::Difference, 9);
        auto out = recognize_cobipartite_compact(g);
        REQUIRE(out.decision);
        cases.emplace_back(build_cobip_rep(out), g.to_graph());
    }
    for (auto& [rep, g] : cases) {
        REQUIRE(verify_rep(rep, g, 1).ok);
        for (const auto& clique : test::maximal_cliques(g)) {
            auto res = clique_union_check(rep, clique);
            CHECK(res.ok);
            CHECK(path_bends(*res.union_path).count <= 2);
        }
    }
}

TEST_CASE("4-regular generator output shape") {
    auto [g, d] = gen_ham_decomposable_4regular(12, 8, 2000);
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 24);
    CHECK(check_regular_diamond_free(g, 4).ok);
}
