#include <doctest.h>

#include <sstream>

#include "tdpcc/forest.hpp"
#include "tdpcc/gen.hpp"
#include "tdpcc/graph.hpp"
#include "tdpcc/io.hpp"
#include "tdpcc/oracle.hpp"
#include "tdpcc/rng.hpp"
#include "testutil.hpp"

using namespace tdpcc;

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 2}}, {0}), std::invalid_argument);
    Graph g(3, {{2, 1}});  // endpoints normalized
    CHECK(g.edges[0].u == 1);
    CHECK(g.edges[0].v == 2);
}

TEST_CASE("validate_forest verdicts") {
    SUBCASE("chain over a path is fine") {
        Graph g(3, {{1, 2}, {2, 3}});
        EliminationForest f{{0, 1, 2}};
        CHECK(validate_forest(g, f).ok);
    }
    SUBCASE("siblings joined by an edge are rejected, edge is named") {
        Graph g(3, {{1, 2}, {2, 3}, {1, 3}});
        EliminationForest f{{0, 1, 1}};
        auto r = validate_forest(g, f);
        CHECK_FALSE(r.ok);
        CHECK(r.violation.find("{2,3}") != std::string::npos);
    }
    SUBCASE("parent cycles are rejected") {
        Graph g(3, {{1, 2}});
        EliminationForest f{{2, 3, 1}};
        auto r = validate_forest(g, f);
        CHECK_FALSE(r.ok);
        CHECK(r.violation.find("not a forest") != std::string::npos);
    }
    SUBCASE("length mismatch") {
        Graph g(3, {});
        CHECK_FALSE(validate_forest(g, EliminationForest{{0, 0}}).ok);
    }
    SUBCASE("connected graph split across two trees has a crossing edge") {
        Graph g(2, {{1, 2}});
        EliminationForest f{{0, 0}};
        CHECK_FALSE(validate_forest(g, f).ok);
    }
}

TEST_CASE("ancestor_path is root-first") {
    EliminationForest f{{0, 1, 2}};
    CHECK(ancestor_path(f, 3) == std::vector<Vertex>{1, 2});
    CHECK(ancestor_path(f, 1).empty());
    CHECK(ancestor_path(f, 2) == std::vector<Vertex>{1});
}

TEST_CASE("up_edges lists ancestor edges root-first") {
    Graph tri(3, {{1, 2}, {2, 3}, {1, 3}});
    EliminationForest chain{{0, 1, 2}};
    auto ue = up_edges(tri, chain, 3);
    REQUIRE(ue.size() == 2);
    CHECK(ue[0] == Edge{1, 3});
    CHECK(ue[1] == Edge{2, 3});

    Graph lone(1, {});
    CHECK(up_edges(lone, EliminationForest{{0}}, 1).empty());

    auto star = star_graph(3);
    auto f = dfs_forest(star);
    auto leaf = up_edges(star, f, 4);
    REQUIRE(leaf.size() == 1);
    CHECK(leaf[0] == Edge{1, 4});
}

TEST_CASE("subdivide builds the bipartite double cover of edges") {
    SUBCASE("K3 becomes C6") {
        auto g = complete_graph(3);
        auto f = dfs_forest(g);
        auto s = subdivide(g, f);
        CHECK(s.graph.n == 6);
        CHECK(s.graph.m() == 6);
        CHECK(validate_forest(s.graph, s.forest).ok);
        CHECK(bipartition(s.graph).has_value());
        CHECK(s.forest.depth() <= f.depth() + 1);
        // a 6-cycle: one cycle cover on all 6 vertices
        auto st = oracle::enumerate_cycle_covers(s.graph, 6, 1);
        CHECK(st.count == 1);
    }
    SUBCASE("single edge becomes a 2-path") {
        Graph g(2, {{1, 2}});
        EliminationForest f{{0, 1}};
        auto s = subdivide(g, f);
        CHECK(s.graph.n == 3);
        CHECK(s.graph.m() == 2);
        CHECK(s.forest.depth() == 3);
        CHECK(s.origin_edge == std::vector<int>{0});
    }
    SUBCASE("original vertices form one side of the bipartition") {
        Rng rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            auto inst = random_bounded_depth(8, 4, 0.4, 0.6, rng);
            auto s = subdivide(inst.g, inst.f);
            CHECK(validate_forest(s.graph, s.forest).ok);
            auto side = bipartition(s.graph);
            REQUIRE(side.has_value());
            // every edge joins an original and a subdivision vertex
            for (const auto& e : s.graph.edges) CHECK(((e.u <= inst.g.n) != (e.v <= inst.g.n)));
        }
    }
}

TEST_CASE("subdivision preserves cycle-cover counts (oracle both sides)") {
    // all labeled graphs on up to 5 vertices, every (l, k)
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : all_graphs(n)) {
            auto hist = oracle::cover_histogram(g);
            auto s = subdivide(g, dfs_forest(g));
            auto hist2 = oracle::cover_histogram(s.graph);
            for (int l = 0; l <= n; ++l)
                for (int k = 0; k <= n / 3 + 1; ++k) {
                    unsigned long long a = 0, b = 0;
                    for (const auto& [key, cnt] : hist)
                        if (key.first == l && key.second <= k) a += cnt;
                    for (const auto& [key, cnt] : hist2)
                        if (key.first == 2 * l && key.second <= k) b += cnt;
                    CHECK(a == b);
                }
        }
    }
}

TEST_CASE("subdivision equality holds on random 6-vertex graphs") {
    Rng rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        auto inst = random_bounded_depth(6, 4, 0.45, 0.7, rng);
        auto hist = oracle::cover_histogram(inst.g);
        auto s = subdivide(inst.g, inst.f);
        auto hist2 = oracle::cover_histogram(s.graph);
        for (int l = 0; l <= 6; ++l)
            for (int k = 0; k <= 2; ++k) {
                unsigned long long a = 0, b = 0;
                for (const auto& [key, cnt] : hist)
                    if (key.first == l && key.second <= k) a += cnt;
                for (const auto& [key, cnt] : hist2)
                    if (key.first == 2 * l && key.second <= k) b += cnt;
                CHECK(a == b);
            }
    }
}

TEST_CASE("call bound arithmetic: one extra level multiplies terms by four") {
    // rooting everything one level deeper turns each 4^(d-1) into 4^d, so a
    // fresh apex root costs exactly 1 + 4 * old bound
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = random_bounded_depth(9, 4, 0.3, 0.6, rng);
        auto apex = inst.f.parent;
        for (auto& p : apex)
            if (p == 0) p = 10;
        apex.push_back(0);
        EliminationForest deeper{apex};
        CHECK(branch_bound(deeper) == 1 + 4 * branch_bound(inst.f));
    }
}

TEST_CASE("dfs_forest output is always valid") {
    CHECK(dfs_forest(path_graph(4)).depth() == 4);  // DFS from an endpoint
    auto edgeless = Graph(3, {});
    auto f = dfs_forest(edgeless);
    CHECK(f.depth() == 1);
    CHECK(f.roots().size() == 3);
    auto tri = complete_graph(3);
    auto ft = dfs_forest(tri);
    CHECK(ft.depth() == 3);
    CHECK(validate_forest(tri, ft).ok);

    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = random_bounded_depth(10, 5, 0.3, 0.5, rng);
        CHECK(validate_forest(inst.g, dfs_forest(inst.g)).ok);
    }
}

TEST_CASE("components split and relabel") {
    auto two = disjoint_cycles({3, 3});
    auto comps = components(two.g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n == 3);
    CHECK(comps[1].graph.n == 3);
    CHECK(comps[1].to_orig == std::vector<Vertex>{4, 5, 6});

    auto c = components(complete_graph(4));
    REQUIRE(c.size() == 1);
    CHECK(c[0].graph.m() == 6);

    CHECK(components(Graph(0, {})).empty());
}

TEST_CASE("every edge joins a vertex with its ancestor (random valid pairs)") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto inst = random_bounded_depth(9, 4, 0.4, 0.7, rng);
        REQUIRE(validate_forest(inst.g, inst.f).ok);
        for (const auto& e : inst.g.edges) {
            auto pu = ancestor_path(inst.f, e.u);
            auto pv = ancestor_path(inst.f, e.v);
            bool u_anc_v = std::find(pv.begin(), pv.end(), e.u) != pv.end();
            bool v_anc_u = std::find(pu.begin(), pu.end(), e.v) != pu.end();
            CHECK(u_anc_v != v_anc_u);
        }
    }
}

TEST_CASE("graph and forest files round-trip") {
    Rng rng(5);
    auto inst = random_bounded_depth(9, 4, 0.4, 0.7, rng);
    std::stringstream gs;
    write_graph(gs, inst.g);
    auto g2 = read_graph(gs);
    CHECK(g2.n == inst.g.n);
    CHECK(g2.edges == inst.g.edges);

    std::stringstream fs;
    write_forest(fs, inst.f);
    auto f2 = read_forest(fs);
    CHECK(f2.parent == inst.f.parent);
}

TEST_CASE("weighted graph files and comments parse") {
    std::stringstream in("# weighted triangle\np 3 3\ne 1 2 5\ne 2 3 7 # inline comment\ne 1 3 2\n");
    auto g = read_graph(in);
    CHECK(g.weighted());
    CHECK(g.weights == std::vector<long long>{5, 7, 2});
}

TEST_CASE("malformed files are rejected with line info") {
    std::stringstream a("p 3\n");
    CHECK_THROWS_AS(read_graph(a), std::runtime_error);
    std::stringstream b("p 2 1\nx 1 2\n");
    CHECK_THROWS_AS(read_graph(b), std::runtime_error);
    std::stringstream c("p 2 1\ne 1 2\ne 1 2\n");
    CHECK_THROWS_AS(read_graph(c), std::runtime_error);
    std::stringstream d("t 2\n0\n3\n");
    CHECK_THROWS_AS(read_forest(d), std::runtime_error);
}
