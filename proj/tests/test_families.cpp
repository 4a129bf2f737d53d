#include <doctest.h>

#include "kmetric/families.hpp"
#include "kmetric/pair_profile.hpp"
#include "test_support.hpp"

using namespace kmetric;

TEST_CASE("basic families") {
    for (int n : {1, 2, 5, 9}) {
        Graph p = path_graph(n);
        CHECK(p.edge_count() == n - 1);
        if (n >= 2) {
            int leaves = 0;
            for (int v = 0; v < n; ++v) leaves += p.degree(v) == 1;
            CHECK(leaves == 2);
        }
    }
    for (int n : {3, 4, 8}) {
        Graph c = cycle_graph(n);
        CHECK(c.edge_count() == n);
        for (int v = 0; v < n; ++v) CHECK(c.degree(v) == 2);
    }
    CHECK(complete_graph(6).edge_count() == 15);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(empty_graph(4).edge_count() == 0);
}

TEST_CASE("hub families put the hub last") {
    Graph w = wheel_graph(5);
    CHECK(w.n == 6);
    CHECK(w.degree(5) == 5);
    CHECK(w.edge_count() == 10);

    Graph f = fan_graph(4);
    CHECK(f.n == 5);
    CHECK(f.degree(4) == 4);
    CHECK(f.edge_count() == 7);

    Graph s = star_graph(4);
    CHECK(s.n == 5);
    CHECK(s.degree(4) == 4);
    CHECK(s.edge_count() == 4);
}

TEST_CASE("spider") {
    Graph sp = spider_graph({2, 2, 2});
    CHECK(sp.n == 7);
    CHECK(sp.degree(0) == 3);
    int leaves = 0;
    for (int v = 0; v < sp.n; ++v) leaves += sp.degree(v) == 1;
    CHECK(leaves == 3);
    CHECK_THROWS_AS(spider_graph({}), Error);
    CHECK_THROWS_AS(spider_graph({0, 2}), Error);
}

TEST_CASE("join degrees") {
    Graph g = cycle_graph(4), h = path_graph(3);
    Graph j = join_graphs(g, h);
    CHECK(j.n == 7);
    for (int v = 0; v < g.n; ++v) CHECK(j.degree(v) == g.degree(v) + h.n);
    for (int v = 0; v < h.n; ++v) CHECK(j.degree(g.n + v) == h.degree(v) + g.n);
}

TEST_CASE("products") {
    Graph grid = cartesian_product(path_graph(2), path_graph(3));
    CHECK(grid.n == 6);
    CHECK(grid.edge_count() == 7);

    Graph g = testsupport::random_connected_graph(4, 11);
    Graph h = testsupport::random_connected_graph(5, 12);
    int e1 = g.edge_count(), e2 = h.edge_count();
    CHECK(cartesian_product(g, h).edge_count() == e1 * h.n + e2 * g.n);
    CHECK(strong_product(g, h).edge_count() == e1 * h.n + e2 * g.n + 2 * e1 * e2);

    // vertices of a true-twin factor stay true twins in the strong product
    Graph sp = strong_product(complete_graph(2), path_graph(3));
    CHECK(sp.n == 6);
    TwinPartition tp = twin_partition(sp);
    for (int j = 0; j < 3; ++j) {
        bool together = false;
        for (const auto& cls : tp.classes)
            if (std::find(cls.members.begin(), cls.members.end(), j) != cls.members.end() &&
                std::find(cls.members.begin(), cls.members.end(), 3 + j) != cls.members.end())
                together = cls.kind == TwinKind::true_twin;
        CHECK(together);
    }
}

TEST_CASE("figure fixtures") {
    CHECK(figure_fixture(1).n == 5);
    Graph fig2 = figure_fixture(2);
    CHECK(fig2.edges() == std::vector<std::pair<int, int>>{
                              {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 6}});
    CHECK(figure_fixture(3).n == 18);
    CHECK(figure_fixture(3).edge_count() == 19);
    CHECK(figure_fixture(5).edge_count() == 9);
    CHECK(figure_fixture(6).edge_count() == 8);
    CHECK_THROWS_AS(figure_fixture(4), Error);
}

TEST_CASE("random trees are reproducible labelled trees") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 30);
        Graph t = random_tree(n, seed);
        CHECK(t.n == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
        CHECK(t == random_tree(n, seed));
    }
    CHECK(random_tree(12, 1) != random_tree(12, 2));
    // frozen sample guards the decoding against platform drift
    CHECK(random_tree(7, 42).edges() ==
          std::vector<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 5}, {2, 6}, {3, 5}, {5, 6}});
}

TEST_CASE("generalized trees") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = generalized_tree({3, 2, 4, 2}, seed);
        CHECK(g.n == 3 + 1 + 3 + 1);
        CHECK(is_connected(g));
        CHECK(g == generalized_tree({3, 2, 4, 2}, seed));
    }
    // all blocks of size two give an ordinary tree
    Graph t = generalized_tree({2, 2, 2, 2, 2}, 7);
    CHECK(t.edge_count() == t.n - 1);
    CHECK_THROWS_AS(generalized_tree({3}, 0), Error);
    CHECK_THROWS_AS(generalized_tree({3, 1}, 0), Error);
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(cycle_graph(2), Error);
    CHECK_THROWS_AS(wheel_graph(2), Error);
    CHECK_THROWS_AS(complete_bipartite_graph(0, 3), Error);
    CHECK_THROWS_AS(star_graph(0), Error);
}

TEST_CASE("family spec parsing") {
    auto parse = [](std::vector<std::string> toks) {
        std::size_t pos = 0;
        FamilySpec spec = parse_family_spec(toks, pos);
        REQUIRE(pos == toks.size());
        return generate(spec);
    };
    CHECK(parse({"path", "6"}) == path_graph(6));
    CHECK(parse({"wheel", "5"}) == wheel_graph(5));
    CHECK(parse({"spider", "3", "2", "2", "2"}) == spider_graph({2, 2, 2}));
    CHECK(parse({"complete_bipartite", "2", "3"}) == complete_bipartite_graph(2, 3));
    CHECK(parse({"cartesian_product", "path", "2", "path", "3"}) ==
          cartesian_product(path_graph(2), path_graph(3)));
    CHECK(parse({"join", "empty", "2", "empty", "3"}) == complete_bipartite_graph(2, 3));
    CHECK(parse({"random_tree", "8", "5"}) == random_tree(8, 5));
    CHECK(parse({"figure_fixture", "2"}) == figure_fixture(2));
    CHECK(parse({"generalized_tree", "2", "3", "3", "4"}) == generalized_tree({3, 3}, 4));

    std::vector<std::string> bad{"frobnicate", "3"};
    std::size_t pos = 0;
    CHECK_THROWS_AS(generate(parse_family_spec(bad, pos)), Error);
}
