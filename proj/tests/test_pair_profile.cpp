#include <doctest.h>

#include "kmetric/pair_profile.hpp"
#include "kmetric/families.hpp"
#include "test_support.hpp"

using namespace kmetric;

namespace {

PairProfile profile_of(const Graph& g) { return pair_profile(all_pairs_distances(g)); }

std::vector<int> distinctive_set(const PairProfile& pp, int x, int y) {
    int p = PairProfile::pair_index(x, y, pp.n);
    return bits::to_vertices(pp.set_of(p), pp.n);
}

}  // namespace

TEST_CASE("distinctive sets on known graphs") {
    PairProfile c4 = profile_of(cycle_graph(4));
    CHECK(distinctive_set(c4, 0, 2) == std::vector<int>{0, 2});
    CHECK(distinctive_set(c4, 1, 3) == std::vector<int>{1, 3});
    CHECK(c4.sizes[PairProfile::pair_index(0, 1, 4)] == 4);

    PairProfile p4 = profile_of(path_graph(4));
    CHECK(distinctive_set(p4, 0, 2) == std::vector<int>{0, 2, 3});

    PairProfile k3 = profile_of(complete_graph(3));
    for (int x = 0; x < 3; ++x)
        for (int y = x + 1; y < 3; ++y)
            CHECK(distinctive_set(k3, x, y) == std::vector<int>{x, y});
}

TEST_CASE("pair indexing round trips") {
    int n = 9;
    int idx = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y, ++idx) {
            CHECK(PairProfile::pair_index(x, y, n) == idx);
            CHECK(PairProfile::pair_at(idx, n) == std::pair<int, int>{x, y});
        }
    CHECK(idx == PairProfile::pair_count(n));
}

TEST_CASE("profile invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = testsupport::random_connected_graph(4 + seed % 6, 500 + seed);
        PairProfile pp = profile_of(g);
        TwinPartition tp = twin_partition(g);
        std::vector<std::vector<int>> cls(g.n);
        for (std::size_t c = 0; c < tp.classes.size(); ++c)
            for (int v : tp.classes[c].members) cls[v] = {static_cast<int>(c)};
        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y) {
                int p = PairProfile::pair_index(x, y, g.n);
                CHECK(pp.distinguishes(p, x));
                CHECK(pp.distinguishes(p, y));
                CHECK(pp.sizes[p] >= 2);
                // twins are exactly the pairs distinguished only by themselves
                CHECK((pp.sizes[p] == 2) == (cls[x] == cls[y]));
            }
    }
}

TEST_CASE("dimensional value on known graphs") {
    CHECK(dimensional_k(profile_of(cycle_graph(4))) == 2);
    CHECK(dimensional_k(profile_of(cycle_graph(7))) == 6);
    CHECK(dimensional_k(profile_of(figure_fixture(5))) == 6);
    CHECK(dimensional_k(profile_of(complete_graph(2))) == 2);
    CHECK(dimensional_k(profile_of(figure_fixture(2))) == 3);
}

TEST_CASE("dimensional value needs two vertices") {
    CHECK_THROWS_AS(profile_of(complete_graph(1)), Error);
}

TEST_CASE("cartesian products are at least 3-dimensional") {
    for (auto [a, b] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
        Graph g = cartesian_product(path_graph(a), path_graph(b));
        CHECK(dimensional_k(profile_of(g)) >= 3);
    }
}

TEST_CASE("forced vertices") {
    PairProfile c4 = profile_of(cycle_graph(4));
    auto f = forced_vertices(c4, 2);
    CHECK(bits::to_vertices(f.data(), 4) == std::vector<int>{0, 1, 2, 3});

    PairProfile fig1 = profile_of(figure_fixture(1));
    CHECK(dimensional_k(fig1) == 2);
    auto f1 = forced_vertices(fig1, 2);
    CHECK(bits::to_vertices(f1.data(), 5) == std::vector<int>{0, 1, 3, 4});

    PairProfile w15 = profile_of(wheel_graph(5));
    CHECK(dimensional_k(w15) == 4);
    auto fw = forced_vertices(w15, 4);
    CHECK(bits::to_vertices(fw.data(), 6) == std::vector<int>{0, 1, 2, 3, 4, 5});

    // below the dimensional value the union is empty
    auto f0 = forced_vertices(fig1, 1);
    CHECK(bits::popcount(f0.data(), fig1.words) == 0);
}

TEST_CASE("twin partition on known graphs") {
    TwinPartition k23 = twin_partition(complete_bipartite_graph(2, 3));
    REQUIRE(k23.classes.size() == 2);
    CHECK(k23.classes[0].members == std::vector<int>{0, 1});
    CHECK(k23.classes[0].kind == TwinKind::false_twin);
    CHECK(k23.classes[1].members == std::vector<int>{2, 3, 4});
    CHECK(k23.classes[1].kind == TwinKind::false_twin);
    CHECK(k23.all_twins());

    TwinPartition fig1 = twin_partition(figure_fixture(1));
    REQUIRE(fig1.classes.size() == 3);
    CHECK(fig1.classes[0].members == std::vector<int>{0, 4});
    CHECK(fig1.classes[1].members == std::vector<int>{1, 3});
    CHECK(fig1.classes[2].members == std::vector<int>{2});
    CHECK(fig1.classes[2].kind == TwinKind::singleton);
    CHECK(fig1.non_singleton_total() == 4);
    CHECK_FALSE(fig1.all_twins());

    TwinPartition k4 = twin_partition(complete_graph(4));
    REQUIRE(k4.classes.size() == 1);
    CHECK(k4.classes[0].members.size() == 4);
    CHECK(k4.classes[0].kind == TwinKind::true_twin);
}

TEST_CASE("generator verification") {
    PairProfile fig2 = profile_of(figure_fixture(2));
    CHECK(is_k_metric_generator(fig2, {0, 2, 4, 5, 6}, 3).ok);

    PairProfile c4 = profile_of(cycle_graph(4));
    GeneratorVerdict bad = is_k_metric_generator(c4, {1, 2, 3}, 2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.witness == std::pair<int, int>{0, 2});
    CHECK(bad.achieved == 1);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = testsupport::random_connected_graph(7, 900 + seed);
        PairProfile pp = profile_of(g);
        std::vector<int> all(g.n);
        std::iota(all.begin(), all.end(), 0);
        CHECK(is_k_metric_generator(pp, all, 2).ok);
    }
}

TEST_CASE("parallel profile matches the serial reference") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = testsupport::random_connected_graph(30, 700 + seed);
        DistanceMatrix dm = all_pairs_distances(g);
        PairProfile a = pair_profile(dm);
        PairProfile b = pair_profile_serial(dm);
        CHECK(a.sets == b.sets);
        CHECK(a.sizes == b.sizes);
    }
}
