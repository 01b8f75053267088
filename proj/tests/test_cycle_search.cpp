#include <catch2/catch_amalgamated.hpp>

#include "fragcol/cycle_search.hpp"
#include "helpers.hpp"

using namespace fragcol;

TEST_CASE("circumference of named graphs", "[cycle]") {
    REQUIRE(circumference(cycle_graph(5)) == 5);
    REQUIRE(circumference(path_graph(4)) == 2);   // forest convention
    REQUIRE(circumference(path_graph(1)) == 2);
    REQUIRE(circumference(Graph(0)) == 2);
    REQUIRE(circumference(complete_graph(4)) == 4);
    REQUIRE(circumference(complete_graph(5)) == 5);
    REQUIRE(circumference(star_graph(5)) == 2);
    REQUIRE(circumference(complete_bipartite_graph(2, 3)) == 4);
    REQUIRE(circumference(wheel_graph(6)) == 6);  // Hamiltonian through the hub
    REQUIRE(circumference(testutil::bowtie()) == 3);
    REQUIRE(circumference(tree_closure(2, 2)) == 4);
}

TEST_CASE("petersen circumference is 9 and no hamilton cycle", "[cycle]") {
    const Graph g = testutil::petersen();
    REQUIRE(circumference(g) == 9);
    REQUIRE(has_cycle_at_least(g, 9));
    REQUIRE_FALSE(has_cycle_at_least(g, 10));
    REQUIRE(circumference_subset_dp(g) == 9);  // independent method agrees
}

TEST_CASE("disjoint unions take the max over components", "[cycle]") {
    // C3 and C5 side by side
    Graph g(8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 3}});
    REQUIRE(circumference(g) == 5);
    REQUIRE(circumference_subset_dp(g) == 5);
}

TEST_CASE("longest cycle witnesses are canonical and valid", "[cycle]") {
    for (const Graph& g : testutil::small_corpus()) {
        const auto w = longest_cycle(g);
        if (!w) {
            REQUIRE(circumference(g) == 2);
            continue;
        }
        REQUIRE(validate_cycle_witness(g, w->vertices));
        REQUIRE(w->length() == circumference(g));
        // canonical: starts at its smallest vertex, oriented toward the
        // smaller of that vertex's two cycle-neighbours
        const auto& vs = w->vertices;
        for (std::size_t i = 1; i < vs.size(); ++i) REQUIRE(vs[0] < vs[i]);
        REQUIRE(vs[1] < vs.back());
        // determinism: a second run returns the identical witness
        const auto w2 = longest_cycle(g);
        REQUIRE(w2);
        REQUIRE(w2->vertices == vs);
    }
}

TEST_CASE("witness validation rejects junk", "[cycle]") {
    const Graph g = cycle_graph(5);
    CycleWitness w;
    w.vertices = {0, 1, 2};
    REQUIRE_FALSE(validate_cycle_witness(g, w.vertices));  // 2-3 not an edge... 0-2 missing
    w.vertices = {0, 1, 2, 3, 4};
    REQUIRE(validate_cycle_witness(g, w.vertices));
    w.vertices = {0, 1, 2, 3, 3};
    REQUIRE_FALSE(validate_cycle_witness(g, w.vertices));  // repeated vertex
    w.vertices = {0, 1};
    REQUIRE_FALSE(validate_cycle_witness(g, w.vertices));  // too short
}

TEST_CASE("two exact methods agree on random graphs", "[cycle]") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 7);  // 4..10
        const Graph g = testutil::random_graph(n, 380, seed * 77 + 5);
        INFO("seed " << seed);
        REQUIRE(circumference(g) == circumference_subset_dp(g));
    }
}

TEST_CASE("subset dp guards", "[cycle]") {
    REQUIRE_THROWS_AS(circumference_subset_dp(complete_graph(16)), std::invalid_argument);
    REQUIRE(circumference_subset_dp(path_graph(2)) == 2);
    REQUIRE(circumference_subset_dp(Graph(1)) == 2);
}

TEST_CASE("cycle length threshold queries", "[cycle]") {
    REQUIRE_THROWS_AS(has_cycle_at_least(cycle_graph(3), 2), std::invalid_argument);
    REQUIRE(has_cycle_at_least(cycle_graph(3), 3));
    REQUIRE_FALSE(has_cycle_at_least(path_graph(5), 3));
    REQUIRE(has_cycle_at_least(wheel_graph(7), 7));
    REQUIRE_FALSE(has_cycle_at_least(wheel_graph(7), 8));
}

TEST_CASE("longest path orders", "[cycle]") {
    REQUIRE(longest_path_order(path_graph(5)) == 5);
    REQUIRE(longest_path_order(cycle_graph(5)) == 5);
    REQUIRE(longest_path_order(complete_graph(4)) == 4);
    REQUIRE(longest_path_order(star_graph(4)) == 3);
    REQUIRE(longest_path_order(Graph(1)) == 1);
    REQUIRE(longest_path_order(Graph(0)) == 0);
    REQUIRE(longest_path_order(build_extremal(2, 2)) == 7);
}
