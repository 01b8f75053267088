#include <catch2/catch_amalgamated.hpp>

#include "fragcol/oracle.hpp"
#include "fragcol/verifier.hpp"
#include "helpers.hpp"

using namespace fragcol;

TEST_CASE("fragmentation optimum on named graphs", "[oracle]") {
    REQUIRE(min_fragmentation_colours(path_graph(4), 4) == 1);
    REQUIRE(min_fragmentation_colours(complete_graph(4), 1) == 4);
    REQUIRE(min_fragmentation_colours(cycle_graph(5), 2) == 2);
    REQUIRE(min_fragmentation_colours(cycle_graph(5), 5) == 1);
    REQUIRE(min_fragmentation_colours(cycle_graph(5), 1) == 3);  // odd cycle chromatic number
    REQUIRE(min_fragmentation_colours(testutil::petersen(), 1) == 3);
    REQUIRE(min_fragmentation_colours(Graph(0), 1) == 0);
}

TEST_CASE("defective optimum on named graphs", "[oracle]") {
    REQUIRE(min_defective_colours(star_graph(3), 0) == 2);   // proper colouring of a star
    REQUIRE(min_defective_colours(cycle_graph(5), 2) == 1);  // whole cycle has mono degree 2
    REQUIRE(min_defective_colours(cycle_graph(5), 0) == 3);
    REQUIRE(min_defective_colours(complete_graph(4), 1) == 2);
    REQUIRE(min_defective_colours(Graph(3), 0) == 1);
}

TEST_CASE("oracle witnesses achieve their budgets", "[oracle]") {
    for (const Graph& g : {cycle_graph(5), complete_graph(5), testutil::bowtie(),
                           star_graph(4), build_extremal(2, 2), testutil::random_graph(9, 400, 3)}) {
        for (int d = 1; d <= 3; ++d) {
            const OracleResult r = min_fragmentation_colouring(g, d);
            REQUIRE(r.witness.size() == g.vertex_count());
            REQUIRE(r.witness.colours_used() == r.colours);
            int max_order = 0;
            for (const auto& part : monochromatic_components(g, r.witness))
                max_order = std::max(max_order, part.size());
            REQUIRE(max_order <= d);

            const OracleResult dr = min_defective_colouring(g, d - 1);
            REQUIRE(dr.witness.colours_used() == dr.colours);
            for (int v = 0; v < g.vertex_count(); ++v)
                REQUIRE(mono_degree(g, dr.witness, v) <= d - 1);
        }
    }
}

TEST_CASE("guards and degenerate inputs", "[oracle]") {
    REQUIRE_THROWS_AS(min_fragmentation_colours(complete_graph(17), 2), std::invalid_argument);
    REQUIRE_THROWS_AS(min_defective_colours(complete_graph(17), 2), std::invalid_argument);
    REQUIRE_THROWS_AS(min_fragmentation_colours(path_graph(3), 0), std::invalid_argument);
    REQUIRE_THROWS_AS(min_defective_colours(path_graph(3), -1), std::invalid_argument);
    REQUIRE(min_fragmentation_colours(complete_graph(16), 16) == 1);
    REQUIRE(min_defective_colours(path_graph(2), 0) == 2);
}

TEST_CASE("monotone in the budget", "[oracle]") {
    for (const Graph& g : {cycle_graph(7), complete_graph(5), testutil::bowtie(),
                           testutil::random_graph(8, 450, 11)}) {
        for (int d = 1; d < 6; ++d) {
            REQUIRE(min_fragmentation_colours(g, d) >= min_fragmentation_colours(g, d + 1));
            REQUIRE(min_defective_colours(g, d - 1) >= min_defective_colours(g, d));
            // degree <= d holds inside any component of order <= d+1
            REQUIRE(min_defective_colours(g, d) <= min_fragmentation_colours(g, d + 1));
        }
    }
}

TEST_CASE("never worse than the constructive engine", "[oracle]") {
    for (const Graph& g : testutil::small_corpus()) {
        if (g.vertex_count() > 12 || g.vertex_count() == 0) continue;
        const int k = std::max(circumference(g), 2);
        const auto engine = fragment_colour(g, k);
        const int best = min_fragmentation_colours(g, k);
        INFO("n=" << g.vertex_count() << " k=" << k);
        REQUIRE(best <= engine.colouring.colours_used());
    }
}
