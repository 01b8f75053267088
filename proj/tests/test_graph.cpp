#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fragcol/graph.hpp"
#include "helpers.hpp"

using fragcol::Graph;
using fragcol::VertexSet;

TEST_CASE("vertex set basics", "[graph]") {
    VertexSet s({3, 1, 2, 1});
    REQUIRE(s.size() == 3);
    REQUIRE(s.contains(1));
    REQUIRE(s.contains(3));
    REQUIRE_FALSE(s.contains(0));
    REQUIRE(s.ids() == std::vector<int>({1, 2, 3}));

    VertexSet t({2, 5});
    REQUIRE(s.unioned(t).ids() == std::vector<int>({1, 2, 3, 5}));
    REQUIRE(s.minus(t).ids() == std::vector<int>({1, 3}));
    REQUIRE(s.intersect(t).ids() == std::vector<int>({2}));
    REQUIRE(VertexSet{}.empty());
}

TEST_CASE("graph construction validates", "[graph]") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(g.adjacent(1, 2));
    REQUIRE_FALSE(g.adjacent(0, 3));
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.neighbours(1) == std::vector<int>({0, 2}));

    REQUIRE_THROWS_AS(Graph(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);   // self-loop
    REQUIRE_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);   // out of range
    REQUIRE(Graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);  // duplicates collapse
}

TEST_CASE("edge list round trip", "[graph]") {
    const Graph g = testutil::petersen();
    const std::string text = fragcol::to_edge_list(g);
    const Graph h = fragcol::from_edge_list(text);
    REQUIRE(g == h);
    // writer emits "n m" then edges with u < v in lexicographic order
    std::istringstream in(text);
    std::string first;
    std::getline(in, first);
    REQUIRE(first == "10 15");
    int pu = -1, pv = -1;
    int u, v;
    while (in >> u >> v) {
        REQUIRE(u < v);
        REQUIRE((u > pu || (u == pu && v > pv)));
        pu = u;
        pv = v;
    }
}

TEST_CASE("edge list parser is strict", "[graph]") {
    using fragcol::from_edge_list;
    using fragcol::ParseError;
    REQUIRE_THROWS_AS(from_edge_list(""), ParseError);
    REQUIRE_THROWS_AS(from_edge_list("2\n"), ParseError);                 // missing m
    REQUIRE_THROWS_AS(from_edge_list("2 1\n"), ParseError);               // missing edge
    REQUIRE_THROWS_AS(from_edge_list("2 1\n0 1\n0 1\n"), ParseError);     // extra line
    REQUIRE_THROWS_AS(from_edge_list("2 1\n0 x\n"), ParseError);          // non-integer
    REQUIRE(from_edge_list("2 2\n0 1\n1 0\n").edge_count() == 1);  // duplicates collapse
    REQUIRE_THROWS_AS(from_edge_list("2 1\n0 0\n"), ParseError);  // loop
    REQUIRE_THROWS_AS(from_edge_list("2 1\n0 5\n"), ParseError);  // range

    const Graph g = from_edge_list("# comment\n\n3 2\n# mid\n0 1\n\n1 2\n");
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 2);
}

TEST_CASE("add edge and contraction", "[graph]") {
    const Graph p3 = fragcol::path_graph(3);
    const Graph g = fragcol::add_edge(p3, 0, 2);
    REQUIRE(g.edge_count() == 3);
    REQUIRE(fragcol::add_edge(g, 0, 2) == g);  // idempotent

    const auto [c, idm] = fragcol::contract_edge(fragcol::path_graph(4), 1, 2);
    REQUIRE(c.vertex_count() == 3);
    REQUIRE(c.edge_count() == 2);
    // merged vertex keeps u's slot; ids above v shift down
    REQUIRE(idm[0] == 0);
    REQUIRE(idm[1] == 1);
    REQUIRE(idm[2] == 1);
    REQUIRE(idm[3] == 2);
}

TEST_CASE("induced subgraph keeps order and maps ids", "[graph]") {
    const Graph g = testutil::bowtie();
    const auto [h, idm] = fragcol::induced_subgraph(g, VertexSet({0, 3, 4}));
    REQUIRE(h.vertex_count() == 3);
    REQUIRE(h.edge_count() == 3);  // triangle 0-3-4
    REQUIRE(idm[0] == 0);
    REQUIRE(idm[1] == -1);
    REQUIRE(idm[3] == 1);
    REQUIRE(idm[4] == 2);

    // identity induction
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    const auto [full, idm2] = fragcol::induced_subgraph(g, VertexSet(all));
    REQUIRE(full == g);
}

TEST_CASE("named generators", "[graph]") {
    REQUIRE(fragcol::cycle_graph(5).edge_count() == 5);
    REQUIRE(fragcol::path_graph(1).edge_count() == 0);
    REQUIRE(fragcol::complete_graph(5).edge_count() == 10);
    REQUIRE(fragcol::star_graph(3).vertex_count() == 4);
    REQUIRE(fragcol::star_graph(3).edge_count() == 3);
    REQUIRE(fragcol::star_graph(3).degree(0) == 3);  // centre first for the star family
    REQUIRE(fragcol::complete_bipartite_graph(2, 3).edge_count() == 6);
    REQUIRE(fragcol::wheel_graph(6).vertex_count() == 6);  // hub + 5-cycle rim
    REQUIRE(fragcol::wheel_graph(6).edge_count() == 10);
    REQUIRE(fragcol::wheel_graph(6).degree(0) == 5);

    REQUIRE_THROWS_AS(fragcol::cycle_graph(2), std::invalid_argument);
    REQUIRE_THROWS_AS(fragcol::path_graph(0), std::invalid_argument);
    REQUIRE_THROWS_AS(fragcol::wheel_graph(3), std::invalid_argument);
}

TEST_CASE("tree closure shape", "[graph]") {
    const Graph g = fragcol::tree_closure(2, 2);
    REQUIRE(g.vertex_count() == 7);
    REQUIRE(g.degree(0) == 6);  // root adjacent to all others
    REQUIRE(fragcol::tree_closure(3, 2).vertex_count() == 15);
    // every vertex is adjacent to all its ancestors: depth-2 vertices have
    // degree >= 2 (parent and root)
    for (int v = 3; v < 7; ++v) REQUIRE(g.degree(v) == 2);
}

TEST_CASE("random cactus is deterministic and bounded", "[graph]") {
    const Graph a = fragcol::random_cactus(30, 7, 11);
    const Graph b = fragcol::random_cactus(30, 7, 11);
    REQUIRE(a == b);
    const Graph c = fragcol::random_cactus(30, 7, 12);
    REQUIRE_FALSE(a == c);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = fragcol::random_cactus(40, 9, seed);
        REQUIRE(g.vertex_count() <= 40);
        REQUIRE(fragcol::validate(g));
        // connected: one BFS reaches everything
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 0;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++count;
            for (int w : g.neighbours(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        REQUIRE(count == g.vertex_count());
    }
}
