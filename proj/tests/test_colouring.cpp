#include <catch2/catch_amalgamated.hpp>

#include "fragcol/colouring.hpp"
#include "fragcol/graph.hpp"

using namespace fragcol;

TEST_CASE("colouring basics", "[colouring]") {
    Colouring c{{0, 2, 2, 5}};
    REQUIRE(c.size() == 4);
    REQUIRE(c.at(1) == 2);
    REQUIRE_THROWS_AS(c.at(4), std::out_of_range);
    REQUIRE(c.colours_used() == 3);
}

TEST_CASE("canonicalise relabels by first appearance", "[colouring]") {
    const Colouring c{{7, 3, 7, 9, 3}};
    const Colouring k = canonicalise(c);
    REQUIRE(k.colour == std::vector<int>({0, 1, 0, 2, 1}));
    REQUIRE(canonicalise(k).colour == k.colour);
}

TEST_CASE("colouring serialization round trip", "[colouring]") {
    const Colouring c{{0, 1, 0, 2}};
    const std::string text = to_colouring_text(c);
    REQUIRE(text == "c 3\n0 0\n1 1\n2 0\n3 2\n");
    const Colouring back = parse_colouring(text);
    REQUIRE(back == c);
    REQUIRE(parse_colouring("c 0\n").size() == 0);
}

TEST_CASE("colouring parser is strict", "[colouring]") {
    REQUIRE_THROWS_AS(parse_colouring(""), ParseError);
    REQUIRE_THROWS_AS(parse_colouring("c\n0 0\n"), ParseError);          // header arity
    REQUIRE_THROWS_AS(parse_colouring("c x\n"), ParseError);             // header value
    REQUIRE_THROWS_AS(parse_colouring("c 1\n1 0\n"), ParseError);        // wrong vertex id
    REQUIRE_THROWS_AS(parse_colouring("c 1\n0 0\n0 0\n"), ParseError);   // extra line
    REQUIRE_THROWS_AS(parse_colouring("c 2\n0 0\n"), ParseError);        // declared != used
    REQUIRE_THROWS_AS(parse_colouring("c 1\n0 -1\n"), ParseError);       // negative colour
    REQUIRE_THROWS_AS(parse_colouring("c 1\n0 0 0\n"), ParseError);      // arity
    // comments and blank lines are tolerated
    const Colouring c = parse_colouring("# head\nc 2\n\n0 0\n# mid\n1 1\n");
    REQUIRE(c.colour == std::vector<int>({0, 1}));
}

TEST_CASE("precoloured clique validation", "[colouring]") {
    const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    validate_precoloured_clique(g, PrecolouredClique{});                 // empty ok
    validate_precoloured_clique(g, PrecolouredClique{{2}, {5}});         // single ok
    validate_precoloured_clique(g, PrecolouredClique{{1, 2}, {4, 4}});   // edge ok

    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{0, 2}, {1, 1}}),
                      std::invalid_argument);  // not adjacent
    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{0, 1, 2}, {1, 1, 1}}),
                      std::invalid_argument);  // too many
    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{0}, {1, 2}}),
                      std::invalid_argument);  // length mismatch
    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{7}, {0}}),
                      std::invalid_argument);  // out of range
    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{1}, {-3}}),
                      std::invalid_argument);  // negative colour
    REQUIRE_THROWS_AS(validate_precoloured_clique(g, PrecolouredClique{{1, 1}, {0, 0}}),
                      std::invalid_argument);  // repeated vertex
}
