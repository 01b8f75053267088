#pragma once

// Shared fixtures for the test suite: named small graphs, seeded random
// graphs, and a corpus of bounded-circumference instances.

#include <random>
#include <vector>

#include "fragcol/fragcol.hpp"

namespace testutil {

inline fragcol::Graph petersen() {
    return fragcol::Graph(10, {{0, 1},
                               {1, 2},
                               {2, 3},
                               {3, 4},
                               {4, 0},
                               {0, 5},
                               {1, 6},
                               {2, 7},
                               {3, 8},
                               {4, 9},
                               {5, 7},
                               {7, 9},
                               {9, 6},
                               {6, 8},
                               {8, 5}});
}

// Two triangles sharing vertex 0 (bowtie).
inline fragcol::Graph bowtie() {
    return fragcol::Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// Erdos-Renyi-style G(n, p) with a fixed seed; p in [0, 1] scaled by 1000.
inline fragcol::Graph random_graph(int n, int p_permille, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 999);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist(rng) < p_permille) edges.emplace_back(u, v);
    return fragcol::Graph(n, edges);
}

// A deterministic mixed corpus of modest graphs (every family the toolkit
// generates, plus a few irregular shapes).
inline std::vector<fragcol::Graph> small_corpus() {
    std::vector<fragcol::Graph> out;
    for (int m = 3; m <= 12; ++m) out.push_back(fragcol::cycle_graph(m));
    for (int m = 1; m <= 10; ++m) out.push_back(fragcol::path_graph(m));
    for (int m = 1; m <= 7; ++m) out.push_back(fragcol::complete_graph(m));
    for (int d = 1; d <= 6; ++d) out.push_back(fragcol::star_graph(d));
    for (int m = 4; m <= 9; ++m) out.push_back(fragcol::wheel_graph(m));
    out.push_back(fragcol::complete_bipartite_graph(2, 3));
    out.push_back(fragcol::complete_bipartite_graph(3, 3));
    out.push_back(petersen());
    out.push_back(bowtie());
    out.push_back(fragcol::tree_closure(2, 2));
    out.push_back(fragcol::tree_closure(3, 2));
    out.push_back(fragcol::build_extremal(2, 2));
    out.push_back(fragcol::build_extremal(2, 3));
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        out.push_back(fragcol::random_cactus(25, 7, seed));
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        out.push_back(random_graph(9 + static_cast<int>(seed), 350, seed));
    return out;
}

}  // namespace testutil
