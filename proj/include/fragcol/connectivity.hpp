#pragma once

// Separations of order <= 2 and 3-connectivity testing.
//
// find_separation prefers the smallest separator order (0: disconnected,
// 1: cut vertex, 2: two-vertex cut), then the lexicographically least
// separator, then the lexicographically least side1 (the separator plus one
// component of the remainder — the one containing the smallest leftover
// vertex). 2-cuts are found by deleting each vertex in turn and scanning the
// remainder for articulation points.

#include <optional>

#include "fragcol/graph.hpp"

namespace fragcol {

struct Separation {
    VertexSet separator;
    VertexSet side1;
    VertexSet side2;
};

inline VertexSet articulation_points(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t idx;
        int children;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, -1, 0, 0});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nb = g.neighbours(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (w == f.parent) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    ++f.children;
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    frames.push_back({w, f.v, 0, 0});
                } else {
                    low[static_cast<std::size_t>(f.v)] = std::min(
                        low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                Frame done = f;
                frames.pop_back();
                if (frames.empty()) {
                    // root rule: articulation iff it has >= 2 DFS children
                    if (done.children >= 2) is_cut[static_cast<std::size_t>(done.v)] = 1;
                } else {
                    int u = frames.back().v;
                    low[static_cast<std::size_t>(u)] = std::min(
                        low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(done.v)]);
                    if (frames.back().parent != -1 &&
                        low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(u)])
                        is_cut[static_cast<std::size_t>(u)] = 1;
                }
            }
        }
    }
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) cuts.push_back(v);
    return VertexSet(cuts);
}

namespace detail {

// Connected components of G - removed, each sorted, ordered by minimum vertex.
inline std::vector<std::vector<int>> components_excluding(const Graph& g,
                                                          const std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)] || removed[static_cast<std::size_t>(s)]) continue;
        queue.clear();
        queue.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : g.neighbours(queue[qi]))
                if (!seen[static_cast<std::size_t>(w)] && !removed[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

inline Separation make_separation(const Graph& g, std::vector<int> sep) {
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : sep) removed[static_cast<std::size_t>(v)] = 1;
    auto comps = components_excluding(g, removed);
    std::vector<int> s1 = comps.front();
    s1.insert(s1.end(), sep.begin(), sep.end());
    std::vector<int> s2 = sep;
    for (std::size_t i = 1; i < comps.size(); ++i)
        s2.insert(s2.end(), comps[i].begin(), comps[i].end());
    return Separation{VertexSet(sep), VertexSet(s1), VertexSet(s2)};
}

}  // namespace detail

// Smallest-order separation of a graph on >= 4 vertices; absent iff G is
// 3-connected. Deterministic as described at the top of this header.
inline std::optional<Separation> find_separation(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 3) throw std::invalid_argument("find_separation requires at least 4 vertices");

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    if (detail::components_excluding(g, removed).size() >= 2)
        return detail::make_separation(g, {});

    VertexSet arts = articulation_points(g);
    if (!arts.empty()) return detail::make_separation(g, {arts[0]});

    for (int a = 0; a < n; ++a) {
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(n) - 1);
        for (int v = 0; v < n; ++v)
            if (v != a) rest.push_back(v);
        auto [h, id_map] = induced_subgraph(g, VertexSet(rest));
        (void)id_map;
        VertexSet arts_h = articulation_points(h);
        if (!arts_h.empty()) {
            int b = rest[static_cast<std::size_t>(arts_h[0])];  // order-preserving relabelling
            std::vector<int> sep{std::min(a, b), std::max(a, b)};
            return detail::make_separation(g, sep);
        }
    }
    return std::nullopt;
}

// Connected, on >= 4 vertices, with no separating set of fewer than 3 vertices.
inline bool is_three_connected(const Graph& g) {
    if (g.vertex_count() <= 3)
        throw std::invalid_argument("3-connectivity is defined here for at least 4 vertices");
    return !find_separation(g).has_value();
}

// Check every Separation invariant, including the |S| = 2 minimality witness
// (an a-b path inside each side).
inline bool validate_separation(const Graph& g, const Separation& sep) {
    const int n = g.vertex_count();
    const VertexSet& s = sep.separator;
    if (s.size() > 2) return false;
    for (int v : sep.side1.unioned(sep.side2))
        if (v < 0 || v >= n) return false;
    if (sep.side1.intersect(sep.side2) != s) return false;
    if (static_cast<int>(sep.side1.unioned(sep.side2).size()) != n) return false;
    if (sep.side1.size() <= s.size() || sep.side2.size() <= s.size()) return false;

    for (int v : sep.side1) {
        if (s.contains(v)) continue;
        for (int w : g.neighbours(v))
            if (sep.side2.contains(w) && !s.contains(w)) return false;
    }

    if (s.size() == 2) {
        int a = s[0], b = s[1];
        for (const VertexSet* side : {&sep.side1, &sep.side2}) {
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::vector<int> queue{a};
            seen[static_cast<std::size_t>(a)] = 1;
            bool reached = false;
            for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi)
                for (int w : g.neighbours(queue[qi])) {
                    if (!side->contains(w) || seen[static_cast<std::size_t>(w)]) continue;
                    if (w == b) {
                        reached = true;
                        break;
                    }
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
            if (!reached) return false;
        }
    }
    return true;
}

}  // namespace fragcol
