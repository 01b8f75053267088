#pragma once

// Exact brute-force oracles for small instances (at most 16 vertices):
// minimum colour counts subject to bounded monochromatic component order
// (fragmentation) or bounded monochromatic degree (defective).
//
// Search: vertices are assigned in BFS order from vertex 0; a partial
// assignment is abandoned the moment a component's order (or a vertex's
// monochromatic degree among assigned neighbours) exceeds the budget.
// Symmetry: vertex 0 is fixed to colour 0 and colour x+1 becomes usable only
// after colour x has appeared. Feasibility is tested for c = 1, 2, ... in
// turn; the first feasible c is the answer.

#include <numeric>

#include "fragcol/colouring.hpp"
#include "fragcol/graph.hpp"

namespace fragcol {

struct OracleResult {
    int colours = 0;
    Colouring witness;
};

namespace detail {

inline std::vector<int> bfs_assignment_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t head = order.size();
        order.push_back(s);
        while (head < order.size()) {
            int u = order[head++];
            for (int w : g.neighbours(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
        }
    }
    return order;
}

// Feasibility of a c-colouring with all monochromatic components of order
// <= d, via backtracking over a rollback union-find of colour classes.
class FragmentFeasibility {
public:
    FragmentFeasibility(const Graph& g, int d)
        : g_(g), d_(d), n_(g.vertex_count()), order_(bfs_assignment_order(g)) {}

    bool feasible(int cmax, Colouring& out) {
        cmax_ = cmax;
        colour_.assign(static_cast<std::size_t>(n_), -1);
        parent_.resize(static_cast<std::size_t>(n_));
        size_.assign(static_cast<std::size_t>(n_), 1);
        std::iota(parent_.begin(), parent_.end(), 0);
        if (!place(0, 0)) return false;
        out.colour = colour_;
        return true;
    }

private:
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    bool place(int idx, int used) {
        if (idx == n_) return true;
        const int v = order_[static_cast<std::size_t>(idx)];
        const int limit = std::min(cmax_, used + 1);
        std::vector<std::pair<int, int>> undo;  // (absorbed root, surviving root)
        for (int x = 0; x < limit; ++x) {
            undo.clear();
            bool ok = true;
            for (int w : g_.neighbours(v)) {
                if (colour_[static_cast<std::size_t>(w)] != x) continue;
                int rv = find(v);
                int rw = find(w);
                if (rv == rw) continue;
                if (size_[static_cast<std::size_t>(rv)] < size_[static_cast<std::size_t>(rw)])
                    std::swap(rv, rw);
                parent_[static_cast<std::size_t>(rw)] = rv;
                size_[static_cast<std::size_t>(rv)] += size_[static_cast<std::size_t>(rw)];
                undo.emplace_back(rw, rv);
                if (size_[static_cast<std::size_t>(rv)] > d_) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                colour_[static_cast<std::size_t>(v)] = x;
                if (place(idx + 1, std::max(used, x + 1))) return true;
                colour_[static_cast<std::size_t>(v)] = -1;
            }
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
                size_[static_cast<std::size_t>(it->second)] -=
                    size_[static_cast<std::size_t>(it->first)];
                parent_[static_cast<std::size_t>(it->first)] = it->first;
            }
        }
        return false;
    }

    const Graph& g_;
    int d_;
    int n_;
    int cmax_ = 0;
    std::vector<int> order_;
    std::vector<int> colour_;
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Feasibility of a c-colouring with every monochromatic degree <= d, with
// incrementally maintained mono-degrees over assigned neighbours.
class DefectiveFeasibility {
public:
    DefectiveFeasibility(const Graph& g, int d)
        : g_(g), d_(d), n_(g.vertex_count()), order_(bfs_assignment_order(g)) {}

    bool feasible(int cmax, Colouring& out) {
        cmax_ = cmax;
        colour_.assign(static_cast<std::size_t>(n_), -1);
        mono_.assign(static_cast<std::size_t>(n_), 0);
        if (!place(0, 0)) return false;
        out.colour = colour_;
        return true;
    }

private:
    bool place(int idx, int used) {
        if (idx == n_) return true;
        const int v = order_[static_cast<std::size_t>(idx)];
        const int limit = std::min(cmax_, used + 1);
        for (int x = 0; x < limit; ++x) {
            int cnt = 0;
            bool ok = true;
            for (int w : g_.neighbours(v)) {
                if (colour_[static_cast<std::size_t>(w)] != x) continue;
                ++cnt;
                if (mono_[static_cast<std::size_t>(w)] + 1 > d_) {
                    ok = false;
                    break;
                }
            }
            if (!ok || cnt > d_) continue;
            colour_[static_cast<std::size_t>(v)] = x;
            mono_[static_cast<std::size_t>(v)] = cnt;
            for (int w : g_.neighbours(v))
                if (colour_[static_cast<std::size_t>(w)] == x && w != v)
                    ++mono_[static_cast<std::size_t>(w)];
            if (place(idx + 1, std::max(used, x + 1))) return true;
            for (int w : g_.neighbours(v))
                if (colour_[static_cast<std::size_t>(w)] == x && w != v)
                    --mono_[static_cast<std::size_t>(w)];
            colour_[static_cast<std::size_t>(v)] = -1;
            mono_[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int d_;
    int n_;
    int cmax_ = 0;
    std::vector<int> order_;
    std::vector<int> colour_;
    std::vector<int> mono_;
};

}  // namespace detail

// Smallest c admitting a c-colouring whose monochromatic components all have
// order <= d, plus a witness using exactly that many colours.
inline OracleResult min_fragmentation_colouring(const Graph& g, int d) {
    if (g.vertex_count() > 16) throw std::invalid_argument("oracle limited to 16 vertices");
    if (d < 1) throw std::invalid_argument("component order bound must be >= 1");
    if (g.vertex_count() == 0) return {0, Colouring{}};
    detail::FragmentFeasibility search(g, d);
    for (int c = 1; c <= g.vertex_count(); ++c) {
        Colouring witness;
        if (search.feasible(c, witness)) return {c, std::move(witness)};
    }
    throw std::logic_error("no feasible colouring found");  // unreachable for d >= 1
}

inline int min_fragmentation_colours(const Graph& g, int d) {
    return min_fragmentation_colouring(g, d).colours;
}

// Smallest c admitting a c-colouring with every monochromatic degree <= d.
inline OracleResult min_defective_colouring(const Graph& g, int d) {
    if (g.vertex_count() > 16) throw std::invalid_argument("oracle limited to 16 vertices");
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (g.vertex_count() == 0) return {0, Colouring{}};
    detail::DefectiveFeasibility search(g, d);
    for (int c = 1; c <= g.vertex_count(); ++c) {
        Colouring witness;
        if (search.feasible(c, witness)) return {c, std::move(witness)};
    }
    throw std::logic_error("no feasible colouring found");  // unreachable for d >= 0
}

inline int min_defective_colours(const Graph& g, int d) {
    return min_defective_colouring(g, d).colours;
}

}  // namespace fragcol
