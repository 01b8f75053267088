#pragma once

// Recursive lower-bound gadget G(k, d) and its exhaustive desk-scale checks.
//
// Construction: G(1, d) is the star with d leaves; G(k, d) consists of d
// disjoint copies of G(k-1, d) plus one new dominating vertex adjacent to
// everything. Canonical labelling: the copies occupy contiguous id ranges in
// order, and the dominating vertex takes the largest id.
//
// Checks: exact circumference <= 2^k, exact longest path order < 2^(k+1),
// and the forcing property that every k-colouring contains a vertex with at
// least d neighbours of its own colour.

#include <atomic>
#include <limits>
#include <optional>
#include <thread>

#include "fragcol/colouring.hpp"
#include "fragcol/cycle_search.hpp"
#include "fragcol/graph.hpp"

namespace fragcol {

struct ExtremalSpec {
    int k = 1;
    int d = 1;
    long long expected_order = 0;
};

// Order recurrence n_1 = d + 1, n_k = d * n_{k-1} + 1, saturated well above
// every cap used here so callers can compare against caps without overflow.
inline long long extremal_order(int k, int d) {
    if (k < 1) throw std::invalid_argument("recursion depth must be >= 1");
    if (d < 1) throw std::invalid_argument("degree target must be >= 1");
    constexpr long long kSaturated = 2000000;
    long long n = static_cast<long long>(d) + 1;
    for (int level = 2; level <= k; ++level) {
        if (n > kSaturated) return kSaturated + 1;
        n = static_cast<long long>(d) * n + 1;
    }
    return std::min(n, kSaturated + 1);
}

inline ExtremalSpec extremal_spec(int k, int d) {
    return ExtremalSpec{k, d, extremal_order(k, d)};
}

inline Graph build_extremal(int k, int d, int cap = 10000) {
    const long long order = extremal_order(k, d);
    if (order > cap) throw std::invalid_argument("size cap exceeded");
    int n = d + 1;
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 0; leaf < d; ++leaf) edges.emplace_back(leaf, d);
    for (int level = 2; level <= k; ++level) {
        const int prev_n = n;
        const std::vector<std::pair<int, int>> prev_edges = std::move(edges);
        n = d * prev_n + 1;
        edges.clear();
        edges.reserve(static_cast<std::size_t>(d) * prev_edges.size() +
                      static_cast<std::size_t>(n) - 1);
        for (int copy = 0; copy < d; ++copy) {
            const int off = copy * prev_n;
            for (const auto& [a, b] : prev_edges) edges.emplace_back(a + off, b + off);
        }
        const int dominator = n - 1;
        for (int u = 0; u < dominator; ++u) edges.emplace_back(u, dominator);
    }
    return Graph(n, edges);
}

struct StructuralReport {
    int k = 0;
    int d = 0;
    int order = 0;
    int edges = 0;
    int circumference_value = 0;
    long long circumference_bound = 0;
    bool circumference_ok = false;
    int longest_path = 0;
    long long longest_path_bound = 0;
    bool longest_path_ok = false;
    bool ok() const { return circumference_ok && longest_path_ok; }
};

// Exact search cap: beyond this order, proving the longest-path bound by
// exhaustion is no longer desk-scale.
inline constexpr int kStructuralSearchCap = 50;

inline StructuralReport verify_structural(int k, int d, int cap = 10000) {
    const Graph g = build_extremal(k, d, cap);
    if (g.vertex_count() > kStructuralSearchCap)
        throw std::invalid_argument("instance too large for exact search");
    StructuralReport r;
    r.k = k;
    r.d = d;
    r.order = g.vertex_count();
    r.edges = g.edge_count();
    r.circumference_value = circumference(g);
    r.longest_path = longest_path_order(g);
    r.circumference_bound = 1LL << std::min(k, 62);
    r.longest_path_bound = 1LL << std::min(k + 1, 62);
    r.circumference_ok = r.circumference_value <= r.circumference_bound;
    r.longest_path_ok = r.longest_path < r.longest_path_bound;
    return r;
}

struct ForcedDegreeResult {
    bool forced = true;
    long long space = 0;  // number of colourings scanned (anchor colour fixed)
    std::optional<Colouring> counterexample;
};

namespace detail {

inline bool has_forced_vertex(const Graph& g, const std::vector<int>& col, int d) {
    const int n = g.vertex_count();
    if (d <= 0) return n > 0;
    for (int v = n; v-- > 0;) {  // highest id first: the likeliest hit is the dominator
        int cnt = 0;
        for (int w : g.neighbours(v)) {
            if (col[static_cast<std::size_t>(w)] == col[static_cast<std::size_t>(v)] &&
                ++cnt >= d)
                break;
        }
        if (cnt >= d) return true;
    }
    return false;
}

}  // namespace detail

// True iff every colouring V -> {0..k-1} of g leaves some vertex with at
// least d same-coloured neighbours. By colour-permutation symmetry the
// highest-id vertex is pinned to colour 0; the remaining colour vectors are
// scanned in lexicographic order (vertex 0 most significant) and the first
// counterexample, if any, is reported. Workers partition the index space
// into ascending ranges, so the reported counterexample is independent of
// the worker count.
inline ForcedDegreeResult forced_degree_exhaustive(const Graph& g, int k, int d, int jobs = 1) {
    if (k < 1) throw std::invalid_argument("colour count must be >= 1");
    const int n = g.vertex_count();
    ForcedDegreeResult res;
    if (n == 0) {
        res.forced = false;
        res.space = 1;
        res.counterexample = Colouring{};
        return res;
    }
    long long space = 1;
    for (int i = 0; i + 1 < n; ++i) {
        space *= k;
        if (space > 100000000LL) throw std::invalid_argument("enumeration infeasible");
    }
    res.space = space;
    if (d <= 0) return res;  // every vertex trivially has d same-coloured neighbours

    const int free_count = n - 1;  // vertex n-1 is the pinned anchor
    const auto decode = [&](long long idx) {
        std::vector<int> col(static_cast<std::size_t>(n), 0);
        long long rem = idx;
        for (int pos = free_count - 1; pos >= 0; --pos) {
            col[static_cast<std::size_t>(pos)] = static_cast<int>(rem % k);
            rem /= k;
        }
        return col;
    };

    std::atomic<long long> first_fail{std::numeric_limits<long long>::max()};
    const auto scan = [&](long long lo, long long hi) {
        if (lo >= hi) return;
        std::vector<int> col = decode(lo);
        for (long long idx = lo; idx < hi; ++idx) {
            if ((idx & 4095) == 0 && first_fail.load(std::memory_order_relaxed) < lo) return;
            if (!detail::has_forced_vertex(g, col, d)) {
                long long cur = first_fail.load(std::memory_order_relaxed);
                while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
                }
                return;  // ascending scan: the first failure in this range is its minimum
            }
            for (int pos = free_count - 1; pos >= 0; --pos) {
                if (++col[static_cast<std::size_t>(pos)] < k) break;
                col[static_cast<std::size_t>(pos)] = 0;
            }
        }
    };

    const int workers = static_cast<int>(std::min<long long>(std::clamp(jobs, 1, 64), space));
    if (workers <= 1 || space < 8192) {
        scan(0, space);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) {
            const long long lo = space * t / workers;
            const long long hi = space * (t + 1) / workers;
            pool.emplace_back(scan, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    const long long found = first_fail.load();
    if (found != std::numeric_limits<long long>::max()) {
        res.forced = false;
        res.counterexample = Colouring{decode(found)};
    }
    return res;
}

inline ForcedDegreeResult check_forced_degree(int k, int d, int jobs = 1, int cap = 10000) {
    const Graph g = build_extremal(k, d, cap);
    return forced_degree_exhaustive(g, k, d, jobs);
}

}  // namespace fragcol
