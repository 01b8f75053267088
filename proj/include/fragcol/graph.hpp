#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, plus the edge-list
// text format and the generator families used throughout the project.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fragcol {

// Thrown for malformed input text (CLI maps this to exit code 1).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Sorted list of distinct vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }
    VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

    bool contains(int v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    VertexSet unioned(const VertexSet& other) const {
        std::vector<int> out;
        out.reserve(ids_.size() + other.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet minus(const VertexSet& other) const {
        std::vector<int> out;
        std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }
    VertexSet intersect(const VertexSet& other) const {
        std::vector<int> out;
        std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    bool operator==(const VertexSet&) const = default;
    // Lexicographic order on the sorted id lists.
    bool operator<(const VertexSet& other) const { return ids_ < other.ids_; }

private:
    static VertexSet from_sorted(std::vector<int> ids) {
        VertexSet s;
        s.ids_ = std::move(ids);
        return s;
    }
    std::vector<int> ids_;
};

// Undirected simple graph: no self-loops, no parallel edges, symmetric
// adjacency, neighbour lists kept sorted ascending.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(check_order(n)), adj_(static_cast<std::size_t>(n)) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
        finalise();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbours(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    friend Graph add_edge(const Graph&, int, int);
    friend std::pair<Graph, std::vector<int>> contract_edge(const Graph&, int, int);

    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be non-negative");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    // Sort each list, drop duplicates, recount m.
    void finalise() {
        m_ = 0;
        for (auto& list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            m_ += static_cast<int>(list.size());
        }
        m_ /= 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Recheck the representation invariants; used by property tests.
inline bool validate(const Graph& g) {
    const int n = g.vertex_count();
    long long half_edges = 0;
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbours(v);
        half_edges += static_cast<long long>(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (w < 0 || w >= n || w == v) return false;
            if (i > 0 && nb[i - 1] >= w) return false;  // sorted, distinct
            if (!g.adjacent(w, v)) return false;        // symmetric
        }
    }
    return half_edges == 2LL * g.edge_count();
}

// ---- operations ------------------------------------------------------------

inline Graph add_edge(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (g.adjacent(u, v)) return g;  // idempotent
    Graph out = g;
    out.add_edge_internal(u, v);
    auto& a = out.adj_[static_cast<std::size_t>(u)];
    auto& b = out.adj_[static_cast<std::size_t>(v)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.m_ += 1;
    return out;
}

// Subgraph induced by `keep`; the returned map sends old ids to new ids
// (order-preserving) and dropped vertices to -1.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    const int n = g.vertex_count();
    std::vector<int> id_map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v : keep) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        id_map[static_cast<std::size_t>(v)] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int w : g.neighbours(v))
            if (v < w && id_map[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(id_map[static_cast<std::size_t>(v)],
                                   id_map[static_cast<std::size_t>(w)]);
    return {Graph(next, edges), std::move(id_map)};
}

// Contract the edge u-v. The merged vertex keeps u's slot; every id above v
// shifts down by one. Returned map sends old ids to new ids (u and v to the
// merged vertex).
inline std::pair<Graph, std::vector<int>> contract_edge(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v)) throw std::invalid_argument("contract_edge requires an edge");
    const int n = g.vertex_count();
    std::vector<int> id_map(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) id_map[static_cast<std::size_t>(w)] = w - (w > v ? 1 : 0);
    id_map[static_cast<std::size_t>(v)] = id_map[static_cast<std::size_t>(u)];
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbours(a)) {
            if (a >= b) continue;
            int x = id_map[static_cast<std::size_t>(a)];
            int y = id_map[static_cast<std::size_t>(b)];
            if (x != y) edges.emplace_back(x, y);  // the contracted edge disappears
        }
    return {Graph(n - 1, edges), std::move(id_map)};
}

// ---- edge-list text format -------------------------------------------------
//
//   # comment lines start with '#'
//   n m
//   u v          (m lines, 0 <= u,v < n, u != v)
//
// The writer emits LF line endings and edges with u < v in lexicographic
// order. The reader accepts edges in any order and collapses duplicates.

namespace detail {
inline bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;  // blank
        if (line[start] == '#') continue;          // comment
        return true;
    }
    return false;
}
inline bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}
}  // namespace detail

inline Graph from_edge_list(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw ParseError("missing header line");
    long long n = 0, m = 0;
    if (!detail::parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError("malformed header line: '" + line + "'");
    if (n > 1000000) throw ParseError("graph order too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_data_line(in, line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
        long long u = 0, v = 0;
        if (!detail::parse_two_ints(line, u, v))
            throw ParseError("malformed edge line: '" + line + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range on line: '" + line + "'");
        if (u == v) throw ParseError("self-loop on line: '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (detail::next_data_line(in, line))
        throw ParseError("unexpected trailing line: '" + line + "'");
    return Graph(static_cast<int>(n), edges);
}

inline Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    return from_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

// ---- generators ------------------------------------------------------------

namespace detail {
inline int check_positive(int x, const char* what) {
    if (x < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
    return x;
}
}  // namespace detail

inline Graph path_graph(int m) {
    detail::check_positive(m, "path order");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    return Graph(m, edges);
}

inline Graph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle order must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
    return Graph(m, edges);
}

inline Graph complete_graph(int m) {
    detail::check_positive(m, "complete graph order");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    return Graph(m, edges);
}

// K_{1,d} with the centre at vertex 0.
inline Graph star_graph(int d) {
    detail::check_positive(d, "star leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= d; ++i) edges.emplace_back(0, i);
    return Graph(d + 1, edges);
}

inline Graph complete_bipartite_graph(int a, int b) {
    detail::check_positive(a, "part size");
    detail::check_positive(b, "part size");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

// Wheel on m vertices: hub 0 joined to the rim cycle 1..m-1.
inline Graph wheel_graph(int m) {
    if (m < 4) throw std::invalid_argument("wheel order must be >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < m; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i == m - 1 ? 1 : i + 1);
    }
    return Graph(m, edges);
}

// Random cactus on exactly m vertices: a tree of blocks grown one block at a
// time, each block either a bridge or a cycle of length in [3, cap]. Every
// cycle lies inside a single block, so the circumference is at most cap.
// Deterministic for a fixed (m, cap, seed).
inline Graph random_cactus(int m, int cap, std::uint64_t seed) {
    detail::check_positive(m, "cactus order");
    if (cap < 2) throw std::invalid_argument("cactus block cap must be >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    while (next_id < m) {
        int attach = static_cast<int>(rng() % static_cast<std::uint64_t>(next_id));
        int remaining = m - next_id;
        bool cycle_block = cap >= 3 && remaining >= 2 && rng() % 3 != 0;
        if (cycle_block) {
            int longest = std::min(cap, remaining + 1);  // cycle order, includes attach
            int len = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(longest - 2));
            int prev = attach;
            for (int i = 0; i < len - 1; ++i) {
                edges.emplace_back(prev, next_id);
                prev = next_id++;
            }
            edges.emplace_back(prev, attach);
        } else {
            edges.emplace_back(attach, next_id++);
        }
    }
    return Graph(m, edges);
}

// Closure of the complete b-ary tree with t levels below the root: vertices
// are labelled in breadth-first order and every ancestor-descendant pair is
// joined. Order (b^(t+1)-1)/(b-1); the root is adjacent to everything.
inline Graph tree_closure(int t, int b) {
    detail::check_positive(t, "tree depth");
    detail::check_positive(b, "branching factor");
    long long order = 0, level = 1;
    for (int i = 0; i <= t; ++i) {
        order += level;
        level *= b;
        if (order > 100000) throw std::invalid_argument("tree closure too large");
    }
    const int n = static_cast<int>(order);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    for (int v = 1; v < n; ++v) parent[static_cast<std::size_t>(v)] = (v - 1) / b;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int a = parent[static_cast<std::size_t>(v)]; a >= 0;
             a = parent[static_cast<std::size_t>(a)])
            edges.emplace_back(a, v);
    return Graph(n, edges);
}

}  // namespace fragcol
