#pragma once

// Exact longest-cycle / longest-path search.
//
// Method: decompose into biconnected blocks (every cycle lives inside one
// block), then DFS over simple paths inside each block, anchored at the
// cycle's minimum vertex. Two prunes keep this exact search viable on
// desk-scale graphs:
//   (a) a free counter bound: |path| + #unvisited usable vertices,
//   (b) a structural bound: any completion back to the anchor stays inside
//       the biconnected blocks along the block-tree path from the current
//       endpoint to the anchor in the remaining graph.
// A subset DP over (vertex set, endpoint) states provides an independent
// second route for graphs on at most 15 vertices.

#include <bit>
#include <cstdint>
#include <optional>

#include "fragcol/graph.hpp"

namespace fragcol {

struct CycleWitness {
    std::vector<int> vertices;  // cyclic order; closing edge back to front
    int length() const { return static_cast<int>(vertices.size()); }
};

inline bool validate_cycle_witness(const Graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int v = cyc[i];
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (!g.adjacent(v, cyc[(i + 1) % cyc.size()])) return false;
    }
    return true;
}

// Rotate so the minimum vertex leads, oriented toward the smaller neighbour.
inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    if (cyc.empty()) return cyc;
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() >= 3 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

namespace detail {

// Vertex sets of all biconnected blocks with at least `min_size` vertices,
// each sorted ascending, listed in lexicographic order.
inline std::vector<std::vector<int>> biconnected_blocks(const Graph& g, int min_size) {
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t idx;
    };
    std::vector<Frame> frames;

    auto collect_block = [&](int u, int w) {
        std::vector<int> verts;
        for (;;) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == w) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (static_cast<int>(verts.size()) >= min_size) blocks.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, -1, 0});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nb = g.neighbours(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (w == f.parent) continue;
                if (disc[static_cast<std::size_t>(w)] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    frames.push_back({w, f.v, 0});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                    estack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
                }
            } else {
                int child = f.v;
                frames.pop_back();
                if (frames.empty()) continue;
                int u = frames.back().v;
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(child)]);
                if (low[static_cast<std::size_t>(child)] >= disc[static_cast<std::size_t>(u)])
                    collect_block(u, child);
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// Exact search inside one biconnected block (local ids).
class BlockCycleSearch {
public:
    BlockCycleSearch(const Graph& bg, const std::vector<int>& to_global)
        : g_(bg), to_global_(to_global), n_(bg.vertex_count()) {
        on_path_.assign(static_cast<std::size_t>(n_), 0);
        disc_.assign(static_cast<std::size_t>(n_), 0);
        low_.assign(static_cast<std::size_t>(n_), 0);
        disc_ver_.assign(static_cast<std::size_t>(n_), 0);
        parent_.assign(static_cast<std::size_t>(n_), -1);
        parent_block_.assign(static_cast<std::size_t>(n_), -1);
        vstamp_.assign(static_cast<std::size_t>(n_), 0);
        bstamp_.assign(static_cast<std::size_t>(n_), 0);
        frames_.reserve(static_cast<std::size_t>(n_));
    }

    // Optimise mode: improve (best_len, best_cycle) in place, where best_cycle
    // is in global ids. Target mode (target >= 3): set found_target as soon as
    // a cycle of length >= target exists and stop.
    void run(int& best_len, std::vector<int>& best_cycle, int target, bool& found_target) {
        target_ = target;
        for (s_ = 0; s_ < n_; ++s_) {
            avail_ = n_ - s_ - 1;  // unvisited vertices >= s_, excluding s_ itself
            if (target_ ? (1 + avail_ < target_) : (1 + avail_ <= best_len)) break;
            path_.clear();
            path_.push_back(s_);
            on_path_[static_cast<std::size_t>(s_)] = 1;
            extend(best_len, best_cycle, found_target);
            on_path_[static_cast<std::size_t>(s_)] = 0;
            if (found_target || best_len >= n_) return;
        }
    }

private:
    void extend(int& best_len, std::vector<int>& best_cycle, bool& found_target) {
        const int v = path_.back();
        const int len = static_cast<int>(path_.size());
        if (len >= 3 && g_.adjacent(v, s_)) {
            if (target_) {
                if (len >= target_) {
                    found_target = true;
                    return;
                }
            } else if (len > best_len) {
                best_len = len;
                best_cycle = to_global(canonical_path());
            } else if (len == best_len) {
                std::vector<int> cand = to_global(canonical_path());
                if (cand < best_cycle) best_cycle = std::move(cand);
            }
        }
        if (target_ ? (len + avail_ < target_) : (len + avail_ <= best_len)) return;
        if (len >= 2) {
            int b = structural_bound(v);
            if (target_ ? (b < target_) : (b <= best_len)) return;
        }
        for (int w : g_.neighbours(v)) {
            if (w < s_ || on_path_[static_cast<std::size_t>(w)]) continue;
            path_.push_back(w);
            on_path_[static_cast<std::size_t>(w)] = 1;
            --avail_;
            extend(best_len, best_cycle, found_target);
            ++avail_;
            on_path_[static_cast<std::size_t>(w)] = 0;
            path_.pop_back();
            if (found_target || best_len >= n_) return;
        }
    }

    // Canonical form of the current closed path: starts at s_ (the minimum
    // vertex on it), oriented toward the smaller of its two neighbours.
    std::vector<int> canonical_path() const {
        std::vector<int> cyc = path_;
        if (cyc.size() >= 3 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
        return cyc;
    }

    std::vector<int> to_global(std::vector<int> cyc) const {
        for (int& x : cyc) x = to_global_[static_cast<std::size_t>(x)];
        return cyc;
    }

    bool usable(int x) const {
        return x >= s_ && (!on_path_[static_cast<std::size_t>(x)] || x == path_.back() || x == s_);
    }

    // Upper bound on the order of any cycle extending the current path: the
    // completion is a (path end -> s_) path in the remaining graph H, so its
    // vertices lie in the biconnected blocks along the block-tree path
    // between the two anchors. Returns 0 when s_ is unreachable.
    int structural_bound(int v) {
        ++call_id_;
        ++timer_base_;
        int timer = 0;
        estack_.clear();
        frames_.clear();

        auto discovered = [&](int x) { return disc_ver_[static_cast<std::size_t>(x)] == call_id_; };
        auto set_disc = [&](int x, int t) {
            disc_ver_[static_cast<std::size_t>(x)] = call_id_;
            disc_[static_cast<std::size_t>(x)] = t;
            low_[static_cast<std::size_t>(x)] = t;
        };

        block_ranges_.clear();
        block_verts_.clear();

        auto collect_block = [&](int u, int w) {
            ++block_id_;
            int begin = static_cast<int>(block_verts_.size());
            for (;;) {
                auto [a, b] = estack_.back();
                estack_.pop_back();
                for (int x : {a, b})
                    if (bstamp_[static_cast<std::size_t>(x)] != block_id_) {
                        bstamp_[static_cast<std::size_t>(x)] = block_id_;
                        block_verts_.push_back(x);
                    }
                if (a == u && b == w) break;
            }
            block_ranges_.emplace_back(begin, static_cast<int>(block_verts_.size()));
            return static_cast<int>(block_ranges_.size()) - 1;
        };

        frames_.push_back({v, -1, 0});
        set_disc(v, timer++);
        parent_[static_cast<std::size_t>(v)] = -1;
        while (!frames_.empty()) {
            BFrame& f = frames_.back();
            const auto& nb = g_.neighbours(f.v);
            if (f.idx < nb.size()) {
                int w = nb[f.idx++];
                if (w == f.parent || !usable(w)) continue;
                if (!discovered(w)) {
                    estack_.emplace_back(f.v, w);
                    set_disc(w, timer++);
                    parent_[static_cast<std::size_t>(w)] = f.v;
                    frames_.push_back({w, f.v, 0});
                } else if (disc_[static_cast<std::size_t>(w)] < disc_[static_cast<std::size_t>(f.v)]) {
                    estack_.emplace_back(f.v, w);
                    low_[static_cast<std::size_t>(f.v)] = std::min(
                        low_[static_cast<std::size_t>(f.v)], disc_[static_cast<std::size_t>(w)]);
                }
            } else {
                int child = f.v;
                frames_.pop_back();
                if (frames_.empty()) break;
                int u = frames_.back().v;
                low_[static_cast<std::size_t>(u)] =
                    std::min(low_[static_cast<std::size_t>(u)], low_[static_cast<std::size_t>(child)]);
                if (low_[static_cast<std::size_t>(child)] >= disc_[static_cast<std::size_t>(u)]) {
                    int bid = collect_block(u, child);
                    tag_tree_edges(bid);
                }
            }
        }
        if (!discovered(s_)) return 0;

        // Union of blocks along the tree path s_ -> v.
        int count = 0;
        for (int x = s_; x != v;) {
            int bid = parent_block_[static_cast<std::size_t>(x)];
            auto [b, e] = block_ranges_[static_cast<std::size_t>(bid)];
            for (int i = b; i < e; ++i) {
                int y = block_verts_[static_cast<std::size_t>(i)];
                if (vstamp_[static_cast<std::size_t>(y)] != timer_base_) {
                    vstamp_[static_cast<std::size_t>(y)] = timer_base_;
                    ++count;
                }
            }
            // hop to the block's attachment toward v: the shallowest vertex in
            // the block is on the tree path above every other member
            int next = x;
            for (int i = b; i < e; ++i) {
                int y = block_verts_[static_cast<std::size_t>(i)];
                if (disc_[static_cast<std::size_t>(y)] < disc_[static_cast<std::size_t>(next)]) next = y;
            }
            x = next;
        }
        return static_cast<int>(path_.size()) - 2 + count;
    }

    void tag_tree_edges(int bid) {
        auto [b, e] = block_ranges_[static_cast<std::size_t>(bid)];
        for (int i = b; i < e; ++i) {
            int y = block_verts_[static_cast<std::size_t>(i)];
            int p = parent_[static_cast<std::size_t>(y)];
            if (p >= 0 && bstamp_[static_cast<std::size_t>(p)] == block_id_)
                parent_block_[static_cast<std::size_t>(y)] = bid;
        }
    }

    struct BFrame {
        int v;
        int parent;
        std::size_t idx;
    };

    const Graph& g_;
    const std::vector<int>& to_global_;
    int n_;
    int s_ = 0;
    int target_ = 0;
    int avail_ = 0;
    std::vector<int> path_;
    std::vector<char> on_path_;

    // bound scratch
    std::vector<int> disc_, low_, parent_, parent_block_;
    std::vector<std::uint32_t> disc_ver_, vstamp_;
    std::vector<int> bstamp_;
    std::vector<std::pair<int, int>> estack_;
    std::vector<BFrame> frames_;
    std::vector<int> block_verts_;
    std::vector<std::pair<int, int>> block_ranges_;
    std::uint32_t call_id_ = 0;
    std::uint32_t timer_base_ = 0;
    int block_id_ = 0;
};

}  // namespace detail

// Longest cycle, or nullopt for forests. Deterministic: among maximum-length
// cycles the lexicographically least canonical rotation found wins; blocks
// and start vertices are processed in ascending order.
inline std::optional<CycleWitness> longest_cycle(const Graph& g) {
    auto blocks = detail::biconnected_blocks(g, 3);
    int best_len = 2;  // cycles shorter than 3 do not exist
    std::vector<int> best_cycle;
    bool dummy = false;
    for (const auto& block : blocks) {
        if (static_cast<int>(block.size()) <= best_len) continue;
        auto [bg, id_map] = induced_subgraph(g, VertexSet(block));
        (void)id_map;
        detail::BlockCycleSearch search(bg, block);
        search.run(best_len, best_cycle, 0, dummy);
        if (best_len >= g.vertex_count()) break;
    }
    if (best_cycle.empty()) return std::nullopt;
    return CycleWitness{std::move(best_cycle)};
}

// Length of a longest cycle; 2 for forests (including edgeless graphs).
inline int circumference(const Graph& g) {
    auto w = longest_cycle(g);
    return w ? w->length() : 2;
}

// True iff some cycle has length >= target (target >= 3); stops early.
inline bool has_cycle_at_least(const Graph& g, int target) {
    if (target < 3) throw std::invalid_argument("cycle length target must be >= 3");
    auto blocks = detail::biconnected_blocks(g, target);
    int best_len = 2;
    std::vector<int> best_cycle;
    bool found = false;
    for (const auto& block : blocks) {
        auto [bg, id_map] = induced_subgraph(g, VertexSet(block));
        (void)id_map;
        detail::BlockCycleSearch search(bg, block);
        search.run(best_len, best_cycle, target, found);
        if (found) return true;
    }
    return false;
}

// Maximum number of vertices on a simple path (0 for the empty graph).
inline int longest_path_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    int best = 0;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::vector<int> path, queue;
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(n), 0);
    std::uint32_t stamp = 0;

    // #unvisited vertices reachable from v; stops counting past `need`.
    auto reachable = [&](int v, int need) {
        ++stamp;
        queue.clear();
        queue.push_back(v);
        seen[static_cast<std::size_t>(v)] = stamp;
        int count = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (int w : g.neighbours(queue[qi])) {
                if (seen[static_cast<std::size_t>(w)] == stamp ||
                    on_path[static_cast<std::size_t>(w)])
                    continue;
                seen[static_cast<std::size_t>(w)] = stamp;
                queue.push_back(w);
                if (++count >= need) return count;
            }
        }
        return count;
    };

    auto dfs = [&](auto&& self, int v) -> void {
        best = std::max(best, static_cast<int>(path.size()));
        if (best >= n) return;
        if (static_cast<int>(path.size()) + reachable(v, best - static_cast<int>(path.size()) + 1) <=
            best)
            return;
        for (int w : g.neighbours(v)) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
            if (best >= n) return;
        }
    };

    for (int s = 0; s < n && best < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        path.assign(1, s);
        dfs(dfs, s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

// Independent DP over (vertex subset, endpoint) states; |V| <= 15.
inline int circumference_subset_dp(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 15) throw std::invalid_argument("subset DP limited to 15 vertices");
    if (n < 3) return 2;
    std::vector<std::uint16_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbours(v)) adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << w);

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint16_t> dp(static_cast<std::size_t>(full) + 1);
    int best = 0;
    for (int s = 0; s < n; ++s) {
        const std::uint32_t low_mask = (1u << s) - 1;
        std::fill(dp.begin(), dp.end(), 0);
        dp[1u << s] = static_cast<std::uint16_t>(1u << s);
        for (std::uint32_t mask = 1u << s; mask <= full; ++mask) {
            if ((mask & low_mask) != 0 || !(mask >> s & 1)) continue;
            std::uint16_t ends = dp[mask];
            if (!ends) continue;
            int size = std::popcount(mask);
            for (std::uint16_t rest = ends; rest;) {
                int v = std::countr_zero(rest);
                rest = static_cast<std::uint16_t>(rest & (rest - 1));
                if (size >= 3 && (adj[static_cast<std::size_t>(v)] >> s & 1)) best = std::max(best, size);
                std::uint16_t ext =
                    static_cast<std::uint16_t>(adj[static_cast<std::size_t>(v)] & ~mask & ~low_mask);
                while (ext) {
                    int w = std::countr_zero(ext);
                    ext = static_cast<std::uint16_t>(ext & (ext - 1));
                    dp[mask | (1u << w)] |= static_cast<std::uint16_t>(1u << w);
                }
            }
        }
    }
    return best >= 3 ? best : 2;
}

}  // namespace fragcol
