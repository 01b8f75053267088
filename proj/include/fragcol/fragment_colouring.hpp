#pragma once

// The recursive colouring procedure: colour a graph of circumference <= k
// with at most floor(3 log2 k) colours so that every monochromatic component
// has order <= k and every monochromatic component meeting the precoloured
// clique C stays inside C.
//
// Branch order (normative):
//   1. |V| <= 2            — colour C as given, others smallest non-clashing
//   2. k = 2 (forest)      — proper 2-colouring honouring C; equal-coloured
//                            C-edge handled by contracting it first
//   3. |V| = 3 (k >= 3)    — one fresh colour for V \ C
//   4. not 3-connected     — split on a minimal separation, S-edge added to
//                            both sides, C-side coloured first, then the
//                            other side with S precoloured; shared palette
//   5. 3-connected         — optionally shrink k to the true circumference,
//                            delete S = V(Q) u C for a longest cycle Q (one
//                            fresh colour on S \ C), recurse on the rest
//                            with k' = max(2, floor(k/2)) and a disjoint
//                            palette
//
// Internal contract: solve() takes C with colours normalised to one of the
// patterns [], [0], [0,0], [0,1] and returns a colouring whose colour set is
// exactly {0, ..., c-1}. Re-entry points with arbitrary clique colours go
// through solve_normalised(), which restores the original colours afterwards
// and maps the remaining palette to the smallest ids avoiding them.

#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <unordered_map>

#include "fragcol/colouring.hpp"
#include "fragcol/connectivity.hpp"
#include "fragcol/cycle_search.hpp"
#include "fragcol/graph.hpp"

namespace fragcol {

struct FragmentOptions {
    bool recompute_circumference = true;  // shrink k to the real circumference at 3-connected nodes
    bool assert_circumference = false;    // throw when the circumference-<=-k precondition is violated
    bool emit_trace = false;
};

enum class Branch { Base, Separation, KReduction, CycleDeletion };

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::Base: return "base";
        case Branch::Separation: return "separation";
        case Branch::KReduction: return "k-reduction";
        case Branch::CycleDeletion: return "cycle-deletion";
    }
    return "?";
}

struct TraceNode {
    Branch branch = Branch::Base;
    int k = 0;
    int n = 0;
    std::vector<int> s_ids;  // separator / deleted set, in root-graph ids
    int q_len = 0;           // longest-cycle length at a cycle-deletion node
    std::vector<TraceNode> children;
};

// One line per node: depth, branch tag, k, |V|, S ids, |Q|.
inline void write_trace(std::ostream& out, const TraceNode& node, int depth = 0) {
    out << depth << " " << branch_name(node.branch) << " k=" << node.k << " n=" << node.n << " S=";
    if (node.s_ids.empty()) {
        out << "-";
    } else {
        for (std::size_t i = 0; i < node.s_ids.size(); ++i)
            out << (i ? "," : "") << node.s_ids[i];
    }
    out << " q=";
    if (node.q_len > 0)
        out << node.q_len;
    else
        out << "-";
    out << "\n";
    for (const auto& child : node.children) write_trace(out, child, depth + 1);
}

namespace detail {

struct NodeResult {
    Colouring col;
    int colours = 0;  // number of distinct colours in col
};

class FragmentSolver {
public:
    explicit FragmentSolver(const FragmentOptions& opts) : opts_(opts) {}

    // Entry point for arbitrary clique colours: normalises them, solves, then
    // restores the originals and moves the rest of the palette onto the
    // smallest colour ids avoiding them.
    NodeResult solve_normalised(const Graph& h, int k, const std::vector<int>& cv,
                                const std::vector<int>& cc_orig, const std::vector<int>& root_of,
                                TraceNode* tn) {
        std::vector<int> cc_norm(cc_orig.size());
        std::vector<int> orig_of;  // original value per normalised id
        for (std::size_t i = 0; i < cc_orig.size(); ++i) {
            auto it = std::find(orig_of.begin(), orig_of.end(), cc_orig[i]);
            if (it == orig_of.end()) {
                cc_norm[i] = static_cast<int>(orig_of.size());
                orig_of.push_back(cc_orig[i]);
            } else {
                cc_norm[i] = static_cast<int>(it - orig_of.begin());
            }
        }
        NodeResult res = solve(h, k, cv, cc_norm, root_of, tn);
        if (cv.empty()) return res;

        const int s = static_cast<int>(orig_of.size());
        std::vector<int> avoid = orig_of;
        std::sort(avoid.begin(), avoid.end());
        std::vector<int> table(static_cast<std::size_t>(res.colours));
        int next = 0;
        for (int x = 0; x < res.colours; ++x) {
            if (x < s) {
                table[static_cast<std::size_t>(x)] = orig_of[static_cast<std::size_t>(x)];
            } else {
                while (std::binary_search(avoid.begin(), avoid.end(), next)) ++next;
                table[static_cast<std::size_t>(x)] = next++;
            }
        }
        for (int& c : res.col.colour) c = table[static_cast<std::size_t>(c)];
        return res;
    }

private:
    // cv ascending; cc normalised to [], [0], [0,0], or [0,1]; size-2 cliques
    // adjacent in h. Returns a colouring using exactly the colours 0..c-1.
    NodeResult solve(const Graph& h, int k, const std::vector<int>& cv, const std::vector<int>& cc,
                     const std::vector<int>& root_of, TraceNode* tn) {
        const int n = h.vertex_count();
        const int s_distinct = cc.empty() ? 0 : *std::max_element(cc.begin(), cc.end()) + 1;

        auto fill_node = [&](TraceNode* node, Branch b, int node_k, std::vector<int> s_ids, int q) {
            if (!node) return;
            node->branch = b;
            node->k = node_k;
            node->n = n;
            node->s_ids = std::move(s_ids);
            node->q_len = q;
        };

        // ---- branch 1: |V| <= 2 ------------------------------------------
        if (n <= 2) {
            Colouring col;
            col.colour.assign(static_cast<std::size_t>(n), -1);
            for (std::size_t i = 0; i < cv.size(); ++i)
                col.colour[static_cast<std::size_t>(cv[i])] = cc[i];
            for (int v = 0; v < n; ++v) {
                if (col.colour[static_cast<std::size_t>(v)] >= 0) continue;
                int x = 0;
                for (bool moved = true; moved;) {
                    moved = false;
                    for (std::size_t i = 0; i < cv.size(); ++i)
                        if (cc[i] == x && h.adjacent(cv[i], v)) {
                            ++x;
                            moved = true;
                        }
                }
                col.colour[static_cast<std::size_t>(v)] = x;
            }
            fill_node(tn, Branch::Base, k, {}, 0);
            const int used = palette_size(col);
            return {std::move(col), used};
        }

        // ---- branch 2: k = 2, forest --------------------------------------
        if (k == 2) {
            fill_node(tn, Branch::Base, k, {}, 0);
            if (cv.size() == 2 && cc[0] == cc[1]) {
                // equal-coloured C-edge: contract it, 2-colour, pull back
                auto [hc, idm] = contract_edge(h, cv[0], cv[1]);
                Colouring inner =
                    two_colour_forest(hc, {idm[static_cast<std::size_t>(cv[0])]}, {0});
                Colouring col;
                col.colour.resize(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    col.colour[static_cast<std::size_t>(v)] =
                        inner.colour[static_cast<std::size_t>(idm[static_cast<std::size_t>(v)])];
                const int used = palette_size(col);
                return {std::move(col), used};
            }
            Colouring col = two_colour_forest(h, cv, cc);
            const int used = palette_size(col);
            return {std::move(col), used};
        }

        // ---- branch 3: |V| = 3, k >= 3 -------------------------------------
        if (n == 3) {
            Colouring col;
            col.colour.assign(static_cast<std::size_t>(n), s_distinct);
            for (std::size_t i = 0; i < cv.size(); ++i)
                col.colour[static_cast<std::size_t>(cv[i])] = cc[i];
            fill_node(tn, Branch::Base, k, {}, 0);
            return {std::move(col), s_distinct + 1};
        }

        // ---- branch 4: minimal separation ----------------------------------
        if (auto sep = find_separation(h)) {
            const VertexSet& s = sep->separator;
            bool c_in_side1 = true;
            for (int v : cv)
                if (!sep->side1.contains(v)) c_in_side1 = false;
            const VertexSet& first = c_in_side1 ? sep->side1 : sep->side2;
            const VertexSet& second = c_in_side1 ? sep->side2 : sep->side1;

            auto build_side = [&](const VertexSet& side) {
                auto [g, idm] = induced_subgraph(h, side);
                if (s.size() == 2)
                    g = add_edge(g, idm[static_cast<std::size_t>(s[0])],
                                 idm[static_cast<std::size_t>(s[1])]);
                std::vector<int> ro(static_cast<std::size_t>(side.size()));
                for (int v : side)
                    ro[static_cast<std::size_t>(idm[static_cast<std::size_t>(v)])] =
                        root_of[static_cast<std::size_t>(v)];
                return std::tuple<Graph, std::vector<int>, std::vector<int>>(
                    std::move(g), std::move(idm), std::move(ro));
            };

            std::vector<int> s_root;
            for (int v : s) s_root.push_back(root_of[static_cast<std::size_t>(v)]);
            fill_node(tn, Branch::Separation, k, std::move(s_root), 0);
            TraceNode* t1 = nullptr;
            TraceNode* t2 = nullptr;
            if (tn) {
                tn->children.resize(2);
                t1 = &tn->children[0];
                t2 = &tn->children[1];
            }

            auto [g1, m1, ro1] = build_side(first);
            std::vector<int> cv1;
            for (int v : cv) cv1.push_back(m1[static_cast<std::size_t>(v)]);
            NodeResult r1 = solve(g1, k, cv1, cc, ro1, t1);

            std::vector<int> scol;
            for (int v : s)
                scol.push_back(
                    r1.col.colour[static_cast<std::size_t>(m1[static_cast<std::size_t>(v)])]);

            auto [g2, m2, ro2] = build_side(second);
            std::vector<int> cv2;
            for (int v : s) cv2.push_back(m2[static_cast<std::size_t>(v)]);
            NodeResult r2 = solve_normalised(g2, k, cv2, scol, ro2, t2);

            Colouring col;
            col.colour.assign(static_cast<std::size_t>(n), 0);
            for (int v : first)
                col.colour[static_cast<std::size_t>(v)] =
                    r1.col.colour[static_cast<std::size_t>(m1[static_cast<std::size_t>(v)])];
            for (int v : second)
                if (!s.contains(v))
                    col.colour[static_cast<std::size_t>(v)] =
                        r2.col.colour[static_cast<std::size_t>(m2[static_cast<std::size_t>(v)])];
            const int used = palette_size(col);
            return {std::move(col), used};
        }

        // ---- branch 5: 3-connected, delete a longest cycle ------------------
        auto qc = longest_cycle(h);
        if (!qc) throw std::logic_error("3-connected graph without a cycle");
        const int q = qc->length();
        if (opts_.assert_circumference && q > k)
            throw std::invalid_argument("circumference exceeds k");

        int k_eff = k;
        TraceNode* dn = tn;
        if (opts_.recompute_circumference) k_eff = std::max(q, 2);
        if (tn && k_eff != k) {
            fill_node(tn, Branch::KReduction, k, {}, 0);
            tn->children.resize(1);
            dn = &tn->children[0];
        }

        std::vector<int> sv = qc->vertices;
        sv.insert(sv.end(), cv.begin(), cv.end());
        std::sort(sv.begin(), sv.end());
        sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
        VertexSet sset(sv);

        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!sset.contains(v)) keep.push_back(v);
        auto [g2, m2] = induced_subgraph(h, VertexSet(keep));
        std::vector<int> ro2(keep.size());
        for (int v : keep)
            ro2[static_cast<std::size_t>(m2[static_cast<std::size_t>(v)])] =
                root_of[static_cast<std::size_t>(v)];

        std::vector<int> s_root;
        for (int v : sv) s_root.push_back(root_of[static_cast<std::size_t>(v)]);
        fill_node(dn, Branch::CycleDeletion, k_eff, std::move(s_root), q);
        TraceNode* ct = nullptr;
        if (dn) {
            dn->children.resize(1);
            ct = &dn->children[0];
        }

        const int k_child = std::max(2, k_eff / 2);
        NodeResult rc = solve(g2, k_child, {}, {}, ro2, ct);

        const int fresh = s_distinct;
        Colouring col;
        col.colour.assign(static_cast<std::size_t>(n), fresh);
        for (std::size_t i = 0; i < cv.size(); ++i)
            col.colour[static_cast<std::size_t>(cv[i])] = cc[i];
        for (int v : keep)
            col.colour[static_cast<std::size_t>(v)] =
                rc.col.colour[static_cast<std::size_t>(m2[static_cast<std::size_t>(v)])] + fresh + 1;
        return {std::move(col), fresh + 1 + rc.colours};
    }

    static int palette_size(const Colouring& col) {
        int mx = -1;
        for (int c : col.colour) mx = std::max(mx, c);
        return mx + 1;
    }

    // Proper 2-colouring of a forest with 0-2 anchor vertices fixed to the
    // given colours (values in {0,1}; two anchors only when adjacent with
    // distinct colours). Unanchored components are rooted at their smallest
    // vertex with colour 0. With assert_circumference on, any cycle (which
    // would contradict k = 2) raises invalid_argument.
    Colouring two_colour_forest(const Graph& h, const std::vector<int>& anchors,
                                const std::vector<int>& acol) const {
        const int n = h.vertex_count();
        Colouring col;
        col.colour.assign(static_cast<std::size_t>(n), -1);
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        std::vector<int> queue;

        auto bfs = [&](int root, int root_colour) {
            col.colour[static_cast<std::size_t>(root)] = root_colour;
            queue.clear();
            queue.push_back(root);
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int u = queue[qi];
                for (int w : h.neighbours(u)) {
                    if (w == parent[static_cast<std::size_t>(u)]) continue;
                    if (col.colour[static_cast<std::size_t>(w)] >= 0) {
                        if (opts_.assert_circumference)
                            throw std::invalid_argument("graph has a cycle but k = 2");
                        continue;
                    }
                    col.colour[static_cast<std::size_t>(w)] =
                        1 - col.colour[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                }
            }
        };

        for (std::size_t i = 0; i < anchors.size(); ++i)
            if (col.colour[static_cast<std::size_t>(anchors[i])] < 0) bfs(anchors[i], acol[i]);
        for (int v = 0; v < n; ++v)
            if (col.colour[static_cast<std::size_t>(v)] < 0) bfs(v, 0);
        return col;
    }

    const FragmentOptions& opts_;
};

}  // namespace detail

struct FragmentResult {
    Colouring colouring;
    std::optional<TraceNode> trace;
};

// Recursive fragmentation colouring. Preconditions: k >= 2, C a precoloured
// clique of at most 2 vertices; the circumference-<=-k precondition is only
// checked when opts.assert_circumference is set (lazily, at the nodes that
// compute cycles).
inline FragmentResult fragment_colour(const Graph& g, int k, const PrecolouredClique& c = {},
                                      const FragmentOptions& opts = {}) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    validate_precoloured_clique(g, c);

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        pairs.emplace_back(c.vertices[i], c.colours[i]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> cv, cc;
    for (auto [v, x] : pairs) {
        cv.push_back(v);
        cc.push_back(x);
    }

    std::vector<int> root_of(static_cast<std::size_t>(g.vertex_count()));
    std::iota(root_of.begin(), root_of.end(), 0);

    detail::FragmentSolver solver(opts);
    TraceNode root;
    TraceNode* tp = opts.emit_trace ? &root : nullptr;
    detail::NodeResult res = solver.solve_normalised(g, k, cv, cc, root_of, tp);

    // Canonical output: C's colours stay fixed; every other colour is
    // relabelled, in order of first appearance, to the smallest ids avoiding
    // C's colours. With an empty C this is plain first-appearance form.
    std::set<int> cset(cc.begin(), cc.end());
    std::unordered_map<int, int> remap;
    int next = 0;
    for (int& x : res.col.colour) {
        if (cset.count(x)) continue;
        auto it = remap.find(x);
        if (it == remap.end()) {
            while (cset.count(next)) ++next;
            it = remap.emplace(x, next++).first;
        }
        x = it->second;
    }

    FragmentResult out;
    out.colouring = std::move(res.col);
    if (opts.emit_trace) out.trace = std::move(root);
    return out;
}

struct CircumferenceColouring {
    Colouring colouring;
    int k_used = 2;
    std::optional<TraceNode> trace;
};

// Theorem-1 entry point: k is the graph's own circumference (floored at 2).
inline CircumferenceColouring colour_bounded_circumference(const Graph& g,
                                                           const FragmentOptions& opts = {}) {
    const int k_used = std::max(circumference(g), 2);
    FragmentResult r = fragment_colour(g, k_used, {}, opts);
    return {std::move(r.colouring), k_used, std::move(r.trace)};
}

}  // namespace fragcol
