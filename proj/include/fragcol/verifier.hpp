#pragma once

// Independent verification of colouring properties. Everything here is
// computed from scratch with its own traversals — deliberately sharing no
// internals with the colouring engine it checks.
//
// Rules checked by verify_fragmentation:
//   R1  every monochromatic component has order <= k
//   R2  every monochromatic component meeting C is contained in C
//   R3  colours used <= floor(3 log2 k) for k >= 3;
//       for k = 2 the budget is max(2, distinct C colours + 1)
//   R4  C's prescribed colours are unchanged

#include <ostream>
#include <set>
#include <sstream>

#include "fragcol/bounds.hpp"
#include "fragcol/colouring.hpp"
#include "fragcol/graph.hpp"

namespace fragcol {

struct VerifyReport {
    int colours_used = 0;
    int max_component_order = 0;
    std::vector<VertexSet> component_partition;
    bool c_containment_ok = true;
    int max_mono_degree = 0;
    std::vector<std::pair<int, VertexSet>> violations;  // (rule id, witness)

    bool passed() const { return violations.empty(); }
    bool rule_passed(int rule) const {
        for (const auto& [r, w] : violations)
            if (r == rule) return false;
        return true;
    }
};

// Connected components of each colour class, ordered by minimum vertex.
inline std::vector<VertexSet> monochromatic_components(const Graph& g, const Colouring& col) {
    const int n = g.vertex_count();
    if (col.size() != n) throw std::invalid_argument("colouring size differs from vertex count");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        const int c = col.colour[static_cast<std::size_t>(s)];
        queue.clear();
        queue.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : g.neighbours(queue[qi]))
                if (!seen[static_cast<std::size_t>(w)] &&
                    col.colour[static_cast<std::size_t>(w)] == c) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        comps.emplace_back(queue);
    }
    return comps;
}

// Number of v's neighbours sharing v's colour.
inline int mono_degree(const Graph& g, const Colouring& col, int v) {
    if (col.size() != g.vertex_count())
        throw std::invalid_argument("colouring size differs from vertex count");
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
    int d = 0;
    for (int w : g.neighbours(v))
        if (col.colour[static_cast<std::size_t>(w)] == col.colour[static_cast<std::size_t>(v)]) ++d;
    return d;
}

// R3's colour budget for the given k and precoloured clique.
inline int colour_budget(int k, const PrecolouredClique& c) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (k >= 3) return theorem1_bound(k);
    std::set<int> distinct(c.colours.begin(), c.colours.end());
    return std::max(2, static_cast<int>(distinct.size()) + 1);
}

inline VerifyReport verify_fragmentation(const Graph& g, const Colouring& col, int k,
                                         const PrecolouredClique& c = {}) {
    if (col.size() != g.vertex_count())
        throw std::invalid_argument("colouring size differs from vertex count");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    validate_precoloured_clique(g, c);

    VerifyReport rep;
    rep.component_partition = monochromatic_components(g, col);
    rep.colours_used = col.colours_used();

    VertexSet cset(c.vertices);
    for (const VertexSet& part : rep.component_partition) {
        rep.max_component_order = std::max(rep.max_component_order, static_cast<int>(part.size()));
        if (static_cast<int>(part.size()) > k) rep.violations.emplace_back(1, part);
        bool meets_c = false;
        for (int v : part)
            if (cset.contains(v)) meets_c = true;
        if (meets_c && !(part.minus(cset).empty())) {
            rep.c_containment_ok = false;
            rep.violations.emplace_back(2, part);
        }
    }

    if (rep.colours_used > colour_budget(k, c)) rep.violations.emplace_back(3, VertexSet{});

    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (col.colour[static_cast<std::size_t>(c.vertices[i])] != c.colours[i])
            rep.violations.emplace_back(4, VertexSet{c.vertices[i]});

    for (int v = 0; v < g.vertex_count(); ++v)
        rep.max_mono_degree = std::max(rep.max_mono_degree, mono_degree(g, col, v));

    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });
    return rep;
}

// One line per rule: "R<i> PASS" or "R<i> FAIL <witness ids>".
inline void write_report(std::ostream& out, const VerifyReport& rep) {
    for (int rule = 1; rule <= 4; ++rule) {
        const VertexSet* witness = nullptr;
        for (const auto& [r, w] : rep.violations)
            if (r == rule) {
                witness = &w;
                break;
            }
        if (!witness) {
            out << "R" << rule << " PASS\n";
        } else {
            out << "R" << rule << " FAIL";
            for (int v : *witness) out << " " << v;
            out << "\n";
        }
    }
}

inline std::string to_report_text(const VerifyReport& rep) {
    std::ostringstream out;
    write_report(out, rep);
    return out.str();
}

}  // namespace fragcol
