#pragma once

// Colouring and precoloured-clique value types, canonical relabelling, and
// the colouring text format:
//
//   c <num_colours>
//   <vertex> <colour>     (one line per vertex, ascending vertex id)

#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fragcol/graph.hpp"

namespace fragcol {

struct Colouring {
    std::vector<int> colour;  // index = vertex id; total on the host graph

    int size() const { return static_cast<int>(colour.size()); }
    int at(int v) const {
        if (v < 0 || v >= size()) throw std::out_of_range("vertex id out of range");
        return colour[static_cast<std::size_t>(v)];
    }
    int colours_used() const {
        std::unordered_set<int> seen(colour.begin(), colour.end());
        return static_cast<int>(seen.size());
    }
    bool operator==(const Colouring&) const = default;
};

// The precoloured clique C: at most two pairwise-adjacent vertices with
// fixed colours.
struct PrecolouredClique {
    std::vector<int> vertices;
    std::vector<int> colours;

    int size() const { return static_cast<int>(vertices.size()); }
    bool empty() const { return vertices.empty(); }
};

inline void validate_precoloured_clique(const Graph& g, const PrecolouredClique& c) {
    if (c.vertices.size() != c.colours.size())
        throw std::invalid_argument("precoloured clique: vertex/colour lists differ in length");
    if (c.vertices.size() > 2)
        throw std::invalid_argument("precoloured clique: more than 2 vertices");
    for (int v : c.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("precoloured clique: vertex id out of range");
    for (int col : c.colours)
        if (col < 0) throw std::invalid_argument("precoloured clique: negative colour");
    if (c.vertices.size() == 2) {
        if (c.vertices[0] == c.vertices[1])
            throw std::invalid_argument("precoloured clique: repeated vertex");
        if (!g.adjacent(c.vertices[0], c.vertices[1]))
            throw std::invalid_argument("precoloured clique: vertices not adjacent");
    }
}

// Relabel colours to 0..c-1 in order of first appearance (ascending vertex).
inline Colouring canonicalise(const Colouring& col) {
    Colouring out;
    out.colour.reserve(col.colour.size());
    std::unordered_map<int, int> remap;
    for (int c : col.colour) {
        auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
        out.colour.push_back(it->second);
    }
    return out;
}

inline void write_colouring(std::ostream& out, const Colouring& col) {
    out << "c " << col.colours_used() << "\n";
    for (int v = 0; v < col.size(); ++v) out << v << " " << col.colour[static_cast<std::size_t>(v)] << "\n";
}

inline std::string to_colouring_text(const Colouring& col) {
    std::ostringstream out;
    write_colouring(out, col);
    return out.str();
}

// Strict parser for the colouring format; throws ParseError on any deviation.
inline Colouring parse_colouring(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) throw ParseError("missing colouring header");
    std::istringstream header(line);
    std::string tag;
    long long declared = -1;
    if (!(header >> tag >> declared) || tag != "c" || declared < 0 || !(header >> std::ws).eof())
        throw ParseError("malformed colouring header: '" + line + "'");

    Colouring col;
    while (detail::next_data_line(in, line)) {
        long long v = 0, c = 0;
        if (!detail::parse_two_ints(line, v, c))
            throw ParseError("malformed colouring line: '" + line + "'");
        if (v != col.size()) throw ParseError("vertex lines must list 0..n-1 in order");
        if (c < 0 || c > 1000000000) throw ParseError("colour id out of range");
        col.colour.push_back(static_cast<int>(c));
    }
    if (col.colours_used() != declared)
        throw ParseError("declared colour count does not match the assignment");
    return col;
}

inline Colouring parse_colouring(const std::string& text) {
    std::istringstream in(text);
    return parse_colouring(in);
}

}  // namespace fragcol
