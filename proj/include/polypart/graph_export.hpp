#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polypart/polygonal.hpp"
#include "polypart/representation.hpp"

// Finite truncations of the admissible-path graph under the standard
// valuation, with component classification and deterministic DOT / JSON
// export. Vertices are every lattice point with value <= N; edges are
// exactly the consecutive steps of expanded admissible paths whose triple
// value fits the bound.

namespace polypart {

struct TruncatedGraph {
    std::uint64_t sides = 0;  // polygon order s
    std::uint64_t bound = 0;  // value bound N
    std::vector<Coord> vertices;                 // sorted ascending
    std::vector<std::pair<Coord, Coord>> edges;  // directed path steps, sorted
    std::vector<std::uint32_t> component;        // per vertex, by first appearance
    std::vector<std::uint8_t> on_path;           // per vertex: lies on a step

    std::size_t index_of(Coord v) const;  // throws std::out_of_range if absent
    std::uint32_t component_id(Coord v) const { return component[index_of(v)]; }
    bool is_nontrivial(Coord v) const { return on_path[index_of(v)] != 0; }

    friend bool operator==(const TruncatedGraph&, const TruncatedGraph&) = default;
};

/// Builds the truncation for value bound N >= 3. Components are computed on
/// the undirected closure of the directed steps; ids depend only on the
/// resulting partition, never on insertion order.
TruncatedGraph build_graph(PolygonOrder s, std::uint64_t bound);

/// Every value <= N carried by some vertex on a positive-length admissible
/// path, i.e. by some vertex of a non-trivial component.
std::set<std::uint64_t> nontrivial_values(const TruncatedGraph& g);

/// Graphviz digraph, nodes "v_i_j" labeled "(i,j):value"; byte-deterministic.
std::string to_dot(const TruncatedGraph& g);

/// Stable-key JSON {s, N, vertices:[{i,j,value,component,nontrivial}],
/// edges:[[i,j,i',j']]}; byte-deterministic.
std::string to_json(const TruncatedGraph& g);

/// Inverse of to_json.
TruncatedGraph graph_from_json(const std::string& text);

}  // namespace polypart
