#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polypart/polygonal.hpp"

namespace polypart {

/// Lattice point of the chain poset: point i of chain j. Points compare
/// within a chain only (v_ij <= v_kl in the poset iff j = l and i <= k);
/// the <=> here is plain lexicographic ordering for containers.
struct Coord {
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Affine vertex valuation of the chain poset, value(v_ij) = base + ci*i +
/// cj*j, with the single-part partition (value)^1 attached to each vertex.
/// ci and cj must not both vanish or value classes become infinite.
struct Representation {
    std::uint64_t base = 0;
    std::uint64_t ci = 0;
    std::uint64_t cj = 0;
    std::string label;

    std::uint64_t value_at(Coord c) const;
};

/// The valuation value(v_ij) = 3 + (s-2)i + (s-1)j, whose vertex values are
/// exactly the sums of three s-gonal numbers of positive rank.
Representation standard_rep(PolygonOrder s);

/// A vertex with its assigned number and partition, the unit the
/// monotonicity conditions are stated on. Parts are nonincreasing and the
/// partition is empty exactly when the value is 0.
struct VertexAssignment {
    Coord coord;
    std::uint64_t value = 0;
    std::vector<std::uint64_t> partition;
};

VertexAssignment assignment_of(const Representation& rep, Coord c);

/// All lattice points whose value equals n (the value class of n), sorted
/// ascending. Throws std::invalid_argument when ci = cj = 0 and
/// std::domain_error when the class is infinite (possible only when exactly
/// one coefficient is zero).
std::vector<Coord> class_of(const Representation& rep, std::uint64_t n);

struct MonotonicityReport {
    bool pass = true;
    std::optional<std::pair<Coord, Coord>> first_violation;
};

/// Checks every covering pair v_ij < v_(i+1)j with i+1 <= i_max, j <= j_max
/// for the three monotonicity conditions: value, partition size (sum of
/// parts), and largest part are all nondecreasing along each chain. Stops at
/// the first violating pair.
MonotonicityReport validate_monotonicity(
    const std::function<VertexAssignment(Coord)>& assign, std::uint64_t i_max,
    std::uint64_t j_max);

/// Same check for the single-part assignments induced by a representation.
MonotonicityReport validate_monotonicity(const Representation& rep,
                                         std::uint64_t i_max,
                                         std::uint64_t j_max);

}  // namespace polypart
