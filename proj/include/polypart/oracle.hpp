#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polypart/polygonal.hpp"

// Brute-force ground truth for partition counts into three s-gonal parts,
// independent of the path machinery: a plain double loop over ranks with a
// membership test on the remainder.

namespace polypart::oracle {

/// One partition of n into three s-gonal parts, ranks nonincreasing.
struct Decomposition {
    std::uint64_t sides = 0;
    std::array<std::uint64_t, 3> ranks{};  // a >= b >= c
    std::array<std::uint64_t, 3> parts{};  // values of the three ranks
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Exact count of multisets {a >= b >= c} with p_a + p_b + p_c = n, ranks
/// >= 1, or >= 0 in zero-inclusive mode (rank 0 contributes the part 0).
std::uint64_t count_partitions(PolygonOrder s, std::uint64_t n, bool allow_zero);

/// Witness list for count_partitions, sorted by parts descending.
std::vector<Decomposition> decompositions(PolygonOrder s, std::uint64_t n,
                                          bool allow_zero);

}  // namespace polypart::oracle
