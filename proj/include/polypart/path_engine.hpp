#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polypart/polygonal.hpp"
#include "polypart/representation.hpp"

// Admissible paths on the chain-poset graph and the partition counts they
// carry.
//
// Under the standard valuation value(v_ij) = 3 + (s-2)i + (s-1)j, a path
// from the origin v_00 encodes a sum of three s-gonal numbers of positive
// rank, one stage per part:
//
//   stage 1 climbs the left boundary v_{t_h (h+1)}, h = 0..i0, ending at
//           (t_i0, i0+1) with value p_{i0+2} + 1 + 1;
//   stage 2 visits v_{(t_i0 + t_l)(i0+l+2)}, l = 0..j, ending with value
//           p_{i0+2} + p_{j+2} + 1;
//   stage 3 visits v_{(t_i0 + t_j + t_m)(i0+j+m+3)}, m = 0..k, k <= j,
//           ending with value p_{i0+2} + p_{j+2} + p_{k+2}.
//
// Here t is the shifted triangular sequence (tri) and p the s-gonal numbers.
// A stage of index -1 contributes the part p_1 = 1 and is absent from the
// encoding; the empty path at v_00 encodes 1 + 1 + 1. Two paths are
// equivalent when they encode the same partition, i.e. the same canonical
// index triple, and each class has one fixed end vertex. Counting classes
// per end vertex and summing over a value class counts the partitions of n
// into three s-gonal numbers of positive rank.

namespace polypart {

/// Canonical multiset of three rank indices, -1 <= lo <= mid <= hi, naming
/// the partition p_{lo+2} + p_{mid+2} + p_{hi+2} into positive-rank parts.
struct IndexTriple {
    std::int64_t lo;
    std::int64_t mid;
    std::int64_t hi;

    IndexTriple(std::int64_t lo_, std::int64_t mid_, std::int64_t hi_)
        : lo(lo_), mid(mid_), hi(hi_) {
        if (lo < -1 || lo > mid || mid > hi)
            throw std::invalid_argument("index triple must satisfy -1 <= lo <= mid <= hi");
    }

    friend auto operator<=>(const IndexTriple&, const IndexTriple&) = default;
};

/// Triple for a partition given by its polygonal ranks (all >= 1).
IndexTriple triple_from_ranks(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// The common end vertex of every path encoding the triple:
/// (t_lo + t_mid + t_hi, lo + mid + hi + 3).
Coord triple_to_vertex(const IndexTriple& t);

/// p_{lo+2} + p_{mid+2} + p_{hi+2}; always equals the standard valuation of
/// triple_to_vertex(t).
std::uint64_t triple_value(PolygonOrder s, const IndexTriple& t);

/// One admissible path as traversed: stage encoding (i0; j; k) plus its
/// stage endpoints and full vertex sequence. An absent stage means the path
/// stops early; i0 = -1 with no further stages is the empty path at v_00.
struct AdmissiblePath {
    std::int64_t i0 = -1;
    std::optional<std::int64_t> j;
    std::optional<std::int64_t> k;  // requires j, and k <= j
    std::vector<Coord> waypoints;   // stage endpoints, one per present stage
    std::vector<Coord> vertices;    // full sequence including inner vertices
};

/// Builds the path for a stage encoding, validating the grammar (j >= 0
/// needs i0 >= 0, k needs j, k <= j) and expanding waypoints and vertices.
AdmissiblePath make_path(std::int64_t i0,
                         std::optional<std::int64_t> j = std::nullopt,
                         std::optional<std::int64_t> k = std::nullopt);

/// Full vertex sequence of a path, origin first; consecutive entries are
/// exactly the graph edges the path contributes.
std::vector<Coord> expand_path(const AdmissiblePath& p);

/// Canonical triple encoded by a path (present stages padded with -1).
IndexTriple path_triple(const AdmissiblePath& p);

/// Every stage encoding inducing the given triple, in lexicographic (i0; j;
/// k) order. Nonnegative triples yield 3, 2 or 1 paths as the indices are
/// distinct, once-repeated or all equal; triples with absent stages yield
/// correspondingly fewer.
std::vector<AdmissiblePath> paths_for_triple(const IndexTriple& t);

/// Equivalence class of the admissible paths sharing one partition.
struct PathClass {
    IndexTriple partition;
    Coord end;
    std::vector<AdmissiblePath> members;
};

/// All path classes whose partition sums to n, in triple order.
std::vector<PathClass> path_classes(PolygonOrder s, std::uint64_t n);

/// Number of path classes ending at w among the partitions of n. Requires
/// that w carries the value n under the standard valuation.
std::uint64_t path_class_count(PolygonOrder s, Coord w, std::uint64_t n);

/// The members of the value class of n that are end vertices of at least one
/// path class, sorted ascending.
std::vector<Coord> admissible_endpoints(PolygonOrder s, std::uint64_t n);

/// Number of partitions of n into three s-gonal numbers of positive rank,
/// counted as path classes over the admissible endpoints.
std::uint64_t count_by_paths(PolygonOrder s, std::uint64_t n);

/// counts[n] = count_by_paths(s, n) for every n <= bound, computed in one
/// pass over all index triples with value <= bound.
std::vector<std::uint64_t> count_table(PolygonOrder s, std::uint64_t bound);

/// Calls fn(triple) for every index triple with triple_value(s, t) = n, in
/// lexicographic triple order.
template <typename Fn>
void for_each_triple_with_value(PolygonOrder s, std::uint64_t n, Fn&& fn) {
    for (std::int64_t lo = -1;; ++lo) {
        const auto pl = polygonal_leq(s, static_cast<std::uint64_t>(lo + 2), n / 3);
        if (!pl) break;
        for (std::int64_t mid = lo;; ++mid) {
            const auto pm =
                polygonal_leq(s, static_cast<std::uint64_t>(mid + 2), (n - *pl) / 2);
            if (!pm) break;
            const std::uint64_t rem = n - *pl - *pm;
            if (rem == 0) continue;  // third part must have positive rank
            const auto r = rank_of(s, rem);
            if (r && *r >= static_cast<std::uint64_t>(mid + 2))
                fn(IndexTriple(lo, mid, static_cast<std::int64_t>(*r) - 2));
        }
    }
}

/// Calls fn(triple, value) for every index triple with value <= bound, in
/// lexicographic triple order.
template <typename Fn>
void for_each_triple_upto(PolygonOrder s, std::uint64_t bound, Fn&& fn) {
    // p[r] = r-th s-gonal number for every rank with value <= bound
    std::vector<std::uint64_t> p{0};
    for (std::uint64_t r = 1;; ++r) {
        const auto v = polygonal_leq(s, r, bound);
        if (!v) break;
        p.push_back(*v);
    }
    for (std::size_t a = 1; a < p.size() && p[a] <= bound / 3; ++a) {
        for (std::size_t b = a; b < p.size(); ++b) {
            if (p[b] > (bound - p[a]) / 2) break;
            const std::uint64_t pab = p[a] + p[b];
            for (std::size_t c = b; c < p.size(); ++c) {
                if (p[c] > bound - pab) break;
                fn(IndexTriple(static_cast<std::int64_t>(a) - 2,
                               static_cast<std::int64_t>(b) - 2,
                               static_cast<std::int64_t>(c) - 2),
                   pab + p[c]);
            }
        }
    }
}

}  // namespace polypart
