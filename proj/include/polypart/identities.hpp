#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polypart/polygonal.hpp"
#include "polypart/representation.hpp"

// Finite-range regression sweeps for the identities the partition counts
// rest on: the triangular-count identity P(27n+12) = 3 P(3n+1), the
// three-square exception set and its two generating coordinate families,
// the three-triangular coverage of the naturals, and the non-trivial
// component criterion for sums of three positive-rank parts.

namespace polypart {

struct IdentityFailure {
    std::uint64_t input = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    friend bool operator==(const IdentityFailure&, const IdentityFailure&) = default;
};

struct IdentityReport {
    std::string name;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    std::vector<IdentityFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Checks P(27n+12) = 3 P(3n+1) for 0 <= n <= n_max, where P counts
/// zero-inclusive partitions into three triangular numbers. (The identity
/// needs the zero part: P(1) = 1 comes from 1+0+0.)
IdentityReport verify_hirschhorn_sellers(std::uint64_t n_max);

/// True iff m = 4^a (8b + 7), the numbers with no representation as a sum of
/// three squares (zeros allowed).
bool legendre_exception(std::uint64_t m);

struct FamilyPoint {
    Coord coord;
    std::uint64_t value = 0;
    friend auto operator<=>(const FamilyPoint&, const FamilyPoint&) = default;
};

/// The two explicit coordinate families, valued under the 2i+j valuation,
/// whose values are exactly the three-square exceptions:
///   (2^{k-1}(7*2^k - 3) + m(4^{k+1} - 1), 3*2^k + 2m)   k >= 1, m >= 0
///   (2 + 7i + 3s, 2(i + s) + 3)                         i, s >= 0
/// Every family point with value <= bound, sorted.
std::vector<FamilyPoint> h_family_coords(std::uint64_t bound);

/// Checks the three-way set equality on [0, bound]: family values =
/// {m = 4^a(8b+7)} = {m with zero-inclusive square count 0}. Failures record
/// (m, family/exception flags) or (m, exception flag, square count).
IdentityReport verify_h_set(std::uint64_t bound);

/// Checks for 1 <= n <= n_max that n has a zero-inclusive three-triangular
/// partition, and that every n >= 2 falls in one of the covering value
/// intervals [t_i + i + 2, t_i + t_{i+1} + i + 2] (values 0 and 1 are the
/// classes of v_00 and v_01 under the i+j valuation).
IdentityReport verify_triangular_coverage(std::uint64_t n_max);

/// True iff m is a sum of three s-gonal numbers of positive rank.
bool is_sum_of_three_positive(PolygonOrder s, std::uint64_t m);

/// Checks count_by_paths(s, n) = zero-free oracle count for 0 <= n <= n_max.
IdentityReport verify_count_agreement(PolygonOrder s, std::uint64_t n_max);

/// Checks the component criterion on the truncated graph with value bound N:
/// m <= N lies on a non-trivial component iff m is a sum of three
/// positive-rank s-gonal numbers.
IdentityReport verify_theorem1(PolygonOrder s, std::uint64_t bound);

}  // namespace polypart
