#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polypart {

// Checked 64-bit natural arithmetic. Every public operation in this library
// reports overflow instead of wrapping.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

/// Number of sides of the polygon defining a figurate sequence (3 =
/// triangular, 4 = square, 5 = pentagonal, ...). Orders below 3 are rejected.
class PolygonOrder {
public:
    explicit PolygonOrder(std::uint64_t s) : s_(s) {
        if (s < 3) throw std::invalid_argument("polygon order must be >= 3");
    }
    std::uint64_t sides() const { return s_; }

    friend bool operator==(const PolygonOrder&, const PolygonOrder&) = default;

private:
    std::uint64_t s_;
};

/// r-th s-gonal number [(s-2)r^2 - (s-4)r]/2, exact; throws
/// std::overflow_error when the result does not fit 64 bits.
std::uint64_t polygonal(PolygonOrder s, std::uint64_t r);

/// Same value when it is <= bound, std::nullopt otherwise. Never overflows,
/// so it is safe as a loop guard for arbitrary ranks.
std::optional<std::uint64_t> polygonal_leq(PolygonOrder s, std::uint64_t r,
                                           std::uint64_t bound);

/// Triangular number indexed by a rank index i >= -1: 0 for i = -1, otherwise
/// i(i+1)/2. Rank indices are shifted by 2 from polygonal ranks: the part
/// encoded by index i is the (i+2)-nd triangular number.
std::uint64_t tri(std::int64_t i);

/// Inverse of polygonal: the rank r with polygonal(s, r) = m, unique for
/// m >= 1; rank 0 for m = 0 (zero counts as the rank-0 polygonal number).
/// Integer square root of the quadratic inverse, then exact re-verification.
std::optional<std::uint64_t> rank_of(PolygonOrder s, std::uint64_t m);

struct RankValue {
    std::uint64_t rank = 0;
    std::uint64_t value = 0;
    friend bool operator==(const RankValue&, const RankValue&) = default;
};

/// All s-gonal numbers <= bound in strictly increasing order, from rank 0
/// (value 0) when include_zero is set, from rank 1 otherwise.
std::vector<RankValue> polygonal_upto(PolygonOrder s, std::uint64_t bound,
                                      bool include_zero);

}  // namespace polypart
