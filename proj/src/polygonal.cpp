#include "polypart/polygonal.hpp"

#include <cmath>

namespace polypart {

namespace {

using u128 = unsigned __int128;

// [(s-2)r^2 - (s-4)r]/2 in 128 bits. Exact for every rank whose value is
// anywhere near 64 bits; callers keep r small enough that the 128-bit
// intermediates cannot saturate.
u128 polygonal_wide(std::uint64_t sides, std::uint64_t r) {
    if (r == 0) return 0;
    // (s-2)r - (s-4) rewritten additively; >= 2 for r >= 1, s >= 3
    const u128 inner = u128(sides - 2) * r + 4 - sides;
    return u128(r) * inner / 2;
}

std::uint64_t isqrt128(u128 x) {
    auto r = static_cast<std::uint64_t>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && u128(r) * r > x) --r;
    while (u128(r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::uint64_t polygonal(PolygonOrder s, std::uint64_t r) {
    if (r == 0) return 0;
    const std::uint64_t sides = s.sides();
    const std::uint64_t inner = checked_add(checked_mul(sides - 2, r), 4) - sides;
    // one of r, inner is always even, so halving first keeps the product exact
    return (r % 2 == 0) ? checked_mul(r / 2, inner) : checked_mul(r, inner / 2);
}

std::optional<std::uint64_t> polygonal_leq(PolygonOrder s, std::uint64_t r,
                                           std::uint64_t bound) {
    const std::uint64_t sides = s.sides();
    if (r >= 2) {
        // value >= (s-2)r^2/4 for r >= 2, so this rejects everything whose
        // 128-bit evaluation could saturate
        const u128 a = u128(sides - 2) * r;
        if (a > u128(bound) * 4 / r) return std::nullopt;
    }
    const u128 v = polygonal_wide(sides, r);
    if (v > bound) return std::nullopt;
    return static_cast<std::uint64_t>(v);
}

std::uint64_t tri(std::int64_t i) {
    if (i < -1) throw std::invalid_argument("rank index must be >= -1");
    if (i <= 0) return 0;
    const auto u = static_cast<std::uint64_t>(i);
    return (u % 2 == 0) ? checked_mul(u / 2, u + 1) : checked_mul(u, (u + 1) / 2);
}

std::optional<std::uint64_t> rank_of(PolygonOrder s, std::uint64_t m) {
    if (m == 0) return 0;
    if (m == 1) return 1;
    const std::uint64_t sides = s.sides();
    // every rank >= 2 value is at least p_2 = s
    if (sides > m) return std::nullopt;

    if (sides <= (std::uint64_t{1} << 31)) {
        // r = [(s-4) + sqrt((s-4)^2 + 8(s-2)m)] / (2(s-2))
        const std::int64_t c = static_cast<std::int64_t>(sides) - 4;
        const u128 disc = u128(c * c) + u128(8) * (sides - 2) * m;
        const std::uint64_t root = isqrt128(disc);
        const std::uint64_t r0 =
            static_cast<std::uint64_t>((static_cast<std::int64_t>(root) + c)) /
            (2 * (sides - 2));
        for (std::uint64_t r = (r0 > 1 ? r0 - 1 : 1); r <= r0 + 1; ++r) {
            if (polygonal_wide(sides, r) == m) return r;
        }
        return std::nullopt;
    }

    // huge orders leave only tiny ranks in range; scan exactly
    for (std::uint64_t r = 2;; ++r) {
        const u128 v = polygonal_wide(sides, r);
        if (v == m) return r;
        if (v > m) return std::nullopt;
    }
}

std::vector<RankValue> polygonal_upto(PolygonOrder s, std::uint64_t bound,
                                      bool include_zero) {
    std::vector<RankValue> out;
    for (std::uint64_t r = include_zero ? 0 : 1;; ++r) {
        const auto v = polygonal_leq(s, r, bound);
        if (!v) break;
        out.push_back({r, *v});
    }
    return out;
}

}  // namespace polypart
