#include "polypart/oracle.hpp"

#include <algorithm>

namespace polypart::oracle {

namespace {

// Visits every decomposition, largest rank first: a outer, b <= a inner, the
// third part resolved by rank inversion with an exact re-check.
template <typename Fn>
void for_each_decomposition(PolygonOrder s, std::uint64_t n, bool allow_zero,
                            Fn&& fn) {
    const std::uint64_t rmin = allow_zero ? 0 : 1;
    for (std::uint64_t a = rmin;; ++a) {
        const auto pa = polygonal_leq(s, a, n);
        if (!pa) break;
        for (std::uint64_t b = rmin; b <= a; ++b) {
            const auto pb = polygonal_leq(s, b, n - *pa);
            if (!pb) break;
            const std::uint64_t rem = n - *pa - *pb;
            const auto c = rank_of(s, rem);
            if (c && *c <= b && (*c >= 1 || allow_zero))
                fn(a, b, *c, *pa, *pb, rem);
        }
    }
}

}  // namespace

std::uint64_t count_partitions(PolygonOrder s, std::uint64_t n, bool allow_zero) {
    std::uint64_t count = 0;
    for_each_decomposition(s, n, allow_zero,
                           [&](auto, auto, auto, auto, auto, auto) { ++count; });
    return count;
}

std::vector<Decomposition> decompositions(PolygonOrder s, std::uint64_t n,
                                          bool allow_zero) {
    std::vector<Decomposition> out;
    for_each_decomposition(
        s, n, allow_zero,
        [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t pa,
            std::uint64_t pb, std::uint64_t pc) {
            out.push_back({s.sides(), {a, b, c}, {pa, pb, pc}});
        });
    std::sort(out.begin(), out.end(),
              [](const Decomposition& x, const Decomposition& y) {
                  return x.parts > y.parts;
              });
    return out;
}

}  // namespace polypart::oracle
