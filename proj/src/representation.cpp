#include "polypart/representation.hpp"

#include <algorithm>
#include <numeric>

namespace polypart {

std::uint64_t Representation::value_at(Coord c) const {
    return checked_add(checked_add(base, checked_mul(ci, c.i)),
                       checked_mul(cj, c.j));
}

Representation standard_rep(PolygonOrder s) {
    return Representation{3, s.sides() - 2, s.sides() - 1,
                          "R_" + std::to_string(s.sides())};
}

VertexAssignment assignment_of(const Representation& rep, Coord c) {
    const std::uint64_t v = rep.value_at(c);
    VertexAssignment a{c, v, {}};
    if (v != 0) a.partition.push_back(v);
    return a;
}

std::vector<Coord> class_of(const Representation& rep, std::uint64_t n) {
    if (rep.ci == 0 && rep.cj == 0)
        throw std::invalid_argument("representation has no varying coefficient");
    if (n < rep.base) return {};
    const std::uint64_t rest = n - rep.base;

    // a vanishing coefficient leaves one coordinate free: any solution in the
    // other coordinate spans an infinite class
    if (rep.ci == 0) {
        if (rest % rep.cj == 0) throw std::domain_error("value class is infinite");
        return {};
    }
    if (rep.cj == 0) {
        if (rest % rep.ci == 0) throw std::domain_error("value class is infinite");
        return {};
    }

    std::vector<Coord> out;
    for (std::uint64_t j = 0; checked_mul(rep.cj, j) <= rest; ++j) {
        const std::uint64_t rem = rest - rep.cj * j;
        if (rem % rep.ci == 0) out.push_back({rem / rep.ci, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::uint64_t partition_size(const std::vector<std::uint64_t>& parts) {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

std::uint64_t largest_part(const std::vector<std::uint64_t>& parts) {
    return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
}

}  // namespace

MonotonicityReport validate_monotonicity(
    const std::function<VertexAssignment(Coord)>& assign, std::uint64_t i_max,
    std::uint64_t j_max) {
    for (std::uint64_t j = 0; j <= j_max; ++j) {
        for (std::uint64_t i = 0; i + 1 <= i_max; ++i) {
            const VertexAssignment lo = assign({i, j});
            const VertexAssignment hi = assign({i + 1, j});
            const bool ok = lo.value <= hi.value &&
                            partition_size(lo.partition) <= partition_size(hi.partition) &&
                            largest_part(lo.partition) <= largest_part(hi.partition);
            if (!ok) return {false, std::make_pair(lo.coord, hi.coord)};
        }
    }
    return {};
}

MonotonicityReport validate_monotonicity(const Representation& rep,
                                         std::uint64_t i_max,
                                         std::uint64_t j_max) {
    return validate_monotonicity(
        [&rep](Coord c) { return assignment_of(rep, c); }, i_max, j_max);
}

}  // namespace polypart
