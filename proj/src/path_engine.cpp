#include "polypart/path_engine.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace polypart {

IndexTriple triple_from_ranks(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("partition ranks must be >= 1");
    std::array<std::uint64_t, 3> r{a, b, c};
    std::sort(r.begin(), r.end());
    return IndexTriple(static_cast<std::int64_t>(r[0]) - 2,
                       static_cast<std::int64_t>(r[1]) - 2,
                       static_cast<std::int64_t>(r[2]) - 2);
}

Coord triple_to_vertex(const IndexTriple& t) {
    const std::uint64_t row =
        checked_add(checked_add(tri(t.lo), tri(t.mid)), tri(t.hi));
    return {row, static_cast<std::uint64_t>(t.lo + t.mid + t.hi + 3)};
}

std::uint64_t triple_value(PolygonOrder s, const IndexTriple& t) {
    return checked_add(
        checked_add(polygonal(s, static_cast<std::uint64_t>(t.lo + 2)),
                    polygonal(s, static_cast<std::uint64_t>(t.mid + 2))),
        polygonal(s, static_cast<std::uint64_t>(t.hi + 2)));
}

AdmissiblePath make_path(std::int64_t i0, std::optional<std::int64_t> j,
                         std::optional<std::int64_t> k) {
    if (i0 < -1) throw std::invalid_argument("stage index must be >= -1");
    if (j && (i0 < 0 || *j < 0))
        throw std::invalid_argument("second stage requires a first stage and j >= 0");
    if (k && (!j || *k < 0 || *k > *j))
        throw std::invalid_argument("third stage requires a second stage and 0 <= k <= j");

    AdmissiblePath p{i0, j, k, {}, {}};
    p.vertices = expand_path(p);
    if (i0 >= 0) {
        p.waypoints.push_back({tri(i0), static_cast<std::uint64_t>(i0 + 1)});
        if (j) {
            p.waypoints.push_back({checked_add(tri(i0), tri(*j)),
                                   static_cast<std::uint64_t>(i0 + *j + 2)});
            if (k) {
                p.waypoints.push_back(
                    {checked_add(checked_add(tri(i0), tri(*j)), tri(*k)),
                     static_cast<std::uint64_t>(i0 + *j + *k + 3)});
            }
        }
    }
    return p;
}

std::vector<Coord> expand_path(const AdmissiblePath& p) {
    std::vector<Coord> seq{{0, 0}};
    if (p.i0 < 0) return seq;
    for (std::int64_t h = 0; h <= p.i0; ++h)
        seq.push_back({tri(h), static_cast<std::uint64_t>(h + 1)});
    if (p.j) {
        const std::uint64_t base_row = tri(p.i0);
        for (std::int64_t l = 0; l <= *p.j; ++l)
            seq.push_back({checked_add(base_row, tri(l)),
                           static_cast<std::uint64_t>(p.i0 + l + 2)});
        if (p.k) {
            const std::uint64_t row2 = checked_add(base_row, tri(*p.j));
            for (std::int64_t m = 0; m <= *p.k; ++m)
                seq.push_back({checked_add(row2, tri(m)),
                               static_cast<std::uint64_t>(p.i0 + *p.j + m + 3)});
        }
    }
    return seq;
}

IndexTriple path_triple(const AdmissiblePath& p) {
    std::array<std::int64_t, 3> idx{-1, -1, -1};
    std::size_t n = 0;
    if (p.i0 >= 0) idx[n++] = p.i0;
    if (p.j) idx[n++] = *p.j;
    if (p.k) idx[n++] = *p.k;
    std::sort(idx.begin(), idx.end());
    return IndexTriple(idx[0], idx[1], idx[2]);
}

std::vector<AdmissiblePath> paths_for_triple(const IndexTriple& t) {
    std::vector<AdmissiblePath> out;
    if (t.hi == -1) {
        out.push_back(make_path(-1));
    } else if (t.mid == -1) {
        out.push_back(make_path(t.hi));
    } else if (t.lo == -1) {
        out.push_back(make_path(t.mid, t.hi));
        if (t.mid != t.hi) out.push_back(make_path(t.hi, t.mid));
    } else {
        std::array<std::int64_t, 3> idx{t.lo, t.mid, t.hi};
        do {
            if (idx[2] <= idx[1]) out.push_back(make_path(idx[0], idx[1], idx[2]));
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    return out;
}

std::vector<PathClass> path_classes(PolygonOrder s, std::uint64_t n) {
    std::vector<PathClass> out;
    for_each_triple_with_value(s, n, [&](const IndexTriple& t) {
        out.push_back({t, triple_to_vertex(t), paths_for_triple(t)});
    });
    return out;
}

std::uint64_t path_class_count(PolygonOrder s, Coord w, std::uint64_t n) {
    if (standard_rep(s).value_at(w) != n)
        throw std::invalid_argument("vertex does not carry the value n");
    std::uint64_t count = 0;
    for_each_triple_with_value(s, n, [&](const IndexTriple& t) {
        if (triple_to_vertex(t) == w) ++count;
    });
    return count;
}

std::vector<Coord> admissible_endpoints(PolygonOrder s, std::uint64_t n) {
    std::set<Coord> ends;
    for_each_triple_with_value(
        s, n, [&](const IndexTriple& t) { ends.insert(triple_to_vertex(t)); });
    return {ends.begin(), ends.end()};
}

std::uint64_t count_by_paths(PolygonOrder s, std::uint64_t n) {
    std::uint64_t count = 0;
    for_each_triple_with_value(s, n, [&](const IndexTriple&) { ++count; });
    return count;
}

std::vector<std::uint64_t> count_table(PolygonOrder s, std::uint64_t bound) {
    if (bound >= std::numeric_limits<std::size_t>::max())
        throw std::length_error("count table bound exceeds addressable memory");
    std::vector<std::uint64_t> counts(bound + 1, 0);
    for_each_triple_upto(s, bound, [&](const IndexTriple&, std::uint64_t value) {
        ++counts[value];
    });
    return counts;
}

}  // namespace polypart
