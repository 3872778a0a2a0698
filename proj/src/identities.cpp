#include "polypart/identities.hpp"

#include <algorithm>
#include <set>

#include "polypart/graph_export.hpp"
#include "polypart/oracle.hpp"
#include "polypart/path_engine.hpp"

namespace polypart {

namespace {

const PolygonOrder kTriangular{3};
const PolygonOrder kSquare{4};

Representation two_i_plus_j_rep() { return Representation{0, 2, 1, "2i+j"}; }

}  // namespace

IdentityReport verify_hirschhorn_sellers(std::uint64_t n_max) {
    IdentityReport report{"hirschhorn-sellers (zero-inclusive triangular)", 0, n_max, {}};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t lhs =
            oracle::count_partitions(kTriangular, 27 * n + 12, true);
        const std::uint64_t rhs =
            3 * oracle::count_partitions(kTriangular, 3 * n + 1, true);
        if (lhs != rhs) report.failures.push_back({n, lhs, rhs});
    }
    return report;
}

bool legendre_exception(std::uint64_t m) {
    if (m == 0) return false;
    while (m % 4 == 0) m /= 4;
    return m % 8 == 7;
}

std::vector<FamilyPoint> h_family_coords(std::uint64_t bound) {
    using u128 = unsigned __int128;
    const Representation rep = two_i_plus_j_rep();
    std::vector<FamilyPoint> out;
    const auto emit = [&](u128 row, u128 col) {
        const Coord c{static_cast<std::uint64_t>(row), static_cast<std::uint64_t>(col)};
        out.push_back({c, rep.value_at(c)});
    };

    // family of the deep exceptions 4^k(8m+7), k >= 1; probes run in 128 bits
    // since the first head past the bound can itself exceed 64 bits
    for (std::uint64_t k = 1;; ++k) {
        const u128 pk = u128{1} << (k - 1);  // 2^{k-1}
        const u128 row0 = pk * (14 * pk - 3);
        const u128 col0 = 6 * pk;
        if (2 * row0 + col0 > bound) break;
        const u128 row_step = (4 * pk) * (4 * pk) - 1;  // 4^{k+1} - 1
        for (u128 m = 0;; ++m) {
            const u128 row = row0 + m * row_step;
            const u128 col = col0 + 2 * m;
            if (2 * row + col > bound) break;
            emit(row, col);
        }
    }

    // family of the residue-7 exceptions 8b+7
    for (u128 i = 0; 7 + 16 * i <= bound; ++i) {
        for (u128 s = 0;; ++s) {
            const u128 row = 2 + 7 * i + 3 * s;
            const u128 col = 2 * (i + s) + 3;
            if (2 * row + col > bound) break;
            emit(row, col);
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

IdentityReport verify_h_set(std::uint64_t bound) {
    IdentityReport report{"h-set: families = 4^a(8b+7) = no-three-square set", 0,
                          bound, {}};
    std::set<std::uint64_t> family_values;
    for (const FamilyPoint& fp : h_family_coords(bound))
        family_values.insert(fp.value);

    for (std::uint64_t m = 0; m <= bound; ++m) {
        const bool fam = family_values.count(m) != 0;
        const bool exc = legendre_exception(m);
        if (fam != exc) report.failures.push_back({m, fam, exc});
        const std::uint64_t squares = oracle::count_partitions(kSquare, m, true);
        if (exc != (squares == 0)) report.failures.push_back({m, exc, squares});
    }
    return report;
}

IdentityReport verify_triangular_coverage(std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("coverage range must start at 1");
    IdentityReport report{"three-triangular coverage", 1, n_max, {}};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const std::uint64_t count = oracle::count_partitions(kTriangular, n, true);
        if (count < 1) report.failures.push_back({n, count, 1});
        if (n < 2) continue;
        bool covered = false;
        for (std::int64_t i = 0;; ++i) {
            const std::uint64_t low = tri(i) + static_cast<std::uint64_t>(i) + 2;
            if (low > n) break;
            if (n <= low + tri(i + 1)) {
                covered = true;
                break;
            }
        }
        if (!covered) report.failures.push_back({n, 0, 1});
    }
    return report;
}

bool is_sum_of_three_positive(PolygonOrder s, std::uint64_t m) {
    return count_by_paths(s, m) >= 1;
}

IdentityReport verify_count_agreement(PolygonOrder s, std::uint64_t n_max) {
    IdentityReport report{"path classes vs oracle, s=" + std::to_string(s.sides()),
                          0, n_max, {}};
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t lhs = count_by_paths(s, n);
        const std::uint64_t rhs = oracle::count_partitions(s, n, false);
        if (lhs != rhs) report.failures.push_back({n, lhs, rhs});
    }
    return report;
}

IdentityReport verify_theorem1(PolygonOrder s, std::uint64_t bound) {
    IdentityReport report{"non-trivial component criterion, s=" +
                              std::to_string(s.sides()),
                          0, bound, {}};
    const TruncatedGraph g = build_graph(s, bound);
    const std::set<std::uint64_t> reachable = nontrivial_values(g);
    for (std::uint64_t m = 0; m <= bound; ++m) {
        const bool on_component = reachable.count(m) != 0;
        const std::uint64_t count = oracle::count_partitions(s, m, false);
        if (on_component != (count >= 1))
            report.failures.push_back({m, on_component, count});
    }
    return report;
}

}  // namespace polypart
