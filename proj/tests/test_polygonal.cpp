#include <doctest.h>

#include <cstdint>
#include <set>

#include "polypart/polygonal.hpp"

using namespace polypart;

namespace {

// reference sequence built from first differences only: the r-th s-gonal
// number adds (s-2)(r-1) + 1 on top of the previous one
std::vector<std::uint64_t> difference_sequence(std::uint64_t s, std::uint64_t terms) {
    std::vector<std::uint64_t> seq{0};
    for (std::uint64_t r = 1; r <= terms; ++r)
        seq.push_back(seq.back() + (s - 2) * (r - 1) + 1);
    return seq;
}

}  // namespace

TEST_CASE("polygon order below 3 is rejected") {
    CHECK_THROWS_AS(PolygonOrder{2}, std::invalid_argument);
    CHECK_THROWS_AS(PolygonOrder{0}, std::invalid_argument);
    CHECK(PolygonOrder{3}.sides() == 3);
}

TEST_CASE("polygonal values") {
    CHECK(polygonal(PolygonOrder{4}, 3) == 9);
    for (std::uint64_t s = 3; s <= 20; ++s) CHECK(polygonal(PolygonOrder{s}, 1) == 1);
    CHECK(polygonal(PolygonOrder{5}, 4) == 22);

    // against the pure difference recurrence
    for (std::uint64_t s = 3; s <= 12; ++s) {
        const auto seq = difference_sequence(s, 300);
        for (std::uint64_t r = 0; r <= 300; ++r)
            CHECK(polygonal(PolygonOrder{s}, r) == seq[r]);
    }
}

TEST_CASE("triangular and square specializations") {
    for (std::uint64_t r = 0; r <= 500; ++r) {
        CHECK(polygonal(PolygonOrder{3}, r) == r * (r + 1) / 2);
        CHECK(polygonal(PolygonOrder{4}, r) == r * r);
    }
}

TEST_CASE("polygonal is strictly monotone") {
    for (std::uint64_t s = 3; s <= 12; ++s)
        for (std::uint64_t r = 1; r <= 200; ++r)
            CHECK(polygonal(PolygonOrder{s}, r) < polygonal(PolygonOrder{s}, r + 1));
    for (std::uint64_t r = 3; r <= 200; ++r)
        for (std::uint64_t s = 3; s <= 12; ++s)
            CHECK(polygonal(PolygonOrder{s}, r) < polygonal(PolygonOrder{s + 1}, r));
}

TEST_CASE("tri is the shifted triangular sequence") {
    CHECK(tri(-1) == 0);
    CHECK(tri(0) == 0);
    CHECK(tri(4) == 10);
    for (std::int64_t i = 0; i <= 300; ++i)
        CHECK(tri(i) == polygonal(PolygonOrder{3}, static_cast<std::uint64_t>(i)));
    CHECK_THROWS_AS(tri(-2), std::invalid_argument);
}

TEST_CASE("value identity connecting triples to vertex values") {
    for (std::uint64_t s = 3; s <= 12; ++s)
        for (std::int64_t i = -1; i <= 200; ++i)
            CHECK(polygonal(PolygonOrder{s}, static_cast<std::uint64_t>(i + 2)) ==
                  1 + (s - 2) * tri(i) + (s - 1) * static_cast<std::uint64_t>(i + 1));
}

TEST_CASE("rank_of inverts polygonal") {
    CHECK(rank_of(PolygonOrder{4}, 9) == 3);
    CHECK(!rank_of(PolygonOrder{4}, 8));
    CHECK(rank_of(PolygonOrder{3}, 10) == 4);
    CHECK(rank_of(PolygonOrder{7}, 0) == 0);
    CHECK(rank_of(PolygonOrder{9}, 1) == 1);

    for (std::uint64_t s = 3; s <= 12; ++s)
        for (std::uint64_t r = 1; r <= 500; ++r)
            CHECK(rank_of(PolygonOrder{s}, polygonal(PolygonOrder{s}, r)) == r);

    // membership agrees with a generated value set
    for (std::uint64_t s : {3, 5, 8}) {
        std::set<std::uint64_t> values;
        for (std::uint64_t r = 0; polygonal(PolygonOrder{s}, r) <= 2000; ++r)
            values.insert(polygonal(PolygonOrder{s}, r));
        for (std::uint64_t m = 0; m <= 2000; ++m)
            CHECK(rank_of(PolygonOrder{s}, m).has_value() == (values.count(m) != 0));
    }
}

TEST_CASE("polygonal_upto") {
    CHECK(polygonal_upto(PolygonOrder{4}, 10, false) ==
          std::vector<RankValue>{{1, 1}, {2, 4}, {3, 9}});
    CHECK(polygonal_upto(PolygonOrder{3}, 3, true) ==
          std::vector<RankValue>{{0, 0}, {1, 1}, {2, 3}});
    CHECK(polygonal_upto(PolygonOrder{5}, 0, false).empty());

    for (std::uint64_t s = 3; s <= 9; ++s) {
        const auto list = polygonal_upto(PolygonOrder{s}, 5000, true);
        for (std::size_t k = 0; k + 1 < list.size(); ++k) {
            CHECK(list[k].value < list[k + 1].value);
            CHECK(list[k].rank + 1 == list[k + 1].rank);
        }
        CHECK(list.back().value <= 5000);
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    const PolygonOrder huge{std::uint64_t{1} << 32};
    CHECK_THROWS_AS(polygonal(huge, std::uint64_t{1} << 33), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(std::uint64_t{1} << 33, std::uint64_t{1} << 33),
                    std::overflow_error);
    CHECK_THROWS_AS(checked_add(~std::uint64_t{0}, 1), std::overflow_error);
    // the bounded probe stays silent instead
    CHECK(!polygonal_leq(huge, std::uint64_t{1} << 33, ~std::uint64_t{0}));
}
