#include <random>
#include <set>

#include "doctest.h"
#include "domino/corner.hpp"
#include "domino/families.hpp"
#include "domino/verify.hpp"

using namespace domino;

namespace {

std::multiset<std::pair<int, int>> leg_sets(const std::vector<CornerDescriptor>& cs, int p) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& c : cs)
        if (c.p == p) out.insert({std::min(c.s, c.t), std::max(c.s, c.t)});
    return out;
}

} // namespace

TEST_CASE("rectangle corners") {
    const auto cs = find_corners(rectangle(2, 3), 1);
    REQUIRE(cs.size() == 4);
    for (const auto& c : cs) {
        CHECK(std::min(c.s, c.t) == 2);
        CHECK(std::max(c.s, c.t) == 3);
        CHECK(c.walled_s);
        CHECK(c.walled_t);
        CHECK(c.p == 1);
    }
}

TEST_CASE("unit square corners") {
    const auto cs = find_corners(rectangle(1, 1), 1);
    REQUIRE(cs.size() == 4);
    for (const auto& c : cs) CHECK((c.s == 1 && c.t == 1));
}

TEST_CASE("aztec diamond has walled staircase corners") {
    const auto cs = find_corners(aztec(2), 2);
    int staircases = 0;
    for (const auto& c : cs)
        if (c.p == 2) {
            ++staircases;
            CHECK(c.s == 2);
            CHECK(c.t == 2);
            CHECK(c.walled_s);
            CHECK(c.walled_t);
        }
    CHECK(staircases == 4);
    // p_max below the staircase depth hides them.
    CHECK(leg_sets(find_corners(aztec(3), 2), 3).empty());
    CHECK(leg_sets(find_corners(aztec(3), 3), 3).size() == 4);
}

TEST_CASE("T region corners") {
    // T(2,5,4): rows 5,7,9,11,11. Top corners are staircases of depth 4 with
    // legs 5 (top edge) and 2 (bottom part of the side).
    const auto cs = find_corners(make_T(2, 5, 4), 4);
    CHECK(leg_sets(cs, 4) == std::multiset<std::pair<int, int>>{{2, 5}, {2, 5}});
    // Single-cell corners: the bottom ones, the top row ends and each step.
    CHECK(leg_sets(cs, 1) ==
          std::multiset<std::pair<int, int>>{{2, 11}, {2, 11}, {1, 2}, {1, 2}, {1, 5}, {1, 5}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("find_corners output re-validates and is maximal") {
    std::mt19937_64 rng(21);
    for (int n = 0; n < 300; ++n) {
        const Region r = n % 3 ? random_region(rng, 4 + n % 30, 7, 7) : random_symmetric_region(rng, 36);
        const auto& cells = r.cells();
        for (const auto& c : find_corners(r, 6)) {
            const auto again = corner_at(cells, c.anchor, c.orientation, c.p);
            REQUIRE(again.has_value());
            CHECK(*again == c);
            CHECK(c.orientation.det() == 1);
            // One more cell on either leg breaks the boundary segment.
            CHECK((!cells.contains(c.cell(0, c.p - 1 + c.s)) || cells.contains(c.cell(-1, c.p - 1 + c.s))));
            CHECK((!cells.contains(c.cell(c.p - 1 + c.t, 0)) || cells.contains(c.cell(c.p - 1 + c.t, -1))));
            CHECK(c.walled_s == !cells.contains(c.cell(0, c.p - 1 + c.s)));
            if (c.p > 1) CHECK(std::min(c.s, c.t) >= 2);
        }
    }
}

TEST_CASE("single-cell corners are exactly the convex boundary corners") {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 200; ++n) {
        const Region r = random_region(rng, 1 + n % 25, 6, 6);
        int expected = 0;
        for (Cell c : r.cells())
            for (int g = 0; g < 4; ++g) {
                const Dihedral d = Dihedral::from_index(g);
                if (!r.contains(c + d.apply({-1, 0})) && !r.contains(c + d.apply({0, -1}))) ++expected;
            }
        CHECK(int(leg_sets(find_corners(r, 1), 1).size()) == expected);
    }
}

TEST_CASE("strip cardinality and shape") {
    const auto one = find_corners(rectangle(5, 6), 1).front();
    CHECK(strip_cells(one, 2, 3).size() == 4);
    CHECK(strip_cells(one, 1, 1).size() == 1);
    CHECK(strip_cells(one, 1, 1).contains(one.anchor));
    for (int i = 1; i <= one.s + 1; ++i)
        for (int j = 1; j <= one.t + 1; ++j) CHECK(int(strip_cells(one, i, j).size()) == i + j - 1);

    const auto stair = find_corners(aztec(4), 4);
    const auto deep = *std::find_if(stair.begin(), stair.end(), [](const auto& c) { return c.p == 4; });
    CHECK(strip_cells(deep, 2, 2).size() == 9);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const auto path = strip_path(deep, i, j);
            CHECK(int(path.size()) == i + j + 2 * 4 - 3);
            for (std::size_t q = 1; q < path.size(); ++q) {
                const Cell d = path[q] - path[q - 1];
                CHECK(std::abs(d.x) + std::abs(d.y) == 1);
            }
        }
    CHECK_THROWS_AS(strip_cells(one, one.s + 2, 1), Error);
    CHECK_THROWS_AS(strip_cells(one, 0, 1), Error);
}

TEST_CASE("tiled strips are tilings of the strip") {
    const auto c = find_corners(make_T(3, 4, 3), 3);
    for (const auto& corner : c)
        for (int k = 1; k <= std::min(corner.s, corner.t); ++k) {
            if (corner.p > 1 && k < 2) continue;
            const auto tiles = tiled_strip(corner, k + 1, k);
            CHECK(tiles.size() == std::size_t(k + corner.p - 1));
            std::set<Cell> seen;
            for (const auto& d : tiles) {
                const Cell diff = d.second - d.first;
                CHECK(std::abs(diff.x) + std::abs(diff.y) == 1);
                seen.insert(d.first);
                seen.insert(d.second);
            }
            CHECK(CellSet(std::vector<Cell>(seen.begin(), seen.end())) == strip_cells(corner, k + 1, k));
        }
}

TEST_CASE("completeness examples") {
    const auto c23 = find_corners(rectangle(2, 3), 1).front();
    CHECK(is_complete_up_to(rectangle(2, 3), c23, 2));
    CHECK_THROWS_AS(is_complete_up_to(rectangle(2, 3), c23, 3), Error);
    CHECK_THROWS_AS(is_complete_up_to(rectangle(2, 3), c23, 1), Error);

    // 5x5 with the centre removed. Depth 4 inspects the strips
    // ({4,4}), ({3,3}) one step in, and the recursion stays off the hole;
    // depth 5 needs the inner ({4,4})-strip, which runs through the hole.
    const Region holed = parse_region("#####\n#####\n##.##\n#####\n#####");
    for (const auto& c : find_corners(holed, 1)) {
        if (c.s != 5) continue;
        CHECK(is_complete_up_to(holed, c, 3));
        CHECK(is_complete_up_to(holed, c, 4));
        CHECK_FALSE(is_complete_up_to(holed, c, 5));
    }
}

TEST_CASE("corners are complete when the inspection layout is inside a hole-free region") {
    for (int a = 2; a <= 7; ++a)
        for (int b = a; b <= 9; ++b)
            for (const auto& c : find_corners(rectangle(a, b), 1))
                CHECK(is_complete_up_to(rectangle(a, b), c, std::min(c.s, c.t)));
    for (int p = 2; p <= 5; ++p)
        for (const auto& c : find_corners(aztec(p), p))
            if (c.p == p) CHECK(is_complete_up_to(aztec(p), c, 2));
    for (int i = 2; i <= 5; ++i)
        for (const auto& c : find_corners(make_T(i, 2 * i, 3), 3))
            if (c.p == 3) CHECK(is_complete_up_to(make_T(i, 2 * i, 3), c, std::min(c.s, c.t)));
}

TEST_CASE("inspection layout size") {
    const auto c = find_corners(rectangle(9, 9), 1).front();
    // ({k,k}) strip plus ({k-1,k-1}), ({k-3,k-3}), ... moving inward.
    CHECK(inspection_layout(c, 1).size() == 1);
    CHECK(inspection_layout(c, 2).size() == 3);
    CHECK(inspection_layout(c, 3).size() == 5 + 3);
    CHECK(inspection_layout(c, 4).size() == 7 + 5);
    CHECK(inspection_layout(c, 5).size() == 9 + 7 + 3);
}

TEST_CASE("reflect_corner maps cells onto the image corner") {
    const Region r = make_T(3, 6, 2);
    const Axis v = find_symmetry_axes(r).front();
    for (const auto& c : find_corners(r, 2)) {
        const auto m = reflect_corner(c, v);
        CHECK(reflect_cells(strip_cells(c, 2, 2), v) == strip_cells(m, 2, 2));
        CHECK(reflect_corner(m, v) == c);
        const auto all = find_corners(r, 2);
        CHECK(std::find(all.begin(), all.end(), m) != all.end());
    }
}

TEST_CASE("reflective pair examples") {
    const Region r48 = rectangle(4, 8);
    const Axis vertical{AxisKind::Vertical, 8};
    REQUIRE(is_symmetric(r48, vertical));
    const auto pairs = find_reflective_pairs(r48, vertical, 1, 4);
    CHECK(pairs.size() == 2);
    for (const auto& p : pairs) {
        CHECK(p.max_certified_k == 4);
        CHECK(reflect_corner(p.corner_a, vertical) == p.corner_b);
    }

    const Region sq = rectangle(2, 2);
    CHECK(find_reflective_pairs(sq, {AxisKind::Vertical, 2}, 1, 2).empty());
    for (const auto& a : find_symmetry_axes(sq)) CHECK(find_reflective_pairs(sq, a, 1, 2).empty());

    const Region az = aztec(3);
    const auto diag = find_reflective_pairs(az, {AxisKind::DiagUp, 0}, 3, 2);
    REQUIRE_FALSE(diag.empty());
    CHECK(diag.front().corner_a.p == 3);
    CHECK(diag.front().corner_a.s == 2);
    CHECK(diag.front().corner_a.t == 2);

    CHECK_THROWS_AS(find_reflective_pairs(rectangle(2, 3), {AxisKind::Vertical, 2}, 1, 1), Error);
}

TEST_CASE("max_certifiable_k") {
    const Region r = rectangle(4, 8);
    const Axis v{AxisKind::Vertical, 8};
    for (const auto& c : find_corners(r, 1)) {
        const auto m = reflect_corner(c, v);
        if (!(c < m)) continue;
        CHECK(max_certifiable_k(r, v, c) == 4);
    }
    // 4x4: from depth 3 on the top-row part of the layout meets its mirror.
    const Region sq = rectangle(4, 4);
    for (const auto& c : find_corners(sq, 1))
        if (c < reflect_corner(c, {AxisKind::Vertical, 4})) CHECK(max_certifiable_k(sq, {AxisKind::Vertical, 4}, c) == 2);
}
