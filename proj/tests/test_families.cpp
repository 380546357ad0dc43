#include "doctest.h"
#include "domino/counting.hpp"
#include "domino/families.hpp"

using namespace domino;

namespace {

std::vector<int> row_lengths(const Region& r) {
    std::vector<int> out;
    for (int y = r.height() - 1; y >= 0; --y) {
        int n = 0;
        for (int x = 0; x < r.width(); ++x) n += r.contains({x, y});
        out.push_back(n);
    }
    return out;
}

} // namespace

TEST_CASE("rectangle") {
    CHECK(rectangle(2, 3).size() == 6);
    CHECK(rectangle(2, 3) == make_T(2, 3, 1));
    CHECK(rectangle(1, 1).size() == 1);
    CHECK(rectangle(3, 5).height() == 3);
    CHECK(rectangle(3, 5).width() == 5);
    CHECK_THROWS_AS(rectangle(0, 2), std::invalid_argument);
}

TEST_CASE("T rows") {
    const Region t = make_T(2, 5, 4);
    CHECK(row_lengths(t) == std::vector<int>{5, 7, 9, 11, 11});
    CHECK(t.size() == 43);
    for (int p = 1; p <= 5; ++p) {
        std::vector<int> expect;
        for (int m = 0; m < p; ++m) expect.push_back(2 + 2 * m);
        CHECK(row_lengths(make_T(1, 2, p)) == expect);
    }
    for (int k = 1; k <= 6; ++k) CHECK(make_T(k, 2 * k, 1) == rectangle(k, 2 * k));
}

TEST_CASE("D rows") {
    const Region d = make_D(2, 5, 4);
    CHECK(row_lengths(d) == std::vector<int>{5, 7, 9, 11, 11, 9, 7, 5});
    CHECK(d.size() == 64);
    CHECK(make_D(2, 2, 1) == rectangle(2, 2));
    CHECK(row_lengths(make_D(1, 3, 3)) == std::vector<int>{3, 5, 7, 5, 3});
    CHECK(row_lengths(make_D(4, 1, 2)) == std::vector<int>{1, 3, 3, 3, 3, 1});
}

TEST_CASE("rows are centered") {
    const Region t = make_T(1, 2, 3); // rows 2, 4, 6
    CHECK(t.contains({2, 2}));
    CHECK(t.contains({3, 2}));
    CHECK_FALSE(t.contains({1, 2}));
    CHECK(t.contains({1, 1}));
    CHECK(t.contains({0, 0}));
    CHECK_THROWS_AS(centered_rows({2, 3}), std::invalid_argument);
}

TEST_CASE("aztec is D(2,2,p)") {
    for (int p = 1; p <= 6; ++p) {
        CHECK(aztec(p) == make_D(2, 2, p));
        CHECK(aztec(p).size() == std::size_t(2 * p * (p + 1)));
        CHECK(aztec(p).height() == 2 * p);
    }
}

TEST_CASE("D with even i is two T regions glued along the widest edge") {
    for (int half = 1; half <= 4; ++half)
        for (int j = 1; j <= 5; ++j)
            for (int p = 1; p <= 4; ++p) {
                const Region t = make_T(half, j, p);
                std::vector<Cell> cells;
                for (Cell c : t.cells()) {
                    cells.push_back({c.x, c.y + t.height()});
                    cells.push_back({c.x, t.height() - 1 - c.y});
                }
                CHECK(Region::from_cells(cells) == make_D(2 * half, j, p));
            }
}

TEST_CASE("cell counts are row sums") {
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int p = 1; p <= 4; ++p) {
                int t = 0, d = 0;
                for (int m = 0; m < p; ++m) t += j + 2 * m;
                t += (i - 1) * (j + 2 * (p - 1));
                for (int m = 0; m < p; ++m) d += 2 * (j + 2 * m);
                d += (i - 2) * (j + 2 * (p - 1));
                CHECK(int(make_T(i, j, p).size()) == t);
                CHECK(int(make_D(i, j, p).size()) == d);
            }
}

TEST_CASE("every T and D region has a vertical axis") {
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int p = 1; p <= 3; ++p)
                for (const Region& r : {make_T(i, j, p), make_D(i, j, p)}) {
                    const auto axes = find_symmetry_axes(r);
                    CHECK(std::any_of(axes.begin(), axes.end(),
                                      [](const Axis& a) { return a.kind == AxisKind::Vertical; }));
                }
    for (int p = 1; p <= 5; ++p) CHECK(find_symmetry_axes(aztec(p)).size() == 4);
}

TEST_CASE("aztec counts are powers of two") {
    for (int p = 1; p <= 8; ++p) CHECK(count_tilings(aztec(p)) == BigCount(1) << (p * (p + 1) / 2));
}

TEST_CASE("FamilySpec parsing") {
    CHECK(FamilySpec::parse("T:2,5,4").build() == make_T(2, 5, 4));
    CHECK(FamilySpec::parse("D:2,2,3").build() == aztec(3));
    CHECK(FamilySpec::parse("rect:4,8").build() == rectangle(4, 8));
    CHECK(FamilySpec::parse("rectangle:4,8").build() == rectangle(4, 8));
    CHECK(FamilySpec::parse("aztec:5").build() == aztec(5));
    CHECK(to_string(FamilySpec::parse("T:2,5,4")) == "T:2,5,4");
    CHECK(to_string(FamilySpec::parse("rectangle:4,8")) == "rect:4,8");
    for (const char* bad : {"T:2,5", "rect:4", "aztec:0", "Q:1", "T:a,b,c", "rect:4,8,", "aztec", "rect:-1,2"}) {
        try {
            FamilySpec::parse(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}
