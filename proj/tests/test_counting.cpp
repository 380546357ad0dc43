#include <random>

#include "doctest.h"
#include "domino/counting.hpp"
#include "domino/families.hpp"
#include "domino/verify.hpp"

using namespace domino;

TEST_CASE("small counts") {
    CHECK(count_tilings(rectangle(1, 2)) == 1);
    CHECK(count_tilings(rectangle(2, 2)) == 2);
    CHECK(count_tilings(rectangle(2, 3)) == 3);
    CHECK(count_tilings(rectangle(1, 1)) == 0);
    CHECK(count_tilings(parse_region("#.\n##")) == 0);
    CHECK(count_tilings(CellSet{}) == 1);
}

TEST_CASE("known rectangle counts") {
    // Published values for square boards.
    CHECK(count_tilings(rectangle(4, 4)) == 36);
    CHECK(count_tilings(rectangle(6, 6)) == 6728);
    CHECK(count_tilings(rectangle(8, 8)) == 12988816);
    CHECK(count_tilings(rectangle(10, 10)) == BigCount("258584046368"));
    CHECK(count_tilings(rectangle(12, 12)) == BigCount("53060477521960000"));
    CHECK(count_tilings_bruteforce(rectangle(6, 6)) == 6728);
    // 2 x n boards follow the Fibonacci numbers.
    BigCount a = 1, b = 1;
    for (int n = 1; n <= 40; ++n) {
        CHECK(count_tilings(rectangle(2, n)) == b);
        BigCount next = a + b;
        a = b;
        b = next;
    }
}

TEST_CASE("transposed sweep gives the same count") {
    CHECK(count_tilings(rectangle(3, 20)) == count_tilings(rectangle(20, 3)));
    CHECK(count_tilings(make_T(3, 5, 4)) == count_tilings(reflect(make_T(3, 5, 4), {AxisKind::DiagUp, 0})));
}

TEST_CASE("bruteforce examples") {
    CHECK(count_tilings_bruteforce(rectangle(3, 3)) == 0);
    CHECK(count_tilings_bruteforce(rectangle(2, 2)) == 2);
    CHECK(count_tilings_bruteforce(aztec(2)) == 8);
    CHECK_THROWS_AS(count_tilings_bruteforce(rectangle(6, 7)), Error);
    CHECK(count_tilings_bruteforce(rectangle(6, 7), 42) == count_tilings(rectangle(6, 7)));
}

TEST_CASE("DP agrees with backtracking on fuzzed regions") {
    std::mt19937_64 rng(2024);
    for (int n = 0; n < 2000; ++n) {
        const int w = 1 + int(rng() % 8), h = 1 + int(rng() % 8);
        const Region r = random_region(rng, 1 + int(rng() % 28), w, h);
        CHECK(count_tilings(r) == count_tilings_bruteforce(r));
    }
}

TEST_CASE("residue matches the exact count") {
    std::mt19937_64 rng(99);
    for (int n = 0; n < 1000; ++n) {
        const Region r = random_region(rng, 1 + int(rng() % 24), 6, 6);
        const BigCount exact = count_tilings(r);
        for (int m : {2, 3, 4, 5, 8}) CHECK(residue(r, m).value == reduce(exact, m).value);
    }
    CHECK(residue(rectangle(3, 6), 4) == Residue(1, 4));
    CHECK(residue(rectangle(1, 1), 4) == Residue(0, 4));
    CHECK(residue(aztec(3), 4) == Residue(0, 4));
    CHECK_THROWS_AS(residue(rectangle(2, 2), 1), std::invalid_argument);
}

TEST_CASE("Residue normalizes") {
    CHECK(Residue(-1, 4).value == 3);
    CHECK(Residue(9, 4).value == 1);
    CHECK_THROWS_AS(Residue(1, 0), std::invalid_argument);
    CHECK(reduce(BigCount(-5), 4).value == 3);
}

TEST_CASE("reflection preserves counts") {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 200; ++n) {
        const Region r = random_region(rng, 2 + int(rng() % 30), 7, 7);
        const BigCount c = count_tilings(r);
        for (Axis a : {Axis{AxisKind::Vertical, 0}, Axis{AxisKind::Horizontal, 5}, Axis{AxisKind::DiagUp, 0},
                       Axis{AxisKind::DiagDown, 2}})
            CHECK(count_tilings(reflect(r, a)) == c);
    }
}

TEST_CASE("odd area has no tilings") {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 200; ++n) {
        const Region r = random_region(rng, 1 + 2 * int(rng() % 20), 8, 8);
        CHECK(count_tilings(r) == 0);
    }
}

TEST_CASE("frontier limit") {
    CountOptions narrow;
    narrow.max_frontier = 3;
    CHECK(count_tilings(rectangle(3, 40), narrow) == count_tilings(rectangle(40, 3)));
    CHECK_THROWS_AS(count_tilings(rectangle(4, 4), narrow), Error);
    try {
        residue(rectangle(4, 4), 4, narrow);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FrontierTooWide);
    }
    CHECK_THROWS_AS(count_tilings(rectangle(66, 66)), Error);
}

TEST_CASE("product formula") {
    CHECK(kasteleyn_rectangle(2, 2) == 2);
    CHECK(kasteleyn_rectangle(2, 4) == 5);
    CHECK(kasteleyn_rectangle(4, 4) == 36);
    CHECK(kasteleyn_rectangle(3, 3) == 0);
    CHECK(kasteleyn_rectangle(3, 2) == 3);
    for (int a = 2; a <= 10; a += 2)
        for (int b = 2; b <= 10; b += 2) CHECK(kasteleyn_rectangle(a, b) == count_tilings(rectangle(a, b)));
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) CHECK(kasteleyn_rectangle(a, b) == count_tilings(rectangle(a, b)));
    CHECK(kasteleyn_rectangle(16, 16) == count_tilings(rectangle(16, 16)));
    try {
        kasteleyn_rectangle(18, 2);
        FAIL("expected PrecisionExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PrecisionExceeded);
    }
}

TEST_CASE("doubling a residue mod 4 only sees the parity") {
    for (long r = 0; r <= 100000; ++r) CHECK_EQ((2 * (r % 4)) % 4, (2 * (r % 2)) % 4);
}
