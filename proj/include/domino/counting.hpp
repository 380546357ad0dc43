#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "domino/region.hpp"

namespace domino {

using BigCount = boost::multiprecision::cpp_int;

/// A value reduced into [0, modulus).
struct Residue {
    int value = 0;
    int modulus = 2;

    Residue() = default;
    /// Reduces any integer; throws std::invalid_argument for modulus < 2.
    Residue(long long v, int m);

    friend bool operator==(const Residue&, const Residue&) = default;
};

Residue reduce(const BigCount& n, int m);

struct CountOptions {
    /// Largest frontier (the shorter bounding-box side) the DP accepts.
    int max_frontier = 64;
};

/// Broken-profile DP over the bounding box, sweeping along the longer side.
/// Throws FrontierTooWide.
BigCount count_tilings(const Region& r, const CountOptions& opts = {});

/// Same for an arbitrary cell set; the empty set has exactly one tiling.
BigCount count_tilings(const CellSet& cells, const CountOptions& opts = {});

/// Count mod m with a machine-word accumulator.
Residue residue(const Region& r, int m, const CountOptions& opts = {});
Residue residue(const CellSet& cells, int m, const CountOptions& opts = {});

/// Backtracking oracle: always covers the first uncovered cell (x-major
/// order) with its right or upper neighbour. Throws TooLarge above max_cells.
BigCount count_tilings_bruteforce(const Region& r, std::size_t max_cells = 40);

/// Product formula for the a x b rectangle evaluated with 128-bit
/// significands and rounded. Any a, b >= 1 is accepted (a factor vanishes when
/// both are odd). Throws PrecisionExceeded when a side exceeds max_side or the
/// accumulated error bound reaches 1/4.
BigCount kasteleyn_rectangle(int a, int b, int max_side = 16);

} // namespace domino
