#include "domino/counting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace domino {

Residue::Residue(long long v, int m) : modulus(m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    value = int(((v % m) + m) % m);
}

Residue reduce(const BigCount& n, int m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    BigCount q = n % m;
    if (q < 0) q += m;
    return Residue(q.convert_to<long long>(), m);
}

namespace {

// Occupancy grid oriented so the frontier runs along the shorter side.
struct Grid {
    int width = 0;  // number of sweep steps
    int height = 0; // frontier size
    std::vector<std::uint8_t> cell;

    bool at(int x, int y) const { return cell[std::size_t(x) * height + y] != 0; }
};

Grid make_grid(const CellSet& cells, const CountOptions& opts) {
    Grid g;
    const bool transpose = cells.height() > cells.width();
    g.width = transpose ? cells.height() : cells.width();
    g.height = transpose ? cells.width() : cells.height();
    if (g.height > opts.max_frontier || g.height > 64)
        throw Error(ErrorCode::FrontierTooWide,
                    "frontier " + std::to_string(g.height) + " exceeds " +
                        std::to_string(std::min(opts.max_frontier, 64)));
    g.cell.assign(std::size_t(g.width) * g.height, 0);
    for (Cell c : cells) {
        int x = c.x - cells.min_x(), y = c.y - cells.min_y();
        if (transpose) std::swap(x, y);
        g.cell[std::size_t(x) * g.height + y] = 1;
    }
    return g;
}

// Bit y of a state: cell (x, y) of the column being filled is already covered.
template <class V, class Add>
V profile_dp(const Grid& g, V one, Add add) {
    std::unordered_map<std::uint64_t, V> cur, next;
    cur.emplace(0, one);
    auto push = [&](std::uint64_t key, const V& v) {
        auto [it, fresh] = next.try_emplace(key, v);
        if (!fresh) add(it->second, v);
    };
    for (int x = 0; x < g.width; ++x) {
        for (int y = 0; y < g.height; ++y) {
            const std::uint64_t bit = std::uint64_t(1) << y;
            const bool here = g.at(x, y);
            const bool right = x + 1 < g.width && g.at(x + 1, y);
            const bool up = y + 1 < g.height && g.at(x, y + 1);
            next.clear();
            next.reserve(cur.size() * 2);
            for (const auto& [state, v] : cur) {
                if (!here) {
                    if (!(state & bit)) push(state, v);
                    continue;
                }
                if (state & bit) {
                    push(state & ~bit, v);
                    continue;
                }
                if (right) push(state | bit, v);
                if (up && !(state & (bit << 1))) push(state | (bit << 1), v);
            }
            std::swap(cur, next);
            if (cur.empty()) return V{};
        }
    }
    auto it = cur.find(0);
    return it == cur.end() ? V{} : it->second;
}

} // namespace

BigCount count_tilings(const CellSet& cells, const CountOptions& opts) {
    if (cells.empty()) return 1;
    if (cells.size() % 2 != 0) return 0;
    const Grid g = make_grid(cells, opts);
    return profile_dp<BigCount>(g, BigCount(1), [](BigCount& a, const BigCount& b) { a += b; });
}

BigCount count_tilings(const Region& r, const CountOptions& opts) {
    return count_tilings(r.cells(), opts);
}

Residue residue(const CellSet& cells, int m, const CountOptions& opts) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    if (cells.empty()) return Residue(1, m);
    if (cells.size() % 2 != 0) return Residue(0, m);
    const Grid g = make_grid(cells, opts);
    const auto mod = std::uint32_t(m);
    const std::uint32_t v = profile_dp<std::uint32_t>(
        g, 1u, [mod](std::uint32_t& a, std::uint32_t b) { a = std::uint32_t((std::uint64_t(a) + b) % mod); });
    return Residue(v, m);
}

Residue residue(const Region& r, int m, const CountOptions& opts) { return residue(r.cells(), m, opts); }

namespace {

struct Backtrack {
    std::vector<int> right, up; // neighbour index or -1
    std::vector<char> covered;

    std::uint64_t run(std::size_t from) {
        while (from < covered.size() && covered[from]) ++from;
        if (from == covered.size()) return 1;
        std::uint64_t total = 0;
        covered[from] = 1;
        for (int n : {right[from], up[from]}) {
            if (n < 0 || covered[std::size_t(n)]) continue;
            covered[std::size_t(n)] = 1;
            total += run(from + 1);
            covered[std::size_t(n)] = 0;
        }
        covered[from] = 0;
        return total;
    }
};

} // namespace

BigCount count_tilings_bruteforce(const Region& r, std::size_t max_cells) {
    if (r.size() > max_cells)
        throw Error(ErrorCode::TooLarge,
                    std::to_string(r.size()) + " cells exceeds " + std::to_string(max_cells));
    if (r.size() % 2 != 0) return 0;
    const auto cells = r.cells().cells(); // sorted x-major
    auto index_of = [&](Cell c) -> int {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return it != cells.end() && *it == c ? int(it - cells.begin()) : -1;
    };
    Backtrack bt;
    bt.covered.assign(cells.size(), 0);
    for (Cell c : cells) {
        bt.right.push_back(index_of({c.x + 1, c.y}));
        bt.up.push_back(index_of({c.x, c.y + 1}));
    }
    return bt.run(0);
}

BigCount kasteleyn_rectangle(int a, int b, int max_side) {
    using Float = boost::multiprecision::number<
        boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;
    if (a < 1 || b < 1) throw std::invalid_argument("rectangle sides must be positive");
    if (a > max_side || b > max_side)
        throw Error(ErrorCode::PrecisionExceeded,
                    std::to_string(a) + "x" + std::to_string(b) + " exceeds side limit " +
                        std::to_string(max_side));
    const Float pi = boost::math::constants::pi<Float>();
    Float product = 1;
    int ops = 0;
    for (int i = 1; i <= (a + 1) / 2; ++i) {
        const Float ci = cos(pi * i / (a + 1));
        for (int j = 1; j <= (b + 1) / 2; ++j) {
            const Float cj = cos(pi * j / (b + 1));
            product *= 4 * ci * ci + 4 * cj * cj;
            ops += 8; // two cosines, squares, sum and product, each a few ulps
        }
    }
    // Relative error grows at most linearly in the number of rounded steps.
    const Float ulp = ldexp(Float(1), -126);
    const Float bound = abs(product) * ulp * (ops + 16);
    if (bound >= Float(0.25))
        throw Error(ErrorCode::PrecisionExceeded, "error bound " + bound.str(6) + " is not below 1/4");
    const Float rounded = floor(product + Float(0.5));
    return rounded.convert_to<BigCount>();
}

} // namespace domino
