#include "domino/verify.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "domino/corner.hpp"
#include "domino/families.hpp"
#include "domino/reduction.hpp"

namespace domino {

namespace {

constexpr std::pair<Theorem, std::string_view> kTheoremNames[] = {
    {Theorem::Open4, "4open"}, {Theorem::Wall4, "4wall"}, {Theorem::Open2, "2open"},
    {Theorem::Wall2, "2wall"}, {Theorem::K2kk, "k2kk"},   {Theorem::K2k1k, "k2k1k"},
    {Theorem::DoubleWall, "doublewall"},
};

} // namespace

std::optional<Theorem> parse_theorem(std::string_view name) {
    for (auto [t, n] : kTheoremNames)
        if (n == name) return t;
    return std::nullopt;
}

std::string_view to_string(Theorem t) {
    for (auto [x, n] : kTheoremNames)
        if (x == t) return n;
    return "?";
}

std::vector<NamedRegion> family_corpus(int max_cells) {
    std::vector<NamedRegion> out;
    auto add = [&](FamilySpec spec) {
        Region r = spec.build();
        if (int(r.size()) <= max_cells) out.push_back({to_string(spec), std::move(r)});
    };
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 10; ++b) add({Family::Rectangle, {a, b}});
    // Rows grow by 2 per step, so every parameter is bounded by the cell count.
    for (Family f : {Family::T, Family::D})
        for (int i = 1; i <= max_cells; ++i)
            for (int j = 1; i * j <= max_cells; ++j)
                for (int p = 1; i + j + 2 * p <= max_cells + 4; ++p) add({f, {i, j, p}});
    for (int p = 1; 2 * p * (p + 1) <= max_cells; ++p) add({Family::Aztec, {p}});
    return out;
}

Region random_region(std::mt19937_64& rng, int n, int w, int h) {
    n = std::clamp(n, 1, w * h);
    auto pick = [&](int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng); };
    std::vector<Cell> cells{{pick(w), pick(h)}};
    std::unordered_set<Cell, CellHash> have(cells.begin(), cells.end());
    while (int(cells.size()) < n) {
        const Cell from = cells[std::size_t(pick(int(cells.size())))];
        static constexpr Cell steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        const Cell next = from + steps[pick(4)];
        if (next.x < 0 || next.y < 0 || next.x >= w || next.y >= h || have.count(next)) continue;
        have.insert(next);
        cells.push_back(next);
    }
    return Region::from_cells(std::move(cells));
}

bool is_hole_free(const Region& r) {
    // Flood the complement inside the box grown by one; every empty cell must be reached.
    const int w = r.width() + 2, h = r.height() + 2;
    std::vector<char> seen(std::size_t(w * h), 0);
    auto idx = [&](int x, int y) { return std::size_t(y * w + x); };
    auto empty = [&](int x, int y) { return !r.contains({x - 1, y - 1}); };
    std::vector<Cell> stack{{0, 0}};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
            const Cell n = c + d;
            if (n.x < 0 || n.y < 0 || n.x >= w || n.y >= h) continue;
            if (seen[idx(n.x, n.y)] || !empty(n.x, n.y)) continue;
            seen[idx(n.x, n.y)] = 1;
            ++reached;
            stack.push_back(n);
        }
    }
    return reached + r.size() == std::size_t(w * h);
}

namespace {

// Random connected set of n cells inside [0,w) x [0,h) containing `start`.
std::vector<Cell> grow(std::mt19937_64& rng, Cell start, int n, int w, int h) {
    std::vector<Cell> cells{start};
    std::unordered_set<Cell, CellHash> have{start};
    n = std::min(n, w * h);
    std::uniform_int_distribution<int> dir(0, 3);
    static constexpr Cell steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (int(cells.size()) < n) {
        const Cell from = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)];
        const Cell next = from + steps[dir(rng)];
        if (next.x < 0 || next.y < 0 || next.x >= w || next.y >= h || have.count(next)) continue;
        have.insert(next);
        cells.push_back(next);
    }
    return cells;
}

} // namespace

Region random_symmetric_region(std::mt19937_64& rng, int max_cells) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int kind = uniform(0, 3);
    const int half_max = std::max(1, max_cells / 2);
    std::vector<Cell> cells;
    if (kind <= 1) {
        // Mirror across a vertical line, either between columns or through the last one.
        const int hw = uniform(1, 5), h = uniform(1, 7);
        const bool through = uniform(0, 1) == 1;
        const int n = uniform(1, std::min(half_max, hw * h));
        const auto half = grow(rng, {hw - 1, uniform(0, h - 1)}, n, hw, h);
        const int mirror_x = through ? 2 * (hw - 1) : 2 * hw - 1;
        for (Cell c : half) {
            cells.push_back(c);
            cells.push_back({mirror_x - c.x, c.y});
        }
        if (kind == 1)
            for (auto& c : cells) std::swap(c.x, c.y);
    } else {
        const int side = uniform(1, 6);
        const int d = uniform(0, side - 1);
        const auto half = grow(rng, {d, d}, uniform(1, std::min(half_max, side * side)), side, side);
        for (Cell c : half) {
            cells.push_back(c);
            cells.push_back({c.y, c.x});
        }
        if (kind == 3)
            for (auto& c : cells) c.x = -c.x;
    }
    return Region::from_cells(std::move(cells));
}

std::vector<NamedRegion> fuzz_corpus(std::uint64_t seed, int count, int max_cells) {
    std::mt19937_64 rng(seed);
    std::vector<NamedRegion> out;
    std::unordered_set<Region, RegionHash> seen;
    for (long attempt = 0; int(out.size()) < count && attempt < 1000L * count; ++attempt) {
        Region r = random_symmetric_region(rng, max_cells);
        if (r.size() % 2 != 0 || int(r.size()) > max_cells || r.size() < 4) continue;
        if (!is_hole_free(r) || !seen.insert(r).second) continue;
        out.push_back({content_hash(r), std::move(r)});
    }
    return out;
}

namespace {

class Counter {
public:
    explicit Counter(const CountOptions& opts) : opts_(opts) {}

    const BigCount& operator()(const Region& r) {
        auto it = cache_.find(r);
        if (it == cache_.end()) it = cache_.emplace(r, count_tilings(r, opts_)).first;
        return it->second;
    }

    int rhs(const WeightedSubregions& w) {
        BigCount sum = 0;
        for (const auto& t : w.terms) {
            BigCount n = 1;
            for (const auto& c : t.components) n *= (*this)(c);
            sum += t.multiplicity * n;
        }
        return reduce(sum, w.modulus).value;
    }

private:
    CountOptions opts_;
    std::unordered_map<Region, BigCount, RegionHash> cache_;
};

template <class F>
bool attempt(F&& f) {
    try {
        f();
        return true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::HypothesisFailed) throw;
        return false;
    }
}

} // namespace

std::vector<VerifyRow> verify_theorem(Theorem theorem, const std::vector<NamedRegion>& corpus,
                                      const CountOptions& opts) {
    std::vector<VerifyRow> rows;
    Counter count(opts);
    const std::string rule(to_string(theorem));
    for (const auto& [id, r] : corpus) {
        auto row = [&](const std::string& axis, const std::string& corner, int k, const WeightedSubregions& w) {
            VerifyRow v{id, rule, axis, corner, k, w.modulus};
            v.lhs = reduce(count(r), w.modulus).value;
            v.rhs = count.rhs(w);
            rows.push_back(std::move(v));
        };

        if (theorem == Theorem::Open2 || theorem == Theorem::Wall2) {
            for (const auto& c : find_corners(r, 64)) {
                if (theorem == Theorem::Wall2) {
                    WeightedSubregions w;
                    if (attempt([&] { w = apply_2wall(r, c); })) row("", to_string(c), *wall_depth(c), w);
                    continue;
                }
                for (int k = 1; k <= std::min(c.s, c.t); ++k) {
                    WeightedSubregions w;
                    if (attempt([&] { w = apply_2open(r, c, k); })) row("", to_string(c), k, w);
                }
            }
            continue;
        }

        for (const auto& pair : certified_pairs(r)) {
            const auto axis = to_string(pair.axis);
            const auto corner = to_string(pair.corner_a);
            const auto& a = pair.corner_a;
            WeightedSubregions w;
            switch (theorem) {
            case Theorem::Open4:
                for (int k = 1; k <= pair.max_certified_k; ++k)
                    if (attempt([&] { w = apply_4open(r, pair, k); })) row(axis, corner, k, w);
                break;
            case Theorem::Wall4:
                if (attempt([&] { w = apply_4wall(r, pair); })) row(axis, corner, *wall_depth(a), w);
                break;
            case Theorem::DoubleWall:
                if (attempt([&] { apply_double_wall(r, pair); })) {
                    w.modulus = 4; // no terms: the right side is 0
                    row(axis, corner, a.s, w);
                }
                break;
            case Theorem::K2kk:
                if (attempt([&] { w = apply_k2kk(r, pair); })) row(axis, corner, 0, w);
                break;
            case Theorem::K2k1k:
                if (attempt([&] { w = apply_k2k1k(r, pair); })) row(axis, corner, 0, w);
                break;
            default: break;
            }
        }
    }
    return rows;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(std::vector<VerifyRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
        return std::tie(a.region, a.rule, a.axis, a.corner, a.k) < std::tie(b.region, b.rule, b.axis, b.corner, b.k);
    });
    std::string out = "# domino-verify v1\nregion,rule,axis,corner,k,modulus,lhs,rhs,result\n";
    for (const auto& r : rows) {
        out += csv_field(r.region) + ',' + r.rule + ',' + csv_field(r.axis) + ',' + csv_field(r.corner) + ',' +
               std::to_string(r.k) + ',' + std::to_string(r.modulus) + ',' + std::to_string(r.lhs) + ',' +
               std::to_string(r.rhs) + ',' + (r.pass() ? "pass" : "FAIL") + '\n';
    }
    return out;
}

} // namespace domino
