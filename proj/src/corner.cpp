#include "domino/corner.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace domino {

Domino canonical(Domino d) {
    if (d.second < d.first) std::swap(d.first, d.second);
    return d;
}

namespace {

auto key(const CornerDescriptor& c) {
    return std::make_tuple(c.anchor, c.orientation.index(), c.p, c.s, c.t, c.walled_s, c.walled_t);
}

struct Frame {
    const CellSet& cells;
    Cell anchor;
    Dihedral g;
    bool in(int u, int v) const { return cells.contains(anchor + g.apply({u, v})); }
};

std::pair<int, int> leg_lengths(const Frame& f, int p) {
    int s = 0;
    while (f.in(0, p - 1 + s) && !f.in(-1, p - 1 + s)) ++s;
    int t = 0;
    while (f.in(p - 1 + t, 0) && !f.in(p - 1 + t, -1)) ++t;
    return {s, t};
}

bool staircase_present(const Frame& f, int p) {
    for (int m = 0; m < p; ++m) {
        const int u = m, v = p - 1 - m;
        if (!f.in(u, v) || f.in(u - 1, v) || f.in(u, v - 1)) return false;
        if (m + 1 < p && !f.in(u + 1, v)) return false;
    }
    return true;
}

} // namespace

CornerDescriptor CornerDescriptor::normalized() const {
    if (orientation.det() > 0) return *this;
    CornerDescriptor out = *this;
    out.orientation = orientation.compose(Dihedral::swap());
    std::swap(out.s, out.t);
    std::swap(out.walled_s, out.walled_t);
    return out;
}

bool operator==(const CornerDescriptor& a, const CornerDescriptor& b) {
    return key(a.normalized()) == key(b.normalized());
}

bool operator<(const CornerDescriptor& a, const CornerDescriptor& b) {
    return key(a.normalized()) < key(b.normalized());
}

std::string to_string(const CornerDescriptor& c) {
    std::ostringstream os;
    os << "({" << c.s << "," << c.t << "};" << c.p << ")@(" << c.anchor.x << "," << c.anchor.y
       << ")/o" << c.orientation.index();
    if (c.walled_s || c.walled_t)
        os << " walled:" << (c.walled_s ? "s" : "") << (c.walled_t ? "t" : "");
    return os.str();
}

std::optional<CornerDescriptor> corner_at(const CellSet& cells, Cell anchor, Dihedral orientation,
                                          int p) {
    if (p < 1) return std::nullopt;
    Frame f{cells, anchor, orientation};
    if (!staircase_present(f, p)) return std::nullopt;
    auto [s, t] = leg_lengths(f, p);
    if (p > 1 && std::min(s, t) < 2) return std::nullopt;
    CornerDescriptor c{anchor, orientation, s, t, p};
    c.walled_s = !f.in(0, p - 1 + s);
    c.walled_t = !f.in(p - 1 + t, 0);
    return c;
}

std::vector<CornerDescriptor> find_corners(const CellSet& cells, int p_max) {
    std::vector<CornerDescriptor> out;
    for (int gi = 0; gi < 4; ++gi) {
        const Dihedral g = Dihedral::from_index(gi);
        for (Cell c0 : cells) {
            // c0 plays the role of the staircase's first cell (0, p-1).
            Frame at_c0{cells, c0, g};
            if (at_c0.in(-1, 0) || at_c0.in(0, -1)) continue;
            if (auto one = corner_at(cells, c0, g, 1)) out.push_back(*one);
            if (!at_c0.in(0, 1) || at_c0.in(-1, 1)) continue; // s-leg shorter than 2
            int run = 1;
            while (at_c0.in(run, -run) && at_c0.in(run, 1 - run) && !at_c0.in(run - 1, -run) &&
                   !at_c0.in(run, -run - 1))
                ++run;
            if (run < 2 || run > p_max) continue;
            const Cell anchor = c0 - g.apply({0, run - 1});
            if (auto c = corner_at(cells, anchor, g, run)) out.push_back(*c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CornerDescriptor> find_corners(const Region& r, int p_max) {
    return find_corners(r.cells(), p_max);
}

std::vector<Cell> strip_path(const CornerDescriptor& c, int i, int j, int shift) {
    if (i < 1 || j < 1 || i > c.s + 1 || j > c.t + 1)
        throw Error(ErrorCode::StripExceedsCorner,
                    "({" + std::to_string(i) + "," + std::to_string(j) + "}) strip in " + to_string(c));
    const int p = c.p;
    std::vector<Cell> path;
    path.reserve(std::size_t(i + j + 2 * p - 3));
    for (int r = i - 1; r >= 0; --r) path.push_back(c.cell(0, p - 1 + r, shift));
    for (int m = 0; m + 1 < p; ++m) {
        path.push_back(c.cell(m + 1, p - 1 - m, shift));
        path.push_back(c.cell(m + 1, p - 2 - m, shift));
    }
    for (int r = 1; r < j; ++r) path.push_back(c.cell(p - 1 + r, 0, shift));
    return path;
}

CellSet strip_cells(const CornerDescriptor& c, int i, int j, int shift) {
    return CellSet(strip_path(c, i, j, shift));
}

std::vector<Domino> tiled_strip(const CornerDescriptor& c, int i, int j) {
    auto path = strip_path(c, i, j);
    if (path.size() % 2 != 0)
        throw Error(ErrorCode::StripExceedsCorner, "odd strip has no tiling");
    std::vector<Domino> out;
    for (std::size_t q = 0; q < path.size(); q += 2) out.push_back(canonical({path[q], path[q + 1]}));
    return out;
}

CellSet inspection_layout(const CornerDescriptor& c, int k) {
    if (k <= 1) return strip_cells(c, 1, 1);
    CellSet out = strip_cells(c, k, k);
    for (int m = 0; k - 1 - 2 * m >= 2; ++m) {
        const int n = k - 1 - 2 * m;
        out = out.united(strip_cells(c, n, n, m + 1));
    }
    return out;
}

namespace {

bool inner_band_present(const CellSet& cells, const CornerDescriptor& c, int shift) {
    for (int m = 0; m < c.p; ++m) {
        if (!cells.contains(c.cell(m, c.p - 1 - m, shift))) return false;
        if (m + 1 < c.p && !cells.contains(c.cell(m + 1, c.p - 1 - m, shift))) return false;
    }
    return true;
}

std::pair<int, int> shifted_legs(const CellSet& cells, const CornerDescriptor& c, int shift) {
    auto in = [&](int u, int v) { return cells.contains(c.cell(u, v, shift)); };
    int s = 0;
    while (in(0, c.p - 1 + s) && !in(-1, c.p - 1 + s)) ++s;
    int t = 0;
    while (in(c.p - 1 + t, 0) && !in(c.p - 1 + t, -1)) ++t;
    return {s, t};
}

// i-completeness of the corner moved `shift` steps inward, inside `cells`.
bool i_complete(const CellSet& cells, const CornerDescriptor& c, int i, int shift) {
    if (i <= 2) return true;
    const int p = c.p;
    // The strips here are inner ones; skip the leg bound check of strip_path.
    CornerDescriptor free = c;
    free.s = free.t = i + 1;

    // Condition (1): the two cells just inside the ends of the ({i,i})-strip.
    const Cell x = c.cell(1, p + i - 2, shift);
    const Cell y = c.cell(p + i - 2, 1, shift);
    if (cells.contains(x) || cells.contains(y)) {
        if (!cells.includes(strip_cells(free, i - 1, i - 1, shift + 1))) return false;
    }

    // Condition (2): recurse on the corner left behind once the strip is gone.
    const CellSet rest = cells.minus(strip_cells(free, i, i, shift));
    if (!inner_band_present(rest, c, shift + 1)) return true;
    auto [s2, t2] = shifted_legs(rest, c, shift + 1);
    if (p > 1 && std::min(s2, t2) < 2) return true;
    if (i - 2 < 2 || i - 2 > std::min(s2, t2)) return true;
    for (int j = 3; j <= i - 2; ++j)
        if (!i_complete(rest, c, j, shift + 1)) return false;
    return true;
}

} // namespace

bool is_i_complete(const CellSet& cells, const CornerDescriptor& c, int i) {
    if (i < 2 || i > std::min(c.s, c.t)) return false;
    return i_complete(cells, c, i, 0);
}

bool is_complete_up_to(const Region& r, const CornerDescriptor& c, int k) {
    if (k < 2 || k > std::min(c.s, c.t))
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [2, " + std::to_string(std::min(c.s, c.t)) +
                        "] for " + to_string(c));
    for (int i = 3; i <= k; ++i)
        if (!i_complete(r.cells(), c, i, 0)) return false;
    return true;
}

CornerDescriptor reflect_corner(const CornerDescriptor& c, const Axis& a) {
    CornerDescriptor out = c;
    out.anchor = a.reflect(c.anchor);
    out.orientation = a.linear().compose(c.orientation);
    return out.normalized();
}

std::string to_string(const ReflectivePair& p) {
    return to_string(p.axis) + " " + to_string(p.corner_a) + " <-> " + to_string(p.corner_b) +
           " k<=" + std::to_string(p.max_certified_k);
}

bool layout_clear_of_axis(const Region& r, const CornerDescriptor& a, const Axis& axis, int k) {
    CornerDescriptor free = a;
    free.s = std::max(a.s, k);
    free.t = std::max(a.t, k);
    std::vector<Cell> kept;
    for (Cell c : inspection_layout(free, k))
        if (r.contains(c)) kept.push_back(c);
    const CellSet layout(std::move(kept));
    for (Cell c : layout)
        if (axis.cuts(c)) return false;
    return !layout.intersects(reflect_cells(layout, axis));
}

namespace {

bool pair_ok(const Region& r, const Axis& axis, const CornerDescriptor& a, int k) {
    if (k < 1 || k > std::min(a.s, a.t)) return false;
    if (k == 1 && a.p != 1) return false;
    if (k >= 2 && !is_complete_up_to(r, a, k)) return false;
    return layout_clear_of_axis(r, a, axis, k);
}

} // namespace

std::vector<ReflectivePair> find_reflective_pairs(const Region& r, const Axis& axis, int p_max, int k) {
    if (!is_symmetric(r, axis))
        throw Error(ErrorCode::NotSymmetric, to_string(axis) + " is not a symmetry axis");
    std::vector<ReflectivePair> out;
    for (const auto& a : find_corners(r, p_max)) {
        const CornerDescriptor b = reflect_corner(a, axis);
        if (!(a < b)) continue;
        if (!pair_ok(r, axis, a, k)) continue;
        out.push_back({axis, a, b, k});
    }
    return out;
}

int max_certifiable_k(const Region& r, const Axis& axis, const CornerDescriptor& a) {
    for (int k = std::min(a.s, a.t); k >= 1; --k)
        if (pair_ok(r, axis, a, k)) return k;
    return 0;
}

} // namespace domino
