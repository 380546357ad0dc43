#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "domino/error.hpp"

namespace domino {

/// Unit square of the lattice whose lower-left corner is (x, y).
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
    friend constexpr Cell operator+(Cell a, Cell b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Cell operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
};

struct CellHash {
    std::size_t operator()(Cell c) const noexcept {
        return std::hash<std::uint64_t>{}((std::uint64_t(std::uint32_t(c.x)) << 32) | std::uint32_t(c.y));
    }
};

/// One of the eight symmetries of the square acting on cell offsets:
/// (u, v) -> (a*u + b*v, c*u + d*v).
struct Dihedral {
    int a = 1, b = 0, c = 0, d = 1;

    friend constexpr bool operator==(const Dihedral&, const Dihedral&) = default;

    constexpr Cell apply(Cell o) const { return {a * o.x + b * o.y, c * o.x + d * o.y}; }
    constexpr int det() const { return a * d - b * c; }
    /// (*this) after `inner`.
    constexpr Dihedral compose(const Dihedral& inner) const {
        return {a * inner.a + b * inner.c, a * inner.b + b * inner.d,
                c * inner.a + d * inner.c, c * inner.b + d * inner.d};
    }
    /// Stable index 0..7; rotations (det +1) are 0..3.
    int index() const;
    static Dihedral from_index(int i);

    static constexpr Dihedral identity() { return {1, 0, 0, 1}; }
    static constexpr Dihedral swap() { return {0, 1, 1, 0}; }
};

/// Arbitrary finite set of cells, kept sorted. No connectivity or
/// normalization requirement; used for surgery intermediates.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells);
    CellSet(std::initializer_list<Cell> cells) : CellSet(std::vector<Cell>(cells)) {}

    bool contains(Cell c) const;
    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    std::span<const Cell> cells() const { return cells_; }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    int min_x() const { return min_x_; }
    int min_y() const { return min_y_; }
    int width() const { return width_; }
    int height() const { return height_; }

    bool includes(const CellSet& other) const;
    bool intersects(const CellSet& other) const;
    CellSet minus(const CellSet& other) const;
    CellSet united(const CellSet& other) const;
    CellSet translated(Cell by) const;

    friend bool operator==(const CellSet& a, const CellSet& b) { return a.cells_ == b.cells_; }

private:
    void index();

    std::vector<Cell> cells_;
    std::vector<std::uint8_t> bitmap_;
    int min_x_ = 0, min_y_ = 0, width_ = 0, height_ = 0;
};

/// Nonempty edge-connected cell set translated so that min x = min y = 0.
class Region {
public:
    /// Validates and normalizes. Throws EmptyRegion or Disconnected.
    static Region from_cells(std::vector<Cell> cells);
    static Region from_cells(const CellSet& cells);

    const CellSet& cells() const { return cells_; }
    bool contains(Cell c) const { return cells_.contains(c); }
    std::size_t size() const { return cells_.size(); }
    int width() const { return cells_.width(); }
    int height() const { return cells_.height(); }

    friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }
    friend bool operator<(const Region& a, const Region& b);

private:
    explicit Region(CellSet cells) : cells_(std::move(cells)) {}
    CellSet cells_;
};

struct RegionHash {
    std::size_t operator()(const Region& r) const noexcept;
};

bool is_connected(const CellSet& cells);
/// Edge-connected components, each normalized, ordered by their smallest
/// original cell.
std::vector<Region> components(const CellSet& cells);
/// Connected components of r minus `cells`; empty when everything is removed.
std::vector<Region> remove_cells(const Region& r, const CellSet& cells);

/// ASCII grid: '#' cell, '.' empty; first line is the top row.
Region parse_region(std::string_view text);
std::string render_region(const Region& r);
/// {"cells": [[x, y], ...]}
Region parse_region_json(std::string_view text);
std::string region_to_json(const Region& r);
/// Detects JSON by a leading '{'.
Region parse_region_auto(std::string_view text);

/// FNV-1a of the ASCII rendering, 16 hex digits.
std::string content_hash(const Region& r);

// ---------------------------------------------------------------------------
// Reflection axes

enum class AxisKind { Vertical, Horizontal, DiagUp, DiagDown };

std::string_view to_string(AxisKind kind);

/// Reflection line stored with a doubled offset:
///   Vertical   x     = offset / 2
///   Horizontal y     = offset / 2
///   DiagUp     x - y = offset / 2
///   DiagDown   x + y = offset / 2
/// Diagonal axes map cells to cells only for even offsets.
struct Axis {
    AxisKind kind = AxisKind::Vertical;
    int offset = 0;

    friend auto operator<=>(const Axis&, const Axis&) = default;

    bool valid() const;
    /// Linear part acting on cell offsets.
    Dihedral linear() const;
    Cell reflect(Cell c) const;
    /// True iff the line passes through the open interior of c.
    bool cuts(Cell c) const;
};

std::string to_string(const Axis& a);

/// Exact image (not normalized). Throws BadAxisParity.
CellSet reflect_cells(const CellSet& cells, const Axis& a);
/// Normalized image.
Region reflect(const Region& r, const Axis& a);
bool is_symmetric(const Region& r, const Axis& a);
/// Every axis fixing r, searched over offsets spanning its bounding box.
std::vector<Axis> find_symmetry_axes(const Region& r);

} // namespace domino
