#include "domino/region.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace domino {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadAxisParity: return "BadAxisParity";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::StripExceedsCorner: return "StripExceedsCorner";
    case ErrorCode::FrontierTooWide: return "FrontierTooWide";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Dihedral

namespace {
constexpr Dihedral kDihedral[8] = {
    {1, 0, 0, 1},   {0, -1, 1, 0}, {-1, 0, 0, -1}, {0, 1, -1, 0}, // rotations
    {0, 1, 1, 0},   {-1, 0, 0, 1}, {0, -1, -1, 0}, {1, 0, 0, -1}, // reflections
};
}

int Dihedral::index() const {
    for (int i = 0; i < 8; ++i)
        if (kDihedral[i] == *this) return i;
    return -1;
}

Dihedral Dihedral::from_index(int i) { return kDihedral[i & 7]; }

// ---------------------------------------------------------------------------
// CellSet

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    index();
}

void CellSet::index() {
    if (cells_.empty()) {
        min_x_ = min_y_ = width_ = height_ = 0;
        bitmap_.clear();
        return;
    }
    int max_x = std::numeric_limits<int>::min(), max_y = max_x;
    min_x_ = min_y_ = std::numeric_limits<int>::max();
    for (auto c : cells_) {
        min_x_ = std::min(min_x_, c.x);
        min_y_ = std::min(min_y_, c.y);
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    width_ = max_x - min_x_ + 1;
    height_ = max_y - min_y_ + 1;
    bitmap_.assign(std::size_t(width_) * std::size_t(height_), 0);
    for (auto c : cells_)
        bitmap_[std::size_t(c.y - min_y_) * width_ + (c.x - min_x_)] = 1;
}

bool CellSet::contains(Cell c) const {
    int x = c.x - min_x_, y = c.y - min_y_;
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    return bitmap_[std::size_t(y) * width_ + x] != 0;
}

bool CellSet::includes(const CellSet& other) const {
    return std::all_of(other.begin(), other.end(), [&](Cell c) { return contains(c); });
}

bool CellSet::intersects(const CellSet& other) const {
    return std::any_of(other.begin(), other.end(), [&](Cell c) { return contains(c); });
}

CellSet CellSet::minus(const CellSet& other) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (auto c : cells_)
        if (!other.contains(c)) out.push_back(c);
    return CellSet(std::move(out));
}

CellSet CellSet::united(const CellSet& other) const {
    std::vector<Cell> out(cells_);
    out.insert(out.end(), other.begin(), other.end());
    return CellSet(std::move(out));
}

CellSet CellSet::translated(Cell by) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (auto c : cells_) out.push_back(c + by);
    return CellSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Region

namespace {

constexpr Cell kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Flood fill from `seed`; returns the cells reached in insertion order.
std::vector<Cell> flood(const CellSet& cells, Cell seed, std::vector<std::uint8_t>& seen) {
    auto slot = [&](Cell c) {
        return std::size_t(c.y - cells.min_y()) * cells.width() + (c.x - cells.min_x());
    };
    std::vector<Cell> out{seed};
    seen[slot(seed)] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto step : kSteps) {
            Cell n = out[i] + step;
            if (cells.contains(n) && !seen[slot(n)]) {
                seen[slot(n)] = 1;
                out.push_back(n);
            }
        }
    }
    return out;
}

CellSet normalized(const CellSet& cells) {
    return cells.translated({-cells.min_x(), -cells.min_y()});
}

} // namespace

bool is_connected(const CellSet& cells) {
    if (cells.empty()) return false;
    std::vector<std::uint8_t> seen(std::size_t(cells.width()) * cells.height(), 0);
    return flood(cells, *cells.begin(), seen).size() == cells.size();
}

std::vector<Region> components(const CellSet& cells) {
    std::vector<Region> out;
    if (cells.empty()) return out;
    std::vector<std::uint8_t> seen(std::size_t(cells.width()) * cells.height(), 0);
    for (auto c : cells) {
        if (seen[std::size_t(c.y - cells.min_y()) * cells.width() + (c.x - cells.min_x())]) continue;
        out.push_back(Region::from_cells(CellSet(flood(cells, c, seen))));
    }
    return out;
}

std::vector<Region> remove_cells(const Region& r, const CellSet& cells) {
    return components(r.cells().minus(cells));
}

Region Region::from_cells(std::vector<Cell> cells) { return from_cells(CellSet(std::move(cells))); }

Region Region::from_cells(const CellSet& cells) {
    if (cells.empty()) throw Error(ErrorCode::EmptyRegion, "region has no cells");
    if (!is_connected(cells)) throw Error(ErrorCode::Disconnected, "cells are not edge-connected");
    return Region(normalized(cells));
}

bool operator<(const Region& a, const Region& b) {
    auto ac = a.cells().cells(), bc = b.cells().cells();
    return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

std::size_t RegionHash::operator()(const Region& r) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto c : r.cells()) {
        h ^= CellHash{}(c);
        h *= 1099511628211ull;
    }
    return h;
}

Region parse_region(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    std::vector<Cell> cells;
    const int rows = int(lines.size());
    for (int r = 0; r < rows; ++r) {
        for (int x = 0; x < int(lines[r].size()); ++x) {
            char ch = lines[r][x];
            if (ch == '#')
                cells.push_back({x, rows - 1 - r});
            else if (ch != '.')
                throw Error(ErrorCode::BadCharacter,
                            "unexpected character '" + std::string(1, ch) + "' at line " +
                                std::to_string(r + 1));
        }
    }
    return Region::from_cells(std::move(cells));
}

std::string render_region(const Region& r) {
    std::string out;
    out.reserve(std::size_t(r.width() + 1) * r.height());
    for (int y = r.height() - 1; y >= 0; --y) {
        for (int x = 0; x < r.width(); ++x) out.push_back(r.contains({x, y}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

Region parse_region_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw Error(ErrorCode::ParseError, "expected {\"cells\": [[x, y], ...]}");
    std::vector<Cell> cells;
    for (const auto& c : j["cells"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "cell entries must be [x, y] integer pairs");
        cells.push_back({c[0].get<int>(), c[1].get<int>()});
    }
    return Region::from_cells(std::move(cells));
}

std::string region_to_json(const Region& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (auto c : r.cells()) cells.push_back({c.x, c.y});
    return nlohmann::json{{"cells", cells}}.dump();
}

Region parse_region_auto(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_region_json(text);
    return parse_region(text);
}

std::string content_hash(const Region& r) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : render_region(r)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Axis

std::string_view to_string(AxisKind kind) {
    switch (kind) {
    case AxisKind::Vertical: return "vertical";
    case AxisKind::Horizontal: return "horizontal";
    case AxisKind::DiagUp: return "diag-up";
    case AxisKind::DiagDown: return "diag-down";
    }
    return "?";
}

std::string to_string(const Axis& a) {
    return std::string(to_string(a.kind)) + "@" + std::to_string(a.offset);
}

bool Axis::valid() const {
    if (kind == AxisKind::DiagUp || kind == AxisKind::DiagDown) return offset % 2 == 0;
    return true;
}

Dihedral Axis::linear() const {
    switch (kind) {
    case AxisKind::Vertical: return {-1, 0, 0, 1};
    case AxisKind::Horizontal: return {1, 0, 0, -1};
    case AxisKind::DiagUp: return {0, 1, 1, 0};
    case AxisKind::DiagDown: return {0, -1, -1, 0};
    }
    return {};
}

Cell Axis::reflect(Cell c) const {
    const int h = offset / 2;
    switch (kind) {
    case AxisKind::Vertical: return {offset - c.x - 1, c.y};
    case AxisKind::Horizontal: return {c.x, offset - c.y - 1};
    case AxisKind::DiagUp: return {c.y + h, c.x - h};
    case AxisKind::DiagDown: return {h - c.y - 1, h - c.x - 1};
    }
    return c;
}

bool Axis::cuts(Cell c) const {
    switch (kind) {
    case AxisKind::Vertical: return offset == 2 * c.x + 1;
    case AxisKind::Horizontal: return offset == 2 * c.y + 1;
    case AxisKind::DiagUp: return 2 * (c.x - c.y) == offset;
    case AxisKind::DiagDown: return 2 * (c.x + c.y + 1) == offset;
    }
    return false;
}

CellSet reflect_cells(const CellSet& cells, const Axis& a) {
    if (!a.valid())
        throw Error(ErrorCode::BadAxisParity, to_string(a) + " does not map cells to cells");
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (auto c : cells) out.push_back(a.reflect(c));
    return CellSet(std::move(out));
}

Region reflect(const Region& r, const Axis& a) { return Region::from_cells(reflect_cells(r.cells(), a)); }

bool is_symmetric(const Region& r, const Axis& a) {
    return a.valid() && reflect_cells(r.cells(), a) == r.cells();
}

std::vector<Axis> find_symmetry_axes(const Region& r) {
    // A fixing axis must map the bounding box onto itself, which pins the
    // offset; diagonal axes additionally need a square bounding box.
    std::vector<Axis> out;
    const int w = r.width(), h = r.height();
    const Axis candidates[] = {
        {AxisKind::Vertical, w},
        {AxisKind::Horizontal, h},
        {AxisKind::DiagUp, 0},
        {AxisKind::DiagDown, 2 * w},
    };
    for (const auto& a : candidates) {
        if ((a.kind == AxisKind::DiagUp || a.kind == AxisKind::DiagDown) && w != h) continue;
        if (is_symmetric(r, a)) out.push_back(a);
    }
    return out;
}

} // namespace domino
