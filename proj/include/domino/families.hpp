#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "domino/region.hpp"

namespace domino {

/// a rows of b cells.
Region rectangle(int a, int b);

/// i+p-1 centered rows, top to bottom: j, j+2, ..., j+2(p-1), then the
/// widest row repeated until the count is reached.
Region make_T(int i, int j, int p);

/// i+2(p-1) centered rows: widening by 2 for p rows, i-2 further widest rows,
/// then narrowing back to j. For even i this is two T(i/2, j, p) glued along
/// their widest edge.
Region make_D(int i, int j, int p);

/// Aztec diamond of order p, i.e. D(2, 2, p).
Region aztec(int p);

/// Region built from centered rows listed top to bottom. Throws
/// std::invalid_argument when two rows cannot share a center.
Region centered_rows(const std::vector<int>& lengths_top_down);

enum class Family { Rectangle, T, D, Aztec };

struct FamilySpec {
    Family family = Family::Rectangle;
    std::vector<int> params;

    /// "rect:4,8", "T:2,5,4", "D:2,2,3", "aztec:5". Throws ParseError.
    static FamilySpec parse(std::string_view text);

    Region build() const;
    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(const FamilySpec& f);

} // namespace domino
