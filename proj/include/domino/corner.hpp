#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino/region.hpp"

namespace domino {

// A corner is described in a canonical frame where the region lies to the
// upper right of a staircase of p convex cells
//
//     c_m = (m, p-1-m),  m = 0..p-1
//
// joined by the filler cells (m+1, p-1-m). The s-leg runs up the column
// u = 0 starting at c_0; the t-leg runs right along the row v = 0 starting
// at c_{p-1}. For p = 1 both legs start at the single corner cell (0, 0).
// A descriptor maps canonical offsets into the region by
//
//     cell(u, v) = anchor + orientation.apply(u, v).
//
// find_corners only emits rotations, so s is the first leg met when walking
// the boundary counterclockwise.

struct Domino {
    Cell first;
    Cell second;
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// Same cells regardless of order.
Domino canonical(Domino d);

struct CornerDescriptor {
    Cell anchor;
    Dihedral orientation;
    int s = 1;
    int t = 1;
    int p = 1;
    bool walled_s = false;
    bool walled_t = false;

    /// Region cell at canonical offset (u, v), moved `shift` steps inward
    /// along the staircase normal.
    Cell cell(int u, int v, int shift = 0) const {
        return anchor + orientation.apply({u + shift, v + shift});
    }

    /// Equivalent descriptor with a rotation as orientation (legs swapped
    /// when the orientation is a reflection).
    CornerDescriptor normalized() const;

    friend bool operator==(const CornerDescriptor& a, const CornerDescriptor& b);
    friend bool operator<(const CornerDescriptor& a, const CornerDescriptor& b);
};

std::string to_string(const CornerDescriptor& c);

/// Every maximal ({s,t};p)-corner with p <= p_max, sorted.
std::vector<CornerDescriptor> find_corners(const Region& r, int p_max);
std::vector<CornerDescriptor> find_corners(const CellSet& cells, int p_max);

/// Re-derives the descriptor at the given frame from the cell set; nullopt if
/// the staircase is not present there.
std::optional<CornerDescriptor> corner_at(const CellSet& cells, Cell anchor, Dihedral orientation,
                                          int p);

/// Cells of the ({i,j};p)-strip hugging both legs, i along the s-leg.
/// A strip may reach one cell past a leg (the cell beyond a concave turn).
/// Throws StripExceedsCorner otherwise.
CellSet strip_cells(const CornerDescriptor& c, int i, int j, int shift = 0);

/// The strip as a path from the far end of the s-arm to the far end of the
/// t-arm; consecutive cells are edge-adjacent.
std::vector<Cell> strip_path(const CornerDescriptor& c, int i, int j, int shift = 0);

/// The unique domino tiling of an even strip.
std::vector<Domino> tiled_strip(const CornerDescriptor& c, int i, int j);

/// The cells inspected when deciding k-completeness: the ({k,k};p)-strip and
/// then ({k-1,k-1}), ({k-3,k-3}), ... strips stepping inward while the size
/// stays >= 2. For k = 1 only the corner staircase cell c_0.
CellSet inspection_layout(const CornerDescriptor& c, int k);

/// i-completeness for a single i (trivially true for i <= 2 when the legs
/// allow it). `cells` may be any cell set, not only a Region.
bool is_i_complete(const CellSet& cells, const CornerDescriptor& c, int i);

/// True iff the corner is i-complete for every i in [2, k].
/// Throws KOutOfRange unless 2 <= k <= min(s, t).
bool is_complete_up_to(const Region& r, const CornerDescriptor& c, int k);

/// Image of a corner under an axis, normalized.
CornerDescriptor reflect_corner(const CornerDescriptor& c, const Axis& a);

struct ReflectivePair {
    Axis axis;
    CornerDescriptor corner_a;
    CornerDescriptor corner_b;
    int max_certified_k = 0;
};

std::string to_string(const ReflectivePair& p);

/// Inspection layout of corner a (restricted to r) lies off the axis and
/// does not meet its own mirror image.
bool layout_clear_of_axis(const Region& r, const CornerDescriptor& a, const Axis& axis, int k);

/// Pairs of corners swapped by the axis, complete up to k (when k >= 2) and
/// certified clear of the axis at k. k = 1 is admitted only for p = 1.
/// Throws NotSymmetric when the axis does not fix r.
std::vector<ReflectivePair> find_reflective_pairs(const Region& r, const Axis& axis, int p_max, int k);

/// Largest k for which the pair is complete and certified; 0 if none.
int max_certifiable_k(const Region& r, const Axis& axis, const CornerDescriptor& a);

} // namespace domino
