#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domino/corner.hpp"
#include "domino/counting.hpp"

namespace domino {

/// One summand of a congruence: the region left after a surgery, split into
/// its connected components (the count is their product; no components means
/// nothing is left, which has exactly one tiling).
struct Term {
    std::string label;
    std::vector<Region> components;
    int multiplicity = 1;
    int required_modulus = 4;
    std::size_t removed = 0; // cells taken out of the parent region

    std::size_t size() const;
};

struct WeightedSubregions {
    std::vector<Term> terms;
    int modulus = 2;
    /// Labels of configurations that cannot occur in any tiling (the strips
    /// leave the region or disagree where they overlap); they contribute 0.
    std::vector<std::string> impossible;
};

BigCount term_count(const Term& t, const CountOptions& opts = {});
/// Sum of multiplicity * count over the terms, reduced mod `modulus`.
Residue evaluate(const WeightedSubregions& w, const CountOptions& opts = {});

// Surgeries. Each checks its hypotheses and throws HypothesisFailed.
// Terms that are H (resp. V) take the strip with its long leg along the
// s-leg (resp. t-leg) of the corner; the partner corner always receives the
// mirror image, so the two mixed terms are reflections of each other.

/// Parity rule: terms S (long leg along s) and T, modulus 2.
WeightedSubregions apply_2open(const Region& r, const CornerDescriptor& c, int k);
/// Parity rule at the shorter leg when that leg is walled.
WeightedSubregions apply_2wall(const Region& r, const CornerDescriptor& c);
/// Terms HH and VV (mod 4) and HV with multiplicity 2 (mod 2).
WeightedSubregions apply_4open(const Region& r, const ReflectivePair& pair, int k);
/// The open rule at the shorter leg when it is walled on both corners.
WeightedSubregions apply_4wall(const Region& r, const ReflectivePair& pair);
/// Equal walled legs on both sides: the count is a multiple of 4.
Residue apply_double_wall(const Region& r, const ReflectivePair& pair);
/// Corners joined by a straight edge of length 2*sigma split evenly by the
/// axis: terms "short" and "long", multiplicity 1, modulus 4.
WeightedSubregions apply_k2kk(const Region& r, const ReflectivePair& pair);
/// Same with a single cell between the halves (edge length 2*sigma + 1):
/// terms "cap" (multiplicity 1) and "cross" (multiplicity 2, mod 2).
WeightedSubregions apply_k2k1k(const Region& r, const ReflectivePair& pair);

/// Length of the shorter leg when that leg is walled.
std::optional<int> wall_depth(const CornerDescriptor& c);

/// True when the pair is complete and certified at exactly k.
bool certified_at(const Region& r, const ReflectivePair& pair, int k);

/// Every pair swapped by some symmetry axis of r with max_certified_k >= 1,
/// ordered by corner_a, then axis.
std::vector<ReflectivePair> certified_pairs(const Region& r, int p_max = 64);

// ---------------------------------------------------------------------------
// Recursive residue engine

struct ReduceOptions {
    int p_max = 64;
    /// Evaluate multiplicity-2 terms with the parity rules instead of the DP.
    bool parity_recursion = false;
    /// Evaluate multiplicity-2 terms mod 4 instead of mod 2.
    bool mixed_mod4 = false;
    CountOptions count;
};

struct TraceTerm {
    std::string label;
    int multiplicity = 1;
    int modulus = 4;
    int value = 0;
    std::vector<int> children; // one step per component
};

struct TraceStep {
    std::string rule;
    int modulus = 4;
    std::size_t cells = 0;
    std::string region; // content hash
    std::string axis;
    std::string corner;
    int k = 0;
    int value = 0;
    std::vector<TraceTerm> terms;
};

struct Trace {
    std::vector<TraceStep> steps; // steps[0] is the root
    int count(const std::string& rule) const;
    std::string to_json(int indent = 2) const;
};

/// #r mod 4 via the strongest applicable rule at each step: double wall,
/// 4-wall (strips clear of their mirrors), k2kk, k2k1k, then the open rule at
/// the largest certified k; DP when nothing applies.
Residue residue_mod4(const Region& r, const ReduceOptions& opts = {}, Trace* trace = nullptr);
/// #r mod 2 via the parity rules (falls back to the DP).
Residue residue_mod2(const Region& r, const ReduceOptions& opts = {}, Trace* trace = nullptr);

// ---------------------------------------------------------------------------
// Closed forms

/// T(k, 2k-1, p), T(k, 2k, p), T(k, 2k+1, p), T(k, 2k+2, p) for a..d.
Region t_variant_region(char variant, int k, int p);
/// D(k, k, p), D(k, k+1, p), D(k, k+2, p) for a..c.
Region d_variant_region(char variant, int k, int p);

Residue t_residue(char variant, int k, int p);
/// Transcribed as stated, including the p = 1 case of variant c (which the
/// exact counts contradict at k = 6 and k = 8; see the tests).
Residue d_residue(char variant, int k, int p);

} // namespace domino
