#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "domino/counting.hpp"
#include "domino/region.hpp"

namespace domino {

enum class Theorem { Open4, Wall4, Open2, Wall2, K2kk, K2k1k, DoubleWall };

/// "4open", "4wall", "2open", "2wall", "k2kk", "k2k1k", "doublewall".
std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view to_string(Theorem t);

struct NamedRegion {
    std::string id;
    Region region;
};

/// Rectangles a x b (a <= 6, b <= 10), T(i,j,p) and D(i,j,p) with at most
/// max_cells cells, and Aztec diamonds within the same bound.
std::vector<NamedRegion> family_corpus(int max_cells);

/// Random edge-connected region of exactly n cells grown inside a w x h box.
Region random_region(std::mt19937_64& rng, int n, int w, int h);

/// No cell-free pocket is enclosed by the region.
bool is_hole_free(const Region& r);

/// Region of at most max_cells cells with a vertical, horizontal or diagonal
/// symmetry axis, built by mirroring a random half.
Region random_symmetric_region(std::mt19937_64& rng, int max_cells);

/// `count` distinct hole-free symmetric regions of even area, ids are
/// content hashes. Deterministic in the seed.
std::vector<NamedRegion> fuzz_corpus(std::uint64_t seed, int count, int max_cells);

struct VerifyRow {
    std::string region;
    std::string rule;
    std::string axis;
    std::string corner;
    int k = 0;
    int modulus = 4;
    int lhs = 0; // #R mod m
    int rhs = 0; // weighted sum of term counts mod m
    bool pass() const { return lhs == rhs; }
};

/// Every instance of the theorem whose hypotheses hold in the corpus, with
/// exact counts on both sides.
std::vector<VerifyRow> verify_theorem(Theorem t, const std::vector<NamedRegion>& corpus,
                                      const CountOptions& opts = {});

/// Versioned header comment, column names, rows sorted.
std::string to_csv(std::vector<VerifyRow> rows);

/// Quotes a field when it contains a comma or a quote.
std::string csv_field(std::string_view s);

} // namespace domino
