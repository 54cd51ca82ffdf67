#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noncompact {

/// Color assignment on the pairs (i, j), 1 <= i < j <= ell. The constraint of
/// interest: for every t, the colors of row t ({(t,j): j > t}) and of column
/// t ({(i,t): i < t}) must not meet.
class TriangleColoring {
public:
  explicit TriangleColoring(std::uint32_t ell);

  std::uint32_t ell() const { return ell_; }
  std::size_t pair_count() const { return colors_.size(); }

  std::uint8_t color(std::uint32_t i, std::uint32_t j) const { return colors_[index(i, j)]; }
  void set_color(std::uint32_t i, std::uint32_t j, std::uint8_t c);

  /// Highest color id in use (ids are contiguous from 1).
  std::uint8_t num_colors() const;

  /// One line per row i: the colors of (i, i+1) ... (i, ell), space-separated.
  std::string to_text() const;
  static TriangleColoring from_text(std::string_view text);

private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t ell_;
  std::vector<std::uint8_t> colors_;
};

/// The halving construction: pairs inside each half of {1..2^m} are colored
/// recursively with the same m-1 colors, the crossing square gets the fresh
/// m-th color. Uses exactly m colors.
TriangleColoring color_recursive(int m);

struct ColoringViolation {
  std::uint32_t t = 0;  // row/column index sharing a color
  std::uint32_t i = 0;  // (i, t) in column t
  std::uint32_t j = 0;  // (t, j) in row t
  std::uint8_t color = 0;
};

/// nullopt on accept, otherwise one violating cell pair.
std::optional<ColoringViolation> verify_coloring(const TriangleColoring& c);

/// Minimal number of colors admitting a valid coloring, by incremental
/// backtracking over cells in (j, i) order with ascending color trial and
/// first-unused-color symmetry breaking; nullopt when the cap is exceeded.
/// Backtracking scale: ell <= 16.
std::optional<TriangleColoring> min_colors_exhaustive(std::uint32_t ell, int cap);

/// Row color sets C_1..C_{ell-1} and the counting bound they certify.
struct LowerBoundCertificate {
  std::vector<std::uint64_t> row_sets;  // bit c set <=> color c in row
  bool all_nonempty = false;
  bool all_distinct = false;
  int bound = 0;            // ceil(log2(ell)) once distinctness holds
  std::uint8_t colors_used = 0;

  struct SharedPath {  // rows i < j with C_i = C_j, witnessed by (i,j), (j,j2)
    std::uint32_t i = 0, j = 0, j2 = 0;
    std::uint8_t color = 0;
  };
  std::optional<SharedPath> failure;
};

/// Requires a coloring accepted by verify_coloring. Checks that the row sets
/// are nonempty and pairwise distinct (each color(i,j) lies in C_i and not in
/// C_j), giving 2^K - 1 >= ell - 1 and hence K >= ceil(log2(ell)).
LowerBoundCertificate certify_lower_bound(const TriangleColoring& c);

}  // namespace noncompact
