#include "noncompact/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace noncompact {

TriangleColoring::TriangleColoring(std::uint32_t ell) : ell_(ell) {
  if (ell < 2) throw std::invalid_argument("TriangleColoring: ell must be at least 2");
  if (ell > (1u << 14)) throw std::invalid_argument("TriangleColoring: ell too large");
  colors_.assign(static_cast<std::size_t>(ell) * (ell - 1) / 2, 0);
}

std::size_t TriangleColoring::index(std::uint32_t i, std::uint32_t j) const {
  if (!(1 <= i && i < j && j <= ell_)) {
    throw std::out_of_range("TriangleColoring: pair out of range");
  }
  return static_cast<std::size_t>(j - 2) * (j - 1) / 2 + (i - 1);
}

void TriangleColoring::set_color(std::uint32_t i, std::uint32_t j, std::uint8_t c) {
  if (c == 0) throw std::invalid_argument("TriangleColoring: color ids start at 1");
  colors_[index(i, j)] = c;
}

std::uint8_t TriangleColoring::num_colors() const {
  std::uint8_t k = 0;
  for (auto c : colors_) k = std::max(k, c);
  return k;
}

std::string TriangleColoring::to_text() const {
  std::string out;
  for (std::uint32_t i = 1; i < ell_; ++i) {
    for (std::uint32_t j = i + 1; j <= ell_; ++j) {
      if (j > i + 1) out += ' ';
      out += std::to_string(static_cast<int>(color(i, j)));
    }
    out += '\n';
  }
  return out;
}

TriangleColoring TriangleColoring::from_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> row;
    int c;
    while (ls >> c) row.push_back(c);
    rows.push_back(std::move(row));
  }
  std::uint32_t ell = static_cast<std::uint32_t>(rows.size()) + 1;
  TriangleColoring out(ell);
  for (std::uint32_t i = 1; i < ell; ++i) {
    if (rows[i - 1].size() != ell - i) {
      throw std::invalid_argument("TriangleColoring::from_text: ragged row lengths");
    }
    for (std::uint32_t j = i + 1; j <= ell; ++j) {
      int c = rows[i - 1][j - i - 1];
      if (c < 1 || c > 255) throw std::invalid_argument("TriangleColoring::from_text: bad color id");
      out.set_color(i, j, static_cast<std::uint8_t>(c));
    }
  }
  return out;
}

namespace {

void fill_recursive(TriangleColoring& c, std::uint32_t lo, std::uint32_t size, std::uint8_t fresh) {
  if (size <= 1) return;
  std::uint32_t half = size / 2;
  for (std::uint32_t i = lo; i < lo + half; ++i) {
    for (std::uint32_t j = lo + half; j < lo + size; ++j) c.set_color(i, j, fresh);
  }
  fill_recursive(c, lo, half, fresh - 1);
  fill_recursive(c, lo + half, half, fresh - 1);
}

}  // namespace

TriangleColoring color_recursive(int m) {
  if (m < 1 || m > 14) throw std::invalid_argument("color_recursive: m must lie in 1..14");
  TriangleColoring c(1u << m);
  fill_recursive(c, 1, 1u << m, static_cast<std::uint8_t>(m));
  return c;
}

std::optional<ColoringViolation> verify_coloring(const TriangleColoring& c) {
  const std::uint32_t ell = c.ell();
  if (c.num_colors() > 63) throw std::invalid_argument("verify_coloring: more than 63 colors");
  std::vector<std::uint64_t> row_mask(ell + 1, 0), col_mask(ell + 1, 0);
  for (std::uint32_t j = 2; j <= ell; ++j) {
    for (std::uint32_t i = 1; i < j; ++i) {
      std::uint8_t col = c.color(i, j);
      if (col == 0) throw std::invalid_argument("verify_coloring: uncolored pair");
      row_mask[i] |= std::uint64_t{1} << col;
      col_mask[j] |= std::uint64_t{1} << col;
    }
  }
  for (std::uint32_t t = 2; t < ell; ++t) {
    std::uint64_t shared = row_mask[t] & col_mask[t];
    if (shared == 0) continue;
    std::uint8_t color = static_cast<std::uint8_t>(std::countr_zero(shared));
    ColoringViolation v;
    v.t = t;
    v.color = color;
    for (std::uint32_t i = 1; i < t; ++i) {
      if (c.color(i, t) == color) {
        v.i = i;
        break;
      }
    }
    for (std::uint32_t j = t + 1; j <= ell; ++j) {
      if (c.color(t, j) == color) {
        v.j = j;
        break;
      }
    }
    return v;
  }
  return std::nullopt;
}

namespace {

struct Search {
  std::uint32_t ell;
  int num_colors;
  TriangleColoring* out;
  std::vector<std::vector<int>> row_count;  // row_count[t][c]
  std::vector<std::vector<int>> col_count;

  bool assignable(std::uint32_t i, std::uint32_t j, int c) const {
    // color joins row i and column j; it must avoid column i and row j
    return col_count[i][c] == 0 && row_count[j][c] == 0;
  }

  bool dfs(std::uint32_t i, std::uint32_t j, int used) {
    if (j > ell) return true;
    std::uint32_t ni = i + 1, nj = j;
    if (ni >= j) {
      ni = 1;
      ++nj;
    }
    int limit = std::min(num_colors, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (!assignable(i, j, c)) continue;
      out->set_color(i, j, static_cast<std::uint8_t>(c));
      ++row_count[i][c];
      ++col_count[j][c];
      if (dfs(ni, nj, std::max(used, c))) return true;
      --row_count[i][c];
      --col_count[j][c];
    }
    return false;
  }
};

}  // namespace

std::optional<TriangleColoring> min_colors_exhaustive(std::uint32_t ell, int cap) {
  if (ell < 2 || ell > 16) {
    throw std::invalid_argument("min_colors_exhaustive: ell must lie in 2..16");
  }
  if (cap < 1) throw std::invalid_argument("min_colors_exhaustive: cap must be positive");
  for (int k = 1; k <= cap; ++k) {
    TriangleColoring attempt(ell);
    Search s{ell, k, &attempt,
             std::vector<std::vector<int>>(ell + 1, std::vector<int>(k + 1, 0)),
             std::vector<std::vector<int>>(ell + 1, std::vector<int>(k + 1, 0))};
    if (s.dfs(1, 2, 0)) return attempt;
  }
  return std::nullopt;
}

LowerBoundCertificate certify_lower_bound(const TriangleColoring& c) {
  if (verify_coloring(c).has_value()) {
    throw std::invalid_argument("certify_lower_bound: coloring fails verification");
  }
  const std::uint32_t ell = c.ell();
  LowerBoundCertificate cert;
  cert.colors_used = c.num_colors();
  cert.row_sets.assign(ell - 1, 0);
  for (std::uint32_t i = 1; i < ell; ++i) {
    for (std::uint32_t j = i + 1; j <= ell; ++j) {
      cert.row_sets[i - 1] |= std::uint64_t{1} << c.color(i, j);
    }
  }
  cert.all_nonempty =
      std::all_of(cert.row_sets.begin(), cert.row_sets.end(), [](std::uint64_t s) { return s != 0; });

  // the membership argument behind distinctness: color(i,j) sits in C_i and
  // cannot reappear in row j
  for (std::uint32_t i = 1; i < ell; ++i) {
    for (std::uint32_t j = i + 1; j < ell; ++j) {
      std::uint8_t color = c.color(i, j);
      if ((cert.row_sets[j - 1] >> color) & 1u) {
        LowerBoundCertificate::SharedPath path;
        path.i = i;
        path.j = j;
        path.color = color;
        for (std::uint32_t j2 = j + 1; j2 <= ell; ++j2) {
          if (c.color(j, j2) == color) {
            path.j2 = j2;
            break;
          }
        }
        cert.failure = path;
        cert.all_distinct = false;
        return cert;
      }
    }
  }

  std::vector<std::uint64_t> sorted = cert.row_sets;
  std::sort(sorted.begin(), sorted.end());
  cert.all_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (cert.all_nonempty && cert.all_distinct) {
    cert.bound = std::bit_width(ell - 1u);  // 2^K >= ell
  }
  return cert;
}

}  // namespace noncompact
