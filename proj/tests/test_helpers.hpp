#pragma once

#include <initializer_list>
#include <vector>

#include "cda/array.hpp"
#include "cda/catalog.hpp"
#include "cda/interaction.hpp"
#include "cda/verify.hpp"

namespace cda::test {

// compact literal arrays for expected values
inline Array arr(int v, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<symbol_t> cells;
  int cols = -1;
  int n = 0;
  for (const auto& row : rows) {
    if (cols < 0) cols = static_cast<int>(row.size());
    for (int s : row) cells.push_back(static_cast<symbol_t>(s));
    ++n;
  }
  return Array(n, cols, v, std::move(cells));
}

inline ConsecutiveInteraction ci(int start, std::initializer_list<int> values) {
  ConsecutiveInteraction t;
  t.start_col = start;
  for (int s : values) t.values.push_back(static_cast<symbol_t>(s));
  return t;
}

inline Array seed(const char* name) { return catalog_seed(name).array; }

// Re-derive a failing report's evidence with rho/window-level scans only.
inline bool witness_rechecks(const Array& a, const VerificationReport& report) {
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  if (!w.cols.empty()) {
    // counting witness: recount the tuple on the listed columns
    std::vector<int> rows;
    for (int r = 0; r < a.rows(); ++r) {
      bool match = true;
      for (std::size_t j = 0; j < w.cols.size(); ++j)
        if (a.at(r, w.cols[j] - 1) != w.tuple[j]) {
          match = false;
          break;
        }
      if (match) rows.push_back(r + 1);
    }
    return static_cast<int>(rows.size()) == w.actual_count && rows == w.rows;
  }
  if (w.hidden && !w.masking_set.empty())
    return rho(a, *w.hidden).is_subset_of(rho_union(a, w.masking_set));
  if (w.hidden) return rho(a, *w.hidden).indices == w.rows;
  return !w.note.empty();
}

}  // namespace cda::test
