#pragma once

#include <compare>
#include <vector>

#include "cda/array.hpp"
#include "cda/bitset.hpp"
#include "cda/types.hpp"

namespace cda {

// An assignment of t symbol values to t consecutive factors, starting at
// column start_col (1-based). The targeted columns are
// start_col .. start_col + strength - 1.
struct ConsecutiveInteraction {
  int start_col = 1;
  std::vector<symbol_t> values;

  int strength() const { return static_cast<int>(values.size()); }

  friend auto operator<=>(const ConsecutiveInteraction&, const ConsecutiveInteraction&) = default;
};

// Sorted 1-based row indices.
struct RowSet {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
  bool empty() const { return indices.empty(); }
  bool contains(int row) const;
  bool is_subset_of(const RowSet& other) const;

  static RowSet from_bits(const Bitset& bits);  // bit i -> row i+1
  Bitset to_bits(int num_rows) const;

  friend bool operator==(const RowSet&, const RowSet&) = default;
};

// throws errc::invalid_argument unless the interaction targets valid columns
// and in-range symbols of a
void check_interaction(const Array& a, const ConsecutiveInteraction& t);

// Rows of a covering the interaction: exactly the r with
// a[r, i+j-1] = values[j] for all j. Definitional scan.
RowSet rho(const Array& a, const ConsecutiveInteraction& t);

// Union over a set of interactions; empty input -> empty set.
RowSet rho_union(const Array& a, const std::vector<ConsecutiveInteraction>& ts);

// Per-(column, symbol) row masks, the fast path behind the detecting-array
// scan and the fault decoder. Agreement with the definitional rho is a tested
// invariant.
class ColumnMasks {
public:
  explicit ColumnMasks(const Array& a);

  const Bitset& mask(int col0, symbol_t s) const {  // 0-based column
    return masks_[static_cast<std::size_t>(col0) * alphabet_ + s];
  }
  Bitset rho_bits(const ConsecutiveInteraction& t) const;

private:
  int alphabet_;
  int num_rows_;
  std::vector<Bitset> masks_;
};

// All (k-t+1)*v^t consecutive t-way interactions in deterministic order:
// start column ascending, then values lexicographic.
std::vector<ConsecutiveInteraction> enumerate_consecutive_interactions(const Array& a, int t);
std::vector<ConsecutiveInteraction> enumerate_consecutive_interactions(int k, int v, int t);

}  // namespace cda
