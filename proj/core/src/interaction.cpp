#include "cda/interaction.hpp"

#include <algorithm>

namespace cda {

bool RowSet::contains(int row) const {
  return std::binary_search(indices.begin(), indices.end(), row);
}

bool RowSet::is_subset_of(const RowSet& other) const {
  return std::includes(other.indices.begin(), other.indices.end(), indices.begin(), indices.end());
}

RowSet RowSet::from_bits(const Bitset& bits) {
  RowSet out;
  for (std::size_t pos : bits.positions()) out.indices.push_back(static_cast<int>(pos) + 1);
  return out;
}

Bitset RowSet::to_bits(int num_rows) const {
  Bitset bits(static_cast<std::size_t>(num_rows));
  for (int r : indices) bits.set(static_cast<std::size_t>(r - 1));
  return bits;
}

void check_interaction(const Array& a, const ConsecutiveInteraction& t) {
  const int width = t.strength();
  if (width < 1) throw Error(errc::invalid_argument, "interaction needs at least one value");
  if (t.start_col < 1 || t.start_col + width - 1 > a.cols())
    throw Error(errc::invalid_argument,
                "interaction columns " + std::to_string(t.start_col) + ".." +
                    std::to_string(t.start_col + width - 1) + " outside 1.." +
                    std::to_string(a.cols()));
  for (symbol_t s : t.values)
    if (s >= a.alphabet())
      throw Error(errc::invalid_argument, "interaction symbol outside the alphabet");
}

RowSet rho(const Array& a, const ConsecutiveInteraction& t) {
  check_interaction(a, t);
  RowSet out;
  const int base = t.start_col - 1;
  for (int r = 0; r < a.rows(); ++r) {
    bool covers = true;
    for (int j = 0; j < t.strength(); ++j) {
      if (a.at(r, base + j) != t.values[static_cast<std::size_t>(j)]) {
        covers = false;
        break;
      }
    }
    if (covers) out.indices.push_back(r + 1);
  }
  return out;
}

RowSet rho_union(const Array& a, const std::vector<ConsecutiveInteraction>& ts) {
  Bitset bits(static_cast<std::size_t>(a.rows()));
  for (const auto& t : ts) bits |= rho(a, t).to_bits(a.rows());
  return RowSet::from_bits(bits);
}

ColumnMasks::ColumnMasks(const Array& a) : alphabet_(a.alphabet()), num_rows_(a.rows()) {
  masks_.assign(static_cast<std::size_t>(a.cols()) * alphabet_,
                Bitset(static_cast<std::size_t>(num_rows_)));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      masks_[static_cast<std::size_t>(c) * alphabet_ + a.at(r, c)].set(static_cast<std::size_t>(r));
}

Bitset ColumnMasks::rho_bits(const ConsecutiveInteraction& t) const {
  Bitset bits = mask(t.start_col - 1, t.values[0]);
  for (int j = 1; j < t.strength(); ++j)
    bits &= mask(t.start_col - 1 + j, t.values[static_cast<std::size_t>(j)]);
  return bits;
}

std::vector<ConsecutiveInteraction> enumerate_consecutive_interactions(int k, int v, int t) {
  if (t < 1) throw Error(errc::invalid_argument, "strength must be positive");
  if (t > k) throw Error(errc::invalid_argument, "strength exceeds the number of columns");
  std::vector<ConsecutiveInteraction> out;
  std::vector<symbol_t> values(static_cast<std::size_t>(t), 0);
  for (int start = 1; start <= k - t + 1; ++start) {
    std::fill(values.begin(), values.end(), symbol_t{0});
    while (true) {
      out.push_back({start, values});
      // lexicographic increment, leftmost value most significant
      int pos = t - 1;
      while (pos >= 0) {
        const int next = values[static_cast<std::size_t>(pos)] + 1;
        if (next < v) {
          values[static_cast<std::size_t>(pos)] = static_cast<symbol_t>(next);
          break;
        }
        values[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

std::vector<ConsecutiveInteraction> enumerate_consecutive_interactions(const Array& a, int t) {
  return enumerate_consecutive_interactions(a.cols(), a.alphabet(), t);
}

}  // namespace cda
