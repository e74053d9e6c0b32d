#include "cda/array.hpp"

#include <algorithm>
#include <utility>

namespace cda {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::not_a_prime_power: return "not-a-prime-power";
    case errc::ingredient: return "ingredient";
    case errc::budget: return "budget";
    case errc::verification: return "construction-verification";
    case errc::no_recipe: return "no-recipe";
    case errc::infeasible: return "infeasible-check";
    case errc::unknown_seed: return "unknown-seed";
    case errc::shape_mismatch: return "shape-mismatch";
    case errc::parse: return "parse";
  }
  return "unknown";
}

Array::Array(int rows, int cols, int alphabet, std::vector<symbol_t> cells, ArrayMeta meta)
    : rows_(rows), cols_(cols), alphabet_(alphabet), cells_(std::move(cells)), meta_(std::move(meta)) {
  if (rows_ < 1 || cols_ < 1)
    throw Error(errc::invalid_argument, "array needs at least one row and one column");
  if (alphabet_ < 2)
    throw Error(errc::invalid_argument, "alphabet size must be at least 2");
  if (cells_.size() != static_cast<std::size_t>(rows_) * cols_)
    throw Error(errc::invalid_argument, "cell count does not match rows x cols");
  for (symbol_t s : cells_)
    if (s >= alphabet_)
      throw Error(errc::invalid_argument,
                  "cell value " + std::to_string(s) + " outside alphabet 0.." +
                      std::to_string(alphabet_ - 1));
}

Array Array::with_meta(ArrayMeta meta) const {
  Array copy = *this;
  copy.meta_ = std::move(meta);
  return copy;
}

RowDivisibleArray::RowDivisibleArray(Array array, std::vector<RowRange> parts,
                                     std::vector<int> part_lambdas)
    : array_(std::move(array)), parts_(std::move(parts)), part_lambdas_(std::move(part_lambdas)) {
  if (parts_.empty()) throw Error(errc::invalid_argument, "row partition needs at least one part");
  int expect_first = 1;
  for (const RowRange& p : parts_) {
    if (p.first != expect_first || p.last < p.first)
      throw Error(errc::invalid_argument, "row parts must be contiguous ascending blocks");
    expect_first = p.last + 1;
  }
  if (expect_first != array_.rows() + 1)
    throw Error(errc::invalid_argument, "row parts must cover all rows exactly");
  if (!part_lambdas_.empty() && part_lambdas_.size() != parts_.size())
    throw Error(errc::invalid_argument, "part lambda list must match part count");
}

Array RowDivisibleArray::part(int i) const {
  const RowRange& p = parts_.at(static_cast<std::size_t>(i));
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(p.size()) * array_.cols());
  for (int r = p.first - 1; r < p.last; ++r) {
    auto row = array_.row(r);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Array(p.size(), array_.cols(), array_.alphabet(), std::move(cells));
}

RowDivisibleArray RowDivisibleArray::whole(Array array, int lambda) {
  RowRange all{1, array.rows()};
  std::vector<int> lambdas;
  if (lambda > 0) lambdas.push_back(lambda);
  return RowDivisibleArray(std::move(array), {all}, std::move(lambdas));
}

Array window(const Array& a, int start_col, int width) {
  if (width < 1 || start_col < 1 || start_col + width - 1 > a.cols())
    throw Error(errc::invalid_argument, "window outside the array's columns");
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(a.rows()) * width);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = start_col - 1; c < start_col - 1 + width; ++c) cells.push_back(a.at(r, c));
  return Array(a.rows(), width, a.alphabet(), std::move(cells));
}

Array select_columns(const Array& a, const std::vector<int>& sequence) {
  if (sequence.empty()) throw Error(errc::invalid_argument, "empty column sequence");
  for (int c : sequence)
    if (c < 1 || c > a.cols())
      throw Error(errc::invalid_argument, "column " + std::to_string(c) + " outside 1.." +
                                              std::to_string(a.cols()));
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(a.rows()) * sequence.size());
  for (int r = 0; r < a.rows(); ++r)
    for (int c : sequence) cells.push_back(a.at(r, c - 1));
  return Array(a.rows(), static_cast<int>(sequence.size()), a.alphabet(), std::move(cells));
}

Array vstack(const std::vector<Array>& parts) {
  if (parts.empty()) throw Error(errc::invalid_argument, "nothing to stack");
  const Array& head = parts.front();
  std::vector<symbol_t> cells;
  int total_rows = 0;
  for (const Array& p : parts) {
    if (p.cols() != head.cols() || p.alphabet() != head.alphabet())
      throw Error(errc::shape_mismatch, "stacked arrays must share columns and alphabet");
    total_rows += p.rows();
    cells.insert(cells.end(), p.cells().begin(), p.cells().end());
  }
  return Array(total_rows, head.cols(), head.alphabet(), std::move(cells));
}

Array derived(const Array& a, int col, symbol_t symbol) {
  if (col < 1 || col > a.cols()) throw Error(errc::invalid_argument, "derive column out of range");
  if (symbol >= a.alphabet()) throw Error(errc::invalid_argument, "derive symbol out of range");
  std::vector<symbol_t> cells;
  int rows = 0;
  for (int r = 0; r < a.rows(); ++r) {
    if (a.at(r, col - 1) != symbol) continue;
    ++rows;
    for (int c = 0; c < a.cols(); ++c)
      if (c != col - 1) cells.push_back(a.at(r, c));
  }
  if (rows == 0)
    throw Error(errc::invalid_argument, "no row carries the requested symbol in that column");
  return Array(rows, a.cols() - 1, a.alphabet(), std::move(cells));
}

bool same_rows_up_to_order(const Array& a, const Array& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.alphabet() != b.alphabet()) return false;
  auto sorted_rows = [](const Array& x) {
    std::vector<std::vector<symbol_t>> rows;
    rows.reserve(static_cast<std::size_t>(x.rows()));
    for (int r = 0; r < x.rows(); ++r) rows.emplace_back(x.row(r).begin(), x.row(r).end());
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return sorted_rows(a) == sorted_rows(b);
}

}  // namespace cda
