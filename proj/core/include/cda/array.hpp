#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cda/types.hpp"

namespace cda {

// Provenance and claims carried alongside an array. Never part of content
// equality; the verifiers check claims, they do not trust them.
struct ArrayMeta {
  std::string family;  // construction tag or seed name, empty if unknown
  int t = 0;           // declared strength, 0 = undeclared
  int lambda = 0;      // declared index, 0 = undeclared
};

// An N x k matrix over symbols 0..v-1. Immutable after construction.
// Cells are addressed 0-based in the C++ API; every user-facing surface
// (interactions, row sets, witnesses, files) is 1-based.
class Array {
public:
  Array(int rows, int cols, int alphabet, std::vector<symbol_t> cells, ArrayMeta meta = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int alphabet() const { return alphabet_; }

  symbol_t at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const symbol_t> row(int r) const {
    return {cells_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<symbol_t>& cells() const { return cells_; }

  const ArrayMeta& meta() const { return meta_; }
  Array with_meta(ArrayMeta meta) const;

  // shape + cells; metadata ignored
  friend bool operator==(const Array& a, const Array& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.alphabet_ == b.alphabet_ &&
           a.cells_ == b.cells_;
  }

private:
  int rows_;
  int cols_;
  int alphabet_;
  std::vector<symbol_t> cells_;
  ArrayMeta meta_;
};

// Contiguous block of rows, 1-based inclusive.
struct RowRange {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

// An array whose rows are partitioned into mu ordered blocks, each claimed to
// satisfy the windowed-simplicity property on its own. part_lambdas is filled
// only when the parts are themselves consecutive orthogonal arrays.
class RowDivisibleArray {
public:
  RowDivisibleArray(Array array, std::vector<RowRange> parts, std::vector<int> part_lambdas = {});

  const Array& array() const { return array_; }
  const std::vector<RowRange>& parts() const { return parts_; }
  const std::vector<int>& part_lambdas() const { return part_lambdas_; }
  int mu() const { return static_cast<int>(parts_.size()); }

  Array part(int i) const;  // copy of block i (0-based) as a standalone array

  static RowDivisibleArray whole(Array array, int lambda = 0);  // mu = 1

private:
  Array array_;
  std::vector<RowRange> parts_;
  std::vector<int> part_lambdas_;
};

// --- structural operations ---------------------------------------------

// N x width subarray of consecutive columns, rows in original order.
// start_col is 1-based.
Array window(const Array& a, int start_col, int width);

// Array whose j-th column is column sequence[j] (1-based) of a.
Array select_columns(const Array& a, const std::vector<int>& sequence);

// Vertical stack; all parts must share cols and alphabet.
Array vstack(const std::vector<Array>& parts);

// Rows of a whose entry in column col (1-based) equals symbol, that column
// deleted. Throws if no row matches.
Array derived(const Array& a, int col, symbol_t symbol);

// true iff a and b hold the same rows as multisets (same shape required)
bool same_rows_up_to_order(const Array& a, const Array& b);

}  // namespace cda
