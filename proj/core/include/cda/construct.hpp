#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cda/array.hpp"
#include "cda/types.hpp"

namespace cda {

// Every construction re-verifies its postcondition before returning and
// throws errc::ingredient / errc::verification instead of handing back an
// unchecked array. Row order is deterministic: lexicographic over the
// generating indices.

enum class RecipeFamily {
  zero_sum,
  bush,
  bush_even,
  macneish,
  derive_stack,
  wraparound,
  double_wrap,
  column_select,
  inflate,
  weighting,
  juxtapose,
  seed,
};

const char* recipe_family_name(RecipeFamily f);

enum class RecipeCase { four_t_plus_two, six_u };

// One weighting ingredient: m_i copies of a mu_i-row-divisible array of
// index lambda_i.
struct RecipeIngredient {
  int mu = 1;
  int lambda = 1;
  int multiplicity = 0;
  friend bool operator==(const RecipeIngredient&, const RecipeIngredient&) = default;
};

// Provenance record attached to constructed arrays; also the output of the
// integer-recipe solver.
struct Recipe {
  RecipeFamily family = RecipeFamily::weighting;
  int t = 0;
  int v = 0;       // target alphabet
  int lambda = 0;  // target index
  int q = 0;
  int v1 = 0;  // weighting factor alphabets
  int v2 = 0;
  int eta = 1;
  std::vector<int> column_sequence;
  std::vector<RecipeIngredient> ingredients;
  std::string to_string() const;
};

// All v^t t-tuples over Z_v, each extended by the negated row sum mod v.
// An orthogonal array of strength t with t+1 columns, index 1.
Array zero_sum_oa(int t, int v);

// Index-1 orthogonal array of strength t with q+1 columns over GF(q): one
// row per polynomial of degree < t, columns are the evaluations at each
// field element (ascending label) plus the leading coefficient. Needs t < q.
Array bush_oa(int t, int q);

// Strength-3 index-1 orthogonal array with q+2 columns for q = 2^m >= 4:
// quadratic evaluations plus both higher coefficient columns.
Array bush_oa_even(int q);

// Symbol-paired product of two same-width index-1 orthogonal arrays:
// cell = a_cell * v2 + b_cell over alphabet v1*v2.
Array macneish_product(const Array& a, const Array& b, int t);

// Stack lambda derived arrays of a strength-(t+1) index-1 orthogonal array:
// rows with a fixed symbol in column col, that column deleted. Defaults pick
// the last column and symbols 0..lambda-1. Output is a super-simple OA of
// strength t, index lambda. lambda > v violates the index budget.
Array derive_stack_ssoa(const Array& a, int t_plus_1, int lambda);  // col = last
Array derive_stack_ssoa(const Array& a, int t_plus_1, int col, int lambda);
Array derive_stack_ssoa(const Array& a, int t_plus_1, int col, const std::vector<symbol_t>& symbols);

// Append copies of the first t-1 columns to a super-simple OA: a simple
// consecutive orthogonal array with k+t-1 columns.
Array wraparound_coa(const Array& a, int t);

// Strength-2 double wraparound to 2k+1 columns (k > 4); the column sequence
// depends on the parity of k and the result is verified before return.
Array double_wrap_coa(const Array& a);

// Array whose j-th column is column sequence[j] of a, verified against the
// caller-declared (t, lambda) simplicity claim.
Array column_select_coa(const Array& a, const std::vector<int>& sequence, int t, int lambda);

// Vertical stack of simple consecutive orthogonal arrays with the part
// structure recorded; the whole has index = sum of part indices.
RowDivisibleArray juxtapose(const std::vector<Array>& parts, int t);

// Pair part i of a with bs[i]: every row-pair becomes a row of paired
// symbols (x, y) -> x*v2 + y. Parts of the output stay windowed-simple; the
// whole is verified simple exactly when the bs members are pairwise
// compatible.
RowDivisibleArray inflate_product(const RowDivisibleArray& a, const std::vector<Array>& bs, int t);

// Weighting: replicate ingredient i multiplicity_i times, stack, pair each
// part with a distinct member of bs, inflate, stack. Requires
// sum(m_i * mu_i) <= |bs|; output index is eta * sum(m_i * lambda_i).
Array weighting_combine(const std::vector<std::pair<RowDivisibleArray, int>>& ingredients,
                        const std::vector<Array>& bs, int t);

// The v derived arrays of a strength-(t+1) index-1 orthogonal array on a
// fixed column, pairwise-compatible consecutive orthogonal arrays.
std::vector<Array> compatible_family_from_oa(const Array& a, int col, int t);

// Closed-form solutions of the integer recipe systems behind the weighting
// construction for v = 4t+2 (t >= 2) and v = 6u (u > 1, gcd(u,6) = 1).
// lambda = v-1 in the 6u case has no recipe.
Recipe recipe_solver(int target_lambda, int v, RecipeCase recipe_case);

}  // namespace cda
