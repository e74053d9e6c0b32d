#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cda/array.hpp"
#include "cda/interaction.hpp"
#include "cda/types.hpp"

namespace cda {

// Concrete evidence for a failed check, re-checkable with rho/window alone.
// Counting failures fill cols/tuple/counts/rows; detecting failures fill
// masking_set/hidden.
struct Witness {
  std::vector<int> cols;        // 1-based columns under inspection
  std::vector<symbol_t> tuple;  // offending tuple on those columns
  int expected_count = -1;
  int actual_count = -1;
  std::vector<int> rows;  // 1-based rows carrying the tuple
  std::vector<ConsecutiveInteraction> masking_set;
  std::optional<ConsecutiveInteraction> hidden;
  std::string note;
};

struct VerificationReport {
  std::string property;
  bool pass = false;
  bool optimum = false;  // set by the bound report and the detecting check
  int n = 0;
  int k = 0;
  int v = 0;
  int t = 0;
  int d = 0;
  int lambda_claimed = 0;
  int lambda_observed = -1;  // minimum observed coverage where meaningful
  std::int64_t bound = 0;    // (d+1) * v^t where meaningful
  int min_rho = -1;          // minimum |rho| over consecutive interactions
  std::optional<Witness> witness;
  std::string message;
};

// Exact multiset of row projections onto cols (1-based); absent tuples are
// not listed. Throws errc::infeasible past the tuple-space guard.
std::map<std::vector<symbol_t>, int> coverage_count(const Array& a, const std::vector<int>& cols,
                                                    const WorkBudget& budget = {});

// Covering checks: every tuple at least once, over all t-column subsets
// (is_ca) or only the k-t+1 consecutive windows (is_cca).
VerificationReport is_ca(const Array& a, int t, const WorkBudget& budget = {});
VerificationReport is_cca(const Array& a, int t, const WorkBudget& budget = {});

// Orthogonal checks: every tuple exactly lambda times.
VerificationReport is_oa(const Array& a, int t, int lambda, const WorkBudget& budget = {});
VerificationReport is_coa(const Array& a, int t, int lambda, const WorkBudget& budget = {});

// Windowed simplicity: every pair of distinct consecutive t-windows sharing
// i columns (0 <= i <= t-1) covers each merged (2t-i)-tuple at most once.
VerificationReport has_simple_property(const Array& a, int t, const WorkBudget& budget = {});

// has_simple_property + is_coa + the lambda <= v budget.
VerificationReport is_simple_coa(const Array& a, int t, int lambda, const WorkBudget& budget = {});

// is_oa + every (t+1)-column subset has all row projections distinct.
VerificationReport is_super_simple_oa(const Array& a, int t, int lambda,
                                      const WorkBudget& budget = {});

// Whole array a consecutive orthogonal array, every part windowed-simple.
VerificationReport is_row_divisible_coa(const RowDivisibleArray& rd, int t, int lambda,
                                        const WorkBudget& budget = {});

// Two simple consecutive orthogonal arrays whose vertical stack is again
// simple. Throws errc::shape_mismatch when shapes differ.
VerificationReport is_compatible(const Array& a, const Array& b, int t,
                                 const WorkBudget& budget = {});

// Definitional detecting-array check: for every size-d set of consecutive
// t-way interactions and every interaction outside it, the outside rows are
// not masked. Throws errc::infeasible past the subset-pair guard.
VerificationReport is_cda_direct(const Array& a, int d, int t, const WorkBudget& budget = {});

// Size bound N >= (d+1)v^t, per-interaction row counts >= d+1, the d < v
// necessary condition, and the optimality flag N == (d+1)v^t.
VerificationReport cdan_bound_report(const Array& a, int d, int t, const WorkBudget& budget = {});

// Empirical two-sided equivalence at N == (d+1)v^t: windowed simplicity at
// index d+1 and the direct detecting check must agree.
VerificationReport equivalence_crosscheck(const Array& a, int d, int t,
                                          const WorkBudget& budget = {});

std::int64_t checked_pow(int base, int exp);  // overflow-guarded

}  // namespace cda
