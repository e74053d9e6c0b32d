#pragma once

#include <cstdint>
#include <vector>

#include "cda/array.hpp"
#include "cda/bitset.hpp"
#include "cda/interaction.hpp"
#include "cda/types.hpp"

namespace cda {

// Per-test pass/fail flags for a test plan with num_tests rows.
struct OutcomeVector {
  int num_tests = 0;
  Bitset failing;  // bit r-1 set = test r failed

  static OutcomeVector all_pass(int n) { return {n, Bitset(static_cast<std::size_t>(n))}; }
  bool failed(int row) const { return failing.test(static_cast<std::size_t>(row - 1)); }
  RowSet failing_rows() const { return RowSet::from_bits(failing); }
};

enum class LocationVerdict {
  exact,           // candidate set has size <= d and explains every failure
  exceeds_budget,  // more than d candidates: more than d faults are present
  inconsistent,    // outcomes not explainable by <= d consecutive faults
};

const char* verdict_name(LocationVerdict v);

struct FaultLocationReport {
  LocationVerdict verdict = LocationVerdict::inconsistent;
  std::vector<ConsecutiveInteraction> located;  // filled iff verdict == exact
  int candidate_count = 0;
  RowSet failing_rows;
  int d = 0;
  int t = 0;
};

// A test fails iff its row covers at least one fault.
OutcomeVector simulate_outcomes(const Array& plan,
                                const std::vector<ConsecutiveInteraction>& faults);

// Decode outcomes against a (d,t) detecting plan. The candidate set is every
// interaction whose covering rows all failed; the true fault set is always a
// subset of it. Unless assume_verified, the plan's detecting property is
// checked first and a failing plan is rejected (errc::ingredient).
FaultLocationReport locate_faults(const Array& plan, int d, int t, const OutcomeVector& outcomes,
                                  bool assume_verified = false, const WorkBudget& budget = {});

// Draw a uniform fault set of size 0..d, simulate, locate; true iff the
// verdict is exact and the located set equals the drawn set.
bool localization_roundtrip_trial(const Array& plan, int d, int t, std::uint64_t seed,
                                  bool assume_verified = true, const WorkBudget& budget = {});

}  // namespace cda
