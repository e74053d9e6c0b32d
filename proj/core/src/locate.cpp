#include "cda/locate.hpp"

#include <algorithm>
#include <random>

#include "cda/verify.hpp"

namespace cda {

const char* verdict_name(LocationVerdict v) {
  switch (v) {
    case LocationVerdict::exact: return "exact";
    case LocationVerdict::exceeds_budget: return "exceeds-budget";
    case LocationVerdict::inconsistent: return "inconsistent";
  }
  return "unknown";
}

OutcomeVector simulate_outcomes(const Array& plan,
                                const std::vector<ConsecutiveInteraction>& faults) {
  for (const auto& f : faults) check_interaction(plan, f);
  OutcomeVector out = OutcomeVector::all_pass(plan.rows());
  out.failing = rho_union(plan, faults).to_bits(plan.rows());
  return out;
}

FaultLocationReport locate_faults(const Array& plan, int d, int t, const OutcomeVector& outcomes,
                                  bool assume_verified, const WorkBudget& budget) {
  if (outcomes.num_tests != plan.rows())
    throw Error(errc::shape_mismatch, "outcome vector length " +
                                          std::to_string(outcomes.num_tests) +
                                          " does not match the plan's " +
                                          std::to_string(plan.rows()) + " tests");
  if (!assume_verified) {
    VerificationReport check = is_cda_direct(plan, d, t, budget);
    if (!check.pass)
      throw Error(errc::ingredient, "plan is not a (d,t) detecting array: " + check.message);
  }

  FaultLocationReport report;
  report.d = d;
  report.t = t;
  report.failing_rows = outcomes.failing_rows();

  ColumnMasks masks(plan);
  Bitset covered(static_cast<std::size_t>(plan.rows()));
  std::vector<ConsecutiveInteraction> candidates;
  for (const auto& x : enumerate_consecutive_interactions(plan, t)) {
    Bitset bits = masks.rho_bits(x);
    if (bits.is_subset_of(outcomes.failing)) {
      candidates.push_back(x);
      covered |= bits;
    }
  }
  report.candidate_count = static_cast<int>(candidates.size());

  if (report.candidate_count > d) {
    report.verdict = LocationVerdict::exceeds_budget;
  } else if (covered == outcomes.failing) {
    report.verdict = LocationVerdict::exact;
    report.located = std::move(candidates);
  } else {
    // <= d candidates but some failing row is unexplained
    report.verdict = LocationVerdict::inconsistent;
  }
  return report;
}

bool localization_roundtrip_trial(const Array& plan, int d, int t, std::uint64_t seed,
                                  bool assume_verified, const WorkBudget& budget) {
  std::mt19937_64 rng(seed);
  const std::vector<ConsecutiveInteraction> all = enumerate_consecutive_interactions(plan, t);
  const int size = std::uniform_int_distribution<int>(0, d)(rng);

  std::vector<ConsecutiveInteraction> faults;
  std::sample(all.begin(), all.end(), std::back_inserter(faults),
              static_cast<std::size_t>(size), rng);

  FaultLocationReport report =
      locate_faults(plan, d, t, simulate_outcomes(plan, faults), assume_verified, budget);
  if (report.verdict != LocationVerdict::exact) return false;
  std::vector<ConsecutiveInteraction> got = report.located;
  std::sort(got.begin(), got.end());
  std::sort(faults.begin(), faults.end());
  return got == faults;
}

}  // namespace cda
