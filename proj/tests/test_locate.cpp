#include <algorithm>

#include "cda/locate.hpp"
#include "cda/verify.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace cda;
using cda::test::ci;
using cda::test::seed;

TEST_CASE("simulation marks exactly the covering rows") {
  Array plan = seed("coa2-2-4-2");
  CHECK(simulate_outcomes(plan, {}).failing.none());

  OutcomeVector one = simulate_outcomes(plan, {ci(2, {1, 1})});
  CHECK(one.failing_rows().indices == std::vector<int>{2, 5});

  OutcomeVector two = simulate_outcomes(plan, {ci(1, {0, 0}), ci(1, {1, 1})});
  CHECK(two.failing_rows().indices == std::vector<int>{1, 4, 5, 8});

  CHECK_THROWS_AS(simulate_outcomes(plan, {ci(4, {0, 0})}), Error);
}

TEST_CASE("decoding a single fault") {
  Array plan = seed("coa2-2-4-2");
  OutcomeVector outcomes = simulate_outcomes(plan, {ci(2, {1, 1})});
  FaultLocationReport report = locate_faults(plan, 1, 2, outcomes);
  CHECK(report.verdict == LocationVerdict::exact);
  REQUIRE(report.located.size() == 1);
  CHECK(report.located[0] == ci(2, {1, 1}));
  CHECK(report.failing_rows.indices == std::vector<int>{2, 5});
}

TEST_CASE("two faults exceed a d=1 budget") {
  Array plan = seed("coa2-2-4-2");
  OutcomeVector outcomes = simulate_outcomes(plan, {ci(1, {0, 0}), ci(1, {1, 1})});
  FaultLocationReport report = locate_faults(plan, 1, 2, outcomes);
  CHECK(report.verdict == LocationVerdict::exceeds_budget);
  CHECK(report.candidate_count == 2);
  CHECK(report.located.empty());
}

TEST_CASE("all-pass outcomes decode to the empty fault set") {
  Array plan = seed("coa2-2-4-2");
  FaultLocationReport report = locate_faults(plan, 1, 2, OutcomeVector::all_pass(8));
  CHECK(report.verdict == LocationVerdict::exact);
  CHECK(report.located.empty());
  CHECK(report.candidate_count == 0);
}

TEST_CASE("unexplainable outcomes are flagged, never guessed") {
  Array plan = seed("coa2-2-4-2");
  // a single failing row covers no interaction completely: every rho has 2 rows
  OutcomeVector odd = OutcomeVector::all_pass(8);
  odd.failing.set(0);
  FaultLocationReport report = locate_faults(plan, 1, 2, odd);
  CHECK(report.verdict == LocationVerdict::inconsistent);
  CHECK(report.candidate_count == 0);
}

TEST_CASE("outcome length must match the plan") {
  CHECK_THROWS_AS(locate_faults(seed("coa2-2-4-2"), 1, 2, OutcomeVector::all_pass(9)), Error);
}

TEST_CASE("plans are verified unless the caller opts out") {
  Array cca = seed("cca-9-2-21-3");  // covering but not detecting
  CHECK_THROWS_AS(locate_faults(cca, 1, 2, OutcomeVector::all_pass(9)), Error);
  CHECK(locate_faults(cca, 1, 2, OutcomeVector::all_pass(9), /*assume_verified=*/true).verdict ==
        LocationVerdict::exact);
}

TEST_CASE("exhaustive round trip over every fault set, d = 1") {
  Array plan = seed("coa2-2-4-2");
  auto all = enumerate_consecutive_interactions(plan, 2);
  int cases = 1;  // the empty set
  {
    FaultLocationReport r = locate_faults(plan, 1, 2, simulate_outcomes(plan, {}), true);
    CHECK(r.verdict == LocationVerdict::exact);
  }
  for (const auto& fault : all) {
    FaultLocationReport r = locate_faults(plan, 1, 2, simulate_outcomes(plan, {fault}), true);
    REQUIRE(r.verdict == LocationVerdict::exact);
    REQUIRE(r.located == std::vector<ConsecutiveInteraction>{fault});
    ++cases;
  }
  CHECK(cases == 13);  // empty set plus 12 singletons
}

TEST_CASE("seeded random round trips") {
  Array plan = seed("coa2-2-4-2");
  for (std::uint64_t s = 0; s < 1000; ++s) CHECK(localization_roundtrip_trial(plan, 1, 2, s));
  Array plan27 = seed("coa3-2-6-3");
  for (std::uint64_t s = 0; s < 1000; ++s) CHECK(localization_roundtrip_trial(plan27, 2, 2, s));
}

TEST_CASE("over-budget injections never decode to a wrong exact verdict") {
  Array plan = seed("coa2-2-4-2");
  auto all = enumerate_consecutive_interactions(plan, 2);
  // every pair of distinct interactions against the d=1 decoder
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      FaultLocationReport r =
          locate_faults(plan, 1, 2, simulate_outcomes(plan, {all[i], all[j]}), true);
      CHECK(r.verdict == LocationVerdict::exceeds_budget);
    }
}
