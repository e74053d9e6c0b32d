#include <random>

#include "cda/interaction.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace cda;
using cda::test::arr;
using cda::test::ci;
using cda::test::seed;

TEST_CASE("array invariants are enforced") {
  CHECK_THROWS_AS(Array(1, 1, 1, {0}), Error);                 // v >= 2
  CHECK_THROWS_AS(Array(2, 2, 2, {0, 1, 1}), Error);           // cell count
  CHECK_THROWS_AS(Array(1, 2, 2, {0, 2}), Error);              // symbol range
  CHECK_NOTHROW(Array(1, 2, 2, {0, 1}));
}

TEST_CASE("rho on the wrapped 8x4 plan") {
  Array mprime = seed("coa2-2-4-2");
  // hand-scanned over the printed rows
  CHECK(rho(mprime, ci(1, {0, 0})).indices == std::vector<int>{1, 8});
  CHECK(rho(mprime, ci(2, {1, 1})).indices == std::vector<int>{2, 5});
  CHECK(rho(mprime, ci(1, {1, 1})).indices == std::vector<int>{4, 5});
}

TEST_CASE("rho with full-width interaction picks the matching row") {
  Array mprime = seed("coa2-2-4-2");  // all 8 rows distinct
  CHECK(rho(mprime, ci(1, {0, 0, 0, 0})).indices == std::vector<int>{1});
  CHECK(rho(mprime, ci(1, {1, 0, 1, 1})).indices == std::vector<int>{3});
}

TEST_CASE("rho on the 9x21 catalog plan finds singleton row sets") {
  Array cca = seed("cca-9-2-21-3");
  RowSet rows = rho(cca, ci(1, {0, 0}));
  CHECK(rows.size() == 1);
  CHECK(rows.indices == std::vector<int>{1});
  CHECK(rho(cca, ci(1, {2, 1})).size() == 1);
}

TEST_CASE("rho rejects bad interactions") {
  Array mprime = seed("coa2-2-4-2");
  CHECK_THROWS_AS(rho(mprime, ci(4, {0, 0})), Error);  // columns 4..5 of a 4-column array
  CHECK_THROWS_AS(rho(mprime, ci(0, {0, 0})), Error);
  CHECK_THROWS_AS(rho(mprime, ci(1, {2, 0})), Error);  // symbol outside alphabet
}

TEST_CASE("rho_union basics") {
  Array mprime = seed("coa2-2-4-2");
  CHECK(rho_union(mprime, {}).empty());
  CHECK(rho_union(mprime, {ci(1, {0, 0})}) == rho(mprime, ci(1, {0, 0})));
  CHECK(rho_union(mprime, {ci(1, {0, 0}), ci(1, {1, 1})}).indices ==
        std::vector<int>{1, 4, 5, 8});
}

TEST_CASE("definitional rho agrees with the column-mask path") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const int k = std::uniform_int_distribution<int>(2, 7)(rng);
    const int v = std::uniform_int_distribution<int>(2, 4)(rng);
    std::vector<symbol_t> cells(static_cast<std::size_t>(n) * k);
    for (auto& c : cells) c = static_cast<symbol_t>(std::uniform_int_distribution<int>(0, v - 1)(rng));
    Array a(n, k, v, std::move(cells));
    ColumnMasks masks(a);
    const int t = std::uniform_int_distribution<int>(1, k)(rng);
    for (const auto& x : enumerate_consecutive_interactions(a, t))
      CHECK(rho(a, x) == RowSet::from_bits(masks.rho_bits(x)));
  }
}

TEST_CASE("interaction enumeration size and order") {
  Array mprime = seed("coa2-2-4-2");
  CHECK(enumerate_consecutive_interactions(mprime, 2).size() == 12);  // (4-2+1)*2^2
  CHECK(enumerate_consecutive_interactions(4, 2, 4).size() == 16);    // single window, v^t
  CHECK(enumerate_consecutive_interactions(21, 3, 2).size() == 180);  // (21-2+1)*3^2

  auto ts = enumerate_consecutive_interactions(3, 2, 2);
  REQUIRE(ts.size() == 8);
  CHECK(ts[0] == ci(1, {0, 0}));
  CHECK(ts[1] == ci(1, {0, 1}));
  CHECK(ts[2] == ci(1, {1, 0}));
  CHECK(ts[3] == ci(1, {1, 1}));
  CHECK(ts[4] == ci(2, {0, 0}));
  CHECK(std::is_sorted(ts.begin(), ts.end()));
}

TEST_CASE("interaction count matches the closed form exhaustively") {
  for (int v = 2; v <= 4; ++v)
    for (int k = 2; k <= 8; ++k)
      for (int t = 2; t <= k; ++t) {
        std::int64_t expect = (k - t + 1) * checked_pow(v, t);
        auto ts = enumerate_consecutive_interactions(k, v, t);
        CHECK(static_cast<std::int64_t>(ts.size()) == expect);
      }
}

TEST_CASE("enumeration rejects strength above the column count") {
  CHECK_THROWS_AS(enumerate_consecutive_interactions(3, 2, 4), Error);
}

TEST_CASE("rho_union is monotone under set growth") {
  Array coa = seed("coa3-2-6-3");
  auto all = enumerate_consecutive_interactions(coa, 2);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ConsecutiveInteraction> big;
    std::sample(all.begin(), all.end(), std::back_inserter(big), 8, rng);
    std::vector<ConsecutiveInteraction> small(big.begin(), big.begin() + 3);
    CHECK(rho_union(coa, small).is_subset_of(rho_union(coa, big)));
  }
}

TEST_CASE("window extraction") {
  Array mprime = seed("coa2-2-4-2");
  CHECK(window(mprime, 1, 4) == mprime);
  Array first_two = window(mprime, 1, 2);
  CHECK(first_two.rows() == 8);
  CHECK(first_two.cols() == 2);
  CHECK(first_two.at(0, 0) == 0);
  CHECK(first_two.at(0, 1) == 0);
  CHECK_THROWS_AS(window(mprime, 4, 2), Error);
  CHECK_THROWS_AS(window(mprime, 0, 2), Error);
}

TEST_CASE("columns 5,6 of the 27x6 seed duplicate columns 1,3") {
  Array coa = seed("coa3-2-6-3");
  CHECK(window(coa, 5, 2) == select_columns(coa, {1, 3}));
}

TEST_CASE("derived blocks and stacking") {
  Array oa = seed("oa-3-4-2");
  Array block0 = derived(oa, 1, 0);
  CHECK(block0 == arr(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  Array block1 = derived(oa, 1, 1);
  CHECK(block1 == arr(2, {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(vstack({block0, block1}) == seed("ssoa2-2-3-2"));
  CHECK_THROWS_AS(vstack({block0, seed("coa2-2-4-2")}), Error);
}

TEST_CASE("row partition validation") {
  Array coa = seed("coa3-2-6-3");
  CHECK_NOTHROW(RowDivisibleArray(coa, {{1, 9}, {10, 27}}));
  CHECK_THROWS_AS(RowDivisibleArray(coa, {{1, 9}, {11, 27}}), Error);   // gap
  CHECK_THROWS_AS(RowDivisibleArray(coa, {{1, 9}, {9, 27}}), Error);    // overlap
  CHECK_THROWS_AS(RowDivisibleArray(coa, {{1, 20}}), Error);            // not exhaustive
}
