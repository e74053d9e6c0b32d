#include <sstream>

#include "cda/catalog.hpp"
#include "cda/construct.hpp"
#include "cda/io.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace cda;
using cda::test::ci;
using cda::test::seed;

TEST_CASE("array text round trip preserves content and metadata") {
  for (const char* name : {"cca-9-2-21-3", "coa3-2-6-3", "oa-3-4-2", "coa2-2-4-2", "coa4-6-2"}) {
    Array a = seed(name);
    io::ArrayDocument back = io::parse_array(io::emit_array(a));
    CHECK(back.array == a);
    CHECK(back.array.meta().family == a.meta().family);
    CHECK(back.array.meta().t == a.meta().t);
    CHECK(back.array.meta().lambda == a.meta().lambda);
  }
  for (const Array& a : {zero_sum_oa(3, 4), bush_oa(2, 5)}) {
    io::ArrayDocument back = io::parse_array(io::emit_array(a));
    CHECK(back.array == a);
    CHECK(back.array.meta().family == a.meta().family);
  }
}

TEST_CASE("row partitions survive the round trip") {
  RowDivisibleArray rd = catalog_seed("rowdiv2-coa3-2-5-2").to_row_divisible();
  io::ArrayDocument back = io::parse_array(io::emit_array(rd));
  REQUIRE(back.has_parts());
  CHECK(back.parts == rd.parts());
  CHECK(back.array == rd.array());
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(io::parse_array(""), Error);
  CHECK_THROWS_AS(io::parse_array("2 2\n0 0\n0 0\n"), Error);          // short header
  CHECK_THROWS_AS(io::parse_array("2 2 2\n0 0\n"), Error);             // missing row
  CHECK_THROWS_AS(io::parse_array("1 2 2\n0 0\n1 1\n"), Error);        // extra row
  CHECK_THROWS_AS(io::parse_array("1 2 2\n0 2\n"), Error);             // symbol out of range
  CHECK_THROWS_AS(io::parse_array("1 2 2\n0\n"), Error);               // short row
  CHECK_THROWS_AS(io::parse_array("2 2 2\n# parts: 1-3\n0 0\n1 1\n"), Error);  // bad partition
  try {
    io::parse_array("1 2 2\n0 x\n");
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse);
  }
}

TEST_CASE("comments and blank lines are tolerated") {
  io::ArrayDocument doc = io::parse_array("# leading comment\n2 2 2\n\n# note\n0 1\n\n1 0\n");
  CHECK(doc.array.rows() == 2);
  CHECK(doc.array.at(0, 1) == 1);
}

TEST_CASE("outcome files round trip and validate") {
  OutcomeVector out = OutcomeVector::all_pass(4);
  out.failing.set(2);
  std::string text = io::emit_outcomes(out);
  std::istringstream in(text);
  OutcomeVector back = io::parse_outcomes(in, 4);
  CHECK(back.failing_rows().indices == std::vector<int>{3});

  std::istringstream wrong("1 pass\n2 pass\n");
  CHECK_THROWS_AS(io::parse_outcomes(wrong, 4), Error);
  std::istringstream dup("1 pass\n1 fail\n");
  CHECK_THROWS_AS(io::parse_outcomes(dup, 2), Error);
  std::istringstream verdict("1 maybe\n2 pass\n");
  CHECK_THROWS_AS(io::parse_outcomes(verdict, 2), Error);
  // order independent
  std::istringstream shuffled("2 fail\n1 pass\n");
  CHECK(io::parse_outcomes(shuffled, 2).failed(2));
}

TEST_CASE("interaction files") {
  std::vector<ConsecutiveInteraction> faults = {ci(2, {1, 1}), ci(5, {0, 2, 1})};
  std::istringstream in(io::emit_interactions(faults));
  CHECK(io::parse_interactions(in) == faults);
  std::istringstream commented("# faults\n3 0 1\n");
  CHECK(io::parse_interactions(commented) == std::vector<ConsecutiveInteraction>{ci(3, {0, 1})});
  std::istringstream bad("0 1\n");
  CHECK_THROWS_AS(io::parse_interactions(bad), Error);
}

TEST_CASE("csv export lists one test per row") {
  std::string csv = io::export_csv(seed("coa2-2-4-2"));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "factor_1,factor_2,factor_3,factor_4");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 8);

  std::string wide = io::export_csv(seed("cca-9-2-21-3"));
  std::istringstream wide_lines(wide);
  std::getline(wide_lines, line);
  CHECK(line.substr(0, 9) == "factor_1,");
  rows = 0;
  while (std::getline(wide_lines, line)) ++rows;
  CHECK(rows == 9);
}

TEST_CASE("csv export applies level names") {
  std::istringstream names("0 off\n1 on\n");
  auto levels = io::parse_level_names(names);
  std::string csv = io::export_csv(seed("coa2-2-4-2"), levels);
  CHECK(csv.find("off,off,off,off") != std::string::npos);
  CHECK(csv.find("on,on,on,on") != std::string::npos);
}

TEST_CASE("json export mirrors the csv with metadata") {
  std::string json_text = io::export_json(seed("coa3-2-6-3"));
  CHECK(json_text.find("\"num_tests\": 27") != std::string::npos);
  CHECK(json_text.find("\"num_factors\": 6") != std::string::npos);
  CHECK(json_text.find("\"lambda\": 3") != std::string::npos);
}

TEST_CASE("reports serialize with witnesses") {
  VerificationReport r = is_coa(derived(seed("coa4-6-2"), 1, 0), 3, 1);
  REQUIRE_FALSE(r.pass);
  std::string json_text = io::report_to_json(r);
  CHECK(json_text.find("\"pass\": false") != std::string::npos);
  CHECK(json_text.find("\"witness\"") != std::string::npos);
  CHECK(json_text.find("\"rows\"") != std::string::npos);
}
