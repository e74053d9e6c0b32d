#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cda/array.hpp"
#include "cda/interaction.hpp"
#include "cda/locate.hpp"
#include "cda/types.hpp"
#include "cda/verify.hpp"

namespace cda::io {

// Array text format, line oriented:
//   line 1:   "N k v"           (decimal, space separated)
//   optional  "# key: value"    metadata (family, t, lambda, parts)
//   N lines   k space-separated symbols in 0..v-1
// "# parts: 1-6 7-12" declares a row partition as 1-based inclusive ranges.
// Other '#' lines are comments.
struct ArrayDocument {
  Array array;
  std::vector<RowRange> parts;

  bool has_parts() const { return !parts.empty(); }
  RowDivisibleArray to_row_divisible() const;  // single whole part when undeclared
};

ArrayDocument parse_array(std::istream& in);
ArrayDocument parse_array(const std::string& text);
ArrayDocument load_array(const std::string& path);

std::string emit_array(const Array& a);
std::string emit_array(const RowDivisibleArray& rd);

// Outcome files: one line per test, "row pass" or "row fail"; every row
// exactly once, any order.
OutcomeVector parse_outcomes(std::istream& in, int expected_rows);
std::string emit_outcomes(const OutcomeVector& outcomes);

// Interaction files: one line per interaction, "start_col v1 v2 ... vt";
// '#' lines are comments.
std::vector<ConsecutiveInteraction> parse_interactions(std::istream& in);
std::string emit_interactions(const std::vector<ConsecutiveInteraction>& ts);

// Level-name files for CSV export: one line per symbol, "<symbol> <name>".
std::map<symbol_t, std::string> parse_level_names(std::istream& in);

// Test-suite exports: one test per row, factors as columns.
std::string export_csv(const Array& a, const std::map<symbol_t, std::string>& levels = {});
std::string export_json(const Array& a);

// Structured reports (serialized JSON).
std::string report_to_json(const VerificationReport& report);
std::string location_report_to_json(const FaultLocationReport& report, const Array& plan);

}  // namespace cda::io
