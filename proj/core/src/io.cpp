#include "cda/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cda::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(errc::parse, "line " + std::to_string(line) + ": " + msg);
}

bool parse_int(const std::string& token, long& out) {
  try {
    std::size_t used = 0;
    out = std::stol(token, &used);
    return used == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

}  // namespace

RowDivisibleArray ArrayDocument::to_row_divisible() const {
  if (parts.empty()) return RowDivisibleArray::whole(array, array.meta().lambda);
  return RowDivisibleArray(array, parts);
}

ArrayDocument parse_array(std::istream& in) {
  std::string line;
  int lineno = 0;

  long n = 0, k = 0, v = 0;
  bool have_header = false;
  ArrayMeta meta;
  std::vector<RowRange> parts;
  std::vector<symbol_t> cells;
  long rows_read = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    const std::size_t first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) continue;  // blank
    if (trimmed[first] == '#') {
      // metadata or comment
      std::string body = trimmed.substr(first + 1);
      const std::size_t colon = body.find(':');
      if (colon == std::string::npos) continue;
      std::string key = body.substr(0, colon);
      std::string value = body.substr(colon + 1);
      auto strip = [](const std::string& s) {
        const std::size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const std::size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
      };
      key = strip(key);
      value = strip(value);
      long num = 0;
      if (key == "family") {
        meta.family = value;
      } else if (key == "t" && parse_int(value, num)) {
        meta.t = static_cast<int>(num);
      } else if (key == "lambda" && parse_int(value, num)) {
        meta.lambda = static_cast<int>(num);
      } else if (key == "parts") {
        for (const std::string& token : split_ws(value)) {
          const std::size_t dash = token.find('-');
          long lo = 0, hi = 0;
          if (dash == std::string::npos || !parse_int(token.substr(0, dash), lo) ||
              !parse_int(token.substr(dash + 1), hi))
            parse_fail(lineno, "bad part range '" + token + "'");
          parts.push_back({static_cast<int>(lo), static_cast<int>(hi)});
        }
      }
      continue;
    }

    std::vector<std::string> tokens = split_ws(trimmed);
    if (!have_header) {
      if (tokens.size() != 3) parse_fail(lineno, "expected header 'N k v'");
      if (!parse_int(tokens[0], n) || !parse_int(tokens[1], k) || !parse_int(tokens[2], v))
        parse_fail(lineno, "header values must be integers");
      if (n < 1 || k < 1 || v < 2) parse_fail(lineno, "header needs N >= 1, k >= 1, v >= 2");
      if (v > (1 << 16)) parse_fail(lineno, "alphabet too large");
      have_header = true;
      cells.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
      continue;
    }
    if (rows_read == n) parse_fail(lineno, "more data rows than the declared N");
    if (static_cast<long>(tokens.size()) != k)
      parse_fail(lineno, "expected " + std::to_string(k) + " symbols, found " +
                             std::to_string(tokens.size()));
    for (const std::string& token : tokens) {
      long s = 0;
      if (!parse_int(token, s) || s < 0 || s >= v)
        parse_fail(lineno, "symbol '" + token + "' outside 0.." + std::to_string(v - 1));
      cells.push_back(static_cast<symbol_t>(s));
    }
    ++rows_read;
  }
  if (!have_header) throw Error(errc::parse, "empty input: no 'N k v' header");
  if (rows_read != n)
    throw Error(errc::parse, "declared " + std::to_string(n) + " rows but found " +
                                 std::to_string(rows_read));

  Array array(static_cast<int>(n), static_cast<int>(k), static_cast<int>(v), std::move(cells),
              std::move(meta));
  if (!parts.empty()) {
    // validated by the RowDivisibleArray constructor
    RowDivisibleArray check(array, parts);
  }
  return ArrayDocument{std::move(array), std::move(parts)};
}

ArrayDocument parse_array(const std::string& text) {
  std::istringstream is(text);
  return parse_array(is);
}

ArrayDocument load_array(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse, "cannot open '" + path + "'");
  return parse_array(in);
}

namespace {

void emit_header_and_rows(std::ostringstream& os, const Array& a,
                          const std::vector<RowRange>* parts) {
  os << a.rows() << " " << a.cols() << " " << a.alphabet() << "\n";
  const ArrayMeta& meta = a.meta();
  if (!meta.family.empty()) os << "# family: " << meta.family << "\n";
  if (meta.t > 0) os << "# t: " << meta.t << "\n";
  if (meta.lambda > 0) os << "# lambda: " << meta.lambda << "\n";
  if (parts && !parts->empty()) {
    os << "# parts:";
    for (const RowRange& p : *parts) os << " " << p.first << "-" << p.last;
    os << "\n";
  }
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) os << (c ? " " : "") << a.at(r, c);
    os << "\n";
  }
}

}  // namespace

std::string emit_array(const Array& a) {
  std::ostringstream os;
  emit_header_and_rows(os, a, nullptr);
  return os.str();
}

std::string emit_array(const RowDivisibleArray& rd) {
  std::ostringstream os;
  emit_header_and_rows(os, rd.array(), &rd.parts());
  return os.str();
}

OutcomeVector parse_outcomes(std::istream& in, int expected_rows) {
  OutcomeVector out = OutcomeVector::all_pass(expected_rows);
  std::vector<bool> seen(static_cast<std::size_t>(expected_rows), false);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 2) parse_fail(lineno, "expected 'row pass|fail'");
    long row = 0;
    if (!parse_int(tokens[0], row) || row < 1 || row > expected_rows)
      parse_fail(lineno, "row index outside 1.." + std::to_string(expected_rows));
    if (seen[static_cast<std::size_t>(row - 1)]) parse_fail(lineno, "duplicate row index");
    seen[static_cast<std::size_t>(row - 1)] = true;
    if (tokens[1] == "fail")
      out.failing.set(static_cast<std::size_t>(row - 1));
    else if (tokens[1] != "pass")
      parse_fail(lineno, "verdict must be 'pass' or 'fail'");
  }
  for (int r = 0; r < expected_rows; ++r)
    if (!seen[static_cast<std::size_t>(r)])
      throw Error(errc::parse, "missing outcome for row " + std::to_string(r + 1));
  return out;
}

std::string emit_outcomes(const OutcomeVector& outcomes) {
  std::ostringstream os;
  for (int r = 1; r <= outcomes.num_tests; ++r)
    os << r << " " << (outcomes.failed(r) ? "fail" : "pass") << "\n";
  return os.str();
}

std::vector<ConsecutiveInteraction> parse_interactions(std::istream& in) {
  std::vector<ConsecutiveInteraction> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 2) parse_fail(lineno, "expected 'start_col v1 [v2 ...]'");
    long start = 0;
    if (!parse_int(tokens[0], start) || start < 1) parse_fail(lineno, "bad start column");
    ConsecutiveInteraction t;
    t.start_col = static_cast<int>(start);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      long s = 0;
      if (!parse_int(tokens[i], s) || s < 0 || s > 0xFFFF) parse_fail(lineno, "bad symbol");
      t.values.push_back(static_cast<symbol_t>(s));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string emit_interactions(const std::vector<ConsecutiveInteraction>& ts) {
  std::ostringstream os;
  for (const auto& t : ts) {
    os << t.start_col;
    for (symbol_t s : t.values) os << " " << s;
    os << "\n";
  }
  return os.str();
}

std::map<symbol_t, std::string> parse_level_names(std::istream& in) {
  std::map<symbol_t, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() != 2) parse_fail(lineno, "expected '<symbol> <name>'");
    long s = 0;
    if (!parse_int(tokens[0], s) || s < 0 || s > 0xFFFF) parse_fail(lineno, "bad symbol");
    out[static_cast<symbol_t>(s)] = tokens[1];
  }
  return out;
}

std::string export_csv(const Array& a, const std::map<symbol_t, std::string>& levels) {
  std::ostringstream os;
  for (int c = 1; c <= a.cols(); ++c) os << (c > 1 ? "," : "") << "factor_" << c;
  os << "\n";
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (c) os << ",";
      const symbol_t s = a.at(r, c);
      auto it = levels.find(s);
      if (it != levels.end())
        os << it->second;
      else
        os << s;
    }
    os << "\n";
  }
  return os.str();
}

std::string export_json(const Array& a) {
  json doc;
  doc["num_tests"] = a.rows();
  doc["num_factors"] = a.cols();
  doc["levels"] = a.alphabet();
  json meta = json::object();
  if (!a.meta().family.empty()) meta["family"] = a.meta().family;
  if (a.meta().t > 0) meta["t"] = a.meta().t;
  if (a.meta().lambda > 0) meta["lambda"] = a.meta().lambda;
  doc["metadata"] = meta;
  json tests = json::array();
  for (int r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c));
    tests.push_back(std::move(row));
  }
  doc["tests"] = std::move(tests);
  return doc.dump(2);
}

namespace {

json interaction_to_json(const ConsecutiveInteraction& t) {
  json out;
  out["start_col"] = t.start_col;
  out["values"] = t.values;
  return out;
}

json witness_to_json(const Witness& w) {
  json out;
  if (!w.cols.empty()) out["cols"] = w.cols;
  if (!w.tuple.empty()) out["tuple"] = w.tuple;
  if (w.expected_count >= 0) out["expected_count"] = w.expected_count;
  if (w.actual_count >= 0) out["actual_count"] = w.actual_count;
  if (!w.rows.empty()) out["rows"] = w.rows;
  if (!w.masking_set.empty()) {
    json set = json::array();
    for (const auto& t : w.masking_set) set.push_back(interaction_to_json(t));
    out["masking_set"] = std::move(set);
  }
  if (w.hidden) out["hidden"] = interaction_to_json(*w.hidden);
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["property"] = report.property;
  doc["pass"] = report.pass;
  doc["n"] = report.n;
  doc["k"] = report.k;
  doc["v"] = report.v;
  if (report.t > 0) doc["t"] = report.t;
  if (report.d > 0) doc["d"] = report.d;
  if (report.lambda_claimed > 0) doc["lambda"] = report.lambda_claimed;
  if (report.lambda_observed >= 0) doc["lambda_observed"] = report.lambda_observed;
  if (report.bound > 0) {
    doc["bound"] = report.bound;
    doc["optimum"] = report.optimum;
  }
  if (report.min_rho >= 0) doc["min_rho"] = report.min_rho;
  if (report.witness) doc["witness"] = witness_to_json(*report.witness);
  doc["message"] = report.message;
  return doc.dump(2);
}

std::string location_report_to_json(const FaultLocationReport& report, const Array& plan) {
  json doc;
  doc["verdict"] = verdict_name(report.verdict);
  doc["d"] = report.d;
  doc["t"] = report.t;
  doc["candidate_count"] = report.candidate_count;
  doc["failing_rows"] = report.failing_rows.indices;
  if (report.verdict == LocationVerdict::exact) {
    json faults = json::array();
    for (const auto& t : report.located) faults.push_back(interaction_to_json(t));
    doc["faults"] = std::move(faults);
  }
  doc["plan"] = {{"rows", plan.rows()}, {"cols", plan.cols()}, {"alphabet", plan.alphabet()}};
  return doc.dump(2);
}

}  // namespace cda::io
