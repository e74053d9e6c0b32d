// cda -- construct, verify, and apply consecutive detecting arrays.
//
// Exit codes: 0 success/pass, 1 verification fail, 2 parameter/parse/
// infeasible error; locate adds 3 (exceeds-budget) and 4 (inconsistent).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cda/catalog.hpp"
#include "cda/construct.hpp"
#include "cda/io.hpp"
#include "cda/locate.hpp"
#include "cda/verify.hpp"

namespace {

using namespace cda;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitExceedsBudget = 3;
constexpr int kExitInconsistent = 4;

WorkBudget budget_from_env() {
  WorkBudget budget;
  if (const char* raw = std::getenv("CDA_WORK_BUDGET")) {
    const long long value = std::atoll(raw);
    if (value > 0) {
      budget.max_subset_pairs = value;
      budget.max_tuple_space = value;
    }
  }
  return budget;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(errc::parse, "cannot write '" + out_path + "'");
  out << text;
}

std::vector<int> parse_int_list(const std::string& raw, const char* what) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(raw);
  while (std::getline(is, token, ','))
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(errc::invalid_argument, std::string("bad ") + what + " list '" + raw + "'");
    }
  if (out.empty()) throw Error(errc::invalid_argument, std::string("empty ") + what + " list");
  return out;
}

struct ConstructArgs {
  std::string family;
  int t = 0;
  int v = 0;
  int q = 0;
  int lambda = 0;
  int col = 0;
  std::string seq;
  std::string multiplicities;
  std::string symbols;
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> factors;
  std::string out;
};

int run_construct(ConstructArgs args) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(errc::invalid_argument, "--family " + args.family + " needs " + what);
  };
  auto load = [&](const std::string& path) { return io::load_array(path); };

  std::string text;
  if (args.family == "zero-sum") {
    need(args.t > 0 && args.v > 0, "--t and --v");
    text = io::emit_array(zero_sum_oa(args.t, args.v));
  } else if (args.family == "bush") {
    need(args.t > 0 && args.q > 0, "--t and --q");
    text = io::emit_array(bush_oa(args.t, args.q));
  } else if (args.family == "bush-even") {
    need(args.q > 0, "--q");
    text = io::emit_array(bush_oa_even(args.q));
  } else if (args.family == "macneish") {
    need(args.t > 0 && args.inputs.size() == 2, "--t and two -i files");
    text = io::emit_array(
        macneish_product(load(args.inputs[0]).array, load(args.inputs[1]).array, args.t));
  } else if (args.family == "derive-stack") {
    need(args.t > 0 && args.inputs.size() == 1, "--t and one -i file");
    const Array a = load(args.inputs[0]).array;
    if (args.col == 0) args.col = a.cols();  // default: last column
    if (!args.symbols.empty()) {
      std::vector<symbol_t> picks;
      for (int s : parse_int_list(args.symbols, "symbol"))
        picks.push_back(static_cast<symbol_t>(s));
      text = io::emit_array(derive_stack_ssoa(a, args.t + 1, args.col, picks));
    } else {
      need(args.lambda > 0, "--lambda or --symbols");
      text = io::emit_array(derive_stack_ssoa(a, args.t + 1, args.col, args.lambda));
    }
  } else if (args.family == "wraparound") {
    need(args.t > 0 && args.inputs.size() == 1, "--t and one -i file");
    text = io::emit_array(wraparound_coa(load(args.inputs[0]).array, args.t));
  } else if (args.family == "double-wrap") {
    need(args.inputs.size() == 1, "one -i file");
    text = io::emit_array(double_wrap_coa(load(args.inputs[0]).array));
  } else if (args.family == "column-select") {
    need(args.t > 0 && args.lambda > 0 && args.inputs.size() == 1 && !args.seq.empty(),
         "--t, --lambda, --seq, and one -i file");
    text = io::emit_array(column_select_coa(load(args.inputs[0]).array,
                                            parse_int_list(args.seq, "column"), args.t,
                                            args.lambda));
  } else if (args.family == "juxtapose") {
    need(args.t > 0 && args.inputs.size() >= 1, "--t and at least one -i file");
    std::vector<Array> parts;
    for (const auto& path : args.inputs) parts.push_back(load(path).array);
    text = io::emit_array(juxtapose(parts, args.t));
  } else if (args.family == "inflate") {
    need(args.t > 0 && args.inputs.size() == 1 && !args.factors.empty(),
         "--t, one -i file, and -b factor files");
    std::vector<Array> factors;
    for (const auto& path : args.factors) factors.push_back(load(path).array);
    text = io::emit_array(
        inflate_product(load(args.inputs[0]).to_row_divisible(), factors, args.t));
  } else if (args.family == "weighting") {
    need(args.t > 0 && !args.inputs.empty() && !args.factors.empty() &&
             !args.multiplicities.empty(),
         "--t, -i ingredient files, --m multiplicities, and -b factor files");
    std::vector<int> m = parse_int_list(args.multiplicities, "multiplicity");
    if (m.size() != args.inputs.size())
      throw Error(errc::invalid_argument, "--m needs one entry per -i file");
    std::vector<std::pair<RowDivisibleArray, int>> ingredients;
    for (std::size_t i = 0; i < args.inputs.size(); ++i)
      ingredients.emplace_back(load(args.inputs[i]).to_row_divisible(), m[i]);
    std::vector<Array> factors;
    for (const auto& path : args.factors) factors.push_back(load(path).array);
    text = io::emit_array(weighting_combine(ingredients, factors, args.t));
  } else if (args.family == "seed") {
    need(!args.name.empty(), "--name");
    text = catalog_seed_text(args.name);
  } else {
    throw Error(errc::invalid_argument, "unknown family '" + args.family + "'");
  }
  write_output(text, args.out);
  return kExitPass;
}

struct VerifyArgs {
  std::string property;
  std::string file;
  std::string with_file;
  int t = 0;
  int lambda = 1;
  int d = 1;
  bool json = false;
};

int run_verify(const VerifyArgs& args, const WorkBudget& budget) {
  io::ArrayDocument doc = io::load_array(args.file);
  const Array& a = doc.array;
  const int t = args.t > 0 ? args.t : a.meta().t;
  if (t <= 0) throw Error(errc::invalid_argument, "--t required (no declared strength in file)");

  VerificationReport report;
  if (args.property == "ca") {
    report = is_ca(a, t, budget);
  } else if (args.property == "cca") {
    report = is_cca(a, t, budget);
  } else if (args.property == "oa") {
    report = is_oa(a, t, args.lambda, budget);
  } else if (args.property == "coa") {
    report = is_coa(a, t, args.lambda, budget);
  } else if (args.property == "simple-coa") {
    report = is_simple_coa(a, t, args.lambda, budget);
  } else if (args.property == "super-simple-oa") {
    report = is_super_simple_oa(a, t, args.lambda, budget);
  } else if (args.property == "row-divisible-coa") {
    report = is_row_divisible_coa(doc.to_row_divisible(), t, args.lambda, budget);
  } else if (args.property == "cda") {
    report = is_cda_direct(a, args.d, t, budget);
  } else if (args.property == "bound") {
    report = cdan_bound_report(a, args.d, t, budget);
  } else if (args.property == "equivalence") {
    report = equivalence_crosscheck(a, args.d, t, budget);
  } else if (args.property == "compatible") {
    if (args.with_file.empty())
      throw Error(errc::invalid_argument, "--property compatible needs --with FILE");
    report = is_compatible(a, io::load_array(args.with_file).array, t, budget);
  } else {
    throw Error(errc::invalid_argument, "unknown property '" + args.property + "'");
  }

  if (args.json) {
    std::cout << io::report_to_json(report) << "\n";
  } else {
    std::cout << (report.pass ? "PASS" : "FAIL") << " " << report.property << ": "
              << report.message << "\n";
    if (report.optimum) std::cout << "optimum\n";
    if (!report.pass && report.witness && !report.witness->note.empty())
      std::cout << "witness: " << report.witness->note << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

int run_locate(const std::string& plan_path, const std::string& outcomes_path, int d, int t,
               bool assume_verified, const WorkBudget& budget) {
  Array plan = io::load_array(plan_path).array;
  std::ifstream in(outcomes_path);
  if (!in) throw Error(errc::parse, "cannot open '" + outcomes_path + "'");
  OutcomeVector outcomes = io::parse_outcomes(in, plan.rows());
  FaultLocationReport report = locate_faults(plan, d, t, outcomes, assume_verified, budget);
  std::cout << io::location_report_to_json(report, plan) << "\n";
  switch (report.verdict) {
    case LocationVerdict::exact: return kExitPass;
    case LocationVerdict::exceeds_budget: return kExitExceedsBudget;
    case LocationVerdict::inconsistent: return kExitInconsistent;
  }
  return kExitError;
}

int run_simulate(const std::string& plan_path, const std::string& faults_path,
                 const std::string& out) {
  Array plan = io::load_array(plan_path).array;
  std::ifstream in(faults_path);
  if (!in) throw Error(errc::parse, "cannot open '" + faults_path + "'");
  std::vector<ConsecutiveInteraction> faults = io::parse_interactions(in);
  write_output(io::emit_outcomes(simulate_outcomes(plan, faults)), out);
  return kExitPass;
}

int run_export(const std::string& file, const std::string& format, const std::string& levels_path,
               const std::string& out) {
  Array a = io::load_array(file).array;
  std::string text;
  if (format == "csv") {
    std::map<symbol_t, std::string> levels;
    if (!levels_path.empty()) {
      std::ifstream in(levels_path);
      if (!in) throw Error(errc::parse, "cannot open '" + levels_path + "'");
      levels = io::parse_level_names(in);
    }
    text = io::export_csv(a, levels);
  } else if (format == "json") {
    text = io::export_json(a) + "\n";
  } else {
    throw Error(errc::invalid_argument, "format must be csv or json");
  }
  write_output(text, out);
  return kExitPass;
}

int run_catalog(bool list, const std::string& name, const std::string& out) {
  if (list) {
    for (const SeedInfo& info : catalog_list()) {
      std::cout << info.name << "  N=" << info.n << " k=" << info.k << " v=" << info.v
                << " t=" << info.t << " lambda=" << info.lambda
                << (info.row_divisible ? " row-divisible" : "") << "  " << info.description
                << "\n";
    }
    return kExitPass;
  }
  write_output(catalog_seed_text(name), out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"consecutive detecting array toolkit"};
  app.require_subcommand(1);
  const WorkBudget budget = budget_from_env();

  // construct
  ConstructArgs cons;
  CLI::App* construct = app.add_subcommand("construct", "build a verified array");
  construct->add_option("--family", cons.family,
                        "zero-sum|bush|bush-even|macneish|derive-stack|wraparound|double-wrap|"
                        "column-select|juxtapose|inflate|weighting|seed")
      ->required();
  construct->add_option("--t", cons.t, "strength of the result");
  construct->add_option("--v", cons.v, "alphabet size");
  construct->add_option("--q", cons.q, "field order");
  construct->add_option("--lambda", cons.lambda, "index");
  construct->add_option("--col", cons.col, "derive column (1-based)");
  construct->add_option("--seq", cons.seq, "column sequence, comma separated");
  construct->add_option("--m", cons.multiplicities, "ingredient multiplicities, comma separated");
  construct->add_option("--symbols", cons.symbols, "derive symbols, comma separated");
  construct->add_option("--name", cons.name, "catalog seed name");
  construct->add_option("-i,--input", cons.inputs, "ingredient array file(s)");
  construct->add_option("-b,--factor", cons.factors, "compatible factor file(s)");
  construct->add_option("-o,--out", cons.out, "output file (default stdout)");

  // verify
  VerifyArgs ver;
  CLI::App* verify = app.add_subcommand("verify", "check a property, print a report");
  verify->add_option("--property", ver.property,
                     "ca|cca|oa|coa|simple-coa|super-simple-oa|row-divisible-coa|cda|bound|"
                     "equivalence|compatible")
      ->required();
  verify->add_option("--t", ver.t, "strength");
  verify->add_option("--lambda", ver.lambda, "index");
  verify->add_option("--d", ver.d, "fault budget");
  verify->add_option("--with", ver.with_file, "second array (compatible)");
  verify->add_flag("--json", ver.json, "emit the report as JSON");
  verify->add_option("file", ver.file, "array file")->required();

  // locate
  std::string plan_path, outcomes_path;
  int loc_d = 1, loc_t = 2;
  bool assume_verified = false;
  CLI::App* locate = app.add_subcommand("locate", "decode pass/fail outcomes into faults");
  locate->add_option("--d", loc_d, "fault budget")->required();
  locate->add_option("--t", loc_t, "strength")->required();
  locate->add_flag("--assume-verified", assume_verified, "skip the detecting-property check");
  locate->add_option("plan", plan_path, "plan array file")->required();
  locate->add_option("outcomes", outcomes_path, "outcome file")->required();

  // simulate
  std::string sim_plan, sim_faults, sim_out;
  CLI::App* simulate = app.add_subcommand("simulate", "outcomes of a plan under injected faults");
  simulate->add_option("plan", sim_plan, "plan array file")->required();
  simulate->add_option("faults", sim_faults, "interaction file")->required();
  simulate->add_option("-o,--out", sim_out, "output file (default stdout)");

  // export
  std::string exp_file, exp_format = "csv", exp_levels, exp_out;
  CLI::App* exporter = app.add_subcommand("export", "emit a test-suite document");
  exporter->add_option("--format", exp_format, "csv|json");
  exporter->add_option("--levels", exp_levels, "level-name file for csv");
  exporter->add_option("-o,--out", exp_out, "output file (default stdout)");
  exporter->add_option("file", exp_file, "array file")->required();

  // catalog
  CLI::App* catalog = app.add_subcommand("catalog", "seed arrays shipped with the toolkit");
  CLI::App* catalog_list_cmd = catalog->add_subcommand("list", "list seed names and shapes");
  std::string show_name, show_out;
  CLI::App* catalog_show = catalog->add_subcommand("show", "emit one seed as an array file");
  catalog_show->add_option("name", show_name, "seed name")->required();
  catalog_show->add_option("-o,--out", show_out, "output file (default stdout)");
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return run_construct(cons);
    if (verify->parsed()) return run_verify(ver, budget);
    if (locate->parsed())
      return run_locate(plan_path, outcomes_path, loc_d, loc_t, assume_verified, budget);
    if (simulate->parsed()) return run_simulate(sim_plan, sim_faults, sim_out);
    if (exporter->parsed()) return run_export(exp_file, exp_format, exp_levels, exp_out);
    if (catalog->parsed()) return run_catalog(catalog_list_cmd->parsed(), show_name, show_out);
  } catch (const cda::Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
