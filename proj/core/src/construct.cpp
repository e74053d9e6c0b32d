#include "cda/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cda/galois.hpp"
#include "cda/verify.hpp"

namespace cda {

const char* recipe_family_name(RecipeFamily f) {
  switch (f) {
    case RecipeFamily::zero_sum: return "zero-sum";
    case RecipeFamily::bush: return "bush";
    case RecipeFamily::bush_even: return "bush-even";
    case RecipeFamily::macneish: return "macneish";
    case RecipeFamily::derive_stack: return "derive-stack";
    case RecipeFamily::wraparound: return "wraparound";
    case RecipeFamily::double_wrap: return "double-wrap";
    case RecipeFamily::column_select: return "column-select";
    case RecipeFamily::inflate: return "inflate";
    case RecipeFamily::weighting: return "weighting";
    case RecipeFamily::juxtapose: return "juxtapose";
    case RecipeFamily::seed: return "seed";
  }
  return "unknown";
}

std::string Recipe::to_string() const {
  std::ostringstream os;
  os << recipe_family_name(family) << "(";
  bool first = true;
  auto field = [&](const char* name, int value) {
    if (value == 0) return;
    os << (first ? "" : ",") << name << "=" << value;
    first = false;
  };
  field("t", t);
  field("v", v);
  field("lambda", lambda);
  field("q", q);
  field("v1", v1);
  field("v2", v2);
  if (!column_sequence.empty()) {
    os << (first ? "" : ",") << "cols=";
    for (std::size_t i = 0; i < column_sequence.size(); ++i)
      os << (i ? "." : "") << column_sequence[i];
    first = false;
  }
  if (!ingredients.empty()) {
    os << (first ? "" : ",") << "m=[";
    for (std::size_t i = 0; i < ingredients.size(); ++i) {
      const RecipeIngredient& ing = ingredients[i];
      os << (i ? " " : "") << ing.multiplicity << "x(mu=" << ing.mu << ",lambda=" << ing.lambda
         << ")";
    }
    os << "],eta=" << eta;
  }
  os << ")";
  return os.str();
}

namespace {

ArrayMeta make_meta(const Recipe& recipe, int t, int lambda) {
  return ArrayMeta{recipe.to_string(), t, lambda};
}

void require(bool ok, errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

void require_verified(const VerificationReport& report, errc code, const std::string& what) {
  if (!report.pass) throw Error(code, what + ": " + report.message);
}

int infer_lambda(const Array& a, int t, const char* what) {
  const std::int64_t vt = checked_pow(a.alphabet(), t);
  if (a.rows() % vt != 0)
    throw Error(errc::ingredient, std::string(what) + ": row count " + std::to_string(a.rows()) +
                                      " is not a multiple of v^t = " + std::to_string(vt));
  return static_cast<int>(a.rows() / vt);
}

}  // namespace

Array zero_sum_oa(int t, int v) {
  require(t >= 2, errc::invalid_argument, "zero-sum needs strength at least 2");
  require(v >= 2, errc::invalid_argument, "zero-sum needs an alphabet of at least 2");
  const std::int64_t n = checked_pow(v, t);
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(n) * (t + 1));
  for (std::int64_t code = 0; code < n; ++code) {
    std::int64_t rest = code;
    int sum = 0;
    std::vector<symbol_t> row(static_cast<std::size_t>(t));
    for (int j = t - 1; j >= 0; --j) {
      row[static_cast<std::size_t>(j)] = static_cast<symbol_t>(rest % v);
      sum += static_cast<int>(rest % v);
      rest /= v;
    }
    cells.insert(cells.end(), row.begin(), row.end());
    cells.push_back(static_cast<symbol_t>((v - sum % v) % v));
  }
  Recipe recipe{.family = RecipeFamily::zero_sum, .t = t, .v = v, .lambda = 1};
  Array out(static_cast<int>(n), t + 1, v, std::move(cells), make_meta(recipe, t, 1));
  require_verified(is_oa(out, t, 1), errc::verification, "zero-sum output");
  return out;
}

Array bush_oa(int t, int q) {
  require(t >= 2, errc::invalid_argument, "strength must be at least 2");
  GaloisField field = make_field(q);  // throws errc::not_a_prime_power
  require(t < q, errc::invalid_argument,
          "strength " + std::to_string(t) + " must be below the field order " + std::to_string(q));
  const std::int64_t n = checked_pow(q, t);
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(n) * (q + 1));
  std::vector<symbol_t> coeffs(static_cast<std::size_t>(t));  // leading first
  for (std::int64_t r = 0; r < n; ++r) {
    std::int64_t rest = r;
    for (int j = t - 1; j >= 0; --j) {
      coeffs[static_cast<std::size_t>(t - 1 - j)] = static_cast<symbol_t>((rest / checked_pow(q, j)) % q);
      rest %= checked_pow(q, j);
    }
    for (int x = 0; x < q; ++x) cells.push_back(field.eval_poly(coeffs, static_cast<symbol_t>(x)));
    cells.push_back(coeffs[0]);  // coefficient of x^(t-1)
  }
  Recipe recipe{.family = RecipeFamily::bush, .t = t, .q = q};
  Array out(static_cast<int>(n), q + 1, q, std::move(cells), make_meta(recipe, t, 1));
  require_verified(is_oa(out, t, 1), errc::verification, "bush output");
  return out;
}

Array bush_oa_even(int q) {
  int p = 0, m = 0;
  require(is_prime_power(q, &p, &m) && p == 2 && q >= 4, errc::invalid_argument,
          "this construction needs q a power of two, at least 4");
  GaloisField field = make_field(q);
  const std::int64_t n = checked_pow(q, 3);
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(n) * (q + 2));
  for (std::int64_t r = 0; r < n; ++r) {
    const auto a2 = static_cast<symbol_t>(r / (static_cast<std::int64_t>(q) * q));
    const auto a1 = static_cast<symbol_t>((r / q) % q);
    const auto a0 = static_cast<symbol_t>(r % q);
    const symbol_t coeffs[3] = {a2, a1, a0};
    for (int x = 0; x < q; ++x) cells.push_back(field.eval_poly(coeffs, static_cast<symbol_t>(x)));
    cells.push_back(a2);
    cells.push_back(a1);
  }
  Recipe recipe{.family = RecipeFamily::bush_even, .t = 3, .q = q};
  Array out(static_cast<int>(n), q + 2, q, std::move(cells), make_meta(recipe, 3, 1));
  require_verified(is_oa(out, 3, 1), errc::verification, "bush-even output");
  return out;
}

Array macneish_product(const Array& a, const Array& b, int t) {
  require(a.cols() == b.cols(), errc::ingredient, "factors must share the number of columns");
  require_verified(is_oa(a, t, 1), errc::ingredient, "left factor");
  require_verified(is_oa(b, t, 1), errc::ingredient, "right factor");
  const int v2 = b.alphabet();
  const int v_out = a.alphabet() * v2;
  std::vector<symbol_t> cells;
  cells.reserve(static_cast<std::size_t>(a.rows()) * b.rows() * a.cols());
  for (int ra = 0; ra < a.rows(); ++ra)
    for (int rb = 0; rb < b.rows(); ++rb)
      for (int c = 0; c < a.cols(); ++c)
        cells.push_back(static_cast<symbol_t>(a.at(ra, c) * v2 + b.at(rb, c)));
  Recipe recipe{.family = RecipeFamily::macneish, .t = t, .v = v_out,
                .v1 = a.alphabet(), .v2 = v2};
  Array out(a.rows() * b.rows(), a.cols(), v_out, std::move(cells), make_meta(recipe, t, 1));
  require_verified(is_oa(out, t, 1), errc::verification, "product output");
  return out;
}

Array derive_stack_ssoa(const Array& a, int t_plus_1, int lambda) {
  return derive_stack_ssoa(a, t_plus_1, a.cols(), lambda);
}

Array derive_stack_ssoa(const Array& a, int t_plus_1, int col, int lambda) {
  require(lambda >= 1, errc::invalid_argument, "lambda must be positive");
  require(lambda <= a.alphabet(), errc::budget,
          "lambda " + std::to_string(lambda) + " exceeds the alphabet size " +
              std::to_string(a.alphabet()) + "; at most v derived arrays exist");
  std::vector<symbol_t> symbols;
  for (int s = 0; s < lambda; ++s) symbols.push_back(static_cast<symbol_t>(s));
  return derive_stack_ssoa(a, t_plus_1, col, symbols);
}

Array derive_stack_ssoa(const Array& a, int t_plus_1, int col,
                        const std::vector<symbol_t>& symbols) {
  const int t = t_plus_1 - 1;
  require(t >= 1, errc::invalid_argument, "derived strength must be positive");
  require(col >= 1 && col <= a.cols(), errc::invalid_argument, "derive column out of range");
  require(!symbols.empty(), errc::invalid_argument, "pick at least one symbol");
  const int lambda = static_cast<int>(symbols.size());
  require(lambda <= a.alphabet(), errc::budget,
          "lambda " + std::to_string(lambda) + " exceeds the alphabet size " +
              std::to_string(a.alphabet()) + "; at most v derived arrays exist");
  {
    std::vector<symbol_t> sorted = symbols;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            errc::invalid_argument, "derive symbols must be distinct");
  }
  require_verified(is_oa(a, t_plus_1, 1), errc::ingredient, "derive-stack ingredient");

  std::vector<Array> blocks;
  blocks.reserve(symbols.size());
  for (symbol_t s : symbols) blocks.push_back(derived(a, col, s));
  Recipe recipe{.family = RecipeFamily::derive_stack, .t = t, .lambda = lambda,
                .column_sequence = {col}};
  Array out = vstack(blocks).with_meta(make_meta(recipe, t, lambda));
  require_verified(is_super_simple_oa(out, t, lambda), errc::verification, "derive-stack output");
  return out;
}

Array wraparound_coa(const Array& a, int t) {
  require(t >= 2, errc::invalid_argument, "strength must be at least 2");
  const int lambda = infer_lambda(a, t, "wraparound ingredient");
  require_verified(is_super_simple_oa(a, t, lambda), errc::ingredient, "wraparound ingredient");
  std::vector<int> sequence(static_cast<std::size_t>(a.cols() + t - 1));
  std::iota(sequence.begin(), sequence.begin() + a.cols(), 1);
  for (int j = 0; j < t - 1; ++j) sequence[static_cast<std::size_t>(a.cols() + j)] = j + 1;
  Recipe recipe{.family = RecipeFamily::wraparound, .t = t, .lambda = lambda};
  Array out = select_columns(a, sequence).with_meta(make_meta(recipe, t, lambda));
  require_verified(is_simple_coa(out, t, lambda), errc::verification, "wraparound output");
  return out;
}

Array double_wrap_coa(const Array& a) {
  const int k = a.cols();
  require(k > 4, errc::invalid_argument, "double wrap needs more than 4 columns");
  const int lambda = infer_lambda(a, 2, "double-wrap ingredient");
  require_verified(is_super_simple_oa(a, 2, lambda), errc::ingredient, "double-wrap ingredient");

  std::vector<int> sequence;
  sequence.reserve(static_cast<std::size_t>(2 * k + 1));
  for (int c = 1; c <= k; ++c) sequence.push_back(c);
  if (k % 2 == 1) {
    for (int c = 1; c <= k - 2; c += 2) sequence.push_back(c);
    sequence.push_back(k);
    for (int c = 2; c <= k - 3; c += 2) sequence.push_back(c);
    sequence.push_back(k - 1);
    sequence.push_back(1);
  } else {
    for (int c = 1; c <= k - 3; c += 2) sequence.push_back(c);
    sequence.push_back(k - 1);
    for (int c = 2; c <= k - 2; c += 2) sequence.push_back(c);
    sequence.push_back(k);
    sequence.push_back(2);
  }
  Recipe recipe{.family = RecipeFamily::double_wrap, .t = 2, .lambda = lambda};
  Array out = select_columns(a, sequence).with_meta(make_meta(recipe, 2, lambda));
  require_verified(is_simple_coa(out, 2, lambda), errc::verification, "double-wrap output");
  return out;
}

Array column_select_coa(const Array& a, const std::vector<int>& sequence, int t, int lambda) {
  Recipe recipe{.family = RecipeFamily::column_select, .t = t, .lambda = lambda,
                .column_sequence = sequence};
  Array out = select_columns(a, sequence).with_meta(make_meta(recipe, t, lambda));
  require_verified(is_simple_coa(out, t, lambda), errc::verification, "column-select output");
  return out;
}

RowDivisibleArray juxtapose(const std::vector<Array>& parts, int t) {
  require(!parts.empty(), errc::invalid_argument, "nothing to juxtapose");
  std::vector<int> lambdas;
  int total = 0;
  for (const Array& part : parts) {
    require(part.cols() == parts.front().cols() && part.alphabet() == parts.front().alphabet(),
            errc::shape_mismatch, "juxtaposed parts must share columns and alphabet");
    const int lambda = infer_lambda(part, t, "juxtapose part");
    require_verified(is_simple_coa(part, t, lambda), errc::ingredient, "juxtapose part");
    lambdas.push_back(lambda);
    total += lambda;
  }
  std::vector<RowRange> ranges;
  int row = 1;
  for (const Array& part : parts) {
    ranges.push_back({row, row + part.rows() - 1});
    row += part.rows();
  }
  Recipe recipe{.family = RecipeFamily::juxtapose, .t = t, .lambda = total};
  Array whole = vstack(parts).with_meta(make_meta(recipe, t, total));
  RowDivisibleArray out(std::move(whole), std::move(ranges), std::move(lambdas));
  require_verified(is_coa(out.array(), t, total), errc::verification, "juxtapose output");
  return out;
}

RowDivisibleArray inflate_product(const RowDivisibleArray& a, const std::vector<Array>& bs,
                                  int t) {
  const int mu = a.mu();
  require(static_cast<int>(bs.size()) >= mu, errc::ingredient,
          "need one factor per part: " + std::to_string(bs.size()) + " < mu = " +
              std::to_string(mu));
  const Array& base = a.array();
  const int v1 = base.alphabet();
  const int v2 = bs.front().alphabet();
  int eta = 0;
  for (int i = 0; i < mu; ++i) {
    const Array& b = bs[static_cast<std::size_t>(i)];
    require(b.cols() == base.cols() && b.alphabet() == v2, errc::shape_mismatch,
            "inflate factors must share columns and alphabet");
    const int this_eta = infer_lambda(b, t, "inflate factor");
    if (i == 0)
      eta = this_eta;
    else
      require(this_eta == eta, errc::ingredient, "inflate factors must share the same index");
    require_verified(is_simple_coa(b, t, eta), errc::ingredient, "inflate factor");
  }
  const int lambda_a = infer_lambda(base, t, "inflate ingredient");
  require_verified(is_row_divisible_coa(a, t, lambda_a), errc::ingredient, "inflate ingredient");

  std::vector<symbol_t> cells;
  std::vector<RowRange> ranges;
  std::vector<int> part_lambdas;
  int row = 1;
  for (int i = 0; i < mu; ++i) {
    const RowRange& part = a.parts()[static_cast<std::size_t>(i)];
    const Array& b = bs[static_cast<std::size_t>(i)];
    for (int ra = part.first - 1; ra < part.last; ++ra)
      for (int rb = 0; rb < b.rows(); ++rb)
        for (int c = 0; c < base.cols(); ++c)
          cells.push_back(static_cast<symbol_t>(base.at(ra, c) * v2 + b.at(rb, c)));
    const int part_rows = part.size() * b.rows();
    ranges.push_back({row, row + part_rows - 1});
    row += part_rows;
    if (a.part_lambdas().size() == static_cast<std::size_t>(mu))
      part_lambdas.push_back(a.part_lambdas()[static_cast<std::size_t>(i)] * eta);
  }
  const int lambda_out = lambda_a * eta;
  Recipe recipe{.family = RecipeFamily::inflate, .t = t, .v = v1 * v2, .lambda = lambda_out,
                .v1 = v1, .v2 = v2, .eta = eta};
  Array whole(row - 1, base.cols(), v1 * v2, std::move(cells), make_meta(recipe, t, lambda_out));
  RowDivisibleArray out(std::move(whole), std::move(ranges), std::move(part_lambdas));
  require_verified(is_row_divisible_coa(out, t, lambda_out), errc::verification,
                   "inflate output");

  // with pairwise-compatible factors the whole result is simple
  bool compatible = true;
  for (int i = 0; i < mu && compatible; ++i)
    for (int j = i + 1; j < mu && compatible; ++j)
      compatible = is_compatible(bs[static_cast<std::size_t>(i)],
                                 bs[static_cast<std::size_t>(j)], t)
                       .pass;
  if (compatible)
    require_verified(is_simple_coa(out.array(), t, lambda_out), errc::verification,
                     "inflate output (compatible factors)");
  return out;
}

Array weighting_combine(const std::vector<std::pair<RowDivisibleArray, int>>& ingredients,
                        const std::vector<Array>& bs, int t) {
  require(!ingredients.empty(), errc::invalid_argument, "no ingredients");
  int parts_needed = 0;
  int lambda_sum = 0;
  for (const auto& [rd, copies] : ingredients) {
    require(copies >= 0, errc::invalid_argument, "multiplicities must be non-negative");
    const int lambda_i = infer_lambda(rd.array(), t, "weighting ingredient");
    require_verified(is_row_divisible_coa(rd, t, lambda_i), errc::ingredient,
                     "weighting ingredient");
    parts_needed += copies * rd.mu();
    lambda_sum += copies * lambda_i;
  }
  require(parts_needed >= 1, errc::invalid_argument, "all multiplicities are zero");
  require(parts_needed <= static_cast<int>(bs.size()), errc::budget,
          "weighting budget violated: sum(m_i * mu_i) = " + std::to_string(parts_needed) +
              " exceeds the " + std::to_string(bs.size()) + " compatible factors");

  // replicate and stack the ingredients, keeping each part as its own block
  std::vector<Array> blocks;
  std::vector<int> block_lambdas;
  bool lambdas_known = true;
  for (const auto& [rd, copies] : ingredients) {
    for (int c = 0; c < copies; ++c)
      for (int i = 0; i < rd.mu(); ++i) {
        blocks.push_back(rd.part(i));
        if (rd.part_lambdas().size() == static_cast<std::size_t>(rd.mu()))
          block_lambdas.push_back(rd.part_lambdas()[static_cast<std::size_t>(i)]);
        else
          lambdas_known = false;
      }
  }
  std::vector<RowRange> ranges;
  int row = 1;
  for (const Array& block : blocks) {
    ranges.push_back({row, row + block.rows() - 1});
    row += block.rows();
  }
  RowDivisibleArray stacked(vstack(blocks), std::move(ranges),
                            lambdas_known ? std::move(block_lambdas) : std::vector<int>{});

  RowDivisibleArray inflated = inflate_product(stacked, bs, t);
  const int eta = infer_lambda(bs.front(), t, "weighting factor");
  const int lambda_out = eta * lambda_sum;

  std::vector<RecipeIngredient> table;
  for (const auto& [rd, copies] : ingredients)
    table.push_back({rd.mu(), infer_lambda(rd.array(), t, "weighting ingredient"), copies});
  Recipe recipe{.family = RecipeFamily::weighting, .t = t,
                .v = inflated.array().alphabet(), .lambda = lambda_out,
                .v1 = ingredients.front().first.array().alphabet(),
                .v2 = bs.front().alphabet(), .eta = eta, .ingredients = table};
  Array out = inflated.array().with_meta(make_meta(recipe, t, lambda_out));
  require_verified(is_simple_coa(out, t, lambda_out), errc::verification, "weighting output");
  return out;
}

std::vector<Array> compatible_family_from_oa(const Array& a, int col, int t) {
  require(t >= 1, errc::invalid_argument, "strength must be positive");
  require_verified(is_oa(a, t + 1, 1), errc::ingredient, "family source");
  std::vector<Array> family;
  for (int s = 0; s < a.alphabet(); ++s) {
    Array block = derived(a, col, static_cast<symbol_t>(s));
    Recipe recipe{.family = RecipeFamily::derive_stack, .t = t, .lambda = 1,
                  .column_sequence = {col}};
    family.push_back(block.with_meta(make_meta(recipe, t, 1)));
    require_verified(is_coa(family.back(), t, 1), errc::verification, "derived family member");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      require_verified(is_compatible(family[i], family[j], t), errc::verification,
                       "derived family compatibility");
  return family;
}

Recipe recipe_solver(int target_lambda, int v, RecipeCase recipe_case) {
  require(target_lambda >= 2, errc::invalid_argument,
          "recipes cover indices 2..v; an index-1 array is a plain construction");
  require(target_lambda <= v, errc::budget,
          "lambda " + std::to_string(target_lambda) + " exceeds the alphabet size " +
              std::to_string(v));

  Recipe recipe;
  recipe.family = RecipeFamily::weighting;
  recipe.t = 2;
  recipe.v = v;
  recipe.lambda = target_lambda;
  recipe.eta = 1;

  if (recipe_case == RecipeCase::four_t_plus_two) {
    require(v % 4 == 2 && v >= 10, errc::invalid_argument,
            "this recipe family needs v = 4t+2 with t >= 2");
    recipe.v1 = 2;
    recipe.v2 = v / 2;
    const int m1 = target_lambda % 2 == 0 ? target_lambda / 2 : (target_lambda - 3) / 2;
    const int m2 = target_lambda % 2 == 0 ? 0 : 1;
    recipe.ingredients = {{1, 2, m1}, {2, 3, m2}};
  } else {
    require(v % 6 == 0, errc::invalid_argument, "this recipe family needs v = 6u");
    const int u = v / 6;
    require(u > 1 && u % 2 == 1 && u % 3 != 0, errc::invalid_argument,
            "this recipe family needs u > 1 coprime to 6");
    recipe.v1 = 6;
    recipe.v2 = u;
    if (target_lambda == v - 1)
      throw Error(errc::no_recipe, "no recipe exists for lambda = v-1 = " +
                                       std::to_string(target_lambda));
    if (target_lambda == v - 3) {
      recipe.ingredients = {{1, 6, u - 2}, {2, 9, 1}};
    } else {
      const int h = target_lambda / 6;
      const int eps = target_lambda % 6;
      static const int table[6][2] = {{0, 0}, {1, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}};
      if (eps == 0)
        recipe.ingredients = {{1, 6, h}};
      else
        recipe.ingredients = {{1, 6, h}, {table[eps][0], table[eps][1], 1}};
    }
  }

  // both closed-form conditions, checked arithmetically on return
  const int cap = recipe.v2;  // number of compatible factors available
  int weighted = 0, used = 0;
  for (const RecipeIngredient& ing : recipe.ingredients) {
    weighted += ing.multiplicity * ing.lambda;
    used += ing.multiplicity * ing.mu;
  }
  require(weighted == target_lambda, errc::no_recipe, "recipe equation unsatisfied");
  require(used <= cap, errc::no_recipe,
          "recipe budget violated: " + std::to_string(used) + " parts > " + std::to_string(cap));
  for (const RecipeIngredient& ing : recipe.ingredients)
    require(ing.multiplicity >= 0, errc::no_recipe, "negative multiplicity");
  return recipe;
}

}  // namespace cda
