#include "cda/catalog.hpp"

#include <array>

namespace cda {

namespace {

struct SeedEntry {
  const char* name;
  const char* description;
  const char* text;
};

// clang-format off
constexpr const char* kCca9_2_21_3 =
"9 21 3\n"
"# family: seed:cca-9-2-21-3\n"
"# t: 2\n"
"# lambda: 1\n"
"0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n"
"0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0\n"
"0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0\n"
"1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1\n"
"1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n"
"1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1\n"
"2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2 0 2\n"
"2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2 1 2\n"
"2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2 2\n";

constexpr const char* kCoa3_2_6_3 =
"27 6 3\n"
"# family: seed:coa3-2-6-3\n"
"# t: 2\n"
"# lambda: 3\n"
"0 0 0 0 0 0\n"
"0 0 1 2 0 1\n"
"0 0 2 1 0 2\n"
"0 1 0 2 0 0\n"
"0 1 1 1 0 1\n"
"0 1 2 0 0 2\n"
"0 2 0 1 0 0\n"
"0 2 1 0 0 1\n"
"0 2 2 2 0 2\n"
"1 0 0 2 1 0\n"
"1 0 1 1 1 1\n"
"1 0 2 0 1 2\n"
"1 1 0 1 1 0\n"
"1 1 1 0 1 1\n"
"1 1 2 2 1 2\n"
"1 2 0 0 1 0\n"
"1 2 1 2 1 1\n"
"1 2 2 1 1 2\n"
"2 0 0 1 2 0\n"
"2 0 1 0 2 1\n"
"2 0 2 2 2 2\n"
"2 1 0 0 2 0\n"
"2 1 1 2 2 1\n"
"2 1 2 1 2 2\n"
"2 2 0 2 2 0\n"
"2 2 1 1 2 1\n"
"2 2 2 0 2 2\n";

constexpr const char* kOa3_4_2 =
"8 4 2\n"
"# family: seed:oa-3-4-2\n"
"# t: 3\n"
"# lambda: 1\n"
"0 0 0 0\n"
"0 0 1 1\n"
"0 1 0 1\n"
"0 1 1 0\n"
"1 1 1 1\n"
"1 1 0 0\n"
"1 0 1 0\n"
"1 0 0 1\n";

constexpr const char* kSsoa2_2_3_2 =
"8 3 2\n"
"# family: seed:ssoa2-2-3-2\n"
"# t: 2\n"
"# lambda: 2\n"
"0 0 0\n"
"0 1 1\n"
"1 0 1\n"
"1 1 0\n"
"1 1 1\n"
"1 0 0\n"
"0 1 0\n"
"0 0 1\n";

constexpr const char* kCoa2_2_4_2 =
"8 4 2\n"
"# family: seed:coa2-2-4-2\n"
"# t: 2\n"
"# lambda: 2\n"
"0 0 0 0\n"
"0 1 1 0\n"
"1 0 1 1\n"
"1 1 0 1\n"
"1 1 1 1\n"
"1 0 0 1\n"
"0 1 0 0\n"
"0 0 1 0\n";

constexpr const char* kCoa4_6_2 =
"16 6 2\n"
"# family: seed:coa4-6-2\n"
"# t: 4\n"
"# lambda: 1\n"
"0 0 0 0 0 0\n"
"0 0 0 1 0 1\n"
"0 0 1 0 1 0\n"
"0 0 1 1 1 1\n"
"0 1 0 0 0 1\n"
"0 1 0 1 0 0\n"
"0 1 1 0 1 1\n"
"0 1 1 1 1 0\n"
"1 0 0 0 1 0\n"
"1 0 0 1 1 1\n"
"1 0 1 0 0 0\n"
"1 0 1 1 0 1\n"
"1 1 0 0 1 1\n"
"1 1 0 1 1 0\n"
"1 1 1 0 0 1\n"
"1 1 1 1 0 0\n";

constexpr const char* kRowdiv2Coa3_2_5_2 =
"12 5 2\n"
"# family: seed:rowdiv2-coa3-2-5-2\n"
"# t: 2\n"
"# lambda: 3\n"
"# parts: 1-6 7-12\n"
"0 0 0 0 0\n"
"0 0 1 0 1\n"
"1 1 0 1 1\n"
"1 0 1 1 1\n"
"0 1 1 1 0\n"
"1 1 1 0 0\n"
"0 1 0 1 1\n"
"1 0 1 1 0\n"
"0 1 1 0 1\n"
"1 1 0 0 0\n"
"1 0 0 0 1\n"
"0 0 0 1 0\n";
// clang-format on

constexpr std::array<SeedEntry, 7> kSeeds = {{
    {"cca-9-2-21-3", "consecutive covering array, 9 tests x 21 factors over 3 levels",
     kCca9_2_21_3},
    {"coa3-2-6-3", "simple consecutive orthogonal array, index 3, strength 2, 6 factors, 3 levels",
     kCoa3_2_6_3},
    {"oa-3-4-2", "orthogonal array of strength 3, 4 factors, 2 levels", kOa3_4_2},
    {"ssoa2-2-3-2", "super-simple orthogonal array, index 2, strength 2, 3 factors, 2 levels",
     kSsoa2_2_3_2},
    {"coa2-2-4-2",
     "simple consecutive orthogonal array, index 2, strength 2, 4 factors, 2 levels (wraparound "
     "of ssoa2-2-3-2)",
     kCoa2_2_4_2},
    {"coa4-6-2", "consecutive orthogonal array of strength 4, 6 factors, 2 levels", kCoa4_6_2},
    {"rowdiv2-coa3-2-5-2",
     "2-row-divisible consecutive orthogonal array, index 3, strength 2, 5 factors, 2 levels",
     kRowdiv2Coa3_2_5_2},
}};

}  // namespace

std::vector<SeedInfo> catalog_list() {
  std::vector<SeedInfo> out;
  for (const SeedEntry& entry : kSeeds) {
    io::ArrayDocument doc = io::parse_array(std::string(entry.text));
    SeedInfo info;
    info.name = entry.name;
    info.description = entry.description;
    info.n = doc.array.rows();
    info.k = doc.array.cols();
    info.v = doc.array.alphabet();
    info.t = doc.array.meta().t;
    info.lambda = doc.array.meta().lambda;
    info.row_divisible = doc.has_parts();
    out.push_back(std::move(info));
  }
  return out;
}

const std::string& catalog_seed_text(const std::string& name) {
  static const std::vector<std::pair<std::string, std::string>> texts = [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const SeedEntry& entry : kSeeds) out.emplace_back(entry.name, entry.text);
    return out;
  }();
  for (const auto& [seed_name, text] : texts)
    if (seed_name == name) return text;
  throw Error(errc::unknown_seed, "no catalog entry named '" + name + "'");
}

io::ArrayDocument catalog_seed(const std::string& name) {
  return io::parse_array(catalog_seed_text(name));
}

}  // namespace cda
