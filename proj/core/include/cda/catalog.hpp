#pragma once

#include <string>
#include <vector>

#include "cda/io.hpp"

namespace cda {

struct SeedInfo {
  std::string name;
  std::string description;
  int n = 0;
  int k = 0;
  int v = 0;
  int t = 0;
  int lambda = 0;
  bool row_divisible = false;
};

// Seed arrays shipped verbatim; the same texts live as data files under
// core/data/seeds and are checksummed there.
std::vector<SeedInfo> catalog_list();
const std::string& catalog_seed_text(const std::string& name);  // throws errc::unknown_seed
io::ArrayDocument catalog_seed(const std::string& name);

}  // namespace cda
