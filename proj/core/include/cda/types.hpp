#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cda {

// Symbols are canonicalized to integers 0..v-1 on ingestion; uint16_t covers
// every alphabet this toolkit handles (fields up to GF(2^16)).
using symbol_t = std::uint16_t;

enum class errc {
  invalid_argument,   // bad column/strength/symbol, malformed parameters
  not_a_prime_power,  // field order has no single-prime factorization
  ingredient,         // input array fails the check a construction requires
  budget,             // a lambda/d budget inequality is violated (d < v, lambda <= v)
  verification,       // a construction's output failed its own post-check
  no_recipe,          // the integer recipe system has no admissible solution
  infeasible,         // work cap exceeded; the check refuses rather than sample
  unknown_seed,       // catalog name not found
  shape_mismatch,     // arrays disagree on rows/cols/alphabet where they must not
  parse,              // file format violation
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

const char* errc_name(errc code);

// Caps for the brute-force checkers. When a check would exceed a cap it
// throws errc::infeasible instead of sampling.
struct WorkBudget {
  std::int64_t max_tuple_space = std::int64_t{1} << 24;  // dense coverage tables
  std::int64_t max_subset_pairs = 10'000'000;            // detecting-array subset scans
};

}  // namespace cda
