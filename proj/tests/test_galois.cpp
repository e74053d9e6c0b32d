#include <vector>

#include "cda/galois.hpp"
#include "doctest.h"

using namespace cda;

namespace {

// naive power-sum evaluation, the independent oracle for Horner
symbol_t eval_naive(const GaloisField& f, const std::vector<symbol_t>& coeffs, symbol_t x) {
  symbol_t acc = 0;
  const int deg = static_cast<int>(coeffs.size()) - 1;
  for (int i = 0; i <= deg; ++i) {
    symbol_t power = 1;
    for (int j = 0; j < deg - i; ++j) power = f.mul(power, x);
    acc = f.add(acc, f.mul(coeffs[static_cast<std::size_t>(i)], power));
  }
  return acc;
}

void check_axioms(int q) {
  CAPTURE(q);
  GaloisField f = make_field(q);
  REQUIRE(f.q() == q);
  for (int a = 0; a < q; ++a) {
    auto sa = static_cast<symbol_t>(a);
    CHECK(f.add(sa, 0) == sa);
    CHECK(f.mul(sa, 1) == sa);
    CHECK(f.add(sa, f.neg(sa)) == 0);
    if (a != 0) CHECK(f.mul(sa, f.inv(sa)) == 1);
  }
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      auto sa = static_cast<symbol_t>(a), sb = static_cast<symbol_t>(b);
      CHECK(f.add(sa, sb) == f.add(sb, sa));
      CHECK(f.mul(sa, sb) == f.mul(sb, sa));
      for (int c = 0; c < q; ++c) {
        auto sc = static_cast<symbol_t>(c);
        CHECK(f.add(f.add(sa, sb), sc) == f.add(sa, f.add(sb, sc)));
        CHECK(f.mul(f.mul(sa, sb), sc) == f.mul(sa, f.mul(sb, sc)));
        CHECK(f.mul(sa, f.add(sb, sc)) == f.add(f.mul(sa, sb), f.mul(sa, sc)));
      }
    }
}

}  // namespace

TEST_CASE("GF(2) is xor/and") {
  GaloisField f = make_field(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(f.add(static_cast<symbol_t>(a), static_cast<symbol_t>(b)) == (a ^ b));
      CHECK(f.mul(static_cast<symbol_t>(a), static_cast<symbol_t>(b)) == (a & b));
    }
}

TEST_CASE("GF(4): characteristic 2 and a 3-cycle of units") {
  GaloisField f = make_field(4);
  for (int a = 0; a < 4; ++a) CHECK(f.add(static_cast<symbol_t>(a), static_cast<symbol_t>(a)) == 0);
  // nonzero elements form a cyclic group of order 3
  for (int g = 2; g <= 3; ++g) {
    symbol_t x = static_cast<symbol_t>(g);
    symbol_t sq = f.mul(x, x);
    CHECK(sq != x);
    CHECK(sq != 1);
    CHECK(f.mul(sq, x) == 1);
  }
}

TEST_CASE("non-prime-powers are rejected") {
  CHECK_THROWS_AS(make_field(6), Error);
  CHECK_THROWS_AS(make_field(12), Error);
  CHECK_THROWS_AS(make_field(1), Error);
  try {
    make_field(6);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_prime_power);
  }
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) check_axioms(q);
}

TEST_CASE("eval_poly examples") {
  GaloisField f3 = make_field(3);
  CHECK(eval_poly(f3, std::vector<symbol_t>{1, 1}, 2) == 0);  // x + 1 at 2
  GaloisField f2 = make_field(2);
  CHECK(eval_poly(f2, std::vector<symbol_t>{1, 0, 1}, 1) == 0);  // x^2 + 1 at 1
  // constant polynomial
  GaloisField f5 = make_field(5);
  for (int x = 0; x < 5; ++x)
    CHECK(eval_poly(f5, std::vector<symbol_t>{3}, static_cast<symbol_t>(x)) == 3);
  CHECK_THROWS_AS(eval_poly(f5, std::vector<symbol_t>{}, 0), Error);
  CHECK_THROWS_AS(eval_poly(f5, std::vector<symbol_t>{5}, 0), Error);
}

TEST_CASE("Horner agrees with naive power-sum evaluation") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    GaloisField f = make_field(q);
    // all polynomials of degree <= 3 would be q^4 cases; sweep degree 0..3
    for (int deg = 0; deg <= 3; ++deg) {
      std::vector<symbol_t> coeffs(static_cast<std::size_t>(deg) + 1, 0);
      const std::int64_t total = [&] {
        std::int64_t n = 1;
        for (int i = 0; i <= deg; ++i) n *= q;
        return n;
      }();
      for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t rest = code;
        for (auto& c : coeffs) {
          c = static_cast<symbol_t>(rest % q);
          rest /= q;
        }
        for (int x = 0; x < q; ++x) {
          auto sx = static_cast<symbol_t>(x);
          REQUIRE(f.eval_poly(coeffs, sx) == eval_naive(f, coeffs, sx));
        }
      }
    }
  }
}

TEST_CASE("canonical moduli for common orders") {
  CHECK(make_field(4).modulus() == std::vector<int>{1, 1, 1});      // x^2+x+1
  CHECK(make_field(8).modulus() == std::vector<int>{1, 1, 0, 1});   // x^3+x+1
  CHECK(make_field(9).modulus() == std::vector<int>{1, 0, 1});      // x^2+1
  CHECK(make_field(16).modulus() == std::vector<int>{1, 1, 0, 0, 1});
}

TEST_CASE("larger orders: identities, inverses, sampled associativity") {
  for (int q : {25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256, 1024}) {
    CAPTURE(q);
    GaloisField f = make_field(q);
    for (int a = 1; a < q; a += std::max(1, q / 40)) {
      auto sa = static_cast<symbol_t>(a);
      REQUIRE(f.mul(sa, f.inv(sa)) == 1);
      REQUIRE(f.add(sa, f.neg(sa)) == 0);
    }
    const auto x = static_cast<symbol_t>(q / 3);
    const auto y = static_cast<symbol_t>(q / 2);
    const auto z = static_cast<symbol_t>(q - 1);
    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
    CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
  }
}
