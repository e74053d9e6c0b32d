#pragma once

#include <span>
#include <vector>

#include "cda/types.hpp"

namespace cda {

// Arithmetic for GF(p^m), q = p^m <= 2^16. Element labels pack the
// polynomial coefficients base p with the constant term as the least
// significant digit, so 0 and 1 are the additive and multiplicative
// identities. For m > 1 the modulus is the canonical irreducible: the first
// monic irreducible of degree m when the non-leading coefficient vector is
// read as a base-p number and enumerated ascending.
class GaloisField {
public:
  static GaloisField make(int q);  // throws errc::not_a_prime_power

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return m_; }

  symbol_t add(symbol_t a, symbol_t b) const;
  symbol_t sub(symbol_t a, symbol_t b) const;
  symbol_t neg(symbol_t a) const;
  symbol_t mul(symbol_t a, symbol_t b) const;
  symbol_t inv(symbol_t a) const;  // throws on 0

  // Horner evaluation; coeffs are listed leading coefficient first.
  symbol_t eval_poly(std::span<const symbol_t> coeffs, symbol_t x) const;

  // modulus coefficients, constant term first, length degree+1; {} for m = 1
  const std::vector<int>& modulus() const { return modulus_; }

private:
  GaloisField() = default;
  void check_symbol(symbol_t a) const;
  symbol_t mul_nolog(symbol_t a, symbol_t b) const;  // polynomial mod-multiply
  void build_log_tables();

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<symbol_t> exp_;  // exp_[i] = g^i, i in 0..q-2
  std::vector<int> log_;       // log_[x] for x != 0
};

// Convenience wrappers matching the operation names used elsewhere.
GaloisField make_field(int q);
symbol_t eval_poly(const GaloisField& field, std::span<const symbol_t> coeffs, symbol_t point);

bool is_prime_power(int q, int* p_out = nullptr, int* m_out = nullptr);

}  // namespace cda
