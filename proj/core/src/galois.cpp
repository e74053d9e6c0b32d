#include "cda/galois.hpp"

#include <algorithm>
#include <numeric>

namespace cda {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// remainder of f / g, g monic
Poly poly_mod(Poly f, const Poly& g, int p) {
  const int dg = poly_degree(g);
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    const int factor = f[static_cast<std::size_t>(df)];
    for (int i = 0; i <= dg; ++i) {
      int& c = f[static_cast<std::size_t>(df - dg + i)];
      c = ((c - factor * g[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, int p) { return poly_degree(poly_mod(f, g, p)) < 0; }

// Trial division by every monic polynomial of degree 1..m/2.
bool poly_irreducible(const Poly& f, int m, int p) {
  for (int d = 1; 2 * d <= m; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t c = 0; c < count; ++c) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::int64_t rest = c;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly canonical_modulus(int p, int m) {
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::int64_t c = 0; c < count; ++c) {
    Poly f(static_cast<std::size_t>(m) + 1, 0);
    std::int64_t rest = c;
    for (int i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[static_cast<std::size_t>(m)] = 1;
    if (poly_irreducible(f, m, p)) return f;
  }
  throw Error(errc::invalid_argument, "no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime_power(int q, int* p_out, int* m_out) {
  if (q < 2) return false;
  int p = 0;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

GaloisField GaloisField::make(int q) {
  if (q > (1 << 16))
    throw Error(errc::invalid_argument, "field order above 2^16 is not supported");
  int p = 0, m = 0;
  if (!is_prime_power(q, &p, &m))
    throw Error(errc::not_a_prime_power, std::to_string(q) + " is not a prime power");
  GaloisField f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;
  if (m > 1) {
    f.modulus_ = canonical_modulus(p, m);
    f.build_log_tables();
  }
  return f;
}

void GaloisField::check_symbol(symbol_t a) const {
  if (a >= q_) throw Error(errc::invalid_argument, "symbol outside the field");
}

symbol_t GaloisField::add(symbol_t a, symbol_t b) const {
  check_symbol(a);
  check_symbol(b);
  if (m_ == 1) return static_cast<symbol_t>((a + b) % p_);
  if (p_ == 2) return static_cast<symbol_t>(a ^ b);
  int out = 0, place = 1;
  int x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    out += ((x + y) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return static_cast<symbol_t>(out);
}

symbol_t GaloisField::neg(symbol_t a) const {
  check_symbol(a);
  if (m_ == 1) return static_cast<symbol_t>((p_ - a) % p_);
  if (p_ == 2) return a;
  int out = 0, place = 1;
  int x = a;
  for (int i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return static_cast<symbol_t>(out);
}

symbol_t GaloisField::sub(symbol_t a, symbol_t b) const { return add(a, neg(b)); }

symbol_t GaloisField::mul_nolog(symbol_t a, symbol_t b) const {
  // coefficient vectors of a and b
  Poly fa(static_cast<std::size_t>(m_), 0), fb(static_cast<std::size_t>(m_), 0);
  int x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    fa[static_cast<std::size_t>(i)] = x % p_;
    fb[static_cast<std::size_t>(i)] = y % p_;
    x /= p_;
    y /= p_;
  }
  Poly prod(static_cast<std::size_t>(2 * m_), 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] +
           fa[static_cast<std::size_t>(i)] * fb[static_cast<std::size_t>(j)]) %
          p_;
  Poly rem = poly_mod(std::move(prod), modulus_, p_);
  rem.resize(static_cast<std::size_t>(m_), 0);
  int out = 0, place = 1;
  for (int i = 0; i < m_; ++i) {
    out += rem[static_cast<std::size_t>(i)] * place;
    place *= p_;
  }
  return static_cast<symbol_t>(out);
}

void GaloisField::build_log_tables() {
  // find a generator of the multiplicative group by direct order check
  for (int g = 1; g < q_; ++g) {
    symbol_t x = 1;
    int order = 0;
    do {
      x = mul_nolog(x, static_cast<symbol_t>(g));
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      exp_.resize(static_cast<std::size_t>(q_ - 1));
      log_.assign(static_cast<std::size_t>(q_), 0);
      symbol_t acc = 1;
      for (int i = 0; i < q_ - 1; ++i) {
        exp_[static_cast<std::size_t>(i)] = acc;
        log_[acc] = i;
        acc = mul_nolog(acc, static_cast<symbol_t>(g));
      }
      return;
    }
  }
  throw Error(errc::invalid_argument, "no multiplicative generator found");  // unreachable
}

symbol_t GaloisField::mul(symbol_t a, symbol_t b) const {
  check_symbol(a);
  check_symbol(b);
  if (m_ == 1) return static_cast<symbol_t>((static_cast<int>(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log_[a] + log_[b]) % (q_ - 1))];
}

symbol_t GaloisField::inv(symbol_t a) const {
  check_symbol(a);
  if (a == 0) throw Error(errc::invalid_argument, "zero has no multiplicative inverse");
  if (m_ == 1) {
    // Fermat: a^(p-2)
    int out = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) out = (out * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return static_cast<symbol_t>(out);
  }
  return exp_[static_cast<std::size_t>((q_ - 1 - log_[a]) % (q_ - 1))];
}

symbol_t GaloisField::eval_poly(std::span<const symbol_t> coeffs, symbol_t x) const {
  if (coeffs.empty()) throw Error(errc::invalid_argument, "empty coefficient list");
  check_symbol(x);
  symbol_t acc = 0;
  for (symbol_t c : coeffs) {
    check_symbol(c);
    acc = add(mul(acc, x), c);
  }
  return acc;
}

GaloisField make_field(int q) { return GaloisField::make(q); }

symbol_t eval_poly(const GaloisField& field, std::span<const symbol_t> coeffs, symbol_t point) {
  return field.eval_poly(coeffs, point);
}

}  // namespace cda
