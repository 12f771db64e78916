// Exact scalar arithmetic: rational numbers and cyclotomic numbers.
//
// A scalar is either an exact rational (GMP-backed) or an element of a
// cyclotomic field Q(zeta_N), stored in the power basis 1, zeta, ...,
// zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.  All
// operations are exact; cyclotomic values that reduce to a rational are
// demoted so that equality with plain rationals works transparently.

#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qgreen {

using Rational = mpq_class;

struct ZeroBaseError : std::runtime_error {
  ZeroBaseError() : std::runtime_error("evaluation at q = 0 with negative exponents") {}
};
struct PoleError : std::runtime_error {
  PoleError() : std::runtime_error("evaluation at a pole of a rational function") {}
};
struct DivideByZeroError : std::runtime_error {
  DivideByZeroError() : std::runtime_error("exact division by zero") {}
};
struct ZeroPolynomialError : std::runtime_error {
  ZeroPolynomialError() : std::runtime_error("operation undefined for the zero polynomial") {}
};

std::string rational_str(const Rational& r);
Rational rational_parse(const std::string& s);

// mpq_class has no long long constructor; long is 64-bit on this platform.
inline Rational rat_of(long long x) { return Rational(static_cast<long>(x)); }
inline Rational rat_frac(long long num, long long den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

namespace detail {
// Dense polynomials over Q, used internally for cyclotomic reduction.
using QPoly = std::vector<Rational>;  // coefficient of x^i at index i; no trailing zeros
QPoly qpoly_trim(QPoly p);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
// Exact division with remainder; b must be nonzero.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
const QPoly& cyclotomic_polynomial(int n);
int euler_phi(int n);
}  // namespace detail

class Cyclotomic {
 public:
  // Coefficients are given on the powers zeta_N^0, zeta_N^1, ... (any length);
  // the representative is reduced modulo Phi_N.
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all non-constant coefficients vanish
  Rational rational_part() const;

  Cyclotomic promoted(int conductor) const;  // embed into Q(zeta_M), n | M

 private:
  int n_ = 1;
  std::vector<Rational> c_;  // size phi(n_), reduced
  void reduce(std::vector<Rational> raw_powers);
  friend class ExactScalar;
};

class ExactScalar {
 public:
  ExactScalar() : v_(Rational(0)) {}
  ExactScalar(long n) : v_(Rational(n)) {}
  ExactScalar(int n) : v_(Rational(n)) {}
  ExactScalar(Rational r) : v_(std::move(r)) {}
  ExactScalar(const Cyclotomic& c) : v_(c) { normalize(); }

  // zeta_n^k
  static ExactScalar root_of_unity(int n, long k = 1);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rat() const;
  const Cyclotomic& cyc() const;

  bool is_zero() const;
  bool is_one() const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar inverse() const;
  // Complex conjugation: identity on rationals, zeta -> zeta^{-1}.
  ExactScalar conjugate() const;

  bool operator==(const ExactScalar& o) const;
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Rational, Cyclotomic> v_;
  void normalize();
};

ExactScalar operator+(ExactScalar a, const ExactScalar& b);
ExactScalar operator-(ExactScalar a, const ExactScalar& b);
ExactScalar operator*(ExactScalar a, const ExactScalar& b);
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);

}  // namespace qgreen
