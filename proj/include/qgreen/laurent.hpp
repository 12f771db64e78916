// Sparse Laurent polynomials in one variable q over exact scalars.
//
// The representation is a map exponent -> nonzero coefficient; the zero
// polynomial is the empty map, so equality is plain structural equality.

#pragma once

#include <map>
#include <string>
#include <utility>

#include "qgreen/scalar.hpp"

namespace qgreen {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long c) { set(0, ExactScalar(c)); }
  LaurentPolynomial(int c) { set(0, ExactScalar(c)); }
  LaurentPolynomial(const ExactScalar& c) { set(0, c); }
  LaurentPolynomial(const Rational& c) { set(0, ExactScalar(c)); }

  static LaurentPolynomial q() { return q_power(1); }
  static LaurentPolynomial q_power(int e);
  static LaurentPolynomial term(int e, const ExactScalar& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  bool is_ordinary() const { return t_.empty() || t_.begin()->first >= 0; }
  bool is_one() const;

  int min_exp() const;  // throws ZeroPolynomialError on zero
  int max_exp() const;
  ExactScalar coeff(int e) const;
  ExactScalar constant_term() const { return coeff(0); }
  ExactScalar leading_coeff() const { return coeff(max_exp()); }
  const std::map<int, ExactScalar>& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& mul_scalar(const ExactScalar& c);
  LaurentPolynomial& mul_q_power(int e);

  bool operator==(const LaurentPolynomial& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPolynomial& o) const { return t_ != o.t_; }

  // q -> q^{-1}
  LaurentPolynomial star() const;
  // complex conjugation of the coefficients
  LaurentPolynomial conj() const;

  // f = q^k * f' with f'(0) != 0; throws on the zero polynomial
  std::pair<int, LaurentPolynomial> qprime_split() const;

  ExactScalar evaluate(const Rational& q0) const;
  ExactScalar evaluate(const ExactScalar& q0) const;

  std::string str(const std::string& var = "q") const;

 private:
  std::map<int, ExactScalar> t_;
  void set(int e, const ExactScalar& c);
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator*(const ExactScalar& c, LaurentPolynomial p);

// Division helpers for ordinary polynomials (all exponents >= 0).
// Both throw on violated preconditions; division is exact field arithmetic
// on coefficients.
std::pair<LaurentPolynomial, LaurentPolynomial> poly_divmod(const LaurentPolynomial& a,
                                                            const LaurentPolynomial& b);
// Monic gcd of two ordinary polynomials (gcd(0,0) = 0).
LaurentPolynomial poly_gcd(LaurentPolynomial a, LaurentPolynomial b);

}  // namespace qgreen
