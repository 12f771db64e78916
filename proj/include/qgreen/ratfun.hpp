// Rational functions in q with a unique canonical representation.
//
// Canonical form: the denominator is an ordinary monic polynomial with
// nonzero constant term and no common factor with the numerator; all powers
// of q are carried by the (Laurent) numerator.  Two equal rational functions
// therefore have identical representations and operator== is structural.

#pragma once

#include <string>

#include "qgreen/laurent.hpp"

namespace qgreen {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1L) {}
  RationalFunction(LaurentPolynomial p) : num_(std::move(p)), den_(1L) {}
  RationalFunction(long c) : num_(c), den_(1L) {}
  RationalFunction(int c) : num_(c), den_(1L) {}
  RationalFunction(const ExactScalar& c) : num_(c), den_(1L) {}
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  const LaurentPolynomial& as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction inverse() const;

  RationalFunction star() const;
  RationalFunction conj() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  ExactScalar evaluate(const Rational& q0) const;  // PoleError / ZeroBaseError

  std::string str(const std::string& var = "q") const;

 private:
  LaurentPolynomial num_, den_;
  void canonicalize();
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

}  // namespace qgreen
