#include "qgreen/ratfun.hpp"

namespace qgreen {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivideByZeroError();
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial(1L);
    return;
  }
  // Strip q-powers so both parts become ordinary with nonzero constant term;
  // the net shift goes back into the numerator at the end.
  int shift = num_.min_exp() - den_.min_exp();
  num_.mul_q_power(-num_.min_exp());
  den_.mul_q_power(-den_.min_exp());
  LaurentPolynomial g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  ExactScalar lead_inv = den_.leading_coeff().inverse();
  num_.mul_scalar(lead_inv);
  den_.mul_scalar(lead_inv);
  num_.mul_q_power(shift);
}

const LaurentPolynomial& RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial: " + str());
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  if (den_.is_zero()) throw DivideByZeroError();
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivideByZeroError();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::star() const { return RationalFunction(num_.star(), den_.star()); }

RationalFunction RationalFunction::conj() const { return RationalFunction(num_.conj(), den_.conj()); }

ExactScalar RationalFunction::evaluate(const Rational& q0) const {
  ExactScalar d = den_.evaluate(q0);
  if (d.is_zero()) throw PoleError();
  return num_.evaluate(q0) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

}  // namespace qgreen
