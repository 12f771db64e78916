#include "qgreen/laurent.hpp"

#include <sstream>

namespace qgreen {

void LaurentPolynomial::set(int e, const ExactScalar& c) {
  if (c.is_zero())
    t_.erase(e);
  else
    t_[e] = c;
}

LaurentPolynomial LaurentPolynomial::q_power(int e) { return term(e, ExactScalar(1L)); }

LaurentPolynomial LaurentPolynomial::term(int e, const ExactScalar& c) {
  LaurentPolynomial p;
  p.set(e, c);
  return p;
}

bool LaurentPolynomial::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second.is_one();
}

int LaurentPolynomial::min_exp() const {
  if (t_.empty()) throw ZeroPolynomialError();
  return t_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
  if (t_.empty()) throw ZeroPolynomialError();
  return t_.rbegin()->first;
}

ExactScalar LaurentPolynomial::coeff(int e) const {
  auto it = t_.find(e);
  return it == t_.end() ? ExactScalar() : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  return *this += -o;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  LaurentPolynomial r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      auto it = r.t_.find(e1 + e2);
      if (it == r.t_.end()) {
        ExactScalar c = c1 * c2;
        if (!c.is_zero()) r.t_.emplace(e1 + e2, std::move(c));
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  *this = std::move(r);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::mul_scalar(const ExactScalar& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::mul_q_power(int e) {
  if (e == 0) return *this;
  std::map<int, ExactScalar> r;
  for (auto& [k, v] : t_) r.emplace(k + e, std::move(v));
  t_ = std::move(r);
  return *this;
}

LaurentPolynomial LaurentPolynomial::star() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::conj() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c.conjugate());
  return r;
}

std::pair<int, LaurentPolynomial> LaurentPolynomial::qprime_split() const {
  if (is_zero()) throw ZeroPolynomialError();
  int k = min_exp();
  LaurentPolynomial f = *this;
  f.mul_q_power(-k);
  return {k, std::move(f)};
}

ExactScalar LaurentPolynomial::evaluate(const Rational& q0) const { return evaluate(ExactScalar(q0)); }

ExactScalar LaurentPolynomial::evaluate(const ExactScalar& q0) const {
  if (is_zero()) return ExactScalar();
  if (q0.is_zero() && min_exp() < 0) throw ZeroBaseError();
  // Horner over the exponent range, negative part via the inverse.
  ExactScalar value;
  ExactScalar qinv = (min_exp() < 0) ? q0.inverse() : ExactScalar(0L);
  for (const auto& [e, c] : t_) {
    ExactScalar p(1L);
    const ExactScalar& base = e >= 0 ? q0 : qinv;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    value += c * p;
  }
  return value;
}

std::string LaurentPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print from highest exponent down
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool negative = c.is_rational() && c.rat() < 0;
    if (first) {
      first = false;
      if (negative) {
        os << "-";
        cs = rational_str(Rational(-c.rat()));
      }
    } else {
      if (negative) {
        os << " - ";
        cs = rational_str(Rational(-c.rat()));
      } else {
        os << " + ";
      }
    }
    bool unit_coeff = (cs == "1");
    if (e == 0) {
      os << cs;
    } else {
      if (!unit_coeff) os << cs << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r = a;
  r *= b;
  return r;
}
LaurentPolynomial operator*(const ExactScalar& c, LaurentPolynomial p) { return p.mul_scalar(c); }

std::pair<LaurentPolynomial, LaurentPolynomial> poly_divmod(const LaurentPolynomial& a,
                                                            const LaurentPolynomial& b) {
  if (b.is_zero()) throw DivideByZeroError();
  if (!a.is_ordinary() || !b.is_ordinary())
    throw std::logic_error("poly_divmod requires ordinary polynomials");
  LaurentPolynomial rem = a, quot;
  ExactScalar lead_inv = b.leading_coeff().inverse();
  int db = b.max_exp();
  while (!rem.is_zero() && rem.max_exp() >= db) {
    int shift = rem.max_exp() - db;
    ExactScalar c = rem.leading_coeff() * lead_inv;
    LaurentPolynomial t = LaurentPolynomial::term(shift, c);
    quot += t;
    rem -= t * b;
  }
  return {std::move(quot), std::move(rem)};
}

namespace {

bool all_rational(const LaurentPolynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_rational()) return false;
  return true;
}

// dense integer polynomial, primitive (content 1), for the gcd inner loop
using ZPoly = std::vector<mpz_class>;

ZPoly to_primitive(const LaurentPolynomial& p) {
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
  ZPoly z(p.max_exp() + 1, 0);
  for (const auto& [e, c] : p.terms()) z[e] = c.rat().get_num() * (den_lcm / c.rat().get_den());
  mpz_class content = 0;
  for (const auto& x : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1)
    for (auto& x : z) x /= content;
  return z;
}

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void z_make_primitive(ZPoly& p) {
  mpz_class content = 0;
  for (const auto& x : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1)
    for (auto& x : p) x /= content;
  if (!p.empty() && p.back() < 0)
    for (auto& x : p) x = -x;
}

// pseudo-remainder of primitive a by primitive b, reduced to primitive form
ZPoly z_pseudo_rem(ZPoly a, const ZPoly& b) {
  const mpz_class& lead = b.back();
  while (a.size() >= b.size()) {
    mpz_class c = a.back();
    size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lead;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    z_trim(a);
    z_make_primitive(a);
  }
  return a;
}

}  // namespace

LaurentPolynomial poly_gcd(LaurentPolynomial a, LaurentPolynomial b) {
  if (a.is_zero() || b.is_zero() || !all_rational(a) || !all_rational(b)) {
    // monic Euclid over the coefficient field
    while (!b.is_zero()) {
      auto [q, r] = poly_divmod(a, b);
      (void)q;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    a.mul_scalar(a.leading_coeff().inverse());
    return a;
  }
  if (!a.is_ordinary() || !b.is_ordinary())
    throw std::logic_error("poly_gcd requires ordinary polynomials");
  // primitive pseudo-remainder sequence over Z avoids rational blowup
  ZPoly za = to_primitive(a), zb = to_primitive(b);
  if (za.size() < zb.size()) std::swap(za, zb);
  while (!zb.empty()) {
    ZPoly r = z_pseudo_rem(za, zb);
    za = std::move(zb);
    zb = std::move(r);
  }
  LaurentPolynomial g;
  const mpz_class& lead = za.back();
  for (size_t i = 0; i < za.size(); ++i) {
    if (za[i] == 0) continue;
    Rational c(za[i]);
    c /= lead;
    g += LaurentPolynomial::term(static_cast<int>(i), ExactScalar(c));
  }
  return g;
}

}  // namespace qgreen
