#include "qgreen/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgreen {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational rational_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

namespace detail {

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qpoly_trim(std::move(r));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qpoly_trim(std::move(r));
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw DivideByZeroError();
  QPoly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (rem.size() >= b.size()) {
    Rational c = rem.back() / lead;
    size_t shift = rem.size() - b.size();
    quot[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    rem = qpoly_trim(std::move(rem));
    if (rem.size() < b.size()) break;
  }
  return {qpoly_trim(std::move(quot)), std::move(rem)};
}

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const QPoly& cyclotomic_polynomial(int n) {
  static std::map<int, QPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = qpoly_divmod(num, cyclotomic_polynomial(d));
    if (!r.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace detail

using detail::QPoly;

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : n_(conductor) {
  if (conductor < 1) throw std::runtime_error("cyclotomic conductor must be positive");
  reduce(std::move(coeffs));
}

void Cyclotomic::reduce(std::vector<Rational> raw) {
  // Fold exponents modulo n, then reduce modulo Phi_n.
  QPoly p(n_, Rational(0));
  for (size_t k = 0; k < raw.size(); ++k) p[k % n_] += raw[k];
  p = detail::qpoly_trim(std::move(p));
  const QPoly& phi = detail::cyclotomic_polynomial(n_);
  if (p.size() >= phi.size()) p = detail::qpoly_divmod(p, phi).second;
  c_.assign(detail::euler_phi(n_), Rational(0));
  for (size_t i = 0; i < p.size(); ++i) c_[i] = p[i];
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

Cyclotomic Cyclotomic::promoted(int conductor) const {
  if (conductor == n_) return *this;
  if (conductor % n_ != 0) throw std::logic_error("promotion target must be a multiple of the conductor");
  int step = conductor / n_;
  std::vector<Rational> raw(static_cast<size_t>(conductor), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[(i * step) % conductor] += c_[i];
  return Cyclotomic(conductor, std::move(raw));
}

ExactScalar ExactScalar::root_of_unity(int n, long k) {
  long kk = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<size_t>(kk) + 1, Rational(0));
  raw[kk] = 1;
  return ExactScalar(Cyclotomic(n, std::move(raw)));
}

void ExactScalar::normalize() {
  if (auto* c = std::get_if<Cyclotomic>(&v_)) {
    if (c->is_rational()) v_ = c->rational_part();
  }
}

const Rational& ExactScalar::rat() const {
  if (!is_rational()) throw std::logic_error("scalar is not rational");
  return std::get<Rational>(v_);
}

const Cyclotomic& ExactScalar::cyc() const {
  if (is_rational()) throw std::logic_error("scalar is rational");
  return std::get<Cyclotomic>(v_);
}

bool ExactScalar::is_zero() const {
  return is_rational() ? rat() == 0 : false;  // nonzero by demotion of cyclotomics
}

bool ExactScalar::is_one() const { return is_rational() && rat() == 1; }

namespace {
// Bring both operands into a common representation (rational/rational, or
// cyclotomics of equal conductor) and apply a dense-polynomial operation.
std::pair<Cyclotomic, Cyclotomic> align(const ExactScalar& a, const ExactScalar& b) {
  auto lift = [](const ExactScalar& s, int conductor) {
    if (s.is_rational()) return Cyclotomic(conductor, {s.rat()});
    return s.cyc().promoted(conductor);
  };
  int na = a.is_rational() ? 1 : a.cyc().conductor();
  int nb = b.is_rational() ? 1 : b.cyc().conductor();
  int n = std::lcm(na, nb);
  return {lift(a, n), lift(b, n)};
}
}  // namespace

ExactScalar ExactScalar::operator-() const {
  if (is_rational()) return ExactScalar(Rational(-rat()));
  std::vector<Rational> c = cyc().coeffs();
  for (auto& x : c) x = -x;
  return ExactScalar(Cyclotomic(cyc().conductor(), std::move(c)));
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += o.rat();
    return *this;
  }
  auto [a, b] = align(*this, o);
  std::vector<Rational> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  v_ = Cyclotomic(a.conductor(), std::move(c));
  normalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  *this += -o;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= o.rat();
    return *this;
  }
  auto [a, b] = align(*this, o);
  QPoly prod = detail::qpoly_mul(detail::qpoly_trim(a.coeffs()), detail::qpoly_trim(b.coeffs()));
  v_ = Cyclotomic(a.conductor(), std::move(prod));
  normalize();
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DivideByZeroError();
  if (is_rational()) return ExactScalar(Rational(1 / rat()));
  // Extended Euclid in Q[x] modulo Phi_n.
  const QPoly& phi = detail::cyclotomic_polynomial(cyc().conductor());
  QPoly r0 = phi, r1 = detail::qpoly_trim(cyc().coeffs());
  QPoly t0, t1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = detail::qpoly_divmod(r0, r1);
    QPoly t2 = detail::qpoly_sub(t0, detail::qpoly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is a nonzero constant gcd; t0 * this == r0 (mod Phi_n)
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
  for (auto& x : t0) x /= r0[0];
  return ExactScalar(Cyclotomic(cyc().conductor(), std::move(t0)));
}

ExactScalar ExactScalar::conjugate() const {
  if (is_rational()) return *this;
  int n = cyc().conductor();
  const auto& c = cyc().coeffs();
  std::vector<Rational> raw(static_cast<size_t>(n), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) raw[(n - i) % n] += c[i];
  return ExactScalar(Cyclotomic(n, std::move(raw)));
}

bool ExactScalar::operator==(const ExactScalar& o) const {
  if (is_rational() && o.is_rational()) return rat() == o.rat();
  if (is_rational() != o.is_rational()) return false;  // demotion makes this sound
  if (cyc().conductor() == o.cyc().conductor()) return cyc().coeffs() == o.cyc().coeffs();
  auto [a, b] = align(*this, o);
  return a.coeffs() == b.coeffs();
}

std::string ExactScalar::str() const {
  if (is_rational()) return rational_str(rat());
  std::ostringstream os;
  const auto& c = cyc().coeffs();
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? " + " : " - ");
    Rational a = first ? c[i] : Rational(abs(c[i]));
    first = false;
    if (i == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "z" << cyc().conductor();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) { return a * b.inverse(); }

}  // namespace qgreen
