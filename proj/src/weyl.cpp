#include "qgreen/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "weyl_rules.hpp"

namespace qgreen {

// ---------------------------------------------------------------------------
// Descriptors

std::string FactorDescriptor::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "A" << rank; break;
    case Family::B: os << "B" << rank; break;
    case Family::C: os << "C" << rank; break;
    case Family::D: os << "D" << rank; break;
    case Family::I2: os << "I2(" << m << ")"; break;
  }
  return os.str();
}

CoxeterDescriptor CoxeterDescriptor::symmetric_group(int n) {
  if (n < 1) throw std::runtime_error("symmetric_group requires n >= 1");
  return single(Family::A, n - 1);
}

CoxeterDescriptor CoxeterDescriptor::single(Family f, int rank_or_order) {
  CoxeterDescriptor d;
  FactorDescriptor fd;
  fd.family = f;
  if (f == Family::I2) {
    fd.rank = 2;
    fd.m = rank_or_order;
  } else {
    fd.rank = rank_or_order;
  }
  d.factors.push_back(fd);
  d.validate();
  return d;
}

void CoxeterDescriptor::validate() const {
  for (const auto& f : factors) {
    switch (f.family) {
      case Family::A:
        if (f.rank < 0 || f.rank > 9) throw std::runtime_error("type A rank out of range (0..9)");
        break;
      case Family::B:
      case Family::C:
        if (f.rank < 1 || f.rank > 8) throw std::runtime_error("type B/C rank out of range (1..8)");
        break;
      case Family::D:
        if (f.rank < 2 || f.rank > 8) throw std::runtime_error("type D rank out of range (2..8)");
        break;
      case Family::I2:
        if (f.m < 3 || f.m > 60) throw std::runtime_error("dihedral order out of range (3..60)");
        break;
    }
  }
}

std::string CoxeterDescriptor::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Signed permutations

SignedPerm SignedPerm::identity(int n) {
  SignedPerm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

SignedPerm SignedPerm::compose(const SignedPerm& o) const {
  SignedPerm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    int mid = o.img[i];
    int out = img[std::abs(mid) - 1];
    r.img[i] = mid < 0 ? -out : out;
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) {
    int j = img[i];
    r.img[std::abs(j) - 1] = j < 0 ? -static_cast<int>(i + 1) : static_cast<int>(i + 1);
  }
  return r;
}

int SignedPerm::flips() const {
  int f = 0;
  for (int x : img)
    if (x < 0) ++f;
  return f;
}

std::pair<Partition, Partition> SignedPerm::cycle_type() const {
  std::vector<int> pos, neg;
  std::vector<bool> seen(img.size(), false);
  for (size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      int x = img[j];
      if (x < 0) sign = -sign;
      j = std::abs(x) - 1;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  return {Partition(std::move(pos)), Partition(std::move(neg))};
}

namespace {

// ---------------------------------------------------------------------------
// Reflection matrices

Matrix<ExactScalar> signed_perm_matrix(const SignedPerm& w) {
  int n = w.n();
  Matrix<ExactScalar> m(n, n);
  for (int i = 1; i <= n; ++i) {
    int j = w.apply(i);
    m.at(std::abs(j) - 1, i - 1) = ExactScalar(j < 0 ? -1L : 1L);
  }
  return m;
}

// Action of a permutation of {1..n+1} on the root basis e_i - e_{i+1}.
Matrix<ExactScalar> a_root_matrix(const SignedPerm& w) {
  int n = w.n() - 1;
  Matrix<ExactScalar> m(n, n);
  for (int j = 1; j <= n; ++j) {
    int a = w.apply(j), b = w.apply(j + 1);  // w(alpha_j) = e_a - e_b
    if (a < b)
      for (int t = a; t < b; ++t) m.at(t - 1, j - 1) += ExactScalar(1L);
    else
      for (int t = b; t < a; ++t) m.at(t - 1, j - 1) -= ExactScalar(1L);
  }
  return m;
}

SignedPerm rep_from_cycles(int n, const Partition& pos, const Partition& neg) {
  SignedPerm w = SignedPerm::identity(n);
  int at = 0;
  auto place = [&](int len, bool negative) {
    for (int i = 0; i < len - 1; ++i) w.img[at + i] = at + i + 2;
    w.img[at + len - 1] = negative ? -(at + 1) : (at + 1);
    at += len;
  };
  for (int p : pos.parts()) place(p, false);
  for (int p : neg.parts()) place(p, true);
  return w;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long centralizer_in_sym(const Partition& mu) {
  long long z = 1;
  for (auto [part, mult] : mu.multiplicities()) {
    for (int i = 0; i < mult; ++i) z *= part;
    z *= factorial(mult);
  }
  return z;
}

long long centralizer_in_hyp(const Bipartition& c) {
  long long z = 1;
  for (const Partition* side : {&c.first, &c.second})
    for (auto [part, mult] : side->multiplicities()) {
      for (int i = 0; i < mult; ++i) z *= 2LL * part;
      z *= factorial(mult);
    }
  return z;
}

// ---------------------------------------------------------------------------
// Irreducible factors

FactorGroup build_factor_A(const FactorDescriptor& fd) {
  FactorGroup g;
  g.fd = fd;
  int n = fd.rank + 1;  // S_n
  g.order = factorial(n);
  g.refl_dim = fd.rank;
  auto parts = Partition::all(n);
  for (const auto& mu : parts) {
    g.a_parts.push_back(mu);
    g.class_labels.push_back(mu.str());
    g.class_sizes.push_back(g.order / centralizer_in_sym(mu));
    SignedPerm rep = rep_from_cycles(n, mu, Partition());
    g.class_reps.push_back(rep);
    g.class_refl.push_back(a_root_matrix(rep));
    if (mu.length() == n) g.identity_class = static_cast<int>(g.class_labels.size()) - 1;
  }
  for (const auto& lam : parts) g.char_labels.push_back(lam.str());
  g.table = Matrix<ExactScalar>(parts.size(), parts.size());
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j)
      g.table.at(i, j) = ExactScalar(rules::sym_char(parts[i], parts[j]));
  g.trivial_char = static_cast<int>(parts.size()) - 1;  // lambda = (n) is last in lex order
  g.sign_char = 0;                                      // lambda = (1^n) is first
  if (n == 1) g.trivial_char = g.sign_char = 0;
  return g;
}

FactorGroup build_factor_B(const FactorDescriptor& fd) {
  FactorGroup g;
  g.fd = fd;
  int n = fd.rank;
  g.order = factorial(n) << n;
  g.refl_dim = n;
  auto bips = Bipartition::all(n);
  for (const auto& c : bips) {
    g.bd_parts.push_back(c);
    g.class_labels.push_back(c.str());
    g.class_sizes.push_back(g.order / centralizer_in_hyp(c));
    SignedPerm rep = rep_from_cycles(n, c.first, c.second);
    g.class_reps.push_back(rep);
    g.class_refl.push_back(signed_perm_matrix(rep));
    if (c.first.length() == n) g.identity_class = static_cast<int>(g.class_labels.size()) - 1;
  }
  for (const auto& chr : bips) g.char_labels.push_back(chr.str());
  g.table = Matrix<ExactScalar>(bips.size(), bips.size());
  for (size_t i = 0; i < bips.size(); ++i)
    for (size_t j = 0; j < bips.size(); ++j)
      g.table.at(i, j) = ExactScalar(rules::bip_char(bips[i], bips[j]));
  for (size_t i = 0; i < bips.size(); ++i) {
    if (bips[i].first.length() == 1 && bips[i].second.empty()) g.trivial_char = static_cast<int>(i);
    if (bips[i].first.empty() && bips[i].second.part(0) == 1 &&
        bips[i].second.length() == n)
      g.sign_char = static_cast<int>(i);
  }
  return g;
}

bool all_parts_even(const Partition& p) {
  for (int x : p.parts())
    if (x % 2) return false;
  return true;
}

// Side of a split D_n class: +1 when conjugate in D_n to the canonical
// all-positive representative, -1 otherwise.  The element must have mu empty
// and all cycles even (otherwise the class does not split and the question
// does not arise).
int d_split_side(const SignedPerm& x) {
  std::vector<bool> seen(x.img.size(), false);
  std::vector<std::pair<int, int>> cycles;  // (length, start index)
  for (size_t i = 0; i < x.img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = std::abs(x.img[j]) - 1;
    }
    cycles.emplace_back(len, static_cast<int>(i));
  }
  int parity = 0;
  for (auto [len, start] : cycles) {
    int t = 1;
    int j = start;
    for (int step = 0; step < len; ++step) {
      int out = x.img[j];
      int s = out < 0 ? -1 : 1;
      t *= s;  // sign carried to the next basis vector of the cycle
      if (step + 1 < len && t < 0) ++parity;
      j = std::abs(out) - 1;
    }
  }
  return parity % 2 == 0 ? 1 : -1;
}

FactorGroup build_factor_D(const FactorDescriptor& fd) {
  FactorGroup g;
  g.fd = fd;
  int n = fd.rank;
  g.order = factorial(n) << (n - 1);
  g.refl_dim = n;

  auto bips = Bipartition::all(n);
  for (const auto& c : bips) {
    if (c.second.length() % 2 != 0) continue;  // odd flip count: not in D_n
    bool split = c.second.empty() && all_parts_even(c.first);
    long long bsize = (factorial(n) << n) / centralizer_in_hyp(c);
    SignedPerm plus = rep_from_cycles(n, c.first, c.second);
    if (!split) {
      g.bd_parts.push_back(c);
      g.d_split.push_back(0);
      g.class_labels.push_back(c.str());
      g.class_sizes.push_back(bsize);
      g.class_reps.push_back(plus);
      g.class_refl.push_back(signed_perm_matrix(plus));
      if (c.first.length() == n) g.identity_class = static_cast<int>(g.class_labels.size()) - 1;
    } else {
      SignedPerm minus = plus;  // conjugate by the flip of the last coordinate
      for (size_t i = 0; i < minus.img.size(); ++i) {
        bool from_last = (std::abs(plus.img[i]) == n);
        bool to_last = (static_cast<int>(i) == n - 1);
        if (from_last != to_last) minus.img[i] = -minus.img[i];
        // both endpoints at n: two sign changes cancel
      }
      // the conjugation above is x -> SxS with S = diag(1,..,1,-1)
      for (int side : {+1, -1}) {
        g.bd_parts.push_back(c);
        g.d_split.push_back(side);
        g.class_labels.push_back(c.str() + (side > 0 ? "+" : "-"));
        g.class_sizes.push_back(bsize / 2);
        g.class_reps.push_back(side > 0 ? plus : minus);
        g.class_refl.push_back(signed_perm_matrix(side > 0 ? plus : minus));
      }
    }
  }

  // Characters: restrictions of B_n characters.  (alpha|beta) and (beta|alpha)
  // agree on D_n; degenerate pairs alpha = beta split in two.
  size_t nc = g.class_labels.size();
  std::vector<std::vector<ExactScalar>> rows;
  for (const auto& chr : bips) {
    if (chr.second < chr.first) continue;  // canonical: alpha <= beta, paired with swap
    if (chr.first == chr.second) {
      const Partition& alpha = chr.first;
      for (int variant : {+1, -1}) {
        std::vector<ExactScalar> row(nc);
        for (size_t c = 0; c < nc; ++c) {
          Rational base = rules::bip_char(chr, g.bd_parts[c]) / 2;
          if (g.d_split[c] != 0) {
            // split class (2gamma)^side: difference term 2^{len(gamma)} chi^alpha(gamma)
            std::vector<int> gparts;
            for (int x : g.bd_parts[c].first.parts()) gparts.push_back(x / 2);
            Partition gamma(std::move(gparts));
            Rational delta = rules::sym_char(alpha, gamma);
            for (int i = 0; i < gamma.length(); ++i) delta *= 2;
            base += Rational(variant * g.d_split[c]) * delta / 2;
          }
          row[c] = ExactScalar(base);
        }
        rows.push_back(std::move(row));
        g.char_labels.push_back(chr.str() + (variant > 0 ? "+" : "-"));
      }
    } else {
      std::vector<ExactScalar> row(nc);
      for (size_t c = 0; c < nc; ++c)
        row[c] = ExactScalar(rules::bip_char(chr, g.bd_parts[c]));
      rows.push_back(std::move(row));
      g.char_labels.push_back(chr.str());
    }
  }
  if (rows.size() != nc) throw std::logic_error("D_n character count mismatch");
  g.table = Matrix<ExactScalar>(rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < nc; ++j) g.table.at(i, j) = rows[i][j];
  // trivial restricts from ((n)|) ~ (|(n)), sign from ((1^n)|) ~ (|(1^n)); the
  // canonical label kept above is the one with lexicographically smaller first side.
  Bipartition triv{Partition(), Partition(std::vector<int>{n})};
  Bipartition sgn{Partition(), Partition(std::vector<int>(n, 1))};
  for (size_t i = 0; i < g.char_labels.size(); ++i) {
    if (g.char_labels[i] == triv.str()) g.trivial_char = static_cast<int>(i);
    if (g.char_labels[i] == sgn.str()) g.sign_char = static_cast<int>(i);
  }
  return g;
}

FactorGroup build_factor_I2(const FactorDescriptor& fd) {
  FactorGroup g;
  g.fd = fd;
  int m = fd.m;
  g.order = 2LL * m;
  g.refl_dim = 2;

  // Tits realization on the root basis; c = 2 cos(pi/m).
  ExactScalar c = ExactScalar::root_of_unity(2 * m, 1) + ExactScalar::root_of_unity(2 * m, -1);
  Matrix<ExactScalar> s1(2, 2), s2(2, 2);
  s1.at(0, 0) = ExactScalar(-1L);
  s1.at(0, 1) = c;
  s1.at(1, 1) = ExactScalar(1L);
  s2.at(0, 0) = ExactScalar(1L);
  s2.at(1, 0) = c;
  s2.at(1, 1) = ExactScalar(-1L);
  Matrix<ExactScalar> rot = s1 * s2;

  auto rot_power = [&](int k) {
    Matrix<ExactScalar> p = Matrix<ExactScalar>::identity(2);
    for (int i = 0; i < k; ++i) p = p * rot;
    return p;
  };

  g.identity_class = 0;
  g.class_labels.push_back("e");
  g.class_sizes.push_back(1);
  g.class_refl.push_back(Matrix<ExactScalar>::identity(2));
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    g.class_labels.push_back("r" + std::to_string(k));
    g.class_sizes.push_back(2);
    g.class_refl.push_back(rot_power(k));
  }
  if (m % 2 == 0) {
    g.class_labels.push_back("r" + std::to_string(m / 2));
    g.class_sizes.push_back(1);
    g.class_refl.push_back(rot_power(m / 2));
    g.class_labels.push_back("s1");
    g.class_sizes.push_back(m / 2);
    g.class_refl.push_back(s1);
    g.class_labels.push_back("s2");
    g.class_sizes.push_back(m / 2);
    g.class_refl.push_back(s2);
  } else {
    g.class_labels.push_back("s");
    g.class_sizes.push_back(m);
    g.class_refl.push_back(s1);
  }

  size_t nc = g.class_labels.size();
  std::vector<std::pair<std::string, std::vector<ExactScalar>>> rows;
  // linear characters, written directly from chi(s1), chi(s2)
  auto linear_row = [&](int x1, int x2) {
    std::vector<ExactScalar> row(nc);
    size_t at = 0;
    row[at++] = ExactScalar(1L);
    int rv = x1 * x2;
    for (int k = 1; k <= (m - 1) / 2; ++k) {
      row[at++] = ExactScalar(static_cast<long>(k % 2 == 0 ? 1 : rv));
    }
    if (m % 2 == 0) {
      row[at++] = ExactScalar(static_cast<long>((m / 2) % 2 == 0 ? 1 : rv));
      row[at++] = ExactScalar(static_cast<long>(x1));
      row[at++] = ExactScalar(static_cast<long>(x2));
    } else {
      row[at++] = ExactScalar(static_cast<long>(x1));
    }
    return row;
  };
  rows.emplace_back("1", linear_row(1, 1));
  rows.emplace_back("eps", linear_row(-1, -1));
  if (m % 2 == 0) {
    rows.emplace_back("eps1", linear_row(-1, 1));
    rows.emplace_back("eps2", linear_row(1, -1));
  }
  int two_dim = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
  for (int j = 1; j <= two_dim; ++j) {
    std::vector<ExactScalar> row(nc);
    size_t at = 0;
    row[at++] = ExactScalar(2L);
    for (int k = 1; k <= (m - 1) / 2; ++k)
      row[at++] = ExactScalar::root_of_unity(m, j * k) + ExactScalar::root_of_unity(m, -j * k);
    if (m % 2 == 0) {
      int k = m / 2;
      row[at++] = ExactScalar::root_of_unity(m, j * k) + ExactScalar::root_of_unity(m, -j * k);
      row[at++] = ExactScalar(0L);
      row[at++] = ExactScalar(0L);
    } else {
      row[at++] = ExactScalar(0L);
    }
    rows.emplace_back("chi" + std::to_string(j), std::move(row));
  }
  g.table = Matrix<ExactScalar>(rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    g.char_labels.push_back(rows[i].first);
    for (size_t jx = 0; jx < nc; ++jx) g.table.at(i, jx) = rows[i].second[jx];
  }
  g.trivial_char = 0;
  g.sign_char = 1;
  return g;
}

FactorGroup build_factor(const FactorDescriptor& fd) {
  switch (fd.family) {
    case Family::A: return build_factor_A(fd);
    case Family::B:
    case Family::C: return build_factor_B(fd);
    case Family::D: return build_factor_D(fd);
    case Family::I2: return build_factor_I2(fd);
  }
  throw std::logic_error("unreachable");
}

std::vector<std::vector<int>> tuples(const std::vector<size_t>& dims) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dims.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = dims.size();
    while (i > 0) {
      --i;
      if (cur[i] + 1 < static_cast<int>(dims[i])) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    if (dims.empty()) return out;
  }
}

std::string join_labels(const std::vector<FactorGroup>& fs, const std::vector<int>& tuple,
                        bool chars) {
  std::string s;
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) s += " * ";
    s += chars ? fs[i].char_labels[tuple[i]] : fs[i].class_labels[tuple[i]];
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Model assembly

WeylPtr build_group(const CoxeterDescriptor& d) {
  d.validate();
  auto model = std::make_shared<WeylGroupModel>();
  model->desc = d;
  for (const auto& fd : d.factors) model->factors.push_back(build_factor(fd));
  const auto& fs = model->factors;

  model->order = 1;
  model->refl_dim = 0;
  for (const auto& f : fs) {
    model->order *= f.order;
    model->refl_dim += f.refl_dim;
  }

  std::vector<size_t> cdims, xdims;
  for (const auto& f : fs) cdims.push_back(f.class_labels.size());
  for (const auto& f : fs) xdims.push_back(f.char_labels.size());
  model->class_tuple = tuples(cdims);
  model->char_tuple = tuples(xdims);

  for (const auto& t : model->class_tuple) {
    model->class_labels.push_back(fs.empty() ? "e" : join_labels(fs, t, false));
    long long size = 1;
    for (size_t i = 0; i < fs.size(); ++i) size *= fs[i].class_sizes[t[i]];
    model->class_sizes.push_back(size);
  }
  for (const auto& t : model->char_tuple)
    model->char_labels.push_back(fs.empty() ? "1" : join_labels(fs, t, true));

  model->table = Matrix<ExactScalar>(model->char_labels.size(), model->class_labels.size());
  for (size_t i = 0; i < model->char_tuple.size(); ++i)
    for (size_t j = 0; j < model->class_tuple.size(); ++j) {
      ExactScalar v(1L);
      for (size_t k = 0; k < fs.size(); ++k)
        v *= fs[k].table.at(model->char_tuple[i][k], model->class_tuple[j][k]);
      model->table.at(i, j) = v;
    }

  auto find_tuple = [&](auto pick) {
    std::vector<int> want;
    for (const auto& f : fs) want.push_back(pick(f));
    return want;
  };
  auto tuple_index = [](const std::vector<std::vector<int>>& all, const std::vector<int>& t) {
    auto it = std::find(all.begin(), all.end(), t);
    return static_cast<int>(it - all.begin());
  };
  model->identity_class =
      tuple_index(model->class_tuple, find_tuple([](const FactorGroup& f) { return f.identity_class; }));
  model->trivial_char =
      tuple_index(model->char_tuple, find_tuple([](const FactorGroup& f) { return f.trivial_char; }));
  model->sign_char =
      tuple_index(model->char_tuple, find_tuple([](const FactorGroup& f) { return f.sign_char; }));
  return model;
}

long long WeylGroupModel::char_degree(int chi) const {
  const ExactScalar& v = table.at(chi, identity_class);
  if (!v.is_rational() || v.rat().get_den() != 1)
    throw std::logic_error("character degree is not an integer");
  return static_cast<long long>(v.rat().get_num().get_si());
}

int WeylGroupModel::class_index(const std::string& label) const {
  for (size_t i = 0; i < class_labels.size(); ++i)
    if (class_labels[i] == label) return static_cast<int>(i);
  throw std::runtime_error("unknown class label: " + label);
}

int WeylGroupModel::char_index(const std::string& label) const {
  for (size_t i = 0; i < char_labels.size(); ++i)
    if (char_labels[i] == label) return static_cast<int>(i);
  throw std::runtime_error("unknown character label: " + label);
}

Matrix<ExactScalar> WeylGroupModel::reflection_matrix(int c) const {
  Matrix<ExactScalar> m(refl_dim, refl_dim);
  int off = 0;
  for (size_t k = 0; k < factors.size(); ++k) {
    const auto& blk = factors[k].class_refl[class_tuple[c][k]];
    for (size_t i = 0; i < blk.rows(); ++i)
      for (size_t j = 0; j < blk.cols(); ++j) m.at(off + i, off + j) = blk.at(i, j);
    off += factors[k].refl_dim;
  }
  return m;
}

int WeylGroupModel::tensor_sign_partner(int chi) const {
  for (size_t j = 0; j < num_chars(); ++j) {
    bool ok = true;
    for (size_t c = 0; c < num_classes() && ok; ++c)
      ok = (table.at(j, c) == table.at(chi, c) * sign_value(static_cast<int>(c)));
    if (ok) return static_cast<int>(j);
  }
  throw std::logic_error("no sign-tensor partner found");
}

// ---------------------------------------------------------------------------
// Class functions

ClassFn character_fn(const WeylPtr& W, int chi) {
  ClassFn f(W);
  for (size_t c = 0; c < W->num_classes(); ++c)
    f.v[c] = LaurentPolynomial(W->char_value(chi, static_cast<int>(c)));
  return f;
}

ClassFn pointwise_mul(const ClassFn& f, const ClassFn& g) {
  ClassFn r(f.W);
  for (size_t c = 0; c < r.v.size(); ++c) r.v[c] = f.v[c] * g.v[c];
  return r;
}

ClassFn add(const ClassFn& f, const ClassFn& g) {
  ClassFn r(f.W);
  for (size_t c = 0; c < r.v.size(); ++c) r.v[c] = f.v[c] + g.v[c];
  return r;
}

ClassFn scale(const ClassFn& f, const LaurentPolynomial& c) {
  ClassFn r = f;
  for (auto& x : r.v) x *= c;
  return r;
}

namespace {
// characteristic polynomial data via Newton's identities: e_0..e_l
std::vector<ExactScalar> elementary_symmetric_of(const Matrix<ExactScalar>& M) {
  size_t l = M.rows();
  std::vector<ExactScalar> p(l + 1), e(l + 1);
  Matrix<ExactScalar> power = M;
  for (size_t k = 1; k <= l; ++k) {
    ExactScalar tr;
    for (size_t i = 0; i < l; ++i) tr += power.at(i, i);
    p[k] = tr;
    if (k < l) power = power * M;
  }
  e[0] = ExactScalar(1L);
  for (size_t k = 1; k <= l; ++k) {
    ExactScalar s;
    for (size_t i = 1; i <= k; ++i) {
      ExactScalar t = e[k - i] * p[i];
      if (i % 2 == 0) t = -t;
      s += t;
    }
    e[k] = s * ExactScalar(Rational(1, static_cast<unsigned long>(k)));
  }
  return e;
}
}  // namespace

LaurentPolynomial det_q_minus_reflection(const WeylGroupModel& W, int c) {
  auto e = elementary_symmetric_of(W.reflection_matrix(c));
  LaurentPolynomial z;
  int l = W.refl_dim;
  for (int k = 0; k <= l; ++k) {
    ExactScalar coeff = e[k];
    if (k % 2) coeff = -coeff;
    z += LaurentPolynomial::term(l - k, coeff);
  }
  return z;
}

std::vector<ClassFn> exterior_reflection_characters(const WeylPtr& W) {
  std::vector<ClassFn> out(W->refl_dim + 1, ClassFn(W));
  for (size_t c = 0; c < W->num_classes(); ++c) {
    auto e = elementary_symmetric_of(W->reflection_matrix(static_cast<int>(c)));
    for (int k = 0; k <= W->refl_dim; ++k) out[k].v[c] = LaurentPolynomial(e[k]);
  }
  return out;
}

ClassFn torus_order_function(const WeylPtr& W, int ambient_rank) {
  if (ambient_rank < W->refl_dim)
    throw std::runtime_error("ambient rank below the reflection dimension");
  LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial(1L);
  LaurentPolynomial factor(1L);
  for (int i = 0; i < ambient_rank - W->refl_dim; ++i) factor *= qm1;
  ClassFn z(W);
  for (size_t c = 0; c < W->num_classes(); ++c)
    z.v[c] = factor * det_q_minus_reflection(*W, static_cast<int>(c));
  return z;
}

LaurentPolynomial inner_product(const ClassFn& f, const ClassFn& g) {
  if (f.W.get() != g.W.get()) throw std::logic_error("inner product: group mismatch");
  LaurentPolynomial s;
  for (size_t c = 0; c < f.v.size(); ++c) {
    LaurentPolynomial t = f.v[c] * g.v[c].conj();
    t.mul_scalar(ExactScalar(rat_of(f.W->class_sizes[c])));
    s += t;
  }
  s.mul_scalar(ExactScalar(rat_frac(1, f.W->order)));
  return s;
}

// ---------------------------------------------------------------------------
// Embeddings

WeylEmbedding young_embedding(const WeylPtr& G, const std::vector<int>& comp) {
  if (G->factors.size() != 1 || G->factors[0].fd.family != Family::A)
    throw std::runtime_error("young_embedding requires an ambient symmetric group");
  int n = G->factors[0].fd.rank + 1;
  int total = std::accumulate(comp.begin(), comp.end(), 0);
  if (total != n) throw std::runtime_error("composition does not sum to n");
  CoxeterDescriptor md;
  for (int c : comp) {
    FactorDescriptor fd;
    fd.family = Family::A;
    fd.rank = c - 1;
    md.factors.push_back(fd);
  }
  WeylEmbedding e;
  e.G = G;
  e.M = build_group(md);
  for (const auto& t : e.M->class_tuple) {
    std::vector<int> parts;
    for (size_t k = 0; k < e.M->factors.size(); ++k)
      for (int x : e.M->factors[k].a_parts[t[k]].parts()) parts.push_back(x);
    e.fusion.push_back(G->class_index(Partition(std::move(parts)).str()));
  }
  return e;
}

WeylEmbedding b_parabolic_embedding(const WeylPtr& G, int k, const std::vector<int>& a_comp) {
  if (G->factors.size() != 1 ||
      (G->factors[0].fd.family != Family::B && G->factors[0].fd.family != Family::C))
    throw std::runtime_error("b_parabolic_embedding requires an ambient hyperoctahedral group");
  int n = G->factors[0].fd.rank;
  int total = k + std::accumulate(a_comp.begin(), a_comp.end(), 0);
  if (total != n) throw std::runtime_error("parabolic shape does not sum to the rank");
  CoxeterDescriptor md;
  if (k >= 1) {
    FactorDescriptor fd;
    fd.family = G->factors[0].fd.family;
    fd.rank = k;
    md.factors.push_back(fd);
  }
  for (int c : a_comp) {
    FactorDescriptor fd;
    fd.family = Family::A;
    fd.rank = c - 1;
    md.factors.push_back(fd);
  }
  WeylEmbedding e;
  e.G = G;
  e.M = build_group(md);
  size_t afrom = (k >= 1) ? 1 : 0;
  for (const auto& t : e.M->class_tuple) {
    std::vector<int> pos, neg;
    if (k >= 1) {
      const auto& bp = e.M->factors[0].bd_parts[t[0]];
      pos = bp.first.parts();
      neg = bp.second.parts();
    }
    for (size_t f = afrom; f < e.M->factors.size(); ++f)
      for (int x : e.M->factors[f].a_parts[t[f]].parts()) pos.push_back(x);
    Bipartition amb{Partition(std::move(pos)), Partition(std::move(neg))};
    e.fusion.push_back(G->class_index(amb.str()));
  }
  return e;
}

WeylEmbedding d_parabolic_embedding(const WeylPtr& G, int k, const std::vector<int>& a_comp) {
  if (G->factors.size() != 1 || G->factors[0].fd.family != Family::D)
    throw std::runtime_error("d_parabolic_embedding requires an ambient type-D group");
  int n = G->factors[0].fd.rank;
  int total = k + std::accumulate(a_comp.begin(), a_comp.end(), 0);
  if (total != n || k == 1) throw std::runtime_error("bad type-D parabolic shape");
  CoxeterDescriptor md;
  if (k >= 2) {
    FactorDescriptor fd;
    fd.family = Family::D;
    fd.rank = k;
    md.factors.push_back(fd);
  }
  for (int c : a_comp) {
    FactorDescriptor fd;
    fd.family = Family::A;
    fd.rank = c - 1;
    md.factors.push_back(fd);
  }
  WeylEmbedding e;
  e.G = G;
  e.M = build_group(md);
  size_t afrom = (k >= 2) ? 1 : 0;
  for (const auto& t : e.M->class_tuple) {
    // assemble an explicit representative in the standard block embedding
    SignedPerm w = SignedPerm::identity(n);
    int off = 0;
    if (k >= 2) {
      const auto& rep = e.M->factors[0].class_reps[t[0]];
      for (int i = 0; i < k; ++i) w.img[i] = rep.img[i];
      off = k;
    }
    for (size_t f = afrom; f < e.M->factors.size(); ++f) {
      const auto& rep = e.M->factors[f].class_reps[t[f]];
      int sz = e.M->factors[f].fd.rank + 1;
      for (int i = 0; i < sz; ++i) {
        int x = rep.img[i];
        w.img[off + i] = x < 0 ? x - off : x + off;
      }
      off += sz;
    }
    e.fusion.push_back(class_of_element(*G, w));
  }
  return e;
}

ClassFn fusion_restrict(const ClassFn& f, const WeylEmbedding& e) {
  if (f.W.get() != e.G.get()) throw std::logic_error("fusion_restrict: group mismatch");
  ClassFn r(e.M);
  for (size_t c = 0; c < e.fusion.size(); ++c) r.v[c] = f.v[e.fusion[c]];
  return r;
}

ClassFn induce(const ClassFn& f, const WeylEmbedding& e) {
  if (f.W.get() != e.M.get()) throw std::logic_error("induce: group mismatch");
  ClassFn r(e.G);
  for (size_t c = 0; c < e.fusion.size(); ++c) {
    LaurentPolynomial t = f.v[c];
    t.mul_scalar(ExactScalar(rat_frac(1, e.M->centralizer_order(static_cast<int>(c)))));
    r.v[e.fusion[c]] += t;
  }
  for (size_t C = 0; C < r.v.size(); ++C)
    r.v[C].mul_scalar(ExactScalar(rat_of(e.G->centralizer_order(static_cast<int>(C)))));
  return r;
}

void check_character_table_orthogonality(const WeylGroupModel& W) {
  size_t nch = W.num_chars(), ncl = W.num_classes();
  if (nch != ncl) throw std::logic_error("character table is not square");
  for (size_t i = 0; i < nch; ++i)
    for (size_t j = i; j < nch; ++j) {
      ExactScalar s;
      for (size_t c = 0; c < ncl; ++c)
        s += ExactScalar(rat_of(W.class_sizes[c])) * W.table.at(i, c) *
             W.table.at(j, c).conjugate();
      ExactScalar want = (i == j) ? ExactScalar(rat_of(W.order)) : ExactScalar();
      if (s != want) throw std::logic_error("row orthogonality fails for " + W.desc.str());
    }
  for (size_t c = 0; c < ncl; ++c)
    for (size_t d = c; d < ncl; ++d) {
      ExactScalar s;
      for (size_t i = 0; i < nch; ++i) s += W.table.at(i, c) * W.table.at(i, d).conjugate();
      ExactScalar want = (c == d) ? ExactScalar(rat_of(W.centralizer_order(static_cast<int>(c))))
                                  : ExactScalar();
      if (s != want) throw std::logic_error("column orthogonality fails for " + W.desc.str());
    }
}

// ---------------------------------------------------------------------------
// Element enumeration (A/B/C/D products)

namespace {
void factor_elements(const FactorGroup& f, std::vector<SignedPerm>& out) {
  int sz = f.fd.family == Family::A ? f.fd.rank + 1 : f.fd.rank;
  std::vector<int> perm(sz);
  std::iota(perm.begin(), perm.end(), 1);
  bool with_signs = f.fd.family != Family::A;
  bool even_only = f.fd.family == Family::D;
  do {
    if (!with_signs) {
      SignedPerm w;
      w.img.assign(perm.begin(), perm.end());
      out.push_back(w);
      continue;
    }
    for (int mask = 0; mask < (1 << sz); ++mask) {
      if (even_only && __builtin_popcount(mask) % 2) continue;
      SignedPerm w;
      w.img.resize(sz);
      for (int i = 0; i < sz; ++i) w.img[i] = (mask >> i & 1) ? -perm[i] : perm[i];
      out.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}
}  // namespace

std::vector<SignedPerm> enumerate_elements(const WeylGroupModel& W) {
  std::vector<std::vector<SignedPerm>> per_factor;
  int n = 0;
  for (const auto& f : W.factors) {
    if (f.fd.family == Family::I2) throw std::runtime_error("element enumeration not supported for I2");
    per_factor.emplace_back();
    factor_elements(f, per_factor.back());
    n += f.fd.family == Family::A ? f.fd.rank + 1 : f.fd.rank;
  }
  std::vector<SignedPerm> out{SignedPerm::identity(n)};
  std::vector<SignedPerm> next;
  int off = 0;
  for (const auto& fel : per_factor) {
    int sz = fel.empty() ? 0 : fel[0].n();
    next.clear();
    next.reserve(out.size() * fel.size());
    for (const auto& base : out)
      for (const auto& w : fel) {
        SignedPerm e = base;
        for (int i = 0; i < sz; ++i) {
          int x = w.img[i];
          e.img[off + i] = x < 0 ? x - off : x + off;
        }
        next.push_back(e);
      }
    out.swap(next);
    off += sz;
  }
  return out;
}

int class_of_element(const WeylGroupModel& W, const SignedPerm& w) {
  std::vector<int> tup;
  int off = 0;
  for (const auto& f : W.factors) {
    int sz = f.fd.family == Family::A ? f.fd.rank + 1 : f.fd.rank;
    SignedPerm blk;
    blk.img.resize(sz);
    for (int i = 0; i < sz; ++i) {
      int x = w.img[off + i];
      if (std::abs(x) <= off || std::abs(x) > off + sz)
        throw std::logic_error("element does not respect the factor blocks");
      blk.img[i] = x < 0 ? x + off : x - off;
    }
    off += sz;
    auto [pos, neg] = blk.cycle_type();
    int idx = -1;
    if (f.fd.family == Family::A) {
      for (size_t c = 0; c < f.a_parts.size(); ++c)
        if (f.a_parts[c] == pos) idx = static_cast<int>(c);
    } else {
      bool split = f.fd.family == Family::D && neg.empty() && all_parts_even(pos);
      int side = split ? d_split_side(blk) : 0;
      for (size_t c = 0; c < f.bd_parts.size(); ++c) {
        if (f.bd_parts[c].first != pos || f.bd_parts[c].second != neg) continue;
        if (f.fd.family == Family::D && f.d_split[c] != side) continue;
        idx = static_cast<int>(c);
        break;
      }
    }
    if (idx < 0) throw std::logic_error("class of element not found");
    tup.push_back(idx);
  }
  auto it = std::find(W.class_tuple.begin(), W.class_tuple.end(), tup);
  if (it == W.class_tuple.end()) throw std::logic_error("class tuple not found");
  return static_cast<int>(it - W.class_tuple.begin());
}

}  // namespace qgreen
