#include "qgreen/lusztig.hpp"

namespace qgreen {

ClassFn zbar_fn(const BlockDescriptor& b) {
  ClassFn z(b.W);
  for (size_t c = 0; c < b.W->num_classes(); ++c)
    z.v[c] = det_q_minus_reflection(*b.W, static_cast<int>(c));
  return z;
}

ClassFn z_full_fn(const BlockDescriptor& b) {
  ClassFn z = zbar_fn(b);
  LaurentPolynomial center(1L);
  LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial(1L);
  for (int i = 0; i < b.central_rank; ++i) center *= qm1;
  for (auto& x : z.v) x *= center;
  return z;
}

Matrix<LaurentPolynomial> omega_matrix(const BlockDescriptor& b) {
  size_t n = b.size();
  auto ext = exterior_reflection_characters(b.W);
  ClassFn zbar = zbar_fn(b);
  Matrix<LaurentPolynomial> omega(n, n);
  for (size_t i = 0; i < n; ++i) {
    ClassFn phi_i = character_fn(b.W, b.pairs[i].phi);
    for (size_t j = 0; j < n; ++j) {
      ClassFn phi_j = character_fn(b.W, b.pairs[j].phi);
      LaurentPolynomial via_ext;
      for (int k = 0; k <= b.l; ++k) {
        LaurentPolynomial term = inner_product(pointwise_mul(phi_i, phi_j), ext[k]);
        term.mul_q_power(b.l - k);
        if (k % 2) term = -term;
        via_ext += term;
      }
      LaurentPolynomial via_z = inner_product(pointwise_mul(zbar, phi_i), phi_j);
      if (via_ext != via_z)
        throw std::logic_error("omega: exterior-power and torus-order routes disagree");
      omega.at(i, j) = std::move(via_z);
    }
  }
  return omega;
}

Matrix<RationalFunction> xi_matrix(const BlockDescriptor& b) {
  size_t n = b.size();
  size_t ncl = b.W->num_classes();
  ClassFn zbar = zbar_fn(b);

  // One shared denominator keeps the class sum in polynomial arithmetic.
  LaurentPolynomial common(1L);
  for (size_t c = 0; c < ncl; ++c) {
    LaurentPolynomial g = poly_gcd(common, zbar.v[c]);
    common *= poly_divmod(zbar.v[c], g).first;
  }
  std::vector<LaurentPolynomial> cofactor(ncl);
  for (size_t c = 0; c < ncl; ++c) {
    auto [quot, rem] = poly_divmod(common, zbar.v[c]);
    if (!rem.is_zero()) throw std::logic_error("xi: common denominator is not a multiple");
    cofactor[c] = std::move(quot);
    cofactor[c].mul_scalar(ExactScalar(rat_of(b.W->class_sizes[c])));
  }

  Matrix<LaurentPolynomial> num(n, n);
  ExactScalar inv_order(rat_frac(1, b.W->order));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      LaurentPolynomial s;
      for (size_t c = 0; c < ncl; ++c) {
        ExactScalar v = b.W->char_value(b.pairs[i].phi, static_cast<int>(c)) *
                        b.W->char_value(b.pairs[j].phi, static_cast<int>(c)).conjugate();
        if (v.is_zero()) continue;
        LaurentPolynomial t = cofactor[c];
        t.mul_scalar(v);
        s += t;
      }
      s.mul_scalar(inv_order);
      num.at(j, i) = s;
      num.at(i, j) = std::move(s);
    }

  // Gram matrices of mutually inverse multiplication operators invert each
  // other; checked at the polynomial level against the shared denominator.
  Matrix<LaurentPolynomial> omega = omega_matrix(b);
  Matrix<LaurentPolynomial> prod = omega * num;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (prod.at(i, j) != (i == j ? common : LaurentPolynomial()))
        throw std::logic_error("xi: omega * xi is not the identity");

  Matrix<RationalFunction> xi(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) xi.at(i, j) = RationalFunction(num.at(i, j), common);
  return xi;
}

GreenTable factorize(std::shared_ptr<const BlockDescriptor> bp) {
  const BlockDescriptor& b = *bp;
  size_t n = b.size();
  GreenTable t;
  t.block = bp;
  t.omega = omega_matrix(b);
  t.xi = xi_matrix(b);

  const auto& groups = b.support_pairs;
  Matrix<RationalFunction> schur = t.xi;  // working copy, updated in place
  Matrix<RationalFunction> ptilde_rf = Matrix<RationalFunction>::identity(n);
  t.lambda = Matrix<RationalFunction>(n, n);

  for (size_t g = 0; g < groups.size(); ++g) {
    const auto& rows = groups[g];
    size_t m = rows.size();
    Matrix<RationalFunction> diag(m, m);
    for (size_t a = 0; a < m; ++a)
      for (size_t bx = 0; bx < m; ++bx) diag.at(a, bx) = schur.at(rows[a], rows[bx]);
    Matrix<RationalFunction> diag_inv;
    try {
      diag_inv = diag.inverse();
    } catch (const SingularMatrixError&) {
      throw BlockDataError("factorization: singular diagonal block at support " +
                           b.supports[g]);
    }
    for (size_t a = 0; a < m; ++a)
      for (size_t bx = 0; bx < m; ++bx) t.lambda.at(rows[a], rows[bx]) = diag.at(a, bx);

    // Ptilde block row g over later groups, then the Schur update
    for (size_t h = g + 1; h < groups.size(); ++h)
      for (size_t a = 0; a < m; ++a)
        for (int col : groups[h]) {
          RationalFunction v;
          for (size_t bx = 0; bx < m; ++bx) v += diag_inv.at(a, bx) * schur.at(rows[bx], col);
          ptilde_rf.at(rows[a], col) = std::move(v);
        }
    for (size_t h1 = g + 1; h1 < groups.size(); ++h1)
      for (int c1 : groups[h1])
        for (size_t h2 = g + 1; h2 < groups.size(); ++h2)
          for (int c2 : groups[h2]) {
            RationalFunction upd;
            for (size_t a = 0; a < m; ++a)
              for (size_t bx = 0; bx < m; ++bx)
                upd += ptilde_rf.at(rows[a], c1) * diag.at(a, bx) * ptilde_rf.at(rows[bx], c2);
            schur.at(c1, c2) -= upd;
          }
  }

  // entries must clear to Laurent polynomials and respect the closure order
  t.ptilde = Matrix<LaurentPolynomial>(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const RationalFunction& v = ptilde_rf.at(i, j);
      if (!v.is_polynomial())
        throw BlockDataError("factorization: non-polynomial transition entry at (" +
                             b.pairs[i].support + ", " + b.pairs[j].support + "): " + v.str());
      if (!v.is_zero() && !b.closure_leq[b.pair_support[i]][b.pair_support[j]])
        throw BlockDataError("factorization: entry outside the closure pattern at (" +
                             b.pairs[i].support + ", " + b.pairs[j].support + ")");
      t.ptilde.at(i, j) = v.num();
    }

  t.qtilde.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    ClassFn q(b.W);
    for (size_t j = 0; j < n; ++j) {
      if (t.ptilde.at(i, j).is_zero()) continue;
      for (size_t c = 0; c < b.W->num_classes(); ++c) {
        LaurentPolynomial term = t.ptilde.at(i, j);
        term.mul_scalar(b.W->char_value(b.pairs[j].phi, static_cast<int>(c)));
        q.v[c] += term;
      }
    }
    t.qtilde.push_back(std::move(q));
  }
  return t;
}

GreenTable factorize(const BlockDescriptor& b) {
  return factorize(std::make_shared<const BlockDescriptor>(b));
}

std::vector<LaurentPolynomial> green_function(const GreenTable& t, int cls) {
  std::vector<LaurentPolynomial> out;
  out.reserve(t.size());
  for (const auto& q : t.qtilde) out.push_back(q.v[cls]);
  return out;
}

LaurentPolynomial p_unnormalized(const GreenTable& t, int kappa, int iota) {
  HalfInt diff = t.block->pairs[kappa].c - t.block->pairs[iota].c;
  LaurentPolynomial p = t.ptilde.at(kappa, iota);
  p.mul_q_power(diff.as_int());
  return p;
}

Transport qg_transport(const GreenTable& t, const ClassFn& theta) {
  if (theta.W.get() != t.W().get()) throw std::logic_error("qg_transport: group mismatch");
  Transport tr;
  size_t n = t.size();
  for (size_t i = 0; i < n; ++i) {
    tr.x.push_back(inner_product(theta, character_fn(t.W(), t.block->pairs[i].phi)));
    tr.y.push_back(inner_product(theta, t.qtilde[i]));
  }
  for (size_t i = 0; i < n; ++i) {
    LaurentPolynomial via_p;
    for (size_t j = 0; j < n; ++j) via_p += t.ptilde.at(i, j) * tr.x[j];
    if (via_p != tr.y[i])
      throw std::logic_error("qg_transport: basis expansions are not related by Ptilde");
  }
  return tr;
}

std::vector<LaurentPolynomial> duality_x(const GreenTable& t,
                                         const std::vector<LaurentPolynomial>& x, int eta_l) {
  std::vector<LaurentPolynomial> out(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    const auto& p = t.block->pairs[i];
    LaurentPolynomial v = x[i];
    if (eta_l * p.eps < 0) v = -v;
    out[p.dual] = std::move(v);
  }
  return out;
}

RationalFunction scalar_product_green(const GreenTable& t, int cls1, int cls2) {
  if (cls1 != cls2) return RationalFunction();
  ClassFn z = z_full_fn(*t.block);
  return RationalFunction(LaurentPolynomial(rat_of(t.W()->centralizer_order(cls1))), z.v[cls1]);
}

Matrix<LaurentPolynomial> lambda_inverse(const GreenTable& t) {
  return t.ptilde * t.omega * t.ptilde.transpose();
}

bool verify_reconstruction(const GreenTable& t) {
  auto p_rf =
      t.ptilde.map<RationalFunction>([](const LaurentPolynomial& p) { return RationalFunction(p); });
  return p_rf.transpose() * t.lambda * p_rf == t.xi;
}

}  // namespace qgreen
