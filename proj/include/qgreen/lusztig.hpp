// The block factorization: from the Weyl-group data of a block descriptor,
// build the Gram matrices Omega and Xi of the two natural bases, factor
// Xi = Ptilde^T * Lambda * Ptilde with Ptilde block-upper-unitriangular over
// the closure order, and assemble the derived class functions Qtilde.
//
// All matrices here are normalized: the ambient-center factor
// |Z_G^{0F}| = (q-1)^{central_rank} is divided out of Omega, Xi and Lambda
// (it cancels in Ptilde) and is reinstated by the operations that report
// group-level quantities.

#pragma once

#include <memory>

#include "qgreen/blocks.hpp"
#include "qgreen/ratfun.hpp"

namespace qgreen {

struct GreenTable {
  std::shared_ptr<const BlockDescriptor> block;
  Matrix<LaurentPolynomial> omega;  // <Zbar phi_i, phi_j>
  Matrix<RationalFunction> xi;      // <Zbar^{-1} phi_i, phi_j> = omega^{-1}
  Matrix<LaurentPolynomial> ptilde;
  Matrix<RationalFunction> lambda;  // block diagonal Gram matrix of the Y-basis
  std::vector<ClassFn> qtilde;      // Qtilde_iota on the block's Weyl group

  const WeylPtr& W() const { return block->W; }
  size_t size() const { return block->size(); }
};

// det(q - M(w)) on the block's reflection representation.
ClassFn zbar_fn(const BlockDescriptor& b);
// The full torus-order function Z(w) = (q-1)^{central_rank} * Zbar(w).
ClassFn z_full_fn(const BlockDescriptor& b);

// Entry (i,j) = sum_k q^{l-k} (-1)^k <phi_i phi_j, ext^k r>; computed both
// through the exterior-power expansion and as <Zbar phi_i, phi_j>, which are
// asserted equal.
Matrix<LaurentPolynomial> omega_matrix(const BlockDescriptor& b);

// Entry (i,j) = <Zbar^{-1} phi_i, phi_j>; asserted to be the inverse of
// omega by exact multiplication.
Matrix<RationalFunction> xi_matrix(const BlockDescriptor& b);

// Runs the factorization; throws BlockDataError on a singular diagonal
// block, a non-polynomial Ptilde entry, or a closure-pattern violation.
GreenTable factorize(std::shared_ptr<const BlockDescriptor> b);
GreenTable factorize(const BlockDescriptor& b);

// (Qtilde_iota(w))_iota at the given class of W.
std::vector<LaurentPolynomial> green_function(const GreenTable& t, int cls);

// Un-normalized transition entry P[kappa][iota] = q^{c_kappa - c_iota} Ptilde.
LaurentPolynomial p_unnormalized(const GreenTable& t, int kappa, int iota);

struct Transport {
  std::vector<LaurentPolynomial> x;  // <theta, phi_iota>
  std::vector<LaurentPolynomial> y;  // <theta, Qtilde_iota>
};
// Coefficients of Q^G(theta) in both bases; y = Ptilde * x is asserted.
Transport qg_transport(const GreenTable& t, const ClassFn& theta);

// Duality on X-basis coefficient vectors: out[dual(iota)] = eta * eps * in[iota].
std::vector<LaurentPolynomial> duality_x(const GreenTable& t,
                                         const std::vector<LaurentPolynomial>& x, int eta_l);

// <Q_w, Q_w'>: zero for distinct classes, |C_W(w)| / Z(w) on the diagonal.
RationalFunction scalar_product_green(const GreenTable& t, int cls1, int cls2);

// Inverse of the normalized Lambda as a polynomial matrix: Ptilde * Omega * Ptilde^T.
Matrix<LaurentPolynomial> lambda_inverse(const GreenTable& t);

// Exact check of Ptilde^T * Lambda * Ptilde == Xi.
bool verify_reconstruction(const GreenTable& t);

}  // namespace qgreen
