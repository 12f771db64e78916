// Finite Coxeter groups of types A, B/C, D and dihedral I2(m), together with
// products: conjugacy classes with explicit reflection matrices, character
// tables, class functions, and parabolic-subgroup fusion.
//
// Character tables are computed rather than looked up: type A by the
// Murnaghan-Nakayama rule, B/C by the bipartition Murnaghan-Nakayama
// recursion, D by restriction from B with explicit splitting of degenerate
// characters, dihedral groups in closed form.  Row and column orthogonality
// are asserted by the test suite for every constructed group.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgreen/laurent.hpp"
#include "qgreen/matrix.hpp"
#include "qgreen/partition.hpp"

namespace qgreen {

enum class Family { A, B, C, D, I2 };

struct FactorDescriptor {
  Family family = Family::A;
  int rank = 0;  // A: S_{rank+1}; B/C/D: signed permutations of rank letters; I2: 2
  int m = 0;     // I2 only: W(I2(m)) has order 2m

  bool operator==(const FactorDescriptor& o) const = default;
  std::string str() const;
};

struct CoxeterDescriptor {
  std::vector<FactorDescriptor> factors;

  // S_n as a Coxeter group (type A_{n-1}; n = 1 gives the trivial group).
  static CoxeterDescriptor symmetric_group(int n);
  static CoxeterDescriptor single(Family f, int rank_or_order);

  void validate() const;  // enforces the supported rank bounds
  std::string str() const;
  bool operator==(const CoxeterDescriptor& o) const = default;
};

// Signed permutation on {1..n}: img[i] = +-j means e_{i+1} -> +-e_j.
// Type-A elements are the sign-free case.
struct SignedPerm {
  std::vector<int> img;

  static SignedPerm identity(int n);
  int n() const { return static_cast<int>(img.size()); }
  int apply(int i) const { return img[i - 1]; }  // 1-based, signed
  SignedPerm compose(const SignedPerm& o) const;  // this after o
  SignedPerm inverse() const;
  int flips() const;  // number of negative images
  // (positive cycle type, negative cycle type)
  std::pair<Partition, Partition> cycle_type() const;
  bool operator==(const SignedPerm& o) const = default;
  bool operator<(const SignedPerm& o) const { return img < o.img; }
};

// One irreducible factor with its full class/character data.
struct FactorGroup {
  FactorDescriptor fd;
  long long order = 1;
  int refl_dim = 0;
  int identity_class = 0;

  std::vector<std::string> class_labels;
  std::vector<long long> class_sizes;
  std::vector<Matrix<ExactScalar>> class_refl;
  std::vector<SignedPerm> class_reps;  // A/B/C/D only

  std::vector<std::string> char_labels;
  Matrix<ExactScalar> table;  // chars x classes
  int trivial_char = 0, sign_char = 0;

  // structured class labels
  std::vector<Partition> a_parts;       // type A
  std::vector<Bipartition> bd_parts;    // types B/C/D
  std::vector<int> d_split;             // type D: 0 not split, else +-1
};

struct WeylGroupModel {
  CoxeterDescriptor desc;
  std::vector<FactorGroup> factors;

  long long order = 1;
  int refl_dim = 0;  // dimension l of the reflection representation
  int identity_class = 0;

  std::vector<std::vector<int>> class_tuple;  // class -> factor class indices
  std::vector<std::string> class_labels;
  std::vector<long long> class_sizes;

  std::vector<std::vector<int>> char_tuple;
  std::vector<std::string> char_labels;
  Matrix<ExactScalar> table;  // chars x classes
  int trivial_char = 0, sign_char = 0;

  size_t num_classes() const { return class_labels.size(); }
  size_t num_chars() const { return char_labels.size(); }
  long long centralizer_order(int c) const { return order / class_sizes[c]; }
  ExactScalar char_value(int chi, int c) const { return table.at(chi, c); }
  ExactScalar sign_value(int c) const { return table.at(sign_char, c); }
  long long char_degree(int chi) const;
  int class_index(const std::string& label) const;
  int char_index(const std::string& label) const;
  Matrix<ExactScalar> reflection_matrix(int c) const;  // block diagonal over factors
  // chi' with chi' = chi (x) sign
  int tensor_sign_partner(int chi) const;
};

using WeylPtr = std::shared_ptr<const WeylGroupModel>;

WeylPtr build_group(const CoxeterDescriptor& d);

// ---------------------------------------------------------------------------
// Class functions (Laurent-polynomial valued; scalars embed as constants).

struct ClassFn {
  WeylPtr W;
  std::vector<LaurentPolynomial> v;

  ClassFn() = default;
  ClassFn(WeylPtr w) : W(std::move(w)), v(W->num_classes()) {}
  LaurentPolynomial& operator[](size_t i) { return v[i]; }
  const LaurentPolynomial& operator[](size_t i) const { return v[i]; }
  bool operator==(const ClassFn& o) const { return v == o.v; }
};

ClassFn character_fn(const WeylPtr& W, int chi);
ClassFn pointwise_mul(const ClassFn& f, const ClassFn& g);
ClassFn add(const ClassFn& f, const ClassFn& g);
ClassFn scale(const ClassFn& f, const LaurentPolynomial& c);

// det(q - M(w)) on the reflection representation of the class.
LaurentPolynomial det_q_minus_reflection(const WeylGroupModel& W, int c);

// Exterior powers of the reflection character, entries i = 0..l, extracted
// from the coefficients of the characteristic polynomials.
std::vector<ClassFn> exterior_reflection_characters(const WeylPtr& W);

// Z(w) = (q-1)^{ambient_rank - l} det(q - M(w)): the order polynomial of the
// w-twisted torus of the given ambient rank.
ClassFn torus_order_function(const WeylPtr& W, int ambient_rank);

// |W|^{-1} sum_w f(w) conj(g(w)); exact, Laurent-polynomial valued.
LaurentPolynomial inner_product(const ClassFn& f, const ClassFn& g);

// ---------------------------------------------------------------------------
// Parabolic-type embeddings with class fusion.

struct WeylEmbedding {
  WeylPtr G, M;
  std::vector<int> fusion;  // M-class index -> G-class index
  long long index() const { return G->order / M->order; }
};

// Young subgroup S_{c_1} x ... x S_{c_r} of S_n (G must be a single A factor).
WeylEmbedding young_embedding(const WeylPtr& G, const std::vector<int>& comp);
// B_k x prod S_{a_i} inside B_n, n = k + sum a_i (k = 0 allowed).
WeylEmbedding b_parabolic_embedding(const WeylPtr& G, int k, const std::vector<int>& a_comp);
// D_k x prod S_{a_i} inside D_n (k = 0 or k >= 2).
WeylEmbedding d_parabolic_embedding(const WeylPtr& G, int k, const std::vector<int>& a_comp);

ClassFn fusion_restrict(const ClassFn& f, const WeylEmbedding& e);
ClassFn induce(const ClassFn& f, const WeylEmbedding& e);  // Frobenius-adjoint to restriction

// Verifies row and column orthogonality of the character table; throws on
// failure.  Used by tests and by descriptor validation.
void check_character_table_orthogonality(const WeylGroupModel& W);

// Enumerate all elements (types A/B/C/D and products; desk-scale orders only).
std::vector<SignedPerm> enumerate_elements(const WeylGroupModel& W);
// Class index of an explicit element.
int class_of_element(const WeylGroupModel& W, const SignedPerm& w);

}  // namespace qgreen
