// Block descriptors: the indexing data on which the factorization algorithm
// runs.  A block consists of pairs (unipotent support class, local system)
// in bijection with the irreducible characters of a relative Weyl group,
// carrying the closure order on supports, normalization exponents c, the
// component-group orders a, and optionally the table of local-system values
// on the component group (the Y-table).
//
// Built-in generators cover the GL_n principal block and the SL_n blocks
// (one per divisor d of n); everything else is ingested through a documented
// JSON format.  The bundled subregular dataset uses the same file format.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgreen/weyl.hpp"

namespace qgreen {

struct BlockDataError : std::runtime_error {
  explicit BlockDataError(const std::string& what) : std::runtime_error(what) {}
};

// Exponent that may be a half-integer (needed by SL_n blocks with d even of
// twice-odd type; always integral for GL_n, where it equals n(lambda)).
struct HalfInt {
  int twice = 0;

  HalfInt() = default;
  static HalfInt whole(long long v) { return HalfInt{static_cast<int>(2 * v)}; }
  static HalfInt of_twice(long long t) { return HalfInt{static_cast<int>(t)}; }
  bool integral() const { return twice % 2 == 0; }
  int as_int() const;
  HalfInt operator-(const HalfInt& o) const { return HalfInt{twice - o.twice}; }
  HalfInt operator+(const HalfInt& o) const { return HalfInt{twice + o.twice}; }
  bool operator==(const HalfInt& o) const = default;
  bool operator<(const HalfInt& o) const { return twice < o.twice; }
  std::string str() const;
  static HalfInt parse(const std::string& s);

 private:
  explicit HalfInt(int t) : twice(t) {}
};

struct PairDescriptor {
  int id = 0;
  std::string support;
  int phi = 0;  // character index in the block's Weyl group
  HalfInt c;
  int a = 1;      // |A(u)|
  int dual = -1;  // duality partner (pair id); resolved during validation
  int eps = 1;    // +1 throughout the split scope
};

// Values of the local systems at a support class on the F-classes of A(u):
// one row per pair supported there, one column per F-class.
struct YTable {
  int conductor = 1;
  std::vector<long long> class_sizes;  // sizes of the A(u)-classes
  Matrix<ExactScalar> rows;
};

struct BlockDescriptor {
  CoxeterDescriptor cox;
  WeylPtr W;
  std::vector<PairDescriptor> pairs;  // in the block's total order

  // distinct support labels, in total order; closure_leq[i][j] true when
  // support i lies in the closure of support j
  std::vector<std::string> supports;
  std::vector<std::vector<char>> closure_leq;

  // closure relation as given (pairs of support labels, lower < upper);
  // finalize() takes the reflexive-transitive closure into closure_leq
  std::vector<std::pair<std::string, std::string>> closure_given;

  int l = 0;             // dim Z_L^0 - dim Z_G^0; equals W->refl_dim
  int dim_zl = 0;        // dim Z_L^0
  int central_rank = 0;  // dim Z_G^0
  int rank_g = 0;        // F_q-rank of the ambient group

  std::map<std::string, YTable> y_tables;
  std::string group_name;   // informational ("GL3", "SL4:d=2", ...)
  int chi_multiplicity = 1; // number of central characters sharing this block

  // derived during finalize()
  std::vector<int> pair_support;            // pair -> support index
  std::vector<std::vector<int>> support_pairs;  // support -> contiguous pair ids
  int regular_pair = -1;                    // pair on the unique top support, if trivial

  size_t size() const { return pairs.size(); }
  int support_index(const std::string& label) const;
  bool is_regular() const { return regular_pair >= 0; }
  bool supports_comparable(int i, int j) const {
    return closure_leq[i][j] || closure_leq[j][i];
  }

  // Populates derived fields and checks every descriptor invariant; throws
  // BlockDataError with a field path on violation.
  void finalize();
};

// Principal block of GL_n: pairs are partitions of n, the Weyl group is S_n,
// the closure order is dominance, c = n(lambda).
BlockDescriptor gl_principal_block(int n);

// Block of SL_n attached to a central character of order d | n: pairs are
// partitions of n with all parts divisible by d, and the relative Weyl group
// is S_{n/d}.  with_y_table adds the component-group value rows (valid for
// q = 1 mod n).
BlockDescriptor sl_block(int n, int d, bool with_y_table = false);

// Product of GL principal blocks for a Levi of shape comp (sum = n); the
// ambient torus is shared, so dim Z_L stays n while the central rank grows.
BlockDescriptor gl_levi_block(const std::vector<int>& comp);

BlockDescriptor load_block(const std::string& json_text);
std::string save_block(const BlockDescriptor& b);

// ---------------------------------------------------------------------------
// Bundled subregular dataset.

struct SubregularSystem {
  std::string system;     // local-system label on A(u)
  std::string levi;       // cuspidal Levi type
  std::string wgl;        // type of W_G(L)
  std::string phi;        // name of the corresponding character
  long long degree = 0;   // its degree
  bool standard = false;  // phi is the reflection character
  bool cuspidal = false;
};

struct SubregularRecord {
  std::string type;  // "G2", "F4", "E6", "E7", "E8", "A", "B", "C", "D"
  int rank = 0;
  std::string class_label;
  std::string au;
  std::vector<SubregularSystem> systems;
};

// Looks up (and instantiates, for the classical families) the record for the
// given type and rank from the bundled dataset file.
SubregularRecord subregular_lookup(const std::string& type, int rank,
                                   const std::string& data_path = "");

// Resolves the bundled data directory: QGREEN_DATA_DIR, then the source tree.
std::string default_data_dir();

}  // namespace qgreen
