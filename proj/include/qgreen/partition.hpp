// Integer partitions and bipartitions, with the dominance order and the
// label formats used across the CLI ("3+1" for partitions, "(2|1.1)" for
// bipartitions).

#pragma once

#include <string>
#include <vector>

namespace qgreen {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorted decreasingly, zeros dropped

  static std::vector<Partition> all(int n);  // partitions of n, ascending in lex order
  static Partition parse(const std::string& s, char sep = '+');

  const std::vector<int>& parts() const { return p_; }
  int sum() const;
  int length() const { return static_cast<int>(p_.size()); }
  int part(size_t i) const { return i < p_.size() ? p_[i] : 0; }
  bool empty() const { return p_.empty(); }

  Partition conjugate() const;
  // n(lambda) = sum (i-1) lambda_i
  long long n_invariant() const;
  // multiplicity of each part value
  std::vector<std::pair<int, int>> multiplicities() const;

  // a <= b in dominance (partial sums); both must have equal sum
  static bool dominated_by(const Partition& a, const Partition& b);

  bool operator==(const Partition& o) const { return p_ == o.p_; }
  bool operator!=(const Partition& o) const { return p_ != o.p_; }
  bool operator<(const Partition& o) const { return p_ < o.p_; }  // lex on parts

  std::string str(char sep = '+') const;  // "3+1"; empty partition is "-"

 private:
  std::vector<int> p_;
};

struct Bipartition {
  Partition first, second;

  int sum() const { return first.sum() + second.sum(); }
  bool operator==(const Bipartition& o) const { return first == o.first && second == o.second; }
  bool operator<(const Bipartition& o) const {
    if (first != o.first) return first < o.first;
    return second < o.second;
  }
  // "(2|1.1)"; an empty side prints nothing: "(2|)"
  std::string str() const;
  static Bipartition parse(const std::string& s);
  static std::vector<Bipartition> all(int n);
};

// Compositions (ordered tuples of positive integers) appear as Levi shapes.
std::vector<int> parse_composition(const std::string& s);  // "3,2" -> {3,2}

}  // namespace qgreen
