#include "weyl_rules.hpp"

#include <algorithm>
#include <map>

namespace qgreen::rules {

std::vector<std::pair<int, Partition>> strip_removals(const Partition& lambda, int k) {
  std::vector<std::pair<int, Partition>> out;
  const auto& p = lambda.parts();
  int len = lambda.length();
  // beta-set b_i = lambda_i + (len-1-i); removing a k-strip moves one beta
  // value down by k onto a free slot.
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<int>());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = nb[j] - (len - 1 - j);
    out.emplace_back(height % 2 == 0 ? 1 : -1, Partition(std::move(parts)));
  }
  return out;
}

Rational sym_char(const Partition& lambda, const Partition& mu) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> memo;
  if (lambda.sum() != mu.sum()) throw std::logic_error("sym_char: size mismatch");
  if (mu.empty()) return 1;
  auto key = std::make_pair(lambda.parts(), mu.parts());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int k = mu.parts()[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  Rational v = 0;
  for (const auto& [sgn, lam2] : strip_removals(lambda, k)) v += sgn * sym_char(lam2, rest);
  memo.emplace(std::move(key), v);
  return v;
}

Rational bip_char(const Bipartition& chr, const Bipartition& cls) {
  static std::map<std::pair<std::pair<std::vector<int>, std::vector<int>>,
                            std::pair<std::vector<int>, std::vector<int>>>,
                  Rational>
      memo;
  if (chr.sum() != cls.sum()) throw std::logic_error("bip_char: size mismatch");
  if (cls.first.empty() && cls.second.empty()) return 1;
  auto key = std::make_pair(std::make_pair(chr.first.parts(), chr.second.parts()),
                            std::make_pair(cls.first.parts(), cls.second.parts()));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  bool positive = !cls.first.empty();
  const Partition& side = positive ? cls.first : cls.second;
  int k = side.parts()[0];
  Partition rest(std::vector<int>(side.parts().begin() + 1, side.parts().end()));
  Bipartition cls2 = positive ? Bipartition{rest, cls.second} : Bipartition{cls.first, rest};

  // A positive k-cycle strips either component with sign +1; a negative
  // k-cycle weights strips of the second component by -1.
  Rational v = 0;
  for (const auto& [sgn, a2] : strip_removals(chr.first, k))
    v += sgn * bip_char({a2, chr.second}, cls2);
  int beta_weight = positive ? 1 : -1;
  for (const auto& [sgn, b2] : strip_removals(chr.second, k))
    v += beta_weight * sgn * bip_char({chr.first, b2}, cls2);
  memo.emplace(std::move(key), v);
  return v;
}

}  // namespace qgreen::rules
