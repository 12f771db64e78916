#include "qgreen/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qgreen {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
  std::sort(p_.begin(), p_.end(), std::greater<int>());
  while (!p_.empty() && p_.back() == 0) p_.pop_back();
  if (!p_.empty() && p_.back() < 0) throw std::runtime_error("negative part in partition");
}

std::vector<Partition> Partition::all(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending-first recursive generation, then sort ascending in lex order
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Partition Partition::parse(const std::string& s, char sep) {
  std::vector<int> parts;
  if (s.empty() || s == "-") return Partition(parts);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    if (tok.empty()) continue;
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

int Partition::sum() const {
  int s = 0;
  for (int x : p_) s += x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (p_.empty()) return Partition(c);
  c.assign(p_[0], 0);
  for (int x : p_)
    for (int j = 0; j < x; ++j) c[j]++;
  return Partition(std::move(c));
}

long long Partition::n_invariant() const {
  long long s = 0;
  for (size_t i = 0; i < p_.size(); ++i) s += static_cast<long long>(i) * p_[i];
  return s;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> m;
  for (int x : p_) {
    if (!m.empty() && m.back().first == x)
      m.back().second++;
    else
      m.emplace_back(x, 1);
  }
  return m;
}

bool Partition::dominated_by(const Partition& a, const Partition& b) {
  if (a.sum() != b.sum()) throw std::logic_error("dominance compares partitions of the same n");
  int sa = 0, sb = 0;
  size_t len = std::max(a.p_.size(), b.p_.size());
  for (size_t i = 0; i < len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

std::string Partition::str(char sep) const {
  if (p_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < p_.size(); ++i) {
    if (i) os << sep;
    os << p_[i];
  }
  return os.str();
}

std::string Bipartition::str() const {
  std::string a = first.empty() ? "" : first.str('.');
  std::string b = second.empty() ? "" : second.str('.');
  return "(" + a + "|" + b + ")";
}

Bipartition Bipartition::parse(const std::string& s) {
  if (s.size() < 3 || s.front() != '(' || s.back() != ')')
    throw std::runtime_error("bad bipartition literal: " + s);
  std::string body = s.substr(1, s.size() - 2);
  auto bar = body.find('|');
  if (bar == std::string::npos) throw std::runtime_error("bad bipartition literal: " + s);
  return {Partition::parse(body.substr(0, bar), '.'), Partition::parse(body.substr(bar + 1), '.')};
}

std::vector<Bipartition> Bipartition::all(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& a : Partition::all(k))
      for (const auto& b : Partition::all(n - k)) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> parse_composition(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v <= 0) throw std::runtime_error("composition parts must be positive");
    out.push_back(v);
  }
  if (out.empty()) throw std::runtime_error("empty composition");
  return out;
}

}  // namespace qgreen
