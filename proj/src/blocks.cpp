#include "qgreen/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qgreen/report.hpp"

namespace qgreen {

int HalfInt::as_int() const {
  if (!integral()) throw std::logic_error("half-integer exponent used where an integer is required");
  return twice / 2;
}

std::string HalfInt::str() const {
  if (integral()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInt HalfInt::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return whole(std::stoll(s));
  if (s.substr(slash + 1) != "2") throw BlockDataError("bad exponent literal: " + s);
  return of_twice(std::stoll(s.substr(0, slash)));
}

int BlockDescriptor::support_index(const std::string& label) const {
  for (size_t i = 0; i < supports.size(); ++i)
    if (supports[i] == label) return static_cast<int>(i);
  throw BlockDataError("unknown support label: " + label);
}

void BlockDescriptor::finalize() {
  cox.validate();
  if (!W) W = build_group(cox);
  if (l != W->refl_dim)
    throw BlockDataError("dims.l does not match the reflection dimension of " + cox.str());
  if (dim_zl - central_rank != l)
    throw BlockDataError("dims: dim_zl - central_rank must equal l");

  if (pairs.size() != W->num_chars())
    throw BlockDataError("pairs: expected one pair per irreducible character");
  std::vector<char> phi_seen(W->num_chars(), 0);
  for (const auto& p : pairs) {
    if (p.phi < 0 || p.phi >= static_cast<int>(W->num_chars()))
      throw BlockDataError("pairs[" + std::to_string(p.id) + "].phi out of range");
    if (phi_seen[p.phi]++) throw BlockDataError("pairs: phi indices are not a bijection");
  }

  // supports in order of first appearance; equal-support pairs contiguous
  supports.clear();
  pair_support.assign(pairs.size(), -1);
  for (size_t i = 0; i < pairs.size(); ++i) {
    const auto& s = pairs[i].support;
    auto it = std::find(supports.begin(), supports.end(), s);
    if (it == supports.end()) {
      supports.push_back(s);
      pair_support[i] = static_cast<int>(supports.size()) - 1;
    } else {
      if (i == 0 || pairs[i - 1].support != s)
        throw BlockDataError("total_order: pairs with support " + s + " are not contiguous");
      pair_support[i] = static_cast<int>(it - supports.begin());
    }
  }
  support_pairs.assign(supports.size(), {});
  for (size_t i = 0; i < pairs.size(); ++i)
    support_pairs[pair_support[i]].push_back(static_cast<int>(i));

  // closure: reflexive-transitive closure of the given relation
  size_t ns = supports.size();
  closure_leq.assign(ns, std::vector<char>(ns, 0));
  for (size_t i = 0; i < ns; ++i) closure_leq[i][i] = 1;
  for (const auto& [lo, hi] : closure_given) {
    closure_leq[support_index(lo)][support_index(hi)] = 1;
  }
  for (size_t k = 0; k < ns; ++k)
    for (size_t i = 0; i < ns; ++i)
      if (closure_leq[i][k])
        for (size_t j = 0; j < ns; ++j)
          if (closure_leq[k][j]) closure_leq[i][j] = 1;
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j) {
      if (i != j && closure_leq[i][j] && closure_leq[j][i])
        throw BlockDataError("closure_order: cycle through " + supports[i] + " and " + supports[j]);
      if (i > j && closure_leq[i][j])
        throw BlockDataError("total_order: does not refine the closure order at " + supports[i] +
                             " < " + supports[j]);
    }

  // c constant on a support, strictly decreasing along the closure order
  for (const auto& grp : support_pairs)
    for (size_t k = 1; k < grp.size(); ++k)
      if (!(pairs[grp[k]].c == pairs[grp[0]].c))
        throw BlockDataError("pairs: c differs within support " + supports[pair_support[grp[0]]]);
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j)
      if (i != j && closure_leq[i][j] &&
          !(pairs[support_pairs[j][0]].c < pairs[support_pairs[i][0]].c))
        throw BlockDataError("pairs: c must strictly decrease from " + supports[i] + " to " +
                             supports[j]);
  for (const auto& grp : support_pairs)
    for (size_t k = 1; k < grp.size(); ++k)
      if (pairs[grp[k]].a != pairs[grp[0]].a)
        throw BlockDataError("pairs: a differs within support " + supports[pair_support[grp[0]]]);

  // duality partners through the sign character
  for (auto& p : pairs) {
    int partner_phi = W->tensor_sign_partner(p.phi);
    int partner = -1;
    for (size_t j = 0; j < pairs.size(); ++j)
      if (pairs[j].phi == partner_phi) partner = static_cast<int>(j);
    if (p.dual >= 0 && pairs[p.dual].phi != partner_phi)
      throw BlockDataError("pairs[" + std::to_string(p.id) + "].dual is not the sign-tensor partner");
    p.dual = partner;
    if (p.eps != 1)
      throw BlockDataError("pairs[" + std::to_string(p.id) + "].eps must be +1 in the split scope");
  }

  // Y-tables
  for (const auto& [label, yt] : y_tables) {
    std::string where = "y_table[" + label + "]";
    int s = support_index(label);
    const auto& grp = support_pairs[s];
    if (yt.rows.rows() != grp.size())
      throw BlockDataError(where + ": expected one row per pair at this support");
    if (yt.rows.cols() != yt.class_sizes.size())
      throw BlockDataError(where + ": row length differs from the number of A(u)-classes");
    long long a_sum = std::accumulate(yt.class_sizes.begin(), yt.class_sizes.end(), 0LL);
    if (a_sum != pairs[grp[0]].a)
      throw BlockDataError(where + ": class sizes do not sum to a");
    for (size_t i = 0; i < grp.size(); ++i)
      for (size_t j = 0; j < grp.size(); ++j) {
        ExactScalar s2;
        for (size_t k = 0; k < yt.class_sizes.size(); ++k)
          s2 += ExactScalar(rat_of(yt.class_sizes[k])) * yt.rows.at(i, k) *
                yt.rows.at(j, k).conjugate();
        ExactScalar want = i == j ? ExactScalar(rat_of(a_sum)) : ExactScalar();
        if (s2 != want) throw BlockDataError(where + ": rows fail first orthogonality");
      }
  }

  // regular block: unique top support carrying exactly the trivial character
  regular_pair = -1;
  for (size_t m = 0; m < ns; ++m) {
    bool top = true;
    for (size_t i = 0; i < ns; ++i) top = top && closure_leq[i][m];
    if (top && support_pairs[m].size() == 1 &&
        pairs[support_pairs[m][0]].phi == W->trivial_char)
      regular_pair = support_pairs[m][0];
  }
}

// ---------------------------------------------------------------------------
// Generators

namespace {

long long sum_conjugate_squares(const Partition& p) {
  Partition conj = p.conjugate();
  long long s = 0;
  for (int x : conj.parts()) s += static_cast<long long>(x) * x;
  return s;
}

struct PairSeed {
  Partition lambda;   // support class
  Partition phi_part; // character label partition (for type A groups)
  HalfInt c;
};

// total order: increasing class dimension (decreasing c), ties by the label
void sort_pairs(std::vector<PairSeed>& seeds) {
  std::stable_sort(seeds.begin(), seeds.end(), [](const PairSeed& x, const PairSeed& y) {
    if (!(x.c == y.c)) return y.c < x.c;
    return x.lambda < y.lambda;
  });
}

}  // namespace

BlockDescriptor gl_principal_block(int n) {
  if (n < 1 || n > 8) throw BlockDataError("gl_principal_block: n out of range (1..8)");
  BlockDescriptor b;
  b.cox = CoxeterDescriptor::symmetric_group(n);
  b.W = build_group(b.cox);
  b.l = n - 1;
  b.dim_zl = n;
  b.central_rank = 1;
  b.rank_g = n;
  b.group_name = "GL" + std::to_string(n);

  std::vector<PairSeed> seeds;
  for (const auto& lam : Partition::all(n))
    seeds.push_back({lam, lam, HalfInt::whole((sum_conjugate_squares(lam) - n) / 2)});
  sort_pairs(seeds);

  for (size_t i = 0; i < seeds.size(); ++i) {
    PairDescriptor p;
    p.id = static_cast<int>(i);
    p.support = seeds[i].lambda.str();
    p.phi = b.W->char_index(seeds[i].phi_part.str());
    p.c = seeds[i].c;
    p.a = 1;
    b.pairs.push_back(p);
    YTable yt;
    yt.conductor = 1;
    yt.class_sizes = {1};
    yt.rows = Matrix<ExactScalar>(1, 1);
    yt.rows.at(0, 0) = ExactScalar(1L);
    b.y_tables.emplace(p.support, std::move(yt));
  }
  for (const auto& s : seeds)
    for (const auto& t : seeds)
      if (!(s.lambda == t.lambda) && Partition::dominated_by(s.lambda, t.lambda))
        b.closure_given.emplace_back(s.lambda.str(), t.lambda.str());
  b.finalize();
  return b;
}

BlockDescriptor sl_block(int n, int d, bool with_y_table) {
  if (n < 1 || n > 8) throw BlockDataError("sl_block: n out of range (1..8)");
  if (d < 1 || n % d != 0) throw BlockDataError("sl_block: d must divide n");
  int k = n / d;
  BlockDescriptor b;
  b.cox = CoxeterDescriptor::symmetric_group(k);
  b.W = build_group(b.cox);
  b.l = k - 1;
  b.dim_zl = k - 1;
  b.central_rank = 0;
  b.rank_g = n - 1;
  b.group_name = "SL" + std::to_string(n) + ":d=" + std::to_string(d);
  b.chi_multiplicity = detail::euler_phi(d);

  std::vector<PairSeed> seeds;
  for (const auto& small : Partition::all(k)) {
    std::vector<int> parts;
    for (int x : small.parts()) parts.push_back(x * d);
    Partition lam(std::move(parts));
    // 2c = codim_{SL_n} C_lambda - dim Z_L = (sum conj(lambda)^2 - 1) - (k - 1)
    seeds.push_back({lam, small, HalfInt::of_twice(sum_conjugate_squares(lam) - k)});
  }
  sort_pairs(seeds);

  for (size_t i = 0; i < seeds.size(); ++i) {
    PairDescriptor p;
    p.id = static_cast<int>(i);
    p.support = seeds[i].lambda.str();
    p.phi = b.W->char_index(seeds[i].phi_part.str());
    p.c = seeds[i].c;
    p.a = std::accumulate(seeds[i].lambda.parts().begin(), seeds[i].lambda.parts().end(), 0,
                          [](int g, int x) { return std::gcd(g, x); });
    b.pairs.push_back(p);
    if (with_y_table) {
      // component-group rows for the canonical central character of order d,
      // valid when q = 1 (mod n): A(u) = Z/dt with dt = gcd of the parts
      int dt = p.a;
      YTable yt;
      yt.conductor = dt;
      yt.class_sizes.assign(dt, 1);
      yt.rows = Matrix<ExactScalar>(1, dt);
      for (int a = 0; a < dt; ++a)
        yt.rows.at(0, a) = ExactScalar::root_of_unity(dt, static_cast<long>(dt / d) * a);
      b.y_tables.emplace(p.support, std::move(yt));
    }
  }
  for (const auto& s : seeds)
    for (const auto& t : seeds)
      if (!(s.lambda == t.lambda) && Partition::dominated_by(s.lambda, t.lambda))
        b.closure_given.emplace_back(s.lambda.str(), t.lambda.str());
  b.finalize();
  return b;
}

BlockDescriptor gl_levi_block(const std::vector<int>& comp) {
  if (comp.empty()) throw BlockDataError("gl_levi_block: empty composition");
  int n = std::accumulate(comp.begin(), comp.end(), 0);
  if (n > 8) throw BlockDataError("gl_levi_block: total rank out of range");
  BlockDescriptor b;
  for (int c : comp) {
    FactorDescriptor fd;
    fd.family = Family::A;
    fd.rank = c - 1;
    b.cox.factors.push_back(fd);
  }
  b.W = build_group(b.cox);
  b.l = n - static_cast<int>(comp.size());
  b.dim_zl = n;
  b.central_rank = static_cast<int>(comp.size());
  b.rank_g = n;
  {
    std::ostringstream os;
    os << "GL(";
    for (size_t i = 0; i < comp.size(); ++i) os << (i ? "x" : "") << comp[i];
    os << ")";
    b.group_name = os.str();
  }

  // pairs = tuples of partitions; the Weyl-group class and character labels
  // coincide, so the support label is the character label
  struct TupleSeed {
    std::vector<Partition> lams;
    std::string label;
    long long c2;
  };
  std::vector<TupleSeed> seeds;
  for (size_t chi = 0; chi < b.W->num_chars(); ++chi) {
    TupleSeed t;
    t.label = b.W->char_labels[chi];
    long long c2 = 0;
    for (size_t f = 0; f < b.W->factors.size(); ++f) {
      const Partition& lam = b.W->factors[f].a_parts[b.W->char_tuple[chi][f]];
      t.lams.push_back(lam);
      c2 += sum_conjugate_squares(lam) - comp[f];
    }
    t.c2 = c2;
    seeds.push_back(std::move(t));
  }
  std::stable_sort(seeds.begin(), seeds.end(), [](const TupleSeed& x, const TupleSeed& y) {
    if (x.c2 != y.c2) return x.c2 > y.c2;
    return x.label < y.label;
  });
  for (size_t i = 0; i < seeds.size(); ++i) {
    PairDescriptor p;
    p.id = static_cast<int>(i);
    p.support = seeds[i].label;
    p.phi = b.W->char_index(seeds[i].label);
    p.c = HalfInt::of_twice(seeds[i].c2);
    p.a = 1;
    b.pairs.push_back(p);
    YTable yt;
    yt.conductor = 1;
    yt.class_sizes = {1};
    yt.rows = Matrix<ExactScalar>(1, 1);
    yt.rows.at(0, 0) = ExactScalar(1L);
    b.y_tables.emplace(p.support, std::move(yt));
  }
  auto tuple_leq = [](const TupleSeed& x, const TupleSeed& y) {
    for (size_t f = 0; f < x.lams.size(); ++f)
      if (!Partition::dominated_by(x.lams[f], y.lams[f])) return false;
    return true;
  };
  for (const auto& s : seeds)
    for (const auto& t : seeds)
      if (s.label != t.label && tuple_leq(s, t)) b.closure_given.emplace_back(s.label, t.label);
  b.finalize();
  return b;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string family_str(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::I2: return "I2";
  }
  return "?";
}

Family family_parse(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "I2") return Family::I2;
  throw BlockDataError("coxeter: unknown family " + s);
}

}  // namespace

std::string save_block(const BlockDescriptor& b) {
  Json j;
  j["schema"] = "qgreen.block/1";
  if (!b.group_name.empty()) j["group"] = b.group_name;
  Json cox = Json::array();
  for (const auto& f : b.cox.factors) {
    Json jf;
    jf["family"] = family_str(f.family);
    if (f.family == Family::I2)
      jf["order"] = f.m;
    else
      jf["rank"] = f.rank;
    cox.push_back(std::move(jf));
  }
  j["coxeter"] = std::move(cox);
  j["dims"] = Json{{"l", b.l},
                   {"dim_zl", b.dim_zl},
                   {"central_rank", b.central_rank},
                   {"rank_g", b.rank_g}};
  if (b.chi_multiplicity != 1) j["chi_multiplicity"] = b.chi_multiplicity;

  Json pairs = Json::array();
  for (const auto& p : b.pairs) {
    Json jp;
    jp["id"] = p.id;
    jp["support"] = p.support;
    jp["phi"] = b.W->char_labels[p.phi];
    jp["c"] = p.c.str();
    jp["a"] = p.a;
    jp["dual"] = p.dual;
    jp["eps"] = p.eps;
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);

  Json total = Json::array();
  for (const auto& p : b.pairs) total.push_back(p.id);
  j["total_order"] = std::move(total);

  // covering relations (Hasse reduction of closure_leq)
  Json covers = Json::array();
  size_t ns = b.supports.size();
  for (size_t i = 0; i < ns; ++i)
    for (size_t jx = 0; jx < ns; ++jx) {
      if (i == jx || !b.closure_leq[i][jx]) continue;
      bool cover = true;
      for (size_t k = 0; k < ns && cover; ++k)
        if (k != i && k != jx && b.closure_leq[i][k] && b.closure_leq[k][jx]) cover = false;
      if (cover) covers.push_back(Json::array({b.supports[i], b.supports[jx]}));
    }
  j["closure_order"] = std::move(covers);

  if (!b.y_tables.empty()) {
    Json yt;
    for (const auto& [label, t] : b.y_tables) {
      Json jt;
      jt["conductor"] = t.conductor;
      jt["class_sizes"] = t.class_sizes;
      jt["rows"] = matrix_to_json(t.rows, [](const ExactScalar& s) { return scalar_to_json(s); });
      yt[label] = std::move(jt);
    }
    j["y_table"] = std::move(yt);
  }
  return j.dump(2);
}

BlockDescriptor load_block(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const std::exception& e) {
    throw BlockDataError(std::string("parse error: ") + e.what());
  }
  if (j.value("schema", "") != "qgreen.block/1")
    throw BlockDataError("schema: expected qgreen.block/1");

  BlockDescriptor b;
  b.group_name = j.value("group", "");
  for (const auto& jf : j.at("coxeter")) {
    FactorDescriptor fd;
    fd.family = family_parse(jf.at("family").get<std::string>());
    if (fd.family == Family::I2) {
      fd.rank = 2;
      fd.m = jf.at("order").get<int>();
    } else {
      fd.rank = jf.at("rank").get<int>();
    }
    b.cox.factors.push_back(fd);
  }
  b.W = build_group(b.cox);
  const auto& dims = j.at("dims");
  b.l = dims.at("l").get<int>();
  b.dim_zl = dims.at("dim_zl").get<int>();
  b.central_rank = dims.at("central_rank").get<int>();
  b.rank_g = dims.at("rank_g").get<int>();
  b.chi_multiplicity = j.value("chi_multiplicity", 1);

  std::map<int, PairDescriptor> by_id;
  for (const auto& jp : j.at("pairs")) {
    PairDescriptor p;
    p.id = jp.at("id").get<int>();
    p.support = jp.at("support").get<std::string>();
    std::string phi = jp.at("phi").get<std::string>();
    try {
      p.phi = b.W->char_index(phi);
    } catch (const std::exception&) {
      throw BlockDataError("pairs[" + std::to_string(p.id) + "].phi: unknown character " + phi);
    }
    const auto& jc = jp.at("c");
    p.c = jc.is_string() ? HalfInt::parse(jc.get<std::string>())
                         : HalfInt::whole(jc.get<long long>());
    p.a = jp.value("a", 1);
    p.dual = jp.value("dual", -1);
    p.eps = jp.value("eps", 1);
    if (by_id.count(p.id)) throw BlockDataError("pairs: duplicate id " + std::to_string(p.id));
    by_id.emplace(p.id, std::move(p));
  }
  for (const auto& id : j.at("total_order")) {
    auto it = by_id.find(id.get<int>());
    if (it == by_id.end())
      throw BlockDataError("total_order: unknown pair id " + id.dump());
    b.pairs.push_back(it->second);
  }
  if (b.pairs.size() != by_id.size())
    throw BlockDataError("total_order: must list every pair exactly once");

  for (const auto& cov : j.at("closure_order")) {
    if (!cov.is_array() || cov.size() != 2)
      throw BlockDataError("closure_order: entries must be [lower, upper] pairs");
    b.closure_given.emplace_back(cov[0].get<std::string>(), cov[1].get<std::string>());
  }

  if (j.contains("y_table")) {
    for (const auto& [label, jt] : j.at("y_table").items()) {
      YTable t;
      t.conductor = jt.at("conductor").get<int>();
      t.class_sizes = jt.at("class_sizes").get<std::vector<long long>>();
      const auto& rows = jt.at("rows");
      size_t nr = rows.size(), ncol = nr ? rows[0].size() : 0;
      t.rows = Matrix<ExactScalar>(nr, ncol);
      for (size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != ncol) throw BlockDataError("y_table[" + label + "]: ragged rows");
        for (size_t k = 0; k < ncol; ++k) t.rows.at(i, k) = scalar_from_json(rows[i][k]);
      }
      b.y_tables.emplace(label, std::move(t));
    }
  }
  b.finalize();
  return b;
}

// ---------------------------------------------------------------------------
// Subregular dataset

std::string default_data_dir() {
  if (const char* env = std::getenv("QGREEN_DATA_DIR")) return env;
  return std::string(QGREEN_SOURCE_DIR) + "/data";
}

namespace {

// Substitutes {expr} placeholders, where expr is n, n-k, n/2 or (n-k)/2.
std::string instantiate(const std::string& pattern, int n) {
  std::string out;
  for (size_t i = 0; i < pattern.size();) {
    if (pattern[i] != '{') {
      out += pattern[i++];
      continue;
    }
    auto close = pattern.find('}', i);
    if (close == std::string::npos) throw BlockDataError("bad pattern: " + pattern);
    std::string expr = pattern.substr(i + 1, close - i - 1);
    bool half = false;
    if (expr.size() > 2 && expr.substr(expr.size() - 2) == "/2") {
      half = true;
      expr = expr.substr(0, expr.size() - 2);
    }
    if (expr.size() >= 2 && expr.front() == '(' && expr.back() == ')')
      expr = expr.substr(1, expr.size() - 2);
    long v;
    if (expr == "n") {
      v = n;
    } else if (expr.rfind("n-", 0) == 0) {
      v = n - std::stol(expr.substr(2));
    } else if (expr.rfind("2n-", 0) == 0) {
      v = 2L * n - std::stol(expr.substr(3));
    } else {
      // not a rank expression (e.g. a literal character name): keep verbatim
      out += pattern.substr(i, close - i + 1);
      i = close + 1;
      continue;
    }
    if (half) {
      if (v % 2) throw BlockDataError("pattern " + pattern + " is not integral at n=" + std::to_string(n));
      v /= 2;
    }
    out += std::to_string(v);
    i = close + 1;
  }
  return out;
}

}  // namespace

SubregularRecord subregular_lookup(const std::string& type, int rank, const std::string& data_path) {
  std::string path = data_path.empty() ? default_data_dir() + "/subregular.json" : data_path;
  std::ifstream in(path);
  if (!in) throw BlockDataError("cannot open subregular dataset at " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw BlockDataError(std::string("subregular dataset parse error: ") + e.what());
  }
  if (j.value("schema", "") != "qgreen.subregular/1")
    throw BlockDataError("subregular dataset: bad schema");

  for (const auto& rec : j.at("records")) {
    if (rec.at("type").get<std::string>() != type) continue;
    int min_rank = rec.value("min_rank", 0);
    int fixed_rank = rec.value("rank", -1);
    std::string parity = rec.value("parity", "");
    if (fixed_rank >= 0 && fixed_rank != rank) continue;
    if (fixed_rank < 0) {
      if (rank < min_rank) continue;
      if (parity == "even" && rank % 2) continue;
      if (parity == "odd" && rank % 2 == 0) continue;
      if (rec.contains("max_rank") && rank > rec.at("max_rank").get<int>()) continue;
    }
    SubregularRecord out;
    out.type = type;
    out.rank = rank;
    out.class_label = instantiate(rec.at("class").get<std::string>(), rank);
    out.au = instantiate(rec.at("au").get<std::string>(), rank);
    for (const auto& js : rec.at("systems")) {
      SubregularSystem s;
      s.system = js.at("system").get<std::string>();
      s.levi = instantiate(js.at("levi").get<std::string>(), rank);
      s.wgl = instantiate(js.at("wgl").get<std::string>(), rank);
      s.phi = instantiate(js.at("phi").get<std::string>(), rank);
      s.degree = std::stoll(instantiate(js.at("degree").get<std::string>(), rank));
      s.standard = js.value("standard", false);
      s.cuspidal = js.value("cuspidal", false);
      out.systems.push_back(std::move(s));
    }
    return out;
  }
  throw BlockDataError("subregular dataset: no record for type " + type + " rank " +
                       std::to_string(rank));
}

}  // namespace qgreen
