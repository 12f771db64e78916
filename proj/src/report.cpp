#include "qgreen/report.hpp"

#include <sstream>

namespace qgreen {

Json scalar_to_json(const ExactScalar& s) {
  if (s.is_rational()) return rational_str(s.rat());
  Json j;
  j["conductor"] = s.cyc().conductor();
  Json coeffs = Json::array();
  for (const auto& c : s.cyc().coeffs()) coeffs.push_back(rational_str(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

ExactScalar scalar_from_json(const Json& j) {
  if (j.is_string()) return ExactScalar(rational_parse(j.get<std::string>()));
  if (j.is_number_integer()) return ExactScalar(static_cast<long>(j.get<long long>()));
  if (j.is_object()) {
    int n = j.at("conductor").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_parse(c.get<std::string>()));
    return ExactScalar(Cyclotomic(n, std::move(coeffs)));
  }
  throw std::runtime_error("bad scalar encoding: " + j.dump());
}

Json poly_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, scalar_to_json(c)}));
  return terms;
}

LaurentPolynomial poly_from_json(const Json& j) {
  LaurentPolynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::runtime_error("bad polynomial term: " + t.dump());
    p += LaurentPolynomial::term(t[0].get<int>(), scalar_from_json(t[1]));
  }
  return p;
}

Json ratfun_to_json(const RationalFunction& f) {
  if (f.is_polynomial()) return poly_to_json(f.num());
  Json j;
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

RationalFunction ratfun_from_json(const Json& j) {
  if (j.is_array()) return RationalFunction(poly_from_json(j));
  return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

std::string render_text_table(const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells)
    for (size_t j = 0; j < row.size(); ++j) {
      if (width.size() <= j) width.resize(j + 1, 0);
      width[j] = std::max(width[j], row[j].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t j = 0; j < row.size(); ++j) {
      os << row[j];
      if (j + 1 < row.size()) os << std::string(width[j] - row[j].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace qgreen
