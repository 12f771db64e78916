// JSON encodings shared by the block file format, the oracle cache and the
// CLI reports.  Polynomials are sparse [exponent, coefficient] lists; exact
// rationals print as "p/q" strings; cyclotomics as coefficient vectors with
// their conductor.

#pragma once

#include <json.hpp>

#include "qgreen/laurent.hpp"
#include "qgreen/matrix.hpp"
#include "qgreen/ratfun.hpp"

namespace qgreen {

using Json = nlohmann::json;

Json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const Json& j);

Json poly_to_json(const LaurentPolynomial& p);
LaurentPolynomial poly_from_json(const Json& j);

Json ratfun_to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);

template <class T, class Fn>
Json matrix_to_json(const Matrix<T>& m, Fn&& enc) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(enc(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fixed-width text table used by the CLI's "table" format.
std::string render_text_table(const std::vector<std::vector<std::string>>& cells);

}  // namespace qgreen
