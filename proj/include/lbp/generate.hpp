#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lbp {

struct GenerateRequest {
  std::string kind;
  std::string b = "sym";  // rational ("3/2"), "sym", or a periodic list ("1,2")
  std::string c = "sym";
  std::size_t order = 12;
  std::string format = "csv";  // csv | json
  std::string route = "matrix_inverse";  // moments, hankel
  std::string shape = "t";               // cfrac-expand: s | j | t
  std::string of = "moment";             // production: moment | coeff
  std::string ortho = "Q";               // ortho-array: Q | Q_tilde | Q_hat
};

const std::vector<std::string>& generate_kinds();

// Tables are serialized exactly: rationals as "p/q", symbolic entries as
// canonical polynomial strings in b and c. csv writes one line per row (a
// single line for sequences); json writes {kind, params, order, data} with
// string entries and nested arrays for two-dimensional output.
//
// Throws UsageError for malformed requests and MathError when the parameters
// are mathematically inadmissible (b or c zero, inapplicable moment route).
std::string generate(const GenerateRequest& req);

}  // namespace lbp
