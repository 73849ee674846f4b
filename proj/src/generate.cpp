#include "lbp/generate.hpp"

#include "lbp/cfrac.hpp"
#include "lbp/errors.hpp"
#include "lbp/hankel_toeplitz.hpp"
#include "lbp/lbp.hpp"
#include "lbp/orthopoly.hpp"
#include "lbp/rational_function.hpp"
#include "lbp/riordan.hpp"

#include <json.hpp>

#include <sstream>
#include <variant>

namespace lbp {

const std::vector<std::string>& generate_kinds() {
  static const std::vector<std::string> kinds = {"lbp-coeffs", "moments",      "production", "hankel",
                                                 "toeplitz",   "cfrac-expand", "ortho-array"};
  return kinds;
}

namespace {

using Row = std::vector<std::string>;
using Table = std::variant<Row, std::vector<Row>>;

constexpr std::size_t kMaxOrder = 200;

bool is_symbolic(const std::string& v) { return v == "sym"; }

template <class S>
std::vector<S> parse_param(const std::string& text, char name) {
  if (text.empty()) throw UsageError(std::string("--") + name + " needs a value");
  std::vector<S> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (is_symbolic(item)) {
      if (text != item) throw UsageError(std::string("--") + name + ": 'sym' cannot appear inside a list");
      if constexpr (std::is_same_v<S, RationalFunction>) {
        out.push_back(name == 'b' ? RationalFunction::b() : RationalFunction::c());
      } else {
        throw UsageError("internal: symbolic parameter in a rational request");
      }
    } else {
      out.emplace_back(Rational::parse(item));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class S>
Row strings(const std::vector<S>& v) {
  Row r;
  for (const auto& x : v) r.push_back(x.to_string());
  return r;
}

template <class S>
std::vector<Row> strings(const LowerTriangularMatrix<S>& m) {
  std::vector<Row> rows;
  for (std::size_t n = 0; n < m.dimension(); ++n) rows.push_back(strings(m.row(n)));
  return rows;
}

template <class S>
std::vector<Row> strings(const Matrix<S>& m) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Row r;
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class S>
const S& constant_param(const std::vector<S>& v, const std::string& kind) {
  if (v.size() != 1) throw UsageError(kind + " needs constant b and c (periodic lists are supported by lbp-coeffs, moments, production, hankel)");
  return v.front();
}

template <class S>
Table build(const GenerateRequest& req) {
  const auto bs = parse_param<S>(req.b, 'b');
  const auto cs = parse_param<S>(req.c, 'c');
  const LbpFamily<S> fam(bs, cs);
  const std::size_t N = req.order;
  const std::string& kind = req.kind;

  if (kind == "lbp-coeffs") {
    std::vector<Row> rows;
    for (const auto& p : lbp_rows_by_recurrence(fam, N)) {
      Row r;
      for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k) r.push_back(p.coefficient(k).to_string());
      rows.push_back(std::move(r));
    }
    return rows;
  }
  if (kind == "moments") return strings(moments(fam, parse_moment_route(req.route), N).values);
  if (kind == "production") {
    if (req.of == "moment") return strings(production_matrix(lbp_moment_matrix(fam, N + 1)));
    if (req.of == "coeff") return strings(production_matrix(lbp_coefficient_matrix(fam, N + 1)));
    throw UsageError("--of must be moment or coeff");
  }
  if (kind == "hankel") return strings(hankel_transform(moments(fam, parse_moment_route(req.route), N), N / 2));
  if (kind == "toeplitz") {
    const S& c = constant_param(cs, kind);
    constant_param(bs, kind);
    const std::size_t m = N / 2;
    if (m < 1) throw UsageError("toeplitz needs --order >= 2");
    const auto mu = moments(fam, MomentRoute::kCatalanSum, std::max(N, m + 1));
    const auto td = toeplitz_dets(extend_moments(mu, c, m), m);
    return std::vector<Row>{strings(td.t), strings(td.t_prime)};
  }
  if (kind == "cfrac-expand") {
    const S& b = constant_param(bs, kind);
    const S& c = constant_param(cs, kind);
    if (req.shape == "s") return strings(cf_expand(lbp_sfraction(b, c, N), N).coefficients());
    if (req.shape == "j") return strings(cf_expand(lbp_jfraction(b, c, N), N).coefficients());
    if (req.shape == "t") return strings(cf_expand(lbp_tfraction(b, c, N), N).coefficients());
    throw UsageError("--shape must be s, j or t");
  }
  if (kind == "ortho-array") {
    const S& b = constant_param(bs, kind);
    const S& c = constant_param(cs, kind);
    return strings(ortho_array(parse_ortho_kind(req.ortho), b, c, N).materialize());
  }
  std::string known;
  for (const auto& k : generate_kinds()) known += (known.empty() ? "" : ", ") + k;
  throw UsageError("unknown kind '" + kind + "' (expected one of " + known + ")");
}

std::string join(const Row& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + r[i];
  return s;
}

}  // namespace

std::string generate(const GenerateRequest& req) {
  if (req.format != "csv" && req.format != "json") throw UsageError("--format must be csv or json");
  if (req.order > kMaxOrder) throw UsageError("--order is limited to " + std::to_string(kMaxOrder));
  const bool symbolic = is_symbolic(req.b) || is_symbolic(req.c);
  const Table data = symbolic ? build<RationalFunction>(req) : build<Rational>(req);

  if (req.format == "csv") {
    std::ostringstream os;
    if (const auto* row = std::get_if<Row>(&data)) {
      os << join(*row) << '\n';
    } else {
      for (const auto& r : std::get<std::vector<Row>>(data)) os << join(r) << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json j;
  j["kind"] = req.kind;
  nlohmann::ordered_json params;
  params["b"] = req.b;
  params["c"] = req.c;
  if (req.kind == "moments" || req.kind == "hankel") params["route"] = req.route;
  if (req.kind == "production") params["of"] = req.of;
  if (req.kind == "cfrac-expand") params["shape"] = req.shape;
  if (req.kind == "ortho-array") params["ortho"] = req.ortho;
  j["params"] = params;
  j["order"] = req.order;
  if (const auto* row = std::get_if<Row>(&data)) {
    j["data"] = *row;
  } else {
    j["data"] = std::get<std::vector<Row>>(data);
  }
  return j.dump(2) + "\n";
}

}  // namespace lbp
