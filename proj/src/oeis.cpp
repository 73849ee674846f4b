#include "lbp/oeis.hpp"

#include "lbp/cfrac.hpp"
#include "lbp/errors.hpp"
#include "lbp/lbp.hpp"
#include "lbp/rational_function.hpp"

#include <fstream>
#include <sstream>

namespace lbp {

OeisFixture parse_fixture(const std::string& id, std::istream& in) {
  OeisFixture fx{id, 0, {}};
  std::string line;
  long line_no = 0;
  long expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long index = 0;
    std::string value;
    std::string extra;
    if (!(ls >> index >> value) || (ls >> extra))
      throw UsageError(id + " fixture line " + std::to_string(line_no) + ": expected '<index> <integer>'");
    if (fx.terms.empty()) {
      fx.offset = index;
    } else if (index != expected) {
      throw UsageError(id + " fixture line " + std::to_string(line_no) + ": index " + std::to_string(index) + " out of sequence");
    }
    BigInt v;
    if (v.set_str(value, 10) != 0) throw UsageError(id + " fixture line " + std::to_string(line_no) + ": bad integer '" + value + "'");
    fx.terms.push_back(v);
    expected = index + 1;
  }
  if (fx.terms.empty()) throw UsageError(id + " fixture has no terms");
  return fx;
}

OeisFixture load_fixture(const std::filesystem::path& dir, const std::string& id) {
  const auto path = dir / (id + ".txt");
  std::ifstream in(path);
  if (!in) throw UsageError("missing OEIS fixture " + path.string());
  return parse_fixture(id, in);
}

namespace {

BigInt to_integer(const Rational& r) {
  if (!r.is_integer()) throw MathError("generator produced a non-integer term " + r.to_string());
  return r.numerator();
}

std::vector<BigInt> integers(const std::vector<Rational>& v, std::size_t from, std::size_t count) {
  std::vector<BigInt> out;
  for (std::size_t i = from; i < v.size() && out.size() < count; ++i) out.push_back(to_integer(v[i]));
  return out;
}

std::vector<BigInt> schroeder_mu_tilde(std::size_t count) {
  const std::size_t N = count - 1;
  return integers(cf_expand(lbp_tfraction(Rational(1), Rational(1), N), N).coefficients(), 0, count);
}

std::vector<BigInt> catalan_sfraction(std::size_t count) {
  const std::size_t N = count - 1;
  return integers(cf_expand(make_sfraction<Rational>(N, [](std::size_t) { return Rational(1); }), N).coefficients(), 0, count);
}

// Row-major triangle of the coefficients in c of mu~_n at b = 1.
std::vector<BigInt> peak_triangle(std::size_t count) {
  std::size_t rows = 0;
  while (rows * (rows + 1) / 2 < count) ++rows;
  const auto mt = tfraction_closed_form(RationalFunction(1), RationalFunction::c(), rows);
  std::vector<BigInt> out;
  for (std::size_t n = 0; n < rows; ++n) {
    const auto& f = mt[n];
    if (!f.is_polynomial()) throw MathError("mu~ is not a polynomial in c");
    const Rational scale = f.denominator().coefficient(0, 0).inverse();
    for (std::size_t k = 0; k <= n && out.size() < count; ++k)
      out.push_back(to_integer(f.numerator().coefficient(0, static_cast<std::uint32_t>(k)) * scale));
  }
  return out;
}

std::vector<BigInt> reversion_103210(std::size_t count) {
  const std::size_t N = count;
  const auto f = TruncatedSeries<Rational>({Rational(0), Rational(1), Rational(-2)}, N) /
                 TruncatedSeries<Rational>({Rational(1), Rational(1)}, N);
  return integers(reversion(f).coefficients(), 1, count);
}

std::vector<BigInt> periodic_shifted_moments(std::size_t count) {
  const LbpFamily<Rational> fam({Rational(1), Rational(2)}, {Rational(1)});
  return integers(moments(fam, MomentRoute::kMatrixInverse, count).values, 1, count);
}

}  // namespace

const std::vector<OeisGenerator>& oeis_generators() {
  static const std::vector<OeisGenerator> gens = {
      {"schroeder", "A006318", "mu~_n at b = c = 1 from the T-fraction", 0, schroeder_mu_tilde},
      {"catalan", "A000108", "S-fraction with all coefficients 1 (the c = 0, b = 1 degeneration)", 0, catalan_sfraction},
      {"peak-triangle", "A060693", "coefficients in c of mu~_n at b = 1, read by rows", 0, peak_triangle},
      {"reversion", "A103210", "reversion of t(1-2t)/(1+t) from t^1", 1, reversion_103210},
      {"periodic-moments", "A155867", "mu_{n+1} for b_n = 1,2,1,2,..., c = 1", 0, periodic_shifted_moments},
  };
  return gens;
}

ScenarioReport oeis_check(const std::filesystem::path& fixtures_dir, const std::string& id, const std::string& generator) {
  const OeisGenerator* gen = nullptr;
  for (const auto& g : oeis_generators())
    if (generator.empty() ? g.sequence_id == id : g.name == generator) gen = &g;
  if (gen == nullptr)
    throw UsageError(generator.empty() ? "no generator registered for " + id : "unknown generator '" + generator + "'");
  const auto fx = load_fixture(fixtures_dir, id);
  if (fx.offset != gen->offset)
    throw UsageError(id + " fixture offset " + std::to_string(fx.offset) + " differs from generator '" + gen->name + "' offset " +
                     std::to_string(gen->offset));

  const auto got = gen->terms(fx.terms.size());
  const std::size_t overlap = std::min(got.size(), fx.terms.size());
  Check chk{"generator '" + gen->name + "' (" + gen->description + ") vs " + id, true, -1, {}};
  for (std::size_t i = 0; i < overlap; ++i) {
    if (got[i] != fx.terms[i]) {
      chk.passed = false;
      chk.first_mismatch = fx.offset + static_cast<long>(i);
      chk.detail = "got " + got[i].get_str() + ", fixture has " + fx.terms[i].get_str();
      break;
    }
  }
  if (chk.passed) chk.detail = "overlap " + std::to_string(overlap) + " terms";
  Check len{"overlap length >= 9", overlap >= 9, overlap >= 9 ? -1 : static_cast<long>(overlap), "overlap " + std::to_string(overlap)};
  return ScenarioReport{"oeis " + id, {chk, len}};
}

}  // namespace lbp
