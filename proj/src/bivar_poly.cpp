#include "lbp/bivar_poly.hpp"

#include "lbp/errors.hpp"

#include <algorithm>
#include <vector>

namespace lbp {

BivarPoly::BivarPoly(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Exponents{0, 0}, r);
}

BivarPoly BivarPoly::monomial(const Rational& coeff, std::uint32_t b_exp, std::uint32_t c_exp) {
  BivarPoly p;
  p.add_term({b_exp, c_exp}, coeff);
  return p;
}

bool BivarPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational BivarPoly::coefficient(std::uint32_t b_exp, std::uint32_t c_exp) const {
  auto it = terms_.find({b_exp, c_exp});
  return it == terms_.end() ? Rational() : it->second;
}

std::uint32_t BivarPoly::degree_b() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.first;
}

std::uint32_t BivarPoly::degree_c() const {
  std::uint32_t d = 0;
  for (const auto& [e, _] : terms_) d = std::max(d, e.second);
  return d;
}

std::uint32_t BivarPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, _] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::pair<BivarPoly::Exponents, Rational> BivarPoly::leading_term() const {
  if (terms_.empty()) throw MathError("leading term of zero polynomial");
  return *terms_.rbegin();
}

Rational BivarPoly::eval(const Rational& b, const Rational& c) const {
  Rational sum;
  for (const auto& [e, k] : terms_) sum += k * b.pow(e.first) * c.pow(e.second);
  return sum;
}

void BivarPoly::add_term(const Exponents& e, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, k] : o.terms_) add_term(e, k);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, k] : o.terms_) add_term(e, -k);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, v] : terms_) v *= k;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& o) {
  BivarPoly r;
  for (const auto& [ea, ka] : a.terms_)
    for (const auto& [eo, ko] : o.terms_)
      r.add_term({ea.first + eo.first, ea.second + eo.second}, ka * ko);
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r = *this;
  for (auto& [_, v] : r.terms_) v = -v;
  return r;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    const auto dx = x.first.first + x.first.second;
    const auto dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, k] : sorted) {
    std::string mono;
    auto append = [&mono](const char* var, std::uint32_t exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += '*';
      mono += var;
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    append("b", e.first);
    append("c", e.second);
    const Rational mag = k.abs();
    if (k.sign() < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::optional<BivarPoly> divide_exact(const BivarPoly& dividend, const BivarPoly& divisor) {
  if (divisor.is_zero()) throw MathError("polynomial division by zero");
  const auto [dexp, dcoef] = divisor.leading_term();
  BivarPoly rem = dividend;
  BivarPoly quot;
  while (!rem.is_zero()) {
    const auto [rexp, rcoef] = rem.leading_term();
    if (rexp.first < dexp.first || rexp.second < dexp.second) return std::nullopt;
    const BivarPoly q =
        BivarPoly::monomial(rcoef / dcoef, rexp.first - dexp.first, rexp.second - dexp.second);
    quot += q;
    rem -= q * divisor;
  }
  return quot;
}

namespace {

// Univariate polynomials in b over Q, ascending coefficients, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly usub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Polynomial long division over Q; returns {quotient, remainder}.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& d) {
  if (d.empty()) throw MathError("division by zero polynomial");
  if (a.size() < d.size()) return {{}, a};
  UPoly q(a.size() - d.size() + 1);
  const Rational lead_inv = d.back().inverse();
  while (!a.empty() && a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    const Rational k = a.back() * lead_inv;
    q[shift] = k;
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= k * d[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly p) {
  if (p.empty()) return p;
  const Rational inv = p.back().inverse();
  for (auto& x : p) x *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

// Polynomial in c whose coefficients are UPoly in b.
using RPoly = std::vector<UPoly>;

void trim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

RPoly to_recursive(const BivarPoly& p) {
  RPoly r(p.degree_c() + (p.is_zero() ? 0 : 1));
  for (const auto& [e, k] : p.terms()) {
    auto& coef = r[e.second];
    if (coef.size() <= e.first) coef.resize(e.first + 1);
    coef[e.first] = k;
  }
  return r;
}

BivarPoly from_recursive(const RPoly& r) {
  BivarPoly p;
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t i = 0; i < r[j].size(); ++i)
      p += BivarPoly::monomial(r[j][i], static_cast<std::uint32_t>(i),
                               static_cast<std::uint32_t>(j));
  return p;
}

UPoly content(const RPoly& p) {
  UPoly g;
  for (const auto& coef : p) {
    if (coef.empty()) continue;
    g = g.empty() ? umonic(coef) : ugcd(g, coef);
    if (g.size() == 1) break;
  }
  return g;
}

// Divides out the content over Q[b] and scales so the leading coefficient's
// top term is 1.
RPoly primitive_part(RPoly p) {
  if (p.empty()) return p;
  const UPoly g = content(p);
  for (auto& coef : p) {
    if (coef.empty()) continue;
    if (g.size() > 1) coef = udivmod(coef, g).first;
  }
  const Rational lead = p.back().back().inverse();
  for (auto& coef : p)
    for (auto& x : coef) x *= lead;
  return p;
}

// Pseudo-remainder of a by d as polynomials in c over Q[b].
RPoly prem(RPoly a, const RPoly& d) {
  const UPoly& lead = d.back();
  while (!a.empty() && a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    const UPoly la = a.back();
    for (auto& coef : a) coef = umul(coef, lead);
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = usub(a[shift + i], umul(la, d[i]));
    trim(a);
  }
  return a;
}

BivarPoly normalized(const BivarPoly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_term().second.inverse();
}

}  // namespace

BivarPoly gcd(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return BivarPoly(1);
  RPoly ra = to_recursive(a);
  RPoly rb = to_recursive(b);
  const UPoly cont = ugcd(content(ra), content(rb));
  ra = primitive_part(std::move(ra));
  rb = primitive_part(std::move(rb));
  if (ra.size() < rb.size()) std::swap(ra, rb);
  while (!rb.empty()) {
    RPoly r = prem(ra, rb);
    ra = std::move(rb);
    rb = primitive_part(std::move(r));
  }
  RPoly g = primitive_part(std::move(ra));
  for (auto& coef : g) coef = umul(coef, cont);
  return normalized(from_recursive(g));
}

}  // namespace lbp
