#include "tensordeg/poly.hpp"

#include <algorithm>

#include <boost/integer/common_factor.hpp>

namespace tensordeg {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = c;
  return UniPoly(std::move(cs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && tensordeg::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<int>(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return (Rational(1) / leading()) * *this;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  Integer l = 1;
  for (const auto& c : coeffs_) l = boost::multiprecision::lcm(l, denominator(c));
  Integer g = 0;
  for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, numerator(c) * (l / denominator(c)));
  return Rational(l, g) * *this;
}

UniPoly UniPoly::operator-() const { return Rational(-1) * *this; }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (tensordeg::is_zero(c)) continue;
    if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = abs(c);
    if (i == 0 || mag != 1) out += tensordeg::to_string(mag);
    if (i > 0 && mag != 1) out += "*";
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  const Rational& lead = b.leading();
  for (int i = da; i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd_poly(p, p.derivative())).first;
}

int sign_at(const UniPoly& p, const Endpoint& e) {
  if (p.is_zero()) return 0;
  switch (e.kind) {
    case Endpoint::Kind::finite: return sign(p(e.value));
    case Endpoint::Kind::pos_infinity: return sign(p.leading());
    case Endpoint::Kind::neg_infinity:
      return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
  }
  return 0;
}

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) return;
  polys.push_back(p.primitive());
  UniPoly d = p.derivative();
  if (d.is_zero()) return;
  polys.push_back(d.primitive());
  while (true) {
    const auto& a = polys[polys.size() - 2];
    const auto& b = polys.back();
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    polys.push_back((-r).primitive());
  }
}

int SturmChain::sign_variations(const Endpoint& e) const {
  int variations = 0;
  int last = 0;
  for (const auto& q : polys) {
    const int s = sign_at(q, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

bool precedes(const Endpoint& lo, const Endpoint& hi) {
  using K = Endpoint::Kind;
  if (lo.kind == K::pos_infinity || hi.kind == K::neg_infinity) return false;
  if (lo.kind == K::neg_infinity || hi.kind == K::pos_infinity) return true;
  return lo.value < hi.value;
}

}  // namespace

Index sturm_root_count(const UniPoly& p, const Endpoint& lo, const Endpoint& hi) {
  if (p.is_zero()) throw InvalidInput("sturm_root_count: zero polynomial");
  if (!precedes(lo, hi)) throw InvalidInput("sturm_root_count: empty interval");
  const SturmChain chain(squarefree_part(p));
  return chain.sign_variations(lo) - chain.sign_variations(hi);
}

}  // namespace tensordeg
