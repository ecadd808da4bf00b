#include "derlie/polynomial.hpp"

#include <algorithm>

namespace derlie {

VarContext::VarContext(int n) {
  if (n < 1) throw MathError("variable context needs at least one variable");
  names_.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names_.push_back("x" + std::to_string(i));
}

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw MathError("variable context needs at least one variable");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw MathError("empty variable name");
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw MathError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<int> VarContext::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

uint32_t total_degree(const Exponents& e) {
  uint32_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
  uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: lexicographic with x1 heaviest. a < b iff at the first
  // differing position a has the smaller exponent.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

bool Polynomial::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

const Exponents& Polynomial::leading_exponents() const {
  return terms_.begin()->first;
}

const Rat& Polynomial::leading_coeff() const {
  return terms_.begin()->second;
}

uint32_t Polynomial::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

uint32_t Polynomial::degree_in(int v) const {
  uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(v)]);
  return d;
}

Rat Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  Exponents e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::pow(uint32_t k) const {
  Polynomial r = constant(nvars_, 1);
  for (uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial r(nvars_);
  const auto vi = static_cast<size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[vi] == 0) continue;
    Exponents de = e;
    de[vi] -= 1;
    r.add_term(de, c * Rat(e[vi]));
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coeff());
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  Polynomial q(a.nvars());
  Polynomial r = a;
  const Exponents& lb = b.leading_exponents();
  const Rat& cb = b.leading_coeff();
  Exponents e(static_cast<size_t>(a.nvars()));
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    for (size_t i = 0; i < e.size(); ++i) {
      if (lr[i] < lb[i]) throw MathError("inexact polynomial division");
      e[i] = lr[i] - lb[i];
    }
    Rat c = r.leading_coeff() / cb;
    Polynomial t = Polynomial::monomial(a.nvars(), e, c);
    q.add_term(e, c);
    r = r - t * b;
  }
  return q;
}

namespace {

// Coefficients of powers of variable v: p = sum_k coeffs[k] * v^k, each
// coefficient a polynomial with v-exponent zero.
std::vector<Polynomial> coeffs_in_var(const Polynomial& p, int v) {
  std::vector<Polynomial> out(p.degree_in(v) + 1, Polynomial(p.nvars()));
  const auto vi = static_cast<size_t>(v);
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    uint32_t k = rest[vi];
    rest[vi] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

Polynomial content_in_var(const Polynomial& p, int v) {
  Polynomial c(p.nvars());
  for (const auto& part : coeffs_in_var(p, v)) {
    if (!part.is_zero()) c = gcd(c, part);
  }
  return c;
}

// Pseudo-remainder of f by g in variable v; differs from the textbook prem by
// a power of lc_v(g), which the primitive PRS discards anyway.
Polynomial prem_in_var(const Polynomial& f, const Polynomial& g, int v) {
  Polynomial r = f;
  uint32_t dg = g.degree_in(v);
  auto gc = coeffs_in_var(g, v);
  const Polynomial& lg = gc[dg];
  while (!r.is_zero()) {
    uint32_t dr = r.degree_in(v);
    if (dr < dg) break;
    auto rc = coeffs_in_var(r, v);
    const Polynomial& lr = rc[dr];
    Exponents shift(static_cast<size_t>(f.nvars()), 0);
    shift[static_cast<size_t>(v)] = dr - dg;
    r = r * lg - lr * Polynomial::monomial(f.nvars(), shift, 1) * g;
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.nvars(), 1);

  int v = -1;
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
      v = i;
      break;
    }
  }

  uint32_t da = a.degree_in(v), db = b.degree_in(v);
  if (da == 0) return gcd(a, content_in_var(b, v));
  if (db == 0) return gcd(content_in_var(a, v), b);

  Polynomial ca = content_in_var(a, v);
  Polynomial cb = content_in_var(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial f = exact_div(a, ca);
  Polynomial g = exact_div(b, cb);
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);

  // Primitive PRS on the primitive parts.
  while (true) {
    Polynomial r = prem_in_var(f, g, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c.monic();
    f = g;
    g = exact_div(r, content_in_var(r, v));
  }
  return (c * g).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw MathError("lcm of zero polynomial");
  return exact_div(a * b, gcd(a, b)).monic();
}

}  // namespace derlie
