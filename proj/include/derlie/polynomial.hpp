#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace derlie {

// Exact rational scalar. Always kept canonical (gmp canonicalize).
using Rat = mpq_class;

// Domain-level failures: division by zero in the function field, spans that
// are not subalgebras, failed ideal checks, mismatched variable contexts.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// The ambient polynomial ring K[x1..xn]: variable count and print names.
// All values taking part in one computation share one context. Immutable.
class VarContext {
 public:
  explicit VarContext(int n);                        // default names x1..xn
  explicit VarContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const VarContext& o) const { return names_ == o.names_; }
  bool operator!=(const VarContext& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
};

// Exponent vector of one monomial; length equals the variable count.
using Exponents = std::vector<uint32_t>;

uint32_t total_degree(const Exponents& e);

// Graded lexicographic order with x1 > x2 > ... > xn.
bool grlex_less(const Exponents& a, const Exponents& b);

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grlex_less(b, a);
  }
};

// Sparse multivariate polynomial over the rationals. Terms are stored
// leading-first (graded lex descending); zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, Exponents e, const Rat& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Leading data w.r.t. graded lex; polynomial must be nonzero.
  const Exponents& leading_exponents() const;
  const Rat& leading_coeff() const;
  uint32_t degree() const;        // total degree; 0 for the zero polynomial
  uint32_t degree_in(int v) const;
  Rat coeff(const Exponents& e) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  Polynomial pow(uint32_t k) const;

  Polynomial derivative(int v) const;

  // Scales so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  void add_term(const Exponents& e, const Rat& c);   // accumulates, drops zeros

 private:
  int nvars_;
  TermMap terms_;
};

// Quotient of an exact division a = q*b; throws MathError if b is zero or the
// division is not exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// Monic gcd via recursive content/primitive-part reduction; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Monic lcm; both arguments must be nonzero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace derlie
