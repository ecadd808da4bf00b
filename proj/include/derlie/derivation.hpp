#pragma once

#include "derlie/ratfunc.hpp"

namespace derlie {

// Derivation of K(x1..xn) written as sum_i f_i * d/dx_i with rational-function
// coefficients. Immutable value type.
class Derivation {
 public:
  explicit Derivation(VarContext ctx);                // zero derivation
  Derivation(VarContext ctx, std::vector<RationalFunction> coeffs);

  static Derivation partial(const VarContext& ctx, int i);   // d/dx_i, 0-based

  const VarContext& ctx() const { return ctx_; }
  const std::vector<RationalFunction>& coeffs() const { return coeffs_; }
  const RationalFunction& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  int nvars() const { return ctx_.size(); }
  bool is_zero() const;

  // Action on a rational function: sum_i f_i * dr/dx_i.
  RationalFunction apply(const RationalFunction& r) const;

  Derivation operator-() const;
  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;

  bool operator==(const Derivation& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Derivation& o) const { return !(*this == o); }

 private:
  VarContext ctx_;
  std::vector<RationalFunction> coeffs_;
};

// r * D, coefficientwise.
Derivation scale(const RationalFunction& r, const Derivation& d);
Derivation scale(const Rat& c, const Derivation& d);

// Lie bracket [d1, d2], computed coefficientwise from the coordinate action:
// coefficient i of the result is d1(d2_i) - d2(d1_i).
Derivation bracket(const Derivation& d1, const Derivation& d2);

// [a*d1, b*d2] expanded by the product rule:
//   ab*[d1,d2] + a*d1(b)*d2 - b*d2(a)*d1.
// Kept as an independent second route for cross-checking against bracket().
Derivation bracket_expanded(const RationalFunction& a, const Derivation& d1,
                            const RationalFunction& b, const Derivation& d2);

void require_same_ctx(const VarContext& a, const VarContext& b);

}  // namespace derlie
