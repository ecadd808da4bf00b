#pragma once

#include "derlie/polynomial.hpp"

namespace derlie {

// Element of the fraction field K(x1..xn), kept canonical: gcd(num, den) = 1,
// den monic in graded lex, zero represented as 0/1. Immutable value type;
// safe to share across threads.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);   // normalizes
  explicit RationalFunction(Polynomial num);          // num / 1

  static RationalFunction zero(int nvars);
  static RationalFunction one(int nvars);
  static RationalFunction constant(int nvars, const Rat& c);
  static RationalFunction variable(int nvars, int i);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;   // throws on o = 0
  RationalFunction pow(uint32_t k) const;

  // Partial derivative by the quotient rule, normalized.
  RationalFunction partial(int v) const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

 private:
  Polynomial num_, den_;
};

}  // namespace derlie
