#include "derlie/ratfunc.hpp"

namespace derlie {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("division by zero in R");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.nvars(), 1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  // Make the denominator monic, folding its leading coefficient into num.
  const Rat& lc = den_.leading_coeff();
  if (lc != 1) {
    Rat inv = Rat(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction RationalFunction::zero(int nvars) {
  return RationalFunction(Polynomial(nvars));
}

RationalFunction RationalFunction::one(int nvars) {
  return RationalFunction(Polynomial::constant(nvars, 1));
}

RationalFunction RationalFunction::constant(int nvars, const Rat& c) {
  return RationalFunction(Polynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(int nvars, int i) {
  return RationalFunction(Polynomial::variable(nvars, i));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw MathError("division by zero in R");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(uint32_t k) const {
  RationalFunction r = one(nvars());
  for (uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

RationalFunction RationalFunction::partial(int v) const {
  return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                          den_ * den_);
}

}  // namespace derlie
