#include "derlie/derivation.hpp"

namespace derlie {

void require_same_ctx(const VarContext& a, const VarContext& b) {
  if (a != b) throw MathError("mixed variable contexts");
}

Derivation::Derivation(VarContext ctx)
    : ctx_(std::move(ctx)),
      coeffs_(static_cast<size_t>(ctx_.size()), RationalFunction::zero(ctx_.size())) {}

Derivation::Derivation(VarContext ctx, std::vector<RationalFunction> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ctx_.size())
    throw MathError("derivation coefficient count does not match context");
}

Derivation Derivation::partial(const VarContext& ctx, int i) {
  Derivation d(ctx);
  d.coeffs_[static_cast<size_t>(i)] = RationalFunction::one(ctx.size());
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

RationalFunction Derivation::apply(const RationalFunction& r) const {
  RationalFunction out = RationalFunction::zero(nvars());
  for (int i = 0; i < nvars(); ++i) {
    if (coeffs_[static_cast<size_t>(i)].is_zero()) continue;
    out = out + coeffs_[static_cast<size_t>(i)] * r.partial(i);
  }
  return out;
}

Derivation Derivation::operator-() const {
  std::vector<RationalFunction> c;
  c.reserve(coeffs_.size());
  for (const auto& f : coeffs_) c.push_back(-f);
  return Derivation(ctx_, std::move(c));
}

Derivation Derivation::operator+(const Derivation& o) const {
  require_same_ctx(ctx_, o.ctx_);
  std::vector<RationalFunction> c;
  c.reserve(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] + o.coeffs_[i]);
  return Derivation(ctx_, std::move(c));
}

Derivation Derivation::operator-(const Derivation& o) const {
  require_same_ctx(ctx_, o.ctx_);
  std::vector<RationalFunction> c;
  c.reserve(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c.push_back(coeffs_[i] - o.coeffs_[i]);
  return Derivation(ctx_, std::move(c));
}

Derivation scale(const RationalFunction& r, const Derivation& d) {
  std::vector<RationalFunction> c;
  c.reserve(d.coeffs().size());
  for (const auto& f : d.coeffs()) c.push_back(r * f);
  return Derivation(d.ctx(), std::move(c));
}

Derivation scale(const Rat& c, const Derivation& d) {
  return scale(RationalFunction::constant(d.nvars(), c), d);
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
  require_same_ctx(d1.ctx(), d2.ctx());
  std::vector<RationalFunction> c;
  c.reserve(d1.coeffs().size());
  for (int i = 0; i < d1.nvars(); ++i)
    c.push_back(d1.apply(d2.coeff(i)) - d2.apply(d1.coeff(i)));
  return Derivation(d1.ctx(), std::move(c));
}

Derivation bracket_expanded(const RationalFunction& a, const Derivation& d1,
                            const RationalFunction& b, const Derivation& d2) {
  require_same_ctx(d1.ctx(), d2.ctx());
  Derivation inner = bracket(d1, d2);
  return scale(a * b, inner) + scale(a * d1.apply(b), d2) - scale(b * d2.apply(a), d1);
}

}  // namespace derlie
