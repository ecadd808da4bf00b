#include "derlie/span.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace derlie {

namespace {

// Fixed monomial-coordinate enumeration for a set of derivations: for each
// coordinate j, the monic lcm Q_j of all denominators seen there and the
// grlex-descending list of monomials of Q_j-cleared numerators. Both depend
// only on the K-span of the input set, so reduced echelon form over these
// coordinates is canonical for the subspace.
struct Coordinatization {
  int nvars = 0;
  std::vector<Polynomial> den;                          // per coordinate
  std::vector<std::vector<Exponents>> axes;             // per coordinate
  std::vector<std::map<Exponents, int, GrlexGreater>> index;
  std::vector<int> offset;                              // column offsets, size nvars+1

  int columns() const { return offset.back(); }
};

Coordinatization coordinatize(const VarContext& ctx,
                              const std::vector<const Derivation*>& vs) {
  const int n = ctx.size();
  Coordinatization co;
  co.nvars = n;
  co.den.assign(static_cast<size_t>(n), Polynomial::constant(n, 1));
  co.axes.resize(static_cast<size_t>(n));
  co.index.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& q = co.den[static_cast<size_t>(j)];
    for (const Derivation* v : vs) {
      const Polynomial& d = v->coeff(j).den();
      if (!d.is_one()) q = lcm(q, d);
    }
    std::set<Exponents, GrlexGreater> monos;
    for (const Derivation* v : vs) {
      const RationalFunction& f = v->coeff(j);
      if (f.is_zero()) continue;
      Polynomial p = f.num() * exact_div(q, f.den());
      for (const auto& [e, c] : p.terms()) monos.insert(e);
    }
    auto& ax = co.axes[static_cast<size_t>(j)];
    ax.assign(monos.begin(), monos.end());
    for (size_t k = 0; k < ax.size(); ++k)
      co.index[static_cast<size_t>(j)].emplace(ax[k], static_cast<int>(k));
  }
  co.offset.assign(static_cast<size_t>(n) + 1, 0);
  for (int j = 0; j < n; ++j)
    co.offset[static_cast<size_t>(j) + 1] =
        co.offset[static_cast<size_t>(j)] + static_cast<int>(co.axes[static_cast<size_t>(j)].size());
  return co;
}

QVec to_row(const Coordinatization& co, const Derivation& v) {
  QVec row(static_cast<size_t>(co.columns()), 0);
  for (int j = 0; j < co.nvars; ++j) {
    const RationalFunction& f = v.coeff(j);
    if (f.is_zero()) continue;
    Polynomial p = f.num() * exact_div(co.den[static_cast<size_t>(j)], f.den());
    for (const auto& [e, c] : p.terms()) {
      auto it = co.index[static_cast<size_t>(j)].find(e);
      if (it == co.index[static_cast<size_t>(j)].end())
        throw MathError("derivation outside the coordinatized space");
      row[static_cast<size_t>(co.offset[static_cast<size_t>(j)] + it->second)] = c;
    }
  }
  return row;
}

Derivation from_row(const VarContext& ctx, const Coordinatization& co, const QVec& row) {
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(static_cast<size_t>(co.nvars));
  for (int j = 0; j < co.nvars; ++j) {
    Polynomial p(co.nvars);
    const auto& ax = co.axes[static_cast<size_t>(j)];
    for (size_t k = 0; k < ax.size(); ++k) {
      const Rat& c = row[static_cast<size_t>(co.offset[static_cast<size_t>(j)]) + k];
      if (c != 0) p.add_term(ax[k], c);
    }
    coeffs.emplace_back(std::move(p), co.den[static_cast<size_t>(j)]);
  }
  return Derivation(ctx, std::move(coeffs));
}

std::vector<const Derivation*> nonzero_ptrs(const VarContext& ctx,
                                            const std::vector<Derivation>& vectors) {
  std::vector<const Derivation*> vs;
  for (const auto& v : vectors) {
    require_same_ctx(ctx, v.ctx());
    if (!v.is_zero()) vs.push_back(&v);
  }
  return vs;
}

}  // namespace

SpanBasis k_reduce(const VarContext& ctx, const std::vector<Derivation>& vectors) {
  auto vs = nonzero_ptrs(ctx, vectors);
  if (vs.empty()) return SpanBasis(ctx);
  Coordinatization co = coordinatize(ctx, vs);
  QMatrix m;
  m.reserve(vs.size());
  for (const Derivation* v : vs) m.push_back(to_row(co, *v));
  int rank = rref(m);
  std::vector<Derivation> basis;
  basis.reserve(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) basis.push_back(from_row(ctx, co, m[static_cast<size_t>(i)]));
  return SpanBasis(ctx, std::move(basis));
}

std::optional<QVec> express_in_basis(const SpanBasis& span, const Derivation& x) {
  require_same_ctx(span.ctx, x.ctx());
  if (x.is_zero()) return QVec(static_cast<size_t>(span.dim()), 0);
  if (span.dim() == 0) return std::nullopt;

  std::vector<const Derivation*> vs;
  for (const auto& b : span.basis) vs.push_back(&b);
  vs.push_back(&x);
  Coordinatization co = coordinatize(span.ctx, vs);

  // Columns of the system are the basis rows; solve A^T c = x_row.
  const int cols = co.columns();
  QMatrix sys(static_cast<size_t>(cols), QVec(static_cast<size_t>(span.dim()), 0));
  for (int k = 0; k < span.dim(); ++k) {
    QVec row = to_row(co, span.basis[static_cast<size_t>(k)]);
    for (int j = 0; j < cols; ++j) sys[static_cast<size_t>(j)][static_cast<size_t>(k)] = row[static_cast<size_t>(j)];
  }
  return solve(sys, to_row(co, x));
}

bool span_contains(const SpanBasis& span, const Derivation& x) {
  return express_in_basis(span, x).has_value();
}

ClosureOutcome closure(const VarContext& ctx, const std::vector<Derivation>& generators,
                       const ClosureOptions& opts) {
  ClosureOutcome out;
  out.span = k_reduce(ctx, generators);
  out.dim_history.push_back(out.span.dim());
  if (out.span.dim() > opts.dim_cap) {
    out.reason = "dim_cap";
    return out;
  }
  while (true) {
    if (opts.cancelled && opts.cancelled()) {
      out.reason = "cancelled";
      return out;
    }
    if (out.iterations >= opts.depth_cap) {
      out.reason = "depth_cap";
      return out;
    }
    ++out.iterations;
    std::vector<Derivation> candidates = out.span.basis;
    for (size_t i = 0; i < out.span.basis.size(); ++i)
      for (size_t j = i + 1; j < out.span.basis.size(); ++j) {
        Derivation br = bracket(out.span.basis[i], out.span.basis[j]);
        if (!br.is_zero()) candidates.push_back(std::move(br));
      }
    SpanBasis next = k_reduce(ctx, candidates);
    if (next.dim() == out.span.dim()) {
      out.closed = true;
      return out;
    }
    out.span = std::move(next);
    out.dim_history.push_back(out.span.dim());
    if (out.span.dim() > opts.dim_cap) {
      out.reason = "dim_cap";
      return out;
    }
  }
}

int rf_reduced_echelon(RFMatrix& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    RationalFunction pivot = m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / pivot;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RationalFunction f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

int rank_R(const SpanBasis& span) {
  if (span.dim() == 0) return 0;
  RFMatrix m;
  m.reserve(static_cast<size_t>(span.dim()));
  for (const auto& b : span.basis) m.push_back(b.coeffs());
  return rf_reduced_echelon(m);
}

StructureData structure_constants(const SpanBasis& span) {
  StructureData sd{span, {}};
  const int d = span.dim();
  sd.c.assign(static_cast<size_t>(d),
              std::vector<QVec>(static_cast<size_t>(d), QVec(static_cast<size_t>(d), 0)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Derivation br = bracket(span.basis[static_cast<size_t>(i)], span.basis[static_cast<size_t>(j)]);
      auto coords = express_in_basis(span, br);
      if (!coords) throw MathError("span not a subalgebra");
      for (int k = 0; k < d; ++k) {
        sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = (*coords)[static_cast<size_t>(k)];
        sd.c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = -(*coords)[static_cast<size_t>(k)];
      }
    }
  }
  return sd;
}

Derivation from_coords(const SpanBasis& span, const QVec& coords) {
  Derivation out(span.ctx);
  for (int k = 0; k < span.dim(); ++k) {
    const Rat& c = coords[static_cast<size_t>(k)];
    if (c != 0) out = out + scale(c, span.basis[static_cast<size_t>(k)]);
  }
  return out;
}

SpanBasis span_from_coords(const SpanBasis& span, const QMatrix& rows) {
  std::vector<Derivation> vs;
  vs.reserve(rows.size());
  for (const auto& row : rows) vs.push_back(from_coords(span, row));
  return k_reduce(span.ctx, vs);
}

namespace {

// Coordinates of [b_i, x] for x given by coords, via structure constants.
QVec ad_apply(const StructureData& sd, int i, const QVec& x) {
  const int d = sd.dim();
  QVec out(static_cast<size_t>(d), 0);
  for (int j = 0; j < d; ++j) {
    const Rat& xj = x[static_cast<size_t>(j)];
    if (xj == 0) continue;
    const QVec& cij = sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int k = 0; k < d; ++k) out[static_cast<size_t>(k)] += xj * cij[static_cast<size_t>(k)];
  }
  return out;
}

QVec bracket_coords(const StructureData& sd, const QVec& x, const QVec& y) {
  const int d = sd.dim();
  QVec out(static_cast<size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    const Rat& xi = x[static_cast<size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; j < d; ++j) {
      const Rat& yj = y[static_cast<size_t>(j)];
      if (yj == 0) continue;
      const QVec& cij = sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < d; ++k) out[static_cast<size_t>(k)] += xi * yj * cij[static_cast<size_t>(k)];
    }
  }
  return out;
}

enum class SeriesKind { LowerCentral, Derived };

std::vector<SpanBasis> series_impl(const StructureData& sd, SeriesKind kind) {
  std::vector<SpanBasis> out;
  out.push_back(sd.span);
  if (sd.dim() == 0) return out;

  QMatrix cur = identity_matrix(sd.dim());
  while (true) {
    QMatrix next_rows;
    if (kind == SeriesKind::LowerCentral) {
      for (int i = 0; i < sd.dim(); ++i)
        for (const auto& v : cur) {
          QVec w = ad_apply(sd, i, v);
          if (!is_zero_vec(w)) next_rows.push_back(std::move(w));
        }
    } else {
      for (size_t a = 0; a < cur.size(); ++a)
        for (size_t b = a + 1; b < cur.size(); ++b) {
          QVec w = bracket_coords(sd, cur[a], cur[b]);
          if (!is_zero_vec(w)) next_rows.push_back(std::move(w));
        }
    }
    QMatrix next = row_space(std::move(next_rows));
    out.push_back(span_from_coords(sd.span, next));
    if (next.empty()) break;                       // reached zero
    if (next.size() == cur.size()) break;          // stabilized nonzero
    cur = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<SpanBasis> lower_central_series(const StructureData& sd) {
  return series_impl(sd, SeriesKind::LowerCentral);
}

std::vector<SpanBasis> derived_series(const StructureData& sd) {
  return series_impl(sd, SeriesKind::Derived);
}

Nilpotency is_nilpotent(const StructureData& sd) {
  auto series = lower_central_series(sd);
  Nilpotency out;
  out.nilpotent = series.back().dim() == 0;
  out.nil_class = out.nilpotent ? static_cast<int>(series.size()) - 1 : 0;
  return out;
}

SpanBasis center(const StructureData& sd) {
  const int d = sd.dim();
  if (d == 0) return sd.span;
  // One equation per (j, k): sum_i xi_i c[i][j][k] = 0.
  QMatrix sys;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      QVec row(static_cast<size_t>(d), 0);
      bool nonzero = false;
      for (int i = 0; i < d; ++i) {
        row[static_cast<size_t>(i)] = sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        nonzero = nonzero || row[static_cast<size_t>(i)] != 0;
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  return span_from_coords(sd.span, nullspace(sys, d));
}

SpanBasis center_mod(const StructureData& sd, const SpanBasis& ideal) {
  const int d = sd.dim();
  require_same_ctx(sd.span.ctx, ideal.ctx);

  QMatrix ideal_coords;
  for (const auto& v : ideal.basis) {
    auto coords = express_in_basis(sd.span, v);
    if (!coords) throw MathError("ideal is not contained in the algebra");
    ideal_coords.push_back(std::move(*coords));
  }
  QMatrix ideal_rref = row_space(ideal_coords);

  // Eager ideal check with a counterexample pair on failure.
  for (int i = 0; i < d; ++i)
    for (size_t u = 0; u < ideal_rref.size(); ++u) {
      QVec w = ad_apply(sd, i, ideal_rref[u]);
      if (!row_space_contains(ideal_rref, w))
        throw MathError("not an ideal: bracket of algebra basis element " + std::to_string(i) +
                        " with ideal element " + std::to_string(u) + " escapes the ideal");
    }

  if (d == 0) return sd.span;
  QMatrix perp = nullspace(ideal_rref, d);

  // [x, b_j] must land in the ideal: y . [x, b_j] = 0 for every y in perp.
  QMatrix sys;
  for (int j = 0; j < d; ++j)
    for (const auto& y : perp) {
      QVec row(static_cast<size_t>(d), 0);
      bool nonzero = false;
      for (int i = 0; i < d; ++i) {
        Rat s = 0;
        const QVec& cij = sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int k = 0; k < d; ++k) s += y[static_cast<size_t>(k)] * cij[static_cast<size_t>(k)];
        row[static_cast<size_t>(i)] = s;
        nonzero = nonzero || s != 0;
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  return span_from_coords(sd.span, nullspace(sys, d));
}

QMatrix ad_matrix(const StructureData& sd, int i) {
  const int d = sd.dim();
  QMatrix m(static_cast<size_t>(d), QVec(static_cast<size_t>(d), 0));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      m[static_cast<size_t>(k)][static_cast<size_t>(j)] =
          sd.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return m;
}

QVec common_kernel(const std::vector<QMatrix>& ops) {
  if (ops.empty()) throw MathError("common_kernel needs at least one operator");
  const size_t d = ops[0].size();
  if (d == 0) throw MathError("common_kernel on a zero-dimensional space");
  for (const auto& m : ops) {
    if (m.size() != d) throw MathError("operators of mixed sizes");
    for (const auto& row : m)
      if (row.size() != d) throw MathError("operator matrix is not square");
  }
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = a + 1; b < ops.size(); ++b)
      if (mat_mul(ops[a], ops[b]) != mat_mul(ops[b], ops[a]))
        throw MathError("operators do not commute");
  for (const auto& m : ops) {
    QMatrix p = m;
    bool nil = is_zero_matrix(p);
    for (size_t k = 1; !nil && k < d; ++k) {
      p = mat_mul(p, m);
      nil = is_zero_matrix(p);
    }
    if (!nil) throw MathError("operator is not nilpotent");
  }

  // Iteratively restrict the kernel basis through each operator.
  QMatrix basis = identity_matrix(static_cast<int>(d));
  for (const auto& m : ops) {
    // v = sum t_u basis_u with m v = 0  <=>  (m B^T) t = 0.
    QMatrix c(d, QVec(basis.size(), 0));
    for (size_t r = 0; r < d; ++r)
      for (size_t u = 0; u < basis.size(); ++u) {
        Rat s = 0;
        for (size_t j = 0; j < d; ++j) s += m[r][j] * basis[u][j];
        c[r][u] = s;
      }
    QMatrix ts = nullspace(c, static_cast<int>(basis.size()));
    QMatrix next;
    for (const auto& t : ts) {
      QVec v(d, 0);
      for (size_t u = 0; u < basis.size(); ++u)
        for (size_t j = 0; j < d; ++j) v[j] += t[u] * basis[u][j];
      next.push_back(std::move(v));
    }
    basis = row_space(std::move(next));
    if (basis.empty())
      throw MathError("guarantee violated: commuting nilpotent operators with zero common kernel");
  }
  return basis[0];
}

bool constants_membership(const SpanBasis& span, const RationalFunction& r) {
  for (const auto& b : span.basis)
    if (!b.apply(r).is_zero()) return false;
  return true;
}

}  // namespace derlie
