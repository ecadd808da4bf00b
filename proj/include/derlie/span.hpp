#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "derlie/derivation.hpp"
#include "derlie/linalg.hpp"

namespace derlie {

// Finite K-linear span of derivations in canonical form: the basis is the
// reduced echelon basis of the monomial-coordinate matrix obtained after
// clearing each coordinate to its common denominator. Two generating sets of
// the same subspace produce structurally identical SpanBasis values.
struct SpanBasis {
  VarContext ctx;
  std::vector<Derivation> basis;

  explicit SpanBasis(VarContext c) : ctx(std::move(c)) {}
  SpanBasis(VarContext c, std::vector<Derivation> b)
      : ctx(std::move(c)), basis(std::move(b)) {}

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const SpanBasis& o) const { return ctx == o.ctx && basis == o.basis; }
  bool operator!=(const SpanBasis& o) const { return !(*this == o); }
};

// Canonical basis of the K-span of the given derivations.
SpanBasis k_reduce(const VarContext& ctx, const std::vector<Derivation>& vectors);

// Coordinates of x in the span's basis, or nullopt if x is outside the span.
std::optional<QVec> express_in_basis(const SpanBasis& span, const Derivation& x);
bool span_contains(const SpanBasis& span, const Derivation& x);

struct ClosureOptions {
  int dim_cap = 512;
  int depth_cap = 64;
  std::function<bool()> cancelled;   // polled once per closure iteration
};

struct ClosureOutcome {
  bool closed = false;
  std::string reason;        // set when not closed: dim_cap / depth_cap / cancelled
  SpanBasis span;            // closed basis, or the last state reached
  int iterations = 0;
  std::vector<int> dim_history;
};

// Repeatedly adjoins pairwise brackets until the span stabilizes. A cap hit
// yields an indeterminate outcome, never a silently truncated span.
ClosureOutcome closure(const VarContext& ctx, const std::vector<Derivation>& generators,
                       const ClosureOptions& opts = {});

// Matrix rank over the fraction field R.
using RFMatrix = std::vector<std::vector<RationalFunction>>;
int rf_reduced_echelon(RFMatrix& m, std::vector<int>* pivot_cols = nullptr);
int rank_R(const SpanBasis& span);

// Finite-dimensional Lie algebra presentation: bracket-closed span plus exact
// structure constants, [b_i, b_j] = sum_k c[i][j][k] b_k.
struct StructureData {
  SpanBasis span;
  std::vector<std::vector<QVec>> c;

  int dim() const { return span.dim(); }
};

// Throws MathError("span not a subalgebra") if some bracket escapes the span.
StructureData structure_constants(const SpanBasis& span);

// gamma_1 = L, gamma_{i+1} = [L, gamma_i]; the list ends with the first zero
// term or with a repeated term once the series stabilizes nonzero.
std::vector<SpanBasis> lower_central_series(const StructureData& sd);

// L^(0) = L, L^(i+1) = [L^(i), L^(i)]; same termination convention.
std::vector<SpanBasis> derived_series(const StructureData& sd);

struct Nilpotency {
  bool nilpotent = false;
  int nil_class = 0;         // last nonzero index of the lower central series
};
Nilpotency is_nilpotent(const StructureData& sd);

SpanBasis center(const StructureData& sd);

// Preimage in L of the center of L/I. I must be a subspace of L and an ideal;
// the ideal check runs eagerly and fails with a counterexample pair.
SpanBasis center_mod(const StructureData& sd, const SpanBasis& ideal);

// Matrix of ad b_i in the span's basis.
QMatrix ad_matrix(const StructureData& sd, int i);

// A nonzero common kernel vector of pairwise commuting nilpotent matrices
// (checked); deterministic: first canonical basis vector of the iteratively
// intersected kernels.
QVec common_kernel(const std::vector<QMatrix>& ops);

// True iff every basis element annihilates r.
bool constants_membership(const SpanBasis& span, const RationalFunction& r);

// The derivation sum_k coords[k] * basis[k].
Derivation from_coords(const SpanBasis& span, const QVec& coords);

// Canonical SpanBasis spanned by the rows of a coordinate matrix over span.
SpanBasis span_from_coords(const SpanBasis& span, const QMatrix& rows);

}  // namespace derlie
