#pragma once

#include <optional>
#include <vector>

#include "derlie/polynomial.hpp"

namespace derlie {

using QVec = std::vector<Rat>;
using QMatrix = std::vector<QVec>;   // row-major, rectangular

QMatrix identity_matrix(int n);
bool is_zero_matrix(const QMatrix& m);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QVec mat_vec(const QMatrix& a, const QVec& v);
bool is_zero_vec(const QVec& v);

// In-place reduced row echelon form (leading 1 pivots, zeros above and below,
// pivot columns left to right, zero rows pushed to the bottom). Returns the
// rank; optionally reports the pivot columns.
int rref(QMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Canonical basis of the row space: RREF rows, zero rows dropped. Depends
// only on the row space, not on the presented generators.
QMatrix row_space(QMatrix rows);

// Canonical basis of {x : m x = 0} with ncols unknowns, one row per basis
// vector, ordered by free column. Depends only on the row space of m.
QMatrix nullspace(const QMatrix& m, int ncols);

// Solves a x = rhs for one solution (free unknowns set to 0); nullopt if
// inconsistent.
std::optional<QVec> solve(QMatrix a, QVec rhs);

// v membership in the row space of an RREF basis.
bool row_space_contains(const QMatrix& rref_rows, const QVec& v);

}  // namespace derlie
