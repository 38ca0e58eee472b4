#pragma once

#include <optional>
#include <vector>

#include "isoring/polynomial.hpp"

namespace isoring {

using QMatrix = std::vector<std::vector<Rat>>;   // row-major
using ZMatrix = std::vector<std::vector<Int>>;

QMatrix q_identity(int n);
ZMatrix z_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b);
std::vector<Rat> q_apply(const QMatrix& a, const std::vector<Rat>& v);
bool q_equal(const QMatrix& a, const QMatrix& b);
QMatrix z_to_q(const ZMatrix& a);
std::optional<ZMatrix> q_to_z(const QMatrix& a);  // nullopt if any entry non-integral

int q_rank(QMatrix a);
// Reduced row echelon form in place; returns pivot columns.
std::vector<int> q_rref(QMatrix& a);
// Basis of the right kernel {x : a x = 0}.
std::vector<std::vector<Rat>> q_nullspace(const QMatrix& a);
// One solution of a x = b, if any.
std::optional<std::vector<Rat>> q_solve(const QMatrix& a, const std::vector<Rat>& b);
std::optional<QMatrix> q_inverse(const QMatrix& a);
Rat q_det(QMatrix a);

// Column-style Hermite normal form: returns H = a * U with U unimodular,
// H lower-triangular-ish column HNF (pivots positive). a is m x n; H is m x n.
ZMatrix z_column_hnf(const ZMatrix& a);

// Smith normal form diagonal entries (nonzero ones, each dividing the next).
std::vector<Int> z_snf_diagonal(ZMatrix a);

// Does the integer system a x = b have an integer solution?
bool z_lattice_member(const ZMatrix& a, const std::vector<Int>& b);
std::optional<std::vector<Int>> z_lattice_solve(const ZMatrix& a, const std::vector<Int>& b);

// Inverse of a square integer matrix as a rational matrix.
std::optional<QMatrix> z_inverse_q(const ZMatrix& a);
Int z_det(ZMatrix a);

// Basis (as columns, returned column-by-column) of the pure integer kernel
// {x in Z^n : a x = 0}. Requires a nonempty matrix.
std::vector<std::vector<Int>> z_kernel_basis(const ZMatrix& a);

}  // namespace isoring
