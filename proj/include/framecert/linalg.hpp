#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "framecert/matrix.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

// Rank and span decisions run in the matrix's own field: exact mode decides by
// fraction-free elimination (no tolerance), float mode by SVD with a relative
// singular-value threshold. Spectral operations always produce float results.

/// Number of independent columns. Float: count of singular values above
/// rank_rel_tol times the largest. A positive scale_floor raises the float
/// threshold to rank_rel_tol * max(sigma_max, scale_floor), so submatrices of
/// a larger problem can be judged on the parent's scale (a lone near-zero
/// column then has rank 0 instead of 1).
std::size_t rank(const Matrix& m, const ToleranceConfig& tol = {}, double scale_floor = 0.0);

/// Columns form a basis of ker(m); empty (cols x 0) matrix for full column
/// rank. Exact mode: standard free-variable basis. Float mode: orthonormal.
Matrix null_space_basis(const Matrix& m, const ToleranceConfig& tol = {});

/// Orthogonal projection onto the column space of a. Dependent columns are
/// dropped before forming the projection.
Matrix projection_onto_colspace(const Matrix& a, const ToleranceConfig& tol = {});

/// Eigenvalues (descending) and matching orthonormal eigenvector columns of a
/// symmetric matrix. Raises NotSymmetric / NonSquare.
std::pair<std::vector<double>, Matrix> symmetric_eigen(const Matrix& s,
                                                       const ToleranceConfig& tol = {});

/// R with R * s * R = I for symmetric positive definite s. Raises
/// NotPositiveDefinite when the smallest eigenvalue is not safely positive.
Matrix inv_sqrt_psd(const Matrix& s, const ToleranceConfig& tol = {});

/// Orthonormal basis of ker(t_star) as columns, float mode, with a canonical
/// sign: in each column the first entry exceeding witness_tol in magnitude is
/// made positive.
Matrix orthonormal_kernel_basis(const Matrix& t_star, const ToleranceConfig& tol = {});

/// Orthonormal basis of the column space as columns, float mode (exact input
/// is converted), sign-canonicalized like orthonormal_kernel_basis. Zero
/// columns for an all-zero input.
Matrix orthonormal_colspace_basis(const Matrix& m, const ToleranceConfig& tol = {});

/// Indices (increasing) of a maximal independent column set, greedy from the
/// left; the exact-mode answer is the lexicographically first such set.
std::vector<std::size_t> independent_columns(const Matrix& m, const ToleranceConfig& tol = {});

/// Exact only: one solution of m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve_exact(const Matrix& m, const Vector& rhs);

/// Inverse of a square matrix in its own field. Raises Singular / NonSquare.
Matrix invert(const Matrix& m, const ToleranceConfig& tol = {});

/// Largest over smallest singular value (inf for singular), in doubles.
double condition_estimate(const Matrix& m);

/// Flips the sign of each column so its first entry larger than entry_tol in
/// magnitude is positive; columns below the threshold everywhere are kept.
Matrix canonicalize_column_signs(const Matrix& m, double entry_tol);

}  // namespace framecert
