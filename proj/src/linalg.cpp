#include "framecert/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

#include "framecert/errors.hpp"

namespace framecert {

namespace {

// Intermediate entries in exact elimination are capped at this many bits.
constexpr std::size_t kMaxEntryBits = 1000000;

void check_bits(const mpz_class& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > kMaxEntryBits) {
    fail(ErrorCode::BitLengthExceeded, "exact elimination exceeded the bit-length cap");
  }
}

// ----------------------------------------------------------------------------
// Exact kernel: fraction-free (Bareiss) elimination
// ----------------------------------------------------------------------------

struct Echelon {
  std::vector<mpz_class> a;  // row-major, row echelon form
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r, increasing
};

// Row-wise denominator clearing preserves rank, kernel, and row space.
std::vector<mpz_class> integer_rows(const Matrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.exact_at(i, j).get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m.exact_at(i, j);
      out[i * m.cols() + j] = q.get_num() * (lcm / q.get_den());
    }
  }
  return out;
}

// One-step fraction-free elimination with row pivoting and column skipping.
// Updated entries are minors of the original matrix, so the division by the
// previous pivot is exact (Sylvester's identity).
Echelon bareiss(const Matrix& m) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a = integer_rows(m);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return e.a[i * e.cols + j]; };

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < e.cols && r < e.rows; ++col) {
    std::size_t p = r;
    while (p < e.rows && sgn(at(p, col)) == 0) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < e.rows; ++i) {
      for (std::size_t j = col + 1; j < e.cols; ++j) {
        mpz_class num = at(r, col) * at(i, j) - at(i, col) * at(r, j);
        if (mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) == 0) {
          fail(ErrorCode::Internal, "fraction-free elimination division was not exact");
        }
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        check_bits(at(i, j));
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    e.pivot_cols.push_back(col);
    ++r;
  }
  return e;
}

struct ExactRref {
  std::vector<Rational> a;  // row-major, reduced row echelon form
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> pivot_cols;
};

// Rational back-substitution on the Bareiss echelon form.
ExactRref exact_rref(const Matrix& m) {
  Echelon e = bareiss(m);
  ExactRref r;
  r.rows = e.rows;
  r.cols = e.cols;
  r.pivot_cols = e.pivot_cols;
  r.a.assign(e.rows * e.cols, Rational(0));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return r.a[i * r.cols + j]; };
  for (std::size_t i = 0; i < e.rows * e.cols; ++i) r.a[i] = Rational(e.a[i]);

  for (std::size_t k = r.pivot_cols.size(); k-- > 0;) {
    const std::size_t piv = r.pivot_cols[k];
    const Rational inv_pivot = 1 / at(k, piv);
    for (std::size_t j = piv; j < r.cols; ++j) at(k, j) *= inv_pivot;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational factor = at(i, piv);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = piv; j < r.cols; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  return r;
}

Matrix exact_null_space(const Matrix& m) {
  ExactRref r = exact_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  Matrix basis(m.cols(), free_cols.size(), Field::Exact);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis.exact_at(f, k) = 1;
    for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
      basis.exact_at(r.pivot_cols[row], k) = -r.a[row * r.cols + f];
    }
  }
  return basis;
}

// ----------------------------------------------------------------------------
// Float kernel: SVD and symmetric eigendecomposition via Eigen
// ----------------------------------------------------------------------------

std::size_t float_rank(const Eigen::MatrixXd& m, double rel_tol, double scale_floor) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  const double threshold = rel_tol * std::max(sigma(0), scale_floor);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0) ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m, const ToleranceConfig& tol, double scale_floor) {
  tol.validate();
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field() == Field::Exact) return bareiss(m).pivot_cols.size();
  return float_rank(m.to_eigen(), tol.rank_rel_tol, scale_floor);
}

Matrix null_space_basis(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.field() == Field::Exact) return exact_null_space(m);
  if (m.cols() == 0) return Matrix(0, 0, Field::Float);
  if (m.rows() == 0) return Matrix::identity(m.cols(), Field::Float);
  Eigen::MatrixXd a = m.to_eigen();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? tol.rank_rel_tol * sigma(0) : 0.0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0) ++r;
  }
  const Eigen::MatrixXd v = svd.matrixV();
  Eigen::MatrixXd kernel(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j) {
    kernel.col(static_cast<Eigen::Index>(j - r)) = v.col(static_cast<Eigen::Index>(j));
  }
  return Matrix::from_eigen(kernel);
}

Matrix projection_onto_colspace(const Matrix& a, const ToleranceConfig& tol) {
  tol.validate();
  if (a.field() == Field::Float) {
    if (a.cols() == 0 || a.rows() == 0) return Matrix(a.rows(), a.rows(), Field::Float);
    Eigen::MatrixXd m = a.to_eigen();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    const double threshold = sigma.size() > 0 ? tol.rank_rel_tol * sigma(0) : 0.0;
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > threshold && sigma(i) > 0) ++r;
    }
    const Eigen::MatrixXd u = svd.matrixU().leftCols(static_cast<Eigen::Index>(r));
    return Matrix::from_eigen(u * u.transpose());
  }
  // Exact: prune to independent columns, then P = B (B^T B)^{-1} B^T.
  const std::vector<std::size_t> idx = independent_columns(a, tol);
  if (idx.empty()) return Matrix(a.rows(), a.rows(), Field::Exact);
  const Matrix b = a.select_columns(idx);
  const Matrix bt = b.transpose();
  const Matrix gram = bt * b;
  Matrix gram_inv(0, 0, Field::Exact);
  try {
    gram_inv = invert(gram, tol);
  } catch (const Error&) {
    fail(ErrorCode::SingularGram, "gram matrix of independent columns was singular");
  }
  return b * gram_inv * bt;
}

std::pair<std::vector<double>, Matrix> symmetric_eigen(const Matrix& s,
                                                       const ToleranceConfig& tol) {
  tol.validate();
  if (s.rows() != s.cols()) fail(ErrorCode::NonSquare, "eigendecomposition needs a square matrix");
  if (!s.is_symmetric(tol.symmetry_tol)) {
    fail(ErrorCode::NotSymmetric, "matrix is not symmetric within tolerance");
  }
  Eigen::MatrixXd m = s.to_eigen();
  // Work on the symmetrized matrix so tiny asymmetries cannot leak through.
  m = 0.5 * (m + m.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) fail(ErrorCode::Internal, "eigensolver failed");
  const Eigen::VectorXd lambda = solver.eigenvalues();
  const Eigen::MatrixXd v = solver.eigenvectors();
  const std::size_t n = s.rows();
  std::vector<double> values(n);
  Eigen::MatrixXd vectors(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Index src = static_cast<Eigen::Index>(n - 1 - i);
    values[i] = lambda(src);
    vectors.col(static_cast<Eigen::Index>(i)) = v.col(src);
  }
  return {std::move(values), Matrix::from_eigen(vectors)};
}

Matrix inv_sqrt_psd(const Matrix& s, const ToleranceConfig& tol) {
  auto [values, vectors] = symmetric_eigen(s, tol);
  const std::size_t n = values.size();
  if (n == 0) return Matrix(0, 0, Field::Float);
  const double lambda_max = values.front();
  const double lambda_min = values.back();
  if (!(lambda_max > 0) || lambda_min <= tol.rank_rel_tol * lambda_max) {
    fail(ErrorCode::NotPositiveDefinite, "matrix is not safely positive definite");
  }
  Eigen::MatrixXd v = vectors.to_eigen();
  Eigen::VectorXd scale(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    scale(static_cast<Eigen::Index>(i)) = 1.0 / std::sqrt(values[i]);
  }
  return Matrix::from_eigen(v * scale.asDiagonal() * v.transpose());
}

Matrix orthonormal_kernel_basis(const Matrix& t_star, const ToleranceConfig& tol) {
  tol.validate();
  const Matrix basis = null_space_basis(t_star.to_float(), tol);
  return canonicalize_column_signs(basis, tol.witness_tol);
}

Matrix orthonormal_colspace_basis(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.rows(), 0, Field::Float);
  const Eigen::MatrixXd a = m.to_float().to_eigen();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double threshold = sigma.size() > 0 ? tol.rank_rel_tol * sigma(0) : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold && sigma(i) > 0) ++r;
  }
  const Matrix u = Matrix::from_eigen(svd.matrixU().leftCols(r));
  return canonicalize_column_signs(u, tol.witness_tol);
}

std::vector<std::size_t> independent_columns(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.field() == Field::Exact) return bareiss(m).pivot_cols;
  std::vector<std::size_t> chosen;
  const std::size_t target = rank(m, tol);
  for (std::size_t j = 0; j < m.cols() && chosen.size() < target; ++j) {
    std::vector<std::size_t> candidate = chosen;
    candidate.push_back(j);
    if (rank(m.select_columns(candidate), tol) == candidate.size()) {
      chosen = std::move(candidate);
    }
  }
  return chosen;
}

std::optional<Vector> solve_exact(const Matrix& m, const Vector& rhs) {
  if (m.field() != Field::Exact || rhs.field() != Field::Exact) {
    fail(ErrorCode::FieldMismatch, "solve_exact needs exact inputs");
  }
  if (m.rows() != rhs.dim()) fail(ErrorCode::DimensionMismatch, "rhs length mismatch");
  Matrix rhs_col(m.rows(), 1, Field::Exact);
  for (std::size_t i = 0; i < m.rows(); ++i) rhs_col.exact_at(i, 0) = rhs.exact_at(i);
  const ExactRref r = exact_rref(m.hstack(rhs_col));
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), Field::Exact);
  for (std::size_t row = 0; row < r.pivot_cols.size(); ++row) {
    x.exact_at(r.pivot_cols[row]) = r.a[row * r.cols + m.cols()];
  }
  return x;
}

Matrix invert(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.rows() != m.cols()) fail(ErrorCode::NonSquare, "inverse needs a square matrix");
  const std::size_t n = m.rows();
  if (m.field() == Field::Exact) {
    const ExactRref r = exact_rref(m.hstack(Matrix::identity(n, Field::Exact)));
    if (r.pivot_cols.size() < n || (!r.pivot_cols.empty() && r.pivot_cols.back() >= n)) {
      fail(ErrorCode::Singular, "matrix is singular");
    }
    Matrix out(n, n, Field::Exact);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.exact_at(i, j) = r.a[i * r.cols + n + j];
    }
    return out;
  }
  if (n == 0) return Matrix(0, 0, Field::Float);
  Eigen::MatrixXd a = m.to_eigen();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sigma = svd.singularValues();
  if (sigma(sigma.size() - 1) <= tol.rank_rel_tol * sigma(0)) {
    fail(ErrorCode::Singular, "matrix is numerically singular");
  }
  return Matrix::from_eigen(a.inverse());
}

double condition_estimate(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.to_eigen());
  const auto& sigma = svd.singularValues();
  const double smin = sigma(sigma.size() - 1);
  if (smin <= 0) return std::numeric_limits<double>::infinity();
  return sigma(0) / smin;
}

Matrix canonicalize_column_signs(const Matrix& m, double entry_tol) {
  if (m.field() != Field::Float) fail(ErrorCode::FieldMismatch, "sign canonicalization is float-only");
  Matrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const double e = out.float_at(i, j);
      if (std::abs(e) > entry_tol) {
        if (e < 0) {
          for (std::size_t k = 0; k < m.rows(); ++k) out.float_at(k, j) = -out.float_at(k, j);
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace framecert
