#include "framecert/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "framecert/errors.hpp"
#include "framecert/falsifier.hpp"
#include "framecert/linalg.hpp"
#include "framecert/util.hpp"

namespace framecert {

namespace {

Frame frame_from_synthesis(std::size_t dim, const Matrix& synthesis) {
  std::vector<Vector> vectors;
  vectors.reserve(synthesis.cols());
  for (std::size_t j = 0; j < synthesis.cols(); ++j) vectors.push_back(synthesis.column(j));
  return Frame(dim, std::move(vectors));
}

}  // namespace

// ============================================================================
// Invertible operators
// ============================================================================

InvertibleOperator::InvertibleOperator(Matrix m, Matrix inverse, double cond)
    : matrix_(std::move(m)), inverse_(std::move(inverse)), condition_estimate_(cond) {}

InvertibleOperator InvertibleOperator::from_matrix(const Matrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.rows() != m.cols()) fail(ErrorCode::NonSquare, "operator matrix must be square");
  if (m.rows() == 0) fail(ErrorCode::RangeError, "operator needs a positive dimension");
  Matrix inverse = invert(m, tol);
  if (m.field() == Field::Float) {
    const double residual =
        max_abs_diff(m * inverse, Matrix::identity(m.rows(), Field::Float));
    if (!(residual <= tol.witness_tol)) {
      fail(ErrorCode::Singular, "inverse residual " + std::to_string(residual) +
                                    " exceeds tolerance; operator is numerically singular");
    }
  }
  const double cond = framecert::condition_estimate(m);
  return InvertibleOperator(m, std::move(inverse), cond);
}

// ============================================================================
// Frame transforms
// ============================================================================

Frame apply_operator(const Frame& f, const InvertibleOperator& t) {
  if (t.dim() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "operator acts on dimension " + std::to_string(t.dim()) +
                                           ", frame lives in " + std::to_string(f.dim()));
  }
  if (t.field() != f.field()) {
    fail(ErrorCode::FieldMismatch, "operator and frame fields differ; convert one side first");
  }
  return frame_from_synthesis(f.dim(), t.matrix() * f.synthesis_matrix());
}

Frame project_frame(const Frame& f, const Subspace& p, const ToleranceConfig& tol) {
  tol.validate();
  if (f.dim() != p.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "projection target lives in dimension " +
                                           std::to_string(p.ambient_dim()) + ", frame in " +
                                           std::to_string(f.dim()));
  }
  const Matrix& b = p.basis();
  if (f.field() == Field::Exact && p.field() == Field::Exact) {
    // Exact coordinates are only valid when the stored basis is orthonormal;
    // otherwise coordinate norms would not match norms inside the range.
    if (b.transpose() * b == Matrix::identity(p.dim(), Field::Exact)) {
      return frame_from_synthesis(p.dim(), b.transpose() * f.synthesis_matrix());
    }
  }
  const Matrix bf =
      p.field() == Field::Float ? b : orthonormal_colspace_basis(b.to_float(), tol);
  const Matrix synth =
      f.field() == Field::Float ? f.synthesis_matrix() : f.synthesis_matrix().to_float();
  return frame_from_synthesis(p.dim(), bf.transpose() * synth);
}

Frame project_frame(const Frame& f, const Matrix& spanning, const ToleranceConfig& tol) {
  tol.validate();
  if (spanning.rows() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "spanning matrix has " + std::to_string(spanning.rows()) +
                                           " rows, frame dimension is " +
                                           std::to_string(f.dim()));
  }
  if (spanning.cols() == 0 || rank(spanning, tol) == 0) {
    fail(ErrorCode::NotAProjectionTarget, "target subspace is zero-dimensional");
  }
  return project_frame(f, Subspace(spanning, tol), tol);
}

InvertibleOperator shrink_operator(const Vector& direction, std::size_t n,
                                   const ToleranceConfig& tol) {
  tol.validate();
  if (direction.dim() != n) {
    fail(ErrorCode::DimensionMismatch, "direction has dimension " +
                                           std::to_string(direction.dim()) + ", expected " +
                                           std::to_string(n));
  }
  if (direction.is_zero()) fail(ErrorCode::ZeroVector, "shrink direction must be nonzero");
  const Field field = direction.field();
  const Matrix d = Matrix::from_columns({direction});
  Matrix p = d * d.transpose();
  p = field == Field::Exact ? p.scaled(Scalar(Rational(1) / direction.norm_sq().exact()))
                            : p.scaled(Scalar(1.0 / direction.norm_sq().as_double()));
  const Matrix eye = Matrix::identity(n, field);
  const Scalar half = field == Field::Exact ? Scalar(Rational(1, 2)) : Scalar(0.5);
  return InvertibleOperator::from_matrix(p + (eye - p).scaled(half), tol);
}

InvertibleOperator nr_inducing_operator(const Frame& f, const ToleranceConfig& tol) {
  tol.validate();
  const std::vector<std::size_t> picked = independent_columns(f.synthesis_matrix(), tol);
  if (picked.size() < f.dim()) {
    fail(ErrorCode::NotAFrame, "vectors do not span the ambient space");
  }
  const Matrix sel = f.synthesis_matrix().select_columns(picked);
  return InvertibleOperator::from_matrix(invert(sel, tol), tol);
}

InvertibleOperator random_invertible(std::size_t n, std::uint64_t seed, double cond_cap,
                                     const ToleranceConfig& tol) {
  tol.validate();
  if (n == 0) fail(ErrorCode::RangeError, "operator dimension must be positive");
  if (!(cond_cap > 1.0)) fail(ErrorCode::RangeError, "cond_cap must exceed 1");
  for (std::uint64_t attempt = 0; attempt < 256; ++attempt) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n, Field::Float);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.float_at(i, j) = gauss(rng);
    }
    if (condition_estimate(m) > cond_cap) continue;
    return InvertibleOperator::from_matrix(m, tol);
  }
  fail(ErrorCode::ResampleExhausted, "no operator within the condition cap after 256 draws");
}

// ============================================================================
// Invariance of phase retrieval under invertible operators
// ============================================================================

EquivalenceReport invertible_equivalence_suite(const Frame& f, std::size_t trials,
                                               std::uint64_t seed, const ToleranceConfig& tol,
                                               std::size_t max_m) {
  tol.validate();
  if (f.size() > max_m) {
    fail(ErrorCode::TooLarge, "frame has " + std::to_string(f.size()) +
                                  " vectors, enumeration cap is " + std::to_string(max_m));
  }
  EquivalenceReport report;
  report.ground_truth = yields_phase_retrieval_vectors(f, tol, max_m);
  report.trials = trials;

  const Frame ff = f.field() == Field::Float ? f : f.to_float();
  for (std::size_t t = 0; t < trials; ++t) {
    const InvertibleOperator op = random_invertible(f.dim(), derive_seed(seed, t), 1e3, tol);
    const Certificate cert = yields_phase_retrieval_vectors(apply_operator(ff, op), tol, max_m);
    if (cert.verdict == report.ground_truth.verdict) ++report.matched;
  }

  if (report.ground_truth.no() && report.ground_truth.pair.has_value()) {
    const Vector& x = report.ground_truth.pair->x;
    const Vector& y = report.ground_truth.pair->y;
    bool equal_norms = false;
    if (f.field() == Field::Exact) {
      equal_norms = x.norm_sq().exact() == y.norm_sq().exact();
    } else {
      const double nx = x.norm_sq().as_double();
      const double ny = y.norm_sq().as_double();
      equal_norms = std::abs(nx - ny) <= tol.witness_tol * std::max({1.0, nx, ny});
    }
    // Equal norms force y outside span{x}, so shrinking across x separates the
    // norms; unequal norms already violate norm retrieval under the identity.
    const InvertibleOperator t_op =
        (equal_norms && !x.is_zero())
            ? shrink_operator(x, f.dim(), tol)
            : InvertibleOperator::from_matrix(Matrix::identity(f.dim(), f.field()), tol);
    const InvertibleOperator image_op =
        InvertibleOperator::from_matrix(t_op.inverse_transpose(), tol);
    const Frame image = apply_operator(f, image_op);
    report.failure_pair = make_frame_witness(image, t_op.matrix() * x, t_op.matrix() * y);
    report.failure_operator = image_op;
  }
  return report;
}

}  // namespace framecert
