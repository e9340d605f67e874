#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "framecert/linalg.hpp"
#include "framecert/matrix.hpp"
#include "framecert/tolerance.hpp"
#include "framecert/util.hpp"

namespace framecert {

/// Relative threshold for the tight / Parseval flags: float mode accepts
/// ||S - c*I|| within 1e-8; exact mode requires identity on the nose.
inline constexpr double kParsevalRelTol = 1e-8;

struct FrameReport {
  double lower_bound = 0.0;  // smallest eigenvalue of the frame operator
  double upper_bound = 0.0;  // largest eigenvalue of the frame operator
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
};

/// Ordered finite list of vectors in R^dim, all sharing one field tag. The
/// vector list is immutable after construction; derived operators are computed
/// on demand and cached (thread-safe, recomputed after copy).
class Frame {
 public:
  Frame(std::size_t dim, std::vector<Vector> vectors);

  std::size_t dim() const { return dim_; }
  /// Number of vectors (M).
  std::size_t size() const { return vectors_.size(); }
  Field field() const { return vectors_.front().field(); }
  const Vector& vec(std::size_t i) const;
  const std::vector<Vector>& vectors() const { return vectors_; }

  /// N x M matrix whose columns are the frame vectors (synthesis operator).
  const Matrix& synthesis_matrix() const;
  /// M x N matrix whose rows are the frame vectors (analysis operator).
  Matrix analysis_matrix() const { return synthesis_matrix().transpose(); }
  /// S = sum of outer products, N x N.
  const Matrix& frame_operator() const;
  /// (smallest, largest) eigenvalue of the frame operator, in doubles.
  std::pair<double, double> operator_bounds() const;
  /// Exact mode only: whether the vectors span R^dim, decided exactly.
  bool spans_exactly() const;

  Frame subframe(const std::vector<std::size_t>& indices) const;
  Frame to_float() const;

 private:
  std::size_t dim_;
  std::vector<Vector> vectors_;
  Lazy<Matrix> synthesis_;
  Lazy<Matrix> operator_;
  Lazy<std::pair<double, double>> bounds_;
  Lazy<bool> exact_spans_;
};

/// Measurement coefficients (<x, phi_i>)_i.
Vector analysis_apply(const Frame& f, const Vector& x);

/// Linear combination sum_i coeffs_i phi_i.
Vector synthesis_apply(const Frame& f, const Vector& coeffs);

/// Frame operator S (copy of the cached matrix).
Matrix frame_operator(const Frame& f);

/// Bounds and the frame / tight / Parseval flags. is_frame is decided exactly
/// in exact mode and by lower_bound > rank_rel_tol * upper_bound in float.
FrameReport frame_report(const Frame& f, const ToleranceConfig& tol = {});

/// { S^{-1/2} phi_i }, always float. Raises NotAFrame.
Frame canonical_parseval(const Frame& f, const ToleranceConfig& tol = {});

/// For a Parseval frame: whether ||T* T x - x|| <= witness_tol * ||x||.
/// Raises NotParseval.
bool verify_reconstruction(const Frame& f, const Vector& x, const ToleranceConfig& tol = {});

/// M x M Gram matrix (<phi_i, phi_j>).
Matrix gram_matrix(const Frame& f);

}  // namespace framecert
