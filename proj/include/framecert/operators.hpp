#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "framecert/certificate.hpp"
#include "framecert/frame.hpp"
#include "framecert/spark.hpp"
#include "framecert/subspace.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

// ============================================================================
// Invertible operators
// ============================================================================

/// Square invertible operator with its inverse cached at construction. Exact
/// matrices get an exact inverse; float inverses are accepted only when
/// max |matrix * inverse - I| is within witness_tol.
class InvertibleOperator {
 public:
  static InvertibleOperator from_matrix(const Matrix& m, const ToleranceConfig& tol = {});

  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  double condition_estimate() const { return condition_estimate_; }
  Field field() const { return matrix_.field(); }
  std::size_t dim() const { return matrix_.rows(); }

  /// The inverse transpose. Pairing it with the original operator preserves
  /// inner products: <T x, inverse_transpose(T) v> = <x, v>.
  Matrix inverse_transpose() const { return inverse_.transpose(); }

 private:
  InvertibleOperator(Matrix m, Matrix inverse, double cond);

  Matrix matrix_;
  Matrix inverse_;
  double condition_estimate_ = 0.0;
};

// ============================================================================
// Frame transforms
// ============================================================================

/// {T phi_i}: every frame vector pushed through the operator.
Frame apply_operator(const Frame& f, const InvertibleOperator& t);

/// {P phi_i} written in the coordinates of an orthonormal basis of the target
/// subspace, so the result is a frame of dimension p.dim() and norms inside
/// the range are preserved. The result stays exact only when the target's
/// exact basis is already orthonormal (coordinate subspaces and the like);
/// every other combination is computed in float.
Frame project_frame(const Frame& f, const Subspace& p, const ToleranceConfig& tol = {});

/// Same, with the target given by a spanning matrix. A matrix whose columns
/// span nothing is not a usable target (NotAProjectionTarget).
Frame project_frame(const Frame& f, const Matrix& spanning, const ToleranceConfig& tol = {});

/// The operator fixing `direction` and halving every orthogonal direction:
/// P + (I - P) / 2 with P the projection onto span{direction}. No
/// normalization is needed, so rational directions give exact operators.
InvertibleOperator shrink_operator(const Vector& direction, std::size_t n,
                                   const ToleranceConfig& tol = {});

/// Maps the lexicographically first independent dim-subset of f to the
/// standard basis, so the image frame contains an orthonormal basis and
/// certifies norm retrieval by the identity-in-span rule.
InvertibleOperator nr_inducing_operator(const Frame& f, const ToleranceConfig& tol = {});

/// Gaussian float operator, resampled until condition_estimate <= cond_cap.
/// Deterministic in the seed.
InvertibleOperator random_invertible(std::size_t n, std::uint64_t seed, double cond_cap = 1e6,
                                     const ToleranceConfig& tol = {});

// ============================================================================
// Invariance of phase retrieval under invertible operators
// ============================================================================

/// Outcome of invertible_equivalence_suite.
struct EquivalenceReport {
  Certificate ground_truth;  ///< phase retrieval decision for the input frame
  std::size_t trials = 0;
  std::size_t matched = 0;  ///< trials whose transformed frame got the same verdict

  /// Present when the ground truth is NO: an operator image of the frame that
  /// fails norm retrieval, with the equal-measurement pair defeating it.
  std::optional<InvertibleOperator> failure_operator;
  std::optional<WitnessPair> failure_pair;

  bool all_matched() const { return matched == trials; }
};

/// Checks that the phase retrieval verdict survives `trials` random invertible
/// operators, and on NO instances constructs the failing norm-retrieval image:
/// from an equal-measurement pair (x, y), equal norms force y outside span{x},
/// so the operator fixing x and halving its orthogonal complement shrinks y
/// but not x; unequal norms already defeat norm retrieval under the identity.
/// The reported pair is measured against the frame mapped by failure_operator.
EquivalenceReport invertible_equivalence_suite(const Frame& f, std::size_t trials,
                                               std::uint64_t seed,
                                               const ToleranceConfig& tol = {},
                                               std::size_t max_m = kDefaultMaxEnumeration);

}  // namespace framecert
