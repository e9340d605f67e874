#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "framecert/certificate.hpp"
#include "framecert/errors.hpp"
#include "framecert/frame.hpp"
#include "framecert/subspace.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

/// Witness pair for a frame, with gaps recomputed from |<x, phi_i>|. Exact
/// inputs keep exact coordinates; gaps are reported as doubles.
WitnessPair make_frame_witness(const Frame& f, Vector x, Vector y);

/// For a partition (subset, complement) where neither side spans: picks
/// u orthogonal to the subset side and v orthogonal to the complement side and
/// returns (u + v, u - v), which agree in measurement magnitude on every
/// vector. Raises NotAViolation when either side spans, BadPartition on
/// malformed subsets. Exact frames produce exactly-equal measurements.
WitnessPair pr_witness_from_partition(const Frame& f, const std::vector<std::size_t>& subset,
                                      const ToleranceConfig& tol = {});

/// Validates and splits a partition given by one side's indices.
std::vector<std::size_t> partition_complement(std::size_t total,
                                              const std::vector<std::size_t>& subset);

// ============================================================================
// Numerical search for norm-retrieval violations
// ============================================================================

/// Knobs for the projected gradient search. Deterministic in seed for every
/// thread count; restarts draw independent starting points.
struct SearchConfig {
  std::size_t restarts = 64;
  std::size_t max_iters = 2000;
  double step = 0.1;              ///< initial step size, halved on non-decrease
  double delta = 0.25;            ///< enforced norm offset between x and y
  double residual_accept = 1e-12; ///< objective value counted as a violation
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  void validate() const {
    if (restarts == 0 || max_iters == 0 || threads == 0 || !(step > 0) || !(delta > 0) ||
        !(residual_accept > 0)) {
      fail(ErrorCode::RangeError, "search configuration values must be positive");
    }
  }
};

/// Minimizes sum_i (|P_i x|^2 - |P_i y|^2)^2 over the spheres |x| = 1,
/// |y| = 1 + delta by projected gradient descent with restarts. A pair is
/// returned when some restart reaches residual_accept: equal measurements with
/// norms delta apart. Absence is not a proof that norm retrieval holds.
std::optional<WitnessPair> nr_violation_search(const SubspaceFamily& fam,
                                               const SearchConfig& cfg = {});

/// Max relative disagreement between the analytic gradient of the search
/// objective and central finite differences (h = 1e-5) at (x, y), over all
/// coordinates of both gradients.
double gradient_check(const SubspaceFamily& fam, const Vector& x, const Vector& y);

}  // namespace framecert
