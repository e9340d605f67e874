#include "framecert/examples.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <random>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/linalg.hpp"
#include "framecert/spark.hpp"
#include "framecert/util.hpp"

namespace framecert {

namespace {

Vector exact_vec(const std::vector<long>& entries) {
  std::vector<Rational> q(entries.begin(), entries.end());
  return Vector::from_exact(std::move(q));
}

Frame random_float_frame(std::size_t n, std::size_t m, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vector> vectors;
  vectors.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> entries(n);
    for (double& e : entries) e = gauss(rng);
    vectors.push_back(Vector::from_doubles(std::move(entries)));
  }
  return Frame(n, std::move(vectors));
}

}  // namespace

// ===========================================================================
// duplicate-vector
// ===========================================================================

DuplicateVectorExample duplicate_vector_example(const ToleranceConfig& tol) {
  tol.validate();
  const Vector g = exact_vec({1, 2, 3});
  std::vector<Vector> vectors{g,
                              g,
                              exact_vec({1, 0, 0}),
                              exact_vec({0, 1, 0}),
                              exact_vec({0, 0, 1}),
                              exact_vec({1, 1, 1})};
  const Frame base(3, std::move(vectors));
  // The canonical Parseval frame of a frame with a duplicated vector again has
  // that vector duplicated (the same invertible map hits both copies).
  Frame primary = canonical_parseval(base, tol);
  NaimarkPair pair = naimark_complement(primary, tol);
  DuplicateVectorExample ex{std::move(primary), std::move(pair.complement), Certificate{},
                            Certificate{}};
  ex.primary_pr = yields_phase_retrieval_vectors(ex.primary, tol);
  ex.complement_cp = complement_property(ex.complement, tol);
  return ex;
}

// ===========================================================================
// free-measurement
// ===========================================================================

FreeMeasurementExample free_measurement_example(std::uint64_t seed, std::size_t trials,
                                                const ToleranceConfig& tol) {
  tol.validate();
  std::vector<Vector> five{exact_vec({1, 0, 0}), exact_vec({0, 1, 0}), exact_vec({0, 0, 1}),
                           exact_vec({1, 1, 1}), exact_vec({1, 2, 4})};
  std::vector<Vector> four{five[0], five[1], five[3], five[4]};
  FreeMeasurementExample ex{Frame(3, std::move(five)), Frame(3, std::move(four)), Certificate{},
                            Certificate{}, trials, 0.0};
  ex.full_pr = yields_phase_retrieval_vectors(ex.full, tol);
  ex.reduced_pr = yields_phase_retrieval_vectors(ex.reduced, tol);

  // On unit vectors the e3 measurement is a function of the e1 and e2 ones:
  // the three coordinate measurements sum to ||x||^2 = 1.
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    Eigen::Vector3d x;
    do {
      x << gauss(rng), gauss(rng), gauss(rng);
    } while (x.norm() < 0.1);
    x.normalize();
    const double direct = x(2) * x(2);
    const double derived = 1.0 - x(0) * x(0) - x(1) * x(1);
    ex.max_reconstruction_error = std::max(ex.max_reconstruction_error, std::abs(direct - derived));
  }
  return ex;
}

// ===========================================================================
// pop-generic
// ===========================================================================

GenericFamilyExample generic_family_example(std::uint64_t seed, const ToleranceConfig& tol) {
  tol.validate();
  GenericFamilyExample ex{generic_rank_one_family(3, 6, seed, tol), Certificate{}, 0.0, false};
  ex.certificate = norm_retrieval_certificate(ex.sample.family, tol);

  const std::size_t n = ex.sample.family.ambient_dim();
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < ex.sample.family.size(); ++i) {
    sum += ex.sample.coefficients.float_at(i) * ex.sample.family.member(i).projection().to_eigen();
  }
  ex.identity_residual = (sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();

  bool excluded = true;
  for (std::size_t skip = 0; skip < ex.sample.family.size(); ++skip) {
    std::vector<Subspace> members;
    for (std::size_t i = 0; i < ex.sample.family.size(); ++i) {
      if (i != skip) members.push_back(ex.sample.family.member(i));
    }
    excluded = excluded && !identity_in_span(SubspaceFamily(n, std::move(members)), tol);
  }
  ex.proper_subfamilies_excluded = excluded;
  return ex;
}

// ===========================================================================
// naimark-bounds
// ===========================================================================

NaimarkBoundsExample naimark_bounds_example(std::uint64_t seed, const ToleranceConfig& tol) {
  tol.validate();
  NaimarkBoundsExample ex;
  for (std::size_t m = 5; m <= 7; ++m) {
    std::optional<Frame> parseval;
    for (std::uint64_t attempt = 0; attempt < 100 && !parseval; ++attempt) {
      Frame candidate = random_float_frame(3, m, derive_seed(seed, m * 100 + attempt));
      if (!is_full_spark(candidate, tol)) continue;
      // Full spark survives the invertible canonical Parseval map.
      parseval = canonical_parseval(candidate, tol);
    }
    if (!parseval) fail(ErrorCode::ResampleExhausted, "no full spark draw in 100 attempts");
    NaimarkPair pair = naimark_complement(*parseval, tol);
    BoundsCase c{std::move(*parseval), std::move(pair.complement), Certificate{}, Certificate{},
                 Certificate{}};
    c.bounds = naimark_pr_bounds_check(c.frame, tol);
    c.primary_pr = yields_phase_retrieval_vectors(c.frame, tol);
    c.complement_pr = yields_phase_retrieval_vectors(c.complement, tol);
    ex.cases.push_back(std::move(c));
  }
  return ex;
}

std::vector<std::string> example_names() {
  return {"duplicate-vector", "free-measurement", "pop-generic", "naimark-bounds"};
}

}  // namespace framecert
