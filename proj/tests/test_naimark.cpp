#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "framecert/errors.hpp"
#include "framecert/frame.hpp"
#include "framecert/linalg.hpp"
#include "framecert/naimark.hpp"
#include "framecert/spark.hpp"
#include "test_support.hpp"

using namespace framecert;
using namespace framecert::testing;

namespace {

Frame float_frame(std::size_t dim, const std::vector<std::vector<double>>& cols) {
  std::vector<Vector> vectors;
  for (const auto& c : cols) vectors.push_back(Vector::from_doubles(c));
  return Frame(dim, std::move(vectors));
}

Frame exact_frame(std::size_t dim, const std::vector<std::vector<int>>& cols) {
  std::vector<Vector> vectors;
  for (const auto& c : cols) {
    Vector v(dim, Field::Exact);
    for (std::size_t i = 0; i < dim; ++i) v.exact_at(i) = c[i];
    vectors.push_back(std::move(v));
  }
  return Frame(dim, std::move(vectors));
}

/// Parseval frame obtained by canonicalizing a Gaussian frame.
Frame random_parseval(std::size_t n, std::size_t m, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const Matrix a = random_float_matrix(n, m, derive_seed(seed, attempt));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m; ++j) cols.push_back(a.column(j));
    const Frame f(n, std::move(cols));
    if (frame_report(f).is_frame) return canonical_parseval(f);
  }
}

Eigen::MatrixXd synthesis_eigen(const Frame& f) {
  const Frame ff = f.field() == Field::Float ? f : f.to_float();
  return ff.synthesis_matrix().to_eigen();
}

std::size_t eigen_rank(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-10);
  return static_cast<std::size_t>(lu.rank());
}

/// Independent recomputation of both duality sides straight from Eigen.
bool oracle_duality(const Frame& f, const std::vector<std::size_t>& subset) {
  const Eigen::MatrixXd t = synthesis_eigen(f);
  const std::size_t n = f.dim();
  const std::size_t m = f.size();
  Eigen::MatrixXd picked(t.rows(), static_cast<Eigen::Index>(subset.size()));
  for (std::size_t k = 0; k < subset.size(); ++k)
    picked.col(static_cast<Eigen::Index>(k)) = t.col(static_cast<Eigen::Index>(subset[k]));
  const bool independent = eigen_rank(picked) == subset.size();

  bool complement_spans = true;
  if (m > n) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeFullV);
    const Eigen::MatrixXd kernel = svd.matrixV().rightCols(static_cast<Eigen::Index>(m - n));
    std::vector<bool> in_subset(m, false);
    for (std::size_t i : subset) in_subset[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m; ++i)
      if (!in_subset[i]) rest.push_back(i);
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(rest.size()), kernel.cols());
    for (std::size_t k = 0; k < rest.size(); ++k)
      rows.row(static_cast<Eigen::Index>(k)) = kernel.row(static_cast<Eigen::Index>(rest[k]));
    complement_spans = eigen_rank(rows) == m - n;
  }
  return independent == complement_spans;
}

}  // namespace

TEST_CASE("complement of a frozen Parseval frame") {
  const double r = 1.0 / std::sqrt(2.0);
  const Frame f = float_frame(2, {{1.0, 0.0}, {0.0, r}, {0.0, r}});
  const NaimarkPair pair = naimark_complement(f);

  CHECK(pair.complement.dim() == 1);
  CHECK(pair.complement.size() == 3);
  // Hand-solved from the Gram complement: psi = (0, 1/sqrt2, -1/sqrt2).
  CHECK(pair.complement.vec(0).float_at(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pair.complement.vec(1).float_at(0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(pair.complement.vec(2).float_at(0) == doctest::Approx(-r).epsilon(1e-12));

  CHECK(verify_naimark_pair(pair));
  CHECK(frame_report(pair.complement).is_parseval);

  double primary_trace = 0.0;
  double complement_trace = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    primary_trace += pair.primary.vec(i).norm_sq().as_double();
    complement_trace += pair.complement.vec(i).norm_sq().as_double();
  }
  CHECK(primary_trace == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(complement_trace == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("complement preconditions") {
  const Frame basis = float_frame(2, {{1.0, 0.0}, {0.0, 1.0}});
  CHECK_THROWS_AS(naimark_complement(basis), Error);
  const Frame not_parseval = exact_frame(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(naimark_complement(not_parseval), Error);

  const Frame exact_basis = exact_frame(2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(naimark_complement(exact_basis), Error);
}

TEST_CASE("complement of a canonical Parseval frame is Parseval") {
  const Frame p = random_parseval(3, 5, 4001);
  const NaimarkPair pair = naimark_complement(p);
  CHECK(pair.complement.dim() == 2);
  CHECK(pair.complement.size() == 5);
  const FrameReport report = frame_report(pair.complement);
  CHECK(report.is_frame);
  CHECK(report.is_parseval);
  CHECK(verify_naimark_pair(pair));

  const Matrix sum = gram_matrix(pair.primary) + gram_matrix(pair.complement);
  CHECK(max_abs_diff(sum, Matrix::identity(5, Field::Float)) <= 1e-10);
}

TEST_CASE("exact Parseval input keeps an exact primary") {
  const Frame p(3, rational_parseval_vectors(3, 5, 4002));
  REQUIRE(frame_report(p).is_parseval);
  const NaimarkPair pair = naimark_complement(p);
  CHECK(pair.primary.field() == Field::Exact);
  CHECK(pair.complement.field() == Field::Float);
  CHECK(verify_naimark_pair(pair));
}

TEST_CASE("verify rejects permuted complements and accepts rotated ones") {
  const Frame base = canonical_parseval(exact_frame(2, {{1, 0}, {0, 1}, {1, 1}}).to_float());
  const NaimarkPair pair = naimark_complement(base);

  // Swapping complement vectors 0 and 2 breaks the off-diagonal Gram match.
  std::vector<Vector> permuted = {pair.complement.vec(2), pair.complement.vec(1),
                                  pair.complement.vec(0)};
  const NaimarkPair swapped{pair.primary, Frame(1, std::move(permuted))};
  CHECK_FALSE(verify_naimark_pair(swapped));

  // A unitary image of the complement is still a complement.
  const Frame wide = random_parseval(3, 5, 4003);
  const NaimarkPair wide_pair = naimark_complement(wide);
  const double theta = 0.7;
  Matrix rot(2, 2, Field::Float);
  rot.float_at(0, 0) = std::cos(theta);
  rot.float_at(0, 1) = -std::sin(theta);
  rot.float_at(1, 0) = std::sin(theta);
  rot.float_at(1, 1) = std::cos(theta);
  std::vector<Vector> rotated;
  for (std::size_t i = 0; i < 5; ++i) rotated.push_back(rot * wide_pair.complement.vec(i));
  const NaimarkPair unitary{wide_pair.primary, Frame(2, std::move(rotated))};
  CHECK(verify_naimark_pair(unitary));

  // Mismatched vector counts are malformed, not an error.
  const NaimarkPair truncated{wide_pair.primary, Frame(2, {wide_pair.complement.vec(0)})};
  CHECK_FALSE(verify_naimark_pair(truncated));
}

TEST_CASE("li/span duality on frozen subsets") {
  const Frame dup = canonical_parseval(
      exact_frame(3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}})
          .to_float());

  CHECK(li_span_duality_check(dup, {}));
  CHECK(li_span_duality_check(dup, {0, 1}));  // dependent duplicate pair
  CHECK(li_span_duality_check(dup, {0, 2, 3}));
  CHECK(li_span_duality_check(dup, {0, 1, 2, 3, 4, 5}));
  CHECK(oracle_duality(dup, {0, 1}));

  CHECK_THROWS_AS(li_span_duality_check(dup, {6}), Error);
  const Frame skew = exact_frame(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(li_span_duality_check(skew, {0}), Error);
}

TEST_CASE("li/span duality holds on randomized frames and subsets") {
  std::size_t exact_trials = 0;
  for (std::uint64_t trial = 0; trial < 150; ++trial) {
    std::mt19937_64 rng = make_rng(derive_seed(4100, trial));
    std::uniform_int_distribution<std::size_t> n_d(1, 5);
    const std::size_t n = n_d(rng);
    std::uniform_int_distribution<std::size_t> m_d(n, 10);
    const std::size_t m = m_d(rng);

    Frame f = (trial % 3 == 0 && m > n)
                  ? Frame(n, rational_parseval_vectors(n, m, derive_seed(4200, trial)))
                  : random_parseval(n, m, derive_seed(4300, trial));
    if (f.field() == Field::Exact) ++exact_trials;

    std::bernoulli_distribution coin(0.5);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (coin(rng)) subset.push_back(i);

    CHECK(li_span_duality_check(f, subset));
    CHECK(oracle_duality(f, subset));
  }
  CHECK(exact_trials > 10);
}

TEST_CASE("full spark duality") {
  const Frame wide = random_parseval(2, 5, 4400);
  REQUIRE(is_full_spark(wide));
  CHECK(full_spark_duality(wide));
  CHECK(is_full_spark(naimark_complement(wide).complement));

  const Frame dup = canonical_parseval(
      exact_frame(3, {{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}})
          .to_float());
  REQUIRE_FALSE(is_full_spark(dup));
  CHECK(full_spark_duality(dup));
  CHECK_FALSE(is_full_spark(naimark_complement(dup).complement));

  // Unit-norm vector in a Parseval frame forces a zero complement vector.
  const double r = 1.0 / std::sqrt(2.0);
  const Frame unit_norm = float_frame(2, {{1.0, 0.0}, {0.0, r}, {0.0, r}});
  CHECK_FALSE(is_full_spark(unit_norm));
  CHECK(full_spark_duality(unit_norm));

  CHECK_THROWS_AS(full_spark_duality(float_frame(2, {{1.0, 0.0}, {0.0, 1.0}})), Error);
}

TEST_CASE("full spark duality in exact arithmetic") {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    std::mt19937_64 rng = make_rng(derive_seed(4500, trial));
    std::uniform_int_distribution<std::size_t> n_d(1, 4);
    const std::size_t n = n_d(rng);
    std::uniform_int_distribution<std::size_t> m_d(n + 1, 8);
    const std::size_t m = m_d(rng);
    const Frame f(n, rational_parseval_vectors(n, m, derive_seed(4600, trial)));
    CHECK(full_spark_duality(f));
    CHECK(full_spark_duality(f.to_float()));
    CHECK(is_full_spark(f) == is_full_spark(f.to_float()));
  }

  // Engineered exact non-full-spark Parseval: two orthogonal blocks, so any
  // two vectors from the same block sit in a one-dimensional subspace.
  const Matrix q1 = rational_orthogonal(3, 4700);
  const Matrix q2 = rational_orthogonal(3, 4701);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < 3; ++j) {
    Vector v(2, Field::Exact);
    v.exact_at(0) = q1.exact_at(0, j);
    cols.push_back(std::move(v));
  }
  for (std::size_t j = 0; j < 3; ++j) {
    Vector v(2, Field::Exact);
    v.exact_at(1) = q2.exact_at(0, j);
    cols.push_back(std::move(v));
  }
  const Frame block(2, std::move(cols));
  REQUIRE(frame_report(block).is_parseval);
  REQUIRE_FALSE(is_full_spark(block));
  CHECK(full_spark_duality(block));
}

TEST_CASE("double complement recovers the Gram matrix") {
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    const Frame f = random_parseval(3, 5, derive_seed(4800, trial));
    const NaimarkPair pair = naimark_complement(f);
    const NaimarkPair again = naimark_complement(pair.complement);
    CHECK(again.complement.dim() == 3);
    CHECK(max_abs_diff(gram_matrix(again.complement), gram_matrix(f)) <= 1e-8);

    double primary_trace = 0.0;
    double complement_trace = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      primary_trace += pair.primary.vec(i).norm_sq().as_double();
      complement_trace += pair.complement.vec(i).norm_sq().as_double();
    }
    CHECK(primary_trace == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(complement_trace == doctest::Approx(2.0).epsilon(1e-8));
  }
}

TEST_CASE("phase retrieval vector-count bounds") {
  // M = 5 = 2N - 1 at N = 3: both sides full spark, bounds hold.
  Frame f = random_parseval(3, 5, 4900);
  REQUIRE(is_full_spark(f));
  Certificate cert = naimark_pr_bounds_check(f);
  CHECK(cert.yes());
  CHECK(cert.method == Method::NaimarkBounds);
  CHECK(*cert.value == 5);
  CHECK(cert.assumptions.size() == 2);
  REQUIRE(!cert.notes.empty());
  CHECK(cert.notes.front().find("2*dim") != std::string::npos);

  // M = 4 at N = 2: bounds 3 <= 4 <= 5 hold with both hypotheses true.
  const Frame mid = random_parseval(2, 4, 4901);
  REQUIRE(is_full_spark(mid));
  const Certificate mid_cert = naimark_pr_bounds_check(mid);
  CHECK(mid_cert.yes());
  CHECK(mid_cert.assumptions.size() == 2);

  // M = 8 at N = 3: complement lives in dimension 5 and has too few vectors
  // for phase retrieval, so the hypothesis fails and the bound is vacuous.
  const Frame big = random_parseval(3, 8, 4902);
  REQUIRE(is_full_spark(big));
  const Certificate vac = naimark_pr_bounds_check(big);
  CHECK(vac.yes());
  REQUIRE(!vac.notes.empty());
  CHECK(vac.notes.front().find("hypothesis fails") != std::string::npos);

  // Exact full-spark Parseval frame keeps exact arithmetic.
  const Frame exact_f(3, rational_parseval_vectors(3, 5, 4903));
  if (is_full_spark(exact_f)) {
    const Certificate exact_cert = naimark_pr_bounds_check(exact_f);
    CHECK(exact_cert.yes());
    CHECK(exact_cert.arithmetic_mode == Field::Exact);
  }

  const Frame skew = exact_frame(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_THROWS_AS(naimark_pr_bounds_check(skew), Error);
}
