#include "framecert/falsifier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "framecert/linalg.hpp"
#include "framecert/util.hpp"

namespace framecert {

namespace {

// First kernel direction of the span of the chosen columns, or nullopt when
// they span the whole space. Exact frames give exact directions.
std::optional<Vector> direction_orthogonal_to(const Frame& f,
                                              const std::vector<std::size_t>& indices,
                                              const ToleranceConfig& tol) {
  const Matrix cols = f.synthesis_matrix().select_columns(indices);
  Matrix basis = cols.transpose();  // kernel of this = orthogonal complement
  const Matrix kernel = f.field() == Field::Exact
                            ? null_space_basis(basis, tol)
                            : orthonormal_kernel_basis(basis, tol);
  if (kernel.cols() == 0) return std::nullopt;
  return kernel.column(0);
}

}  // namespace

WitnessPair make_frame_witness(const Frame& f, Vector x, Vector y) {
  if (x.dim() != f.dim() || y.dim() != f.dim()) {
    fail(ErrorCode::DimensionMismatch, "witness vectors have wrong length");
  }
  WitnessPair w;
  const bool exact = f.field() == Field::Exact && x.field() == Field::Exact &&
                     y.field() == Field::Exact;
  if (exact) {
    const Vector mx = analysis_apply(f, x);
    const Vector my = analysis_apply(f, y);
    Rational gap(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Rational d = abs(abs(mx.exact_at(i)) - abs(my.exact_at(i)));
      if (d > gap) gap = d;
    }
    w.measurement_gap = gap.get_d();
    const double nx = std::sqrt(x.norm_sq().exact().get_d());
    const double ny = std::sqrt(y.norm_sq().exact().get_d());
    w.norm_gap = std::abs(nx - ny);
    const double minus = std::sqrt((x - y).norm_sq().exact().get_d());
    const double plus = std::sqrt((x + y).norm_sq().exact().get_d());
    w.phase_gap = std::min(minus, plus);
  } else {
    const Frame ff = f.to_float();
    const Vector xf = x.to_float();
    const Vector yf = y.to_float();
    const Vector mx = analysis_apply(ff, xf);
    const Vector my = analysis_apply(ff, yf);
    double gap = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      gap = std::max(gap, std::abs(std::abs(mx.float_at(i)) - std::abs(my.float_at(i))));
    }
    w.measurement_gap = gap;
    w.norm_gap = std::abs(xf.norm() - yf.norm());
    w.phase_gap = std::min((xf - yf).norm(), (xf + yf).norm());
  }
  w.x = std::move(x);
  w.y = std::move(y);
  return w;
}

std::vector<std::size_t> partition_complement(std::size_t total,
                                              const std::vector<std::size_t>& subset) {
  std::vector<bool> used(total, false);
  for (std::size_t i : subset) {
    if (i >= total) fail(ErrorCode::BadPartition, "partition index out of range");
    if (used[i]) fail(ErrorCode::BadPartition, "partition repeats an index");
    used[i] = true;
  }
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < total; ++i) {
    if (!used[i]) complement.push_back(i);
  }
  return complement;
}

WitnessPair pr_witness_from_partition(const Frame& f, const std::vector<std::size_t>& subset,
                                      const ToleranceConfig& tol) {
  tol.validate();
  const std::vector<std::size_t> complement = partition_complement(f.size(), subset);
  const auto u = direction_orthogonal_to(f, subset, tol);
  if (!u) fail(ErrorCode::NotAViolation, "subset side spans the space");
  const auto v = direction_orthogonal_to(f, complement, tol);
  if (!v) fail(ErrorCode::NotAViolation, "complement side spans the space");
  return make_frame_witness(f, *u + *v, *u - *v);
}

// ============================================================================
// Numerical search for norm-retrieval violations
// ============================================================================

namespace {

/// f(x, y) = sum_i (|P_i x|^2 - |P_i y|^2)^2 and its analytic gradient; the
/// per-term x-gradient is 4 r_i P_i x since P_i is symmetric idempotent.
struct NrObjective {
  std::vector<Eigen::MatrixXd> projections;

  explicit NrObjective(const SubspaceFamily& fam) {
    projections.reserve(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
      projections.push_back(fam.member(i).projection().to_eigen());
    }
  }

  double value(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    double f = 0.0;
    for (const Eigen::MatrixXd& p : projections) {
      const double r = (p * x).squaredNorm() - (p * y).squaredNorm();
      f += r * r;
    }
    return f;
  }

  void gradients(const Eigen::VectorXd& x, const Eigen::VectorXd& y, Eigen::VectorXd& gx,
                 Eigen::VectorXd& gy) const {
    gx.setZero(x.size());
    gy.setZero(y.size());
    for (const Eigen::MatrixXd& p : projections) {
      const Eigen::VectorXd px = p * x;
      const Eigen::VectorXd py = p * y;
      const double r = px.squaredNorm() - py.squaredNorm();
      gx += 4.0 * r * px;
      gy -= 4.0 * r * py;
    }
  }
};

}  // namespace

std::optional<WitnessPair> nr_violation_search(const SubspaceFamily& fam,
                                               const SearchConfig& cfg) {
  cfg.validate();
  const SubspaceFamily ff = fam.field() == Field::Float ? fam : fam.to_float();
  const NrObjective obj(ff);
  const std::size_t n = ff.ambient_dim();

  struct RestartResult {
    double residual = 0.0;
    Eigen::VectorXd x;
    Eigen::VectorXd y;
  };
  std::vector<RestartResult> results(cfg.restarts);

  parallel_for(cfg.restarts, cfg.threads, [&](std::size_t r) {
    std::mt19937_64 rng = make_rng(derive_seed(cfg.seed, r));
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto draw_unit = [&]() {
      Eigen::VectorXd v(n);
      double len = 0.0;
      do {
        for (std::size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = gauss(rng);
        len = v.norm();
      } while (!(len > 0.0));
      return Eigen::VectorXd(v / len);
    };

    Eigen::VectorXd x = draw_unit();
    Eigen::VectorXd y = (1.0 + cfg.delta) * draw_unit();
    double f = obj.value(x, y);
    double step = cfg.step;
    Eigen::VectorXd gx(n), gy(n);
    for (std::size_t iter = 0;
         iter < cfg.max_iters && f > cfg.residual_accept && step > 1e-18; ++iter) {
      obj.gradients(x, y, gx, gy);
      Eigen::VectorXd xc = x - step * gx;
      Eigen::VectorXd yc = y - step * gy;
      const double xn = xc.norm();
      const double yn = yc.norm();
      if (!(xn > 0.0) || !(yn > 0.0)) {
        step *= 0.5;
        continue;
      }
      xc /= xn;
      yc *= (1.0 + cfg.delta) / yn;
      const double fc = obj.value(xc, yc);
      if (fc < f) {
        x = std::move(xc);
        y = std::move(yc);
        f = fc;
      } else {
        step *= 0.5;
      }
    }
    results[r] = {f, std::move(x), std::move(y)};
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < cfg.restarts; ++r) {
    if (results[r].residual < results[best].residual) best = r;
  }
  if (!(results[best].residual <= cfg.residual_accept)) return std::nullopt;
  return make_family_witness(ff, Vector::from_eigen(results[best].x),
                             Vector::from_eigen(results[best].y));
}

double gradient_check(const SubspaceFamily& fam, const Vector& x, const Vector& y) {
  const std::size_t n = fam.ambient_dim();
  if (x.dim() != n || y.dim() != n) {
    fail(ErrorCode::DimensionMismatch, "probe vectors have wrong length");
  }
  const SubspaceFamily ff = fam.field() == Field::Float ? fam : fam.to_float();
  const NrObjective obj(ff);
  const Eigen::VectorXd ex = x.to_eigen();
  const Eigen::VectorXd ey = y.to_eigen();
  Eigen::VectorXd gx(n), gy(n);
  obj.gradients(ex, ey, gx, gy);

  const double h = 1e-5;
  Eigen::VectorXd nx(n), ny(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    Eigen::VectorXd xp = ex, xm = ex;
    xp[k] += h;
    xm[k] -= h;
    nx[k] = (obj.value(xp, ey) - obj.value(xm, ey)) / (2.0 * h);
    Eigen::VectorXd yp = ey, ym = ey;
    yp[k] += h;
    ym[k] -= h;
    ny[k] = (obj.value(ex, yp) - obj.value(ex, ym)) / (2.0 * h);
  }
  const double denom =
      std::max({1.0, gx.lpNorm<Eigen::Infinity>(), gy.lpNorm<Eigen::Infinity>(),
                nx.lpNorm<Eigen::Infinity>(), ny.lpNorm<Eigen::Infinity>()});
  const double err =
      std::max((gx - nx).lpNorm<Eigen::Infinity>(), (gy - ny).lpNorm<Eigen::Infinity>());
  return err / denom;
}

}  // namespace framecert
