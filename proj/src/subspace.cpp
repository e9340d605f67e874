#include "framecert/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/linalg.hpp"
#include "framecert/spark.hpp"
#include "framecert/util.hpp"

namespace framecert {

namespace {

/// Column-major stacking of a square matrix into a vector of its own field.
Vector vec_of(const Matrix& m) {
  Vector v(m.rows() * m.cols(), m.field());
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) v.set(k++, m.at(i, j));
  }
  return v;
}

Matrix sum_of_projections(const SubspaceFamily& fam) {
  Matrix sum = fam.member(0).projection();
  for (std::size_t i = 1; i < fam.size(); ++i) sum = sum + fam.member(i).projection();
  return sum;
}

Matrix joint_span_columns(const SubspaceFamily& fam, std::size_t skip) {
  Matrix joint(fam.ambient_dim(), 0, fam.field());
  bool first = true;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (i == skip) continue;
    joint = first ? fam.member(i).basis() : joint.hstack(fam.member(i).basis());
    first = false;
  }
  return joint;
}

bool sums_to_identity(const SubspaceFamily& fam, const ToleranceConfig& tol) {
  const Matrix sum = sum_of_projections(fam);
  if (fam.field() == Field::Exact) {
    return sum == Matrix::identity(fam.ambient_dim(), Field::Exact);
  }
  return max_abs_diff(sum, Matrix::identity(fam.ambient_dim(), Field::Float)) <= tol.witness_tol;
}

Matrix kernel_basis_for(const Matrix& m, Field field, const ToleranceConfig& tol) {
  return field == Field::Exact ? null_space_basis(m, tol) : orthonormal_kernel_basis(m, tol);
}

}  // namespace

// === Subspace ================================================================

Subspace::Subspace(const Matrix& span, const ToleranceConfig& tol) {
  tol.validate();
  if (span.rows() == 0) fail(ErrorCode::RangeError, "ambient dimension must be at least 1");
  if (span.field() == Field::Exact) {
    Matrix cleaned = span;
    cleaned.canonicalize_exact();
    const std::vector<std::size_t> keep = independent_columns(cleaned, tol);
    if (keep.empty()) fail(ErrorCode::ZeroSubspace, "spanning set is all zero");
    basis_ = cleaned.select_columns(keep);
  } else {
    basis_ = orthonormal_colspace_basis(span, tol);
    if (basis_.cols() == 0) fail(ErrorCode::ZeroSubspace, "spanning set is numerically zero");
  }
  projection_ = projection_onto_colspace(basis_, tol);
}

Subspace Subspace::from_vectors(std::size_t ambient_dim, const std::vector<Vector>& spanning,
                                const ToleranceConfig& tol) {
  if (spanning.empty()) fail(ErrorCode::ZeroSubspace, "a subspace needs a spanning vector");
  for (const Vector& v : spanning) {
    if (v.dim() != ambient_dim) {
      fail(ErrorCode::DimensionMismatch, "spanning vector has wrong length");
    }
  }
  return Subspace(Matrix::from_columns(spanning), tol);
}

Subspace Subspace::to_float() const {
  return Subspace(basis_.to_float());
}

// === SubspaceFamily ==========================================================

SubspaceFamily::SubspaceFamily(std::size_t ambient_dim, std::vector<Subspace> members)
    : ambient_dim_(ambient_dim), members_(std::move(members)) {
  if (ambient_dim_ == 0) fail(ErrorCode::RangeError, "ambient dimension must be at least 1");
  if (members_.empty()) fail(ErrorCode::TooFewVectors, "a family needs at least one member");
  const Field f = members_.front().field();
  for (const Subspace& s : members_) {
    if (s.ambient_dim() != ambient_dim_) {
      fail(ErrorCode::DimensionMismatch, "family members live in different spaces");
    }
    if (s.field() != f) fail(ErrorCode::FieldMismatch, "family members mix arithmetic modes");
  }
}

const Subspace& SubspaceFamily::member(std::size_t i) const {
  if (i >= members_.size()) fail(ErrorCode::SubsetOutOfRange, "member index out of range");
  return members_[i];
}

std::size_t SubspaceFamily::dims_sum() const {
  std::size_t total = 0;
  for (const Subspace& s : members_) total += s.dim();
  return total;
}

SubspaceFamily SubspaceFamily::to_float() const {
  std::vector<Subspace> floated;
  floated.reserve(members_.size());
  for (const Subspace& s : members_) floated.push_back(s.to_float());
  return SubspaceFamily(ambient_dim_, std::move(floated));
}

// === Measurements ============================================================

Vector measurement_map(const SubspaceFamily& fam, const Vector& x) {
  if (x.dim() != fam.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "measurement input has wrong length");
  }
  if (x.field() != fam.field()) {
    fail(ErrorCode::FieldMismatch, "measurement input is in the wrong arithmetic mode");
  }
  Vector out(fam.size(), fam.field());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    out.set(i, (fam.member(i).projection() * x).norm_sq());
  }
  return out;
}

WitnessPair make_family_witness(const SubspaceFamily& fam, Vector x, Vector y) {
  if (x.dim() != fam.ambient_dim() || y.dim() != fam.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "witness vectors have wrong length");
  }
  WitnessPair w;
  const bool exact = fam.field() == Field::Exact && x.field() == Field::Exact &&
                     y.field() == Field::Exact;
  if (exact) {
    const Vector mx = measurement_map(fam, x);
    const Vector my = measurement_map(fam, y);
    double gap = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (mx.exact_at(i) == my.exact_at(i)) continue;  // exactly equal: no rounding noise
      const Rational d = mx.exact_at(i) - my.exact_at(i);
      gap = std::max(gap, std::abs(d.get_d()));
    }
    w.measurement_gap = gap;
    const Rational x_sq = x.norm_sq().exact();
    const Rational y_sq = y.norm_sq().exact();
    w.norm_gap = x_sq == y_sq ? 0.0 : std::abs(std::sqrt(x_sq.get_d()) - std::sqrt(y_sq.get_d()));
    const double minus = std::sqrt((x - y).norm_sq().exact().get_d());
    const double plus = std::sqrt((x + y).norm_sq().exact().get_d());
    w.phase_gap = std::min(minus, plus);
  } else {
    const SubspaceFamily ff = fam.field() == Field::Float ? fam : fam.to_float();
    const Vector xf = x.to_float();
    const Vector yf = y.to_float();
    const Vector mx = measurement_map(ff, xf);
    const Vector my = measurement_map(ff, yf);
    double gap = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      gap = std::max(gap, std::abs(mx.float_at(i) - my.float_at(i)));
    }
    w.measurement_gap = gap;
    w.norm_gap = std::abs(xf.norm() - yf.norm());
    w.phase_gap = std::min((xf - yf).norm(), (xf + yf).norm());
  }
  w.x = std::move(x);
  w.y = std::move(y);
  return w;
}

// === Identity in span ========================================================

std::optional<Vector> identity_in_span(const SubspaceFamily& fam, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = fam.ambient_dim();
  const std::size_t m = fam.size();
  Matrix system(n * n, m, fam.field());
  for (std::size_t j = 0; j < m; ++j) {
    system.set_column(j, vec_of(fam.member(j).projection()));
  }
  const Vector target = vec_of(Matrix::identity(n, fam.field()));

  if (fam.field() == Field::Exact) {
    return solve_exact(system, target);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system.to_eigen(),
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector a = Vector::from_eigen(svd.solve(target.to_eigen()));
  Matrix sum = fam.member(0).projection().scaled(a.at(0));
  for (std::size_t i = 1; i < m; ++i) {
    sum = sum + fam.member(i).projection().scaled(a.at(i));
  }
  if (max_abs_diff(sum, Matrix::identity(n, Field::Float)) > tol.witness_tol) {
    return std::nullopt;
  }
  return a;
}

// === Norm retrieval cascade ==================================================

Certificate norm_retrieval_certificate(const SubspaceFamily& fam, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = fam.ambient_dim();
  Certificate cert;
  cert.arithmetic_mode = fam.field();

  if (auto a = identity_in_span(fam, tol)) {
    cert.verdict = Verdict::Yes;
    cert.method = Method::IdentityInSpan;
    cert.coefficients = std::move(*a);
    cert.notes.push_back("identity is a linear combination of the projections");
    return cert;
  }

  bool all_rank_one = true;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam.member(i).dim() != 1) {
      all_rank_one = false;
      break;
    }
  }
  if (all_rank_one && fam.size() == n) {
    // With the identity not in the span, N rank-one members cannot be
    // pairwise orthogonal, and exactly-N generators need orthogonality.
    cert.verdict = Verdict::No;
    cert.method = Method::Orthogonality;
    cert.pair = construct_nr_witness(fam, tol);
    for (std::size_t i = 0; i < n && !cert.subset; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Matrix prod = fam.member(i).projection() * fam.member(j).projection();
        const bool overlap = fam.field() == Field::Exact ? !prod.is_zero()
                                                         : prod.max_abs() > tol.witness_tol;
        if (overlap) {
          cert.subset = std::vector<std::size_t>{i, j};
          break;
        }
      }
    }
    cert.notes.push_back(
        "exactly dim rank-one members do norm retrieval only when pairwise orthogonal");
    return cert;
  }

  if (fam.dims_sum() == n) {
    cert.method = Method::SumProjectionsIdentity;
    if (sums_to_identity(fam, tol)) {
      cert.verdict = Verdict::Yes;
      cert.notes.push_back("projections sum to the identity");
    } else {
      cert.verdict = Verdict::No;
      cert.pair = construct_nr_witness(fam, tol);
      cert.notes.push_back(
          "dimensions sum to the ambient dimension but projections do not sum to the identity");
    }
    return cert;
  }

  const Matrix joint = joint_span_columns(fam, fam.size());
  if (rank(joint, tol) < n) {
    cert.verdict = Verdict::No;
    cert.method = Method::SpanDeficit;
    const Matrix kernel = kernel_basis_for(joint.transpose(), fam.field(), tol);
    cert.pair = make_family_witness(fam, kernel.column(0), Vector(n, fam.field()));
    cert.notes.push_back(
        "members do not jointly span the space; a vector orthogonal to all of them measures like zero");
    return cert;
  }

  cert.verdict = Verdict::Unknown;
  cert.method = Method::Undecided;
  cert.notes.push_back("no decision rule applies; escalate to the optimization falsifier");
  return cert;
}

// === Constructive falsifier ==================================================

WitnessPair construct_nr_witness(const SubspaceFamily& fam, const ToleranceConfig& tol) {
  tol.validate();
  const std::size_t n = fam.ambient_dim();
  const std::size_t m = fam.size();
  const bool exact = fam.field() == Field::Exact;
  if (fam.dims_sum() != n) {
    fail(ErrorCode::PreconditionViolated, "member dimensions must sum to the ambient dimension");
  }
  if (sums_to_identity(fam, tol)) {
    fail(ErrorCode::PreconditionViolated,
         "projections sum to the identity; the family does norm retrieval");
  }

  // Degenerate branch: the members miss part of the space, so a vector
  // orthogonal to all of them has the measurements of the zero vector.
  const Matrix joint = joint_span_columns(fam, m);
  if (rank(joint, tol) < n) {
    const Matrix kernel = kernel_basis_for(joint.transpose(), fam.field(), tol);
    return make_family_witness(fam, kernel.column(0), Vector(n, fam.field()));
  }

  // Main branch. For a direction d orthogonal to every member except the
  // j-th, the pair (v, v + d) agrees on all measurements away from j, and
  // v = -P_j d / 2 + t (I - P_j) d settles member j identically in t:
  // P_j v = -P_j d / 2 and P_j (v + d) = P_j d / 2 have equal norms. The
  // squared-norm gap is ||d||^2 - ||P_j d||^2 + 2 t <(I - P_j) d, d>, so it
  // grows with the leak r = (I - P_j) d; r vanishes for every j and d only
  // when the members are pairwise orthogonal, which the precondition rules
  // out. Pick the (j, d) with the largest relative leak.
  std::size_t best_j = 0;
  std::size_t best_col = 0;
  Matrix best_kernel(n, 0, fam.field());
  double best_score = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Matrix kernel =
        kernel_basis_for(joint_span_columns(fam, j).transpose(), fam.field(), tol);
    const Matrix leak = kernel - fam.member(j).projection() * kernel;
    for (std::size_t col = 0; col < kernel.cols(); ++col) {
      const double score = leak.column(col).norm_sq().as_double() /
                           kernel.column(col).norm_sq().as_double();
      if (score > best_score) {
        best_score = score;
        best_j = j;
        best_col = col;
        best_kernel = kernel;
      }
    }
  }
  if (!(best_score > 0.0)) {
    fail(ErrorCode::Internal, "members are pairwise orthogonal despite a non-identity sum");
  }

  const Matrix& pj = fam.member(best_j).projection();
  Vector d = best_kernel.column(best_col);
  if (!exact) d = d.scaled(Scalar(1.0 / d.norm()));
  const Vector pjd = pj * d;
  const Vector leak = d - pjd;

  Vector v;
  if (exact) {
    // t = 1/2 keeps the entries rational: v = d/2 - P_j d.
    v = d.scaled(Scalar(Rational(1, 2))) - pjd;
  } else {
    // Amplify the gap: with t ~ 1/||r|| the norm gap is linear in ||r||
    // while all entries stay O(1), so the float measurement gap stays at
    // rounding scale. The floor keeps t from magnifying rounding noise.
    const double t = 2.0 / std::max(leak.norm(), 1e-6);
    v = leak.scaled(Scalar(t)) - pjd.scaled(Scalar(0.5));
  }
  return make_family_witness(fam, v, v + d);
}

// === Orthogonal complements ==================================================

SubspaceFamily complement_family(const SubspaceFamily& fam, const ToleranceConfig& tol) {
  tol.validate();
  std::vector<Subspace> complements;
  complements.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Matrix kernel =
        kernel_basis_for(fam.member(i).basis().transpose(), fam.field(), tol);
    if (kernel.cols() == 0) {
      fail(ErrorCode::ZeroSubspace, "complement of the whole space is the zero subspace");
    }
    complements.emplace_back(kernel, tol);
  }
  return SubspaceFamily(fam.ambient_dim(), std::move(complements));
}

Certificate complements_pr_via_nr(const SubspaceFamily& fam, const Certificate& nr_of_complements) {
  if (nr_of_complements.pair && nr_of_complements.pair->x.dim() != fam.ambient_dim()) {
    fail(ErrorCode::DimensionMismatch, "witness pair does not match the family's ambient space");
  }
  Certificate cert = nr_of_complements;
  cert.method = Method::ComplementNrEquivalence;
  cert.assumptions.push_back(
      "the primary family yields phase retrieval (asserted by caller, not checked)");
  cert.notes.push_back(std::string("norm-retrieval evidence for the complements: ") +
                       method_name(nr_of_complements.method));
  if (cert.verdict == Verdict::No) {
    cert.notes.push_back("a norm-retrieval violation is also a phase-retrieval violation");
  } else if (cert.verdict == Verdict::Unknown) {
    cert.notes.push_back("norm retrieval undecided, so phase retrieval stays undecided");
  }
  return cert;
}

Certificate complement_pr_from_identity_coefficients(const SubspaceFamily& fam, const Vector& a,
                                                     const ToleranceConfig& tol) {
  tol.validate();
  if (a.dim() != fam.size()) {
    fail(ErrorCode::BadCoefficients, "coefficient count differs from family size");
  }
  if (a.field() != fam.field()) {
    fail(ErrorCode::FieldMismatch, "coefficients are in the wrong arithmetic mode");
  }
  const std::size_t n = fam.ambient_dim();
  Matrix sum = fam.member(0).projection().scaled(a.at(0));
  for (std::size_t i = 1; i < fam.size(); ++i) {
    sum = sum + fam.member(i).projection().scaled(a.at(i));
  }
  if (max_abs_diff(sum, Matrix::identity(n, fam.field())) > tol.witness_tol) {
    fail(ErrorCode::BadCoefficients, "coefficients do not reproduce the identity");
  }

  double total = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) total += a.entry_as_double(i);

  Certificate cert;
  cert.arithmetic_mode = fam.field();
  cert.method = Method::IdentityCoefficientSum;
  cert.coefficients = a;
  cert.assumptions.push_back(
      "the family yields phase retrieval (asserted by caller, not checked)");
  if (std::abs(total - 1.0) > tol.witness_tol) {
    cert.verdict = Verdict::Yes;
    cert.notes.push_back("identity coefficients sum to " + std::to_string(total) +
                         ", not 1; the orthogonal complements yield phase retrieval");
  } else {
    cert.verdict = Verdict::Unknown;
    cert.notes.push_back("identity coefficients sum to 1 within tolerance; no conclusion");
  }
  return cert;
}

// === Generic rank-one families ==============================================

RankOneFamily generic_rank_one_family(std::size_t n, std::size_t m, std::uint64_t seed,
                                      const ToleranceConfig& tol) {
  tol.validate();
  if (n == 0) fail(ErrorCode::RangeError, "dimension must be at least 1");
  if (m < 2 * n || m > n * (n + 1) / 2) {
    fail(ErrorCode::RangeError, "need 2*dim <= count <= dim*(dim+1)/2");
  }

  const Vector target = vec_of(Matrix::identity(n, Field::Float));
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, attempt));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vector> phis;
    phis.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      Vector v(n, Field::Float);
      for (std::size_t i = 0; i < n; ++i) v.float_at(i) = gauss(rng);
      phis.push_back(std::move(v));
    }
    const Frame phi(n, std::move(phis));
    if (!frame_report(phi, tol).is_frame) continue;
    if (!is_full_spark(phi, tol, std::max<std::size_t>(m, kDefaultMaxEnumeration))) continue;

    const Matrix inv_root = inv_sqrt_psd(phi.frame_operator(), tol);
    std::vector<Vector> psis;
    std::vector<Subspace> spans;
    Vector coefficients(m, Field::Float);
    psis.reserve(m);
    spans.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Vector r = inv_root * phi.vec(j);
      const double len_sq = r.norm_sq().as_double();
      coefficients.float_at(j) = len_sq;
      psis.push_back(r.scaled(Scalar(1.0 / std::sqrt(len_sq))));
      spans.emplace_back(Subspace::from_vectors(n, {psis.back()}, tol));
    }
    const SubspaceFamily family(n, std::move(spans));

    // The projections must be linearly independent as matrices...
    Matrix vectorized(n * n, m, Field::Float);
    for (std::size_t j = 0; j < m; ++j) {
      vectorized.set_column(j, vec_of(family.member(j).projection()));
    }
    if (rank(vectorized, tol) != m) continue;

    // ...reproduce the identity with the computed positive coefficients...
    Matrix sum = family.member(0).projection().scaled(coefficients.at(0));
    for (std::size_t j = 1; j < m; ++j) {
      sum = sum + family.member(j).projection().scaled(coefficients.at(j));
    }
    if (max_abs_diff(sum, Matrix::identity(n, Field::Float)) > tol.witness_tol) continue;
    bool positive = true;
    for (std::size_t j = 0; j < m && positive; ++j) {
      positive = coefficients.float_at(j) > tol.witness_tol;
    }
    if (!positive) continue;

    // ...and no proper subfamily may reach the identity (checked on the
    // maximal ones: appending vec(I) to any m-1 columns must raise the rank).
    bool exclusive = true;
    for (std::size_t skip = 0; skip < m && exclusive; ++skip) {
      Matrix sub(n * n, m, Field::Float);
      std::size_t col = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == skip) continue;
        sub.set_column(col++, vectorized.column(j));
      }
      sub.set_column(m - 1, target);
      exclusive = rank(sub, tol) == m;
    }
    if (!exclusive) continue;

    return RankOneFamily{Frame(n, std::move(psis)), family, std::move(coefficients)};
  }
  fail(ErrorCode::ResampleExhausted, "no generic family found in 100 attempts");
}

}  // namespace framecert
