#include "framecert/frame.hpp"

#include <cmath>

#include "framecert/errors.hpp"

namespace framecert {

Frame::Frame(std::size_t dim, std::vector<Vector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ == 0) fail(ErrorCode::RangeError, "frame dimension must be at least 1");
  if (vectors_.empty()) fail(ErrorCode::TooFewVectors, "a frame needs at least one vector");
  const Field f = vectors_.front().field();
  for (Vector& v : vectors_) {
    if (v.dim() != dim_) fail(ErrorCode::DimensionMismatch, "frame vector has wrong length");
    if (v.field() != f) fail(ErrorCode::FieldMismatch, "frame vectors mix arithmetic modes");
    // Caller-built rationals may be non-canonical, which breaks exact compares.
    v.canonicalize_exact();
  }
}

const Vector& Frame::vec(std::size_t i) const {
  if (i >= vectors_.size()) fail(ErrorCode::SubsetOutOfRange, "vector index out of range");
  return vectors_[i];
}

const Matrix& Frame::synthesis_matrix() const {
  return synthesis_.get([&] { return Matrix::from_columns(vectors_); });
}

const Matrix& Frame::frame_operator() const {
  return operator_.get([&] {
    const Matrix& t_star = synthesis_matrix();
    return t_star * t_star.transpose();
  });
}

std::pair<double, double> Frame::operator_bounds() const {
  return bounds_.get([&] {
    ToleranceConfig tol;
    // The frame operator is symmetric by construction; a loose symmetry
    // tolerance only guards against arithmetic corruption.
    const auto [values, vectors] = symmetric_eigen(frame_operator().to_float(), tol);
    (void)vectors;
    return std::make_pair(values.back(), values.front());
  });
}

bool Frame::spans_exactly() const {
  return exact_spans_.get([&] {
    if (field() != Field::Exact) fail(ErrorCode::FieldMismatch, "exact span check on float frame");
    return rank(synthesis_matrix()) == dim_;
  });
}

Frame Frame::subframe(const std::vector<std::size_t>& indices) const {
  std::vector<Vector> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(vec(i));
  return Frame(dim_, std::move(out));
}

Frame Frame::to_float() const {
  if (field() == Field::Float) return *this;
  std::vector<Vector> out;
  out.reserve(vectors_.size());
  for (const Vector& v : vectors_) out.push_back(v.to_float());
  return Frame(dim_, std::move(out));
}

Vector analysis_apply(const Frame& f, const Vector& x) {
  if (x.dim() != f.dim()) fail(ErrorCode::DimensionMismatch, "input vector has wrong length");
  return f.analysis_matrix() * x;
}

Vector synthesis_apply(const Frame& f, const Vector& coeffs) {
  if (coeffs.dim() != f.size()) fail(ErrorCode::DimensionMismatch, "coefficient list has wrong length");
  return f.synthesis_matrix() * coeffs;
}

Matrix frame_operator(const Frame& f) { return f.frame_operator(); }

FrameReport frame_report(const Frame& f, const ToleranceConfig& tol) {
  tol.validate();
  FrameReport report;
  const auto [lo, hi] = f.operator_bounds();
  report.lower_bound = lo;
  report.upper_bound = hi;
  if (f.field() == Field::Exact) {
    report.is_frame = f.spans_exactly();
    const Matrix& s = f.frame_operator();
    bool tight = true;
    const Rational c = s.exact_at(0, 0);
    for (std::size_t i = 0; i < s.rows() && tight; ++i) {
      for (std::size_t j = 0; j < s.cols() && tight; ++j) {
        if (s.exact_at(i, j) != (i == j ? c : Rational(0))) tight = false;
      }
    }
    report.is_tight = tight && sgn(c) > 0;
    report.is_parseval = report.is_tight && c == Rational(1);
  } else {
    report.is_frame = hi > 0 && lo > tol.rank_rel_tol * hi;
    report.is_tight = hi > 0 && std::abs(hi - lo) <= kParsevalRelTol * hi;
    const double id_gap =
        max_abs_diff(f.frame_operator(), Matrix::identity(f.dim(), Field::Float));
    report.is_parseval = id_gap <= kParsevalRelTol;
  }
  return report;
}

Frame canonical_parseval(const Frame& f, const ToleranceConfig& tol) {
  if (!frame_report(f, tol).is_frame) {
    fail(ErrorCode::NotAFrame, "vectors do not span the ambient space");
  }
  const Matrix r = inv_sqrt_psd(f.frame_operator().to_float(), tol);
  std::vector<Vector> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(r * f.vec(i).to_float());
  return Frame(f.dim(), std::move(out));
}

bool verify_reconstruction(const Frame& f, const Vector& x, const ToleranceConfig& tol) {
  if (!frame_report(f, tol).is_parseval) {
    fail(ErrorCode::NotParseval, "reconstruction check needs a Parseval frame");
  }
  if (x.dim() != f.dim()) fail(ErrorCode::DimensionMismatch, "input vector has wrong length");
  const Vector xf = x.to_float();
  const Vector sx = f.frame_operator().to_float() * xf;
  return (sx - xf).norm() <= tol.witness_tol * xf.norm();
}

Matrix gram_matrix(const Frame& f) {
  const Matrix& t_star = f.synthesis_matrix();
  return t_star.transpose() * t_star;
}

}  // namespace framecert
