#include "framecert/naimark.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/falsifier.hpp"
#include "framecert/linalg.hpp"
#include "framecert/spark.hpp"

namespace framecert {

namespace {

void require_parseval(const Frame& f, const ToleranceConfig& tol) {
  if (!frame_report(f, tol).is_parseval)
    fail(ErrorCode::NotParseval, "Naimark complements are only defined for Parseval frames");
}

/// Complement vectors suitable for rank and span decisions only. In exact
/// mode this is a plain (non-orthonormal) kernel basis, which spans the same
/// space and therefore decides independence and spanning identically.
Frame complement_for_rank_decisions(const Frame& f, const ToleranceConfig& tol) {
  const std::size_t m = f.size();
  const Matrix& t = f.synthesis_matrix();
  const Matrix basis = f.field() == Field::Exact ? null_space_basis(t, tol)
                                                 : orthonormal_kernel_basis(t, tol);
  std::vector<Vector> psi;
  psi.reserve(m);
  for (std::size_t i = 0; i < m; ++i) psi.push_back(basis.row(i));
  return Frame(m - f.dim(), std::move(psi));
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> subset, std::size_t total) {
  for (std::size_t i : subset)
    if (i >= total) fail(ErrorCode::SubsetOutOfRange, "subset index " + std::to_string(i) + " out of range");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  return subset;
}

}  // namespace

NaimarkPair naimark_complement(const Frame& f, const ToleranceConfig& tol) {
  tol.validate();
  require_parseval(f, tol);
  const std::size_t n = f.dim();
  const std::size_t m = f.size();
  if (m == n) fail(ErrorCode::NoComplement, "orthonormal basis: complement dimension is zero");
  const Frame ff = f.field() == Field::Float ? f : f.to_float();
  const Matrix basis = orthonormal_kernel_basis(ff.synthesis_matrix(), tol);
  std::vector<Vector> psi;
  psi.reserve(m);
  for (std::size_t i = 0; i < m; ++i) psi.push_back(basis.row(i));
  return NaimarkPair{f, Frame(m - n, std::move(psi))};
}

bool verify_naimark_pair(const NaimarkPair& p, const ToleranceConfig& tol) {
  tol.validate();
  if (p.primary.size() != p.complement.size()) return false;
  if (!frame_report(p.primary, tol).is_parseval) return false;
  if (!frame_report(p.complement, tol).is_parseval) return false;
  const std::size_t m = p.primary.size();
  const Matrix g_primary = gram_matrix(p.primary.field() == Field::Float ? p.primary : p.primary.to_float());
  const Matrix g_complement =
      gram_matrix(p.complement.field() == Field::Float ? p.complement : p.complement.to_float());
  const Matrix sum = g_primary + g_complement;
  return max_abs_diff(sum, Matrix::identity(m, Field::Float)) <= tol.witness_tol;
}

bool li_span_duality_check(const Frame& f, const std::vector<std::size_t>& subset,
                           const ToleranceConfig& tol) {
  tol.validate();
  require_parseval(f, tol);
  const std::size_t n = f.dim();
  const std::size_t m = f.size();
  const std::vector<std::size_t> picked = sorted_unique(subset, m);

  const bool independent =
      picked.empty() || rank(f.subframe(picked).synthesis_matrix(), tol) == picked.size();

  bool complement_spans = true;  // zero-dimensional complement: everything spans
  if (m > n) {
    const std::vector<std::size_t> rest = partition_complement(m, picked);
    if (rest.empty()) {
      complement_spans = false;  // empty family cannot span a positive-dimensional space
    } else {
      const Frame comp = complement_for_rank_decisions(f, tol);
      complement_spans = rank(comp.subframe(rest).synthesis_matrix(), tol) == m - n;
    }
  }
  return independent == complement_spans;
}

bool full_spark_duality(const Frame& f, const ToleranceConfig& tol) {
  tol.validate();
  require_parseval(f, tol);
  if (f.size() == f.dim()) fail(ErrorCode::NoComplement, "orthonormal basis: complement dimension is zero");
  const bool primary_full = is_full_spark(f, tol);
  const bool complement_full = is_full_spark(complement_for_rank_decisions(f, tol), tol);
  return primary_full == complement_full;
}

Certificate naimark_pr_bounds_check(const Frame& f, const ToleranceConfig& tol) {
  tol.validate();
  require_parseval(f, tol);
  const std::size_t n = f.dim();
  const std::size_t m = f.size();

  Certificate cert;
  cert.verdict = Verdict::Yes;
  cert.method = Method::NaimarkBounds;
  cert.arithmetic_mode = f.field();
  cert.value = m;

  const Certificate primary_pr = yields_phase_retrieval_vectors(f, tol);
  cert.assumptions.push_back(std::string("primary phase retrieval: ") + verdict_name(primary_pr.verdict));
  if (primary_pr.verdict != Verdict::Yes) {
    cert.notes.push_back("hypothesis fails: the frame does not yield phase retrieval; bound holds vacuously");
    return cert;
  }
  if (m == n) {
    cert.notes.push_back("complement dimension is zero; bound holds vacuously");
    return cert;
  }

  const Frame comp = complement_for_rank_decisions(f, tol);
  const Certificate complement_pr = yields_phase_retrieval_vectors(comp, tol);
  cert.assumptions.push_back(std::string("complement phase retrieval: ") +
                             verdict_name(complement_pr.verdict));
  if (complement_pr.verdict != Verdict::Yes) {
    cert.notes.push_back(
        "hypothesis fails: the complement does not yield phase retrieval; bound holds vacuously");
    return cert;
  }

  if (2 * n - 1 <= m && m <= 2 * n + 1) {
    cert.notes.push_back("both sides yield phase retrieval and 2*dim - 1 <= count <= 2*dim + 1");
    return cert;
  }
  cert.verdict = Verdict::No;
  cert.notes.push_back("bound violated: count " + std::to_string(m) + " is outside [" +
                       std::to_string(2 * n - 1) + ", " + std::to_string(2 * n + 1) + "]");
  return cert;
}

}  // namespace framecert
