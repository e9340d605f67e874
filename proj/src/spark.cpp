#include "framecert/spark.hpp"

#include <algorithm>
#include <functional>

#include "framecert/falsifier.hpp"
#include "framecert/linalg.hpp"

namespace framecert {

namespace {

void check_enumeration_size(const Frame& f, std::size_t max_m) {
  if (f.size() > max_m) {
    fail(ErrorCode::TooLarge,
         "frame has " + std::to_string(f.size()) + " vectors; enumeration is capped at " +
             std::to_string(max_m) + " (raise max_m to force)");
  }
}

// Visits k-subsets of {0..m-1} in lexicographic order until fn returns true;
// reports whether fn accepted a subset.
bool first_subset(std::size_t m, std::size_t k,
                  const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  if (k > m) return false;
  while (true) {
    if (fn(subset)) return true;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (subset[i] != i + m - k) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

}  // namespace

Certificate spark_certificate(const Frame& f, const ToleranceConfig& tol, std::size_t max_m) {
  tol.validate();
  check_enumeration_size(f, max_m);
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  const Matrix& synthesis = f.synthesis_matrix();

  Certificate cert;
  cert.arithmetic_mode = f.field();
  cert.method = Method::SparkEnumeration;
  cert.verdict = Verdict::Yes;

  // Subsets are judged on the scale of the whole frame, so a vector that is
  // tiny relative to the others counts as zero rather than as independent.
  const double scale = synthesis.max_abs();
  const std::size_t k_max = std::min(m, n + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::size_t> found;
    first_subset(m, k, [&](const std::vector<std::size_t>& subset) {
      if (rank(synthesis.select_columns(subset), tol, scale) < k) {
        found = subset;
        return true;
      }
      return false;
    });
    if (!found.empty()) {
      cert.value = k;
      cert.subset = found;
      return cert;
    }
  }
  // Every subset of size <= min(M, N+1) is independent; by convention the
  // spark is M + 1 (no dependent subset exists at all, possible only if M <= N).
  cert.value = m + 1;
  return cert;
}

std::size_t spark(const Frame& f, const ToleranceConfig& tol, std::size_t max_m) {
  return *spark_certificate(f, tol, max_m).value;
}

bool is_full_spark(const Frame& f, const ToleranceConfig& tol, std::size_t max_m) {
  if (f.size() < f.dim()) {
    fail(ErrorCode::TooFewVectors, "full spark needs at least dim vectors");
  }
  return spark(f, tol, max_m) == f.dim() + 1;
}

Certificate complement_property(const Frame& f, const ToleranceConfig& tol, std::size_t max_m) {
  tol.validate();
  check_enumeration_size(f, max_m);
  const std::size_t m = f.size();
  const std::size_t n = f.dim();
  const Matrix& synthesis = f.synthesis_matrix();

  const double scale = synthesis.max_abs();
  auto side_spans = [&](const std::vector<std::size_t>& indices) {
    if (indices.size() < n) return false;
    return rank(synthesis.select_columns(indices), tol, scale) == n;
  };

  // Depth-first over subsets containing index 0, in lexicographic order, so
  // the first violation found is the lexicographically smallest overall
  // (violating subsets not containing 0 are complements of ones that do).
  std::vector<std::size_t> current{0};
  std::vector<std::size_t> violation;
  auto visit = [&](auto&& self, std::size_t next_min) -> bool {
    if (!side_spans(current) && !side_spans(partition_complement(m, current))) {
      violation = current;
      return true;
    }
    for (std::size_t j = next_min; j < m; ++j) {
      current.push_back(j);
      if (self(self, j + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  const bool violated = visit(visit, 1);

  Certificate cert;
  cert.arithmetic_mode = f.field();
  cert.method = Method::ComplementProperty;
  if (violated) {
    cert.verdict = Verdict::No;
    cert.subset = violation;
  } else {
    cert.verdict = Verdict::Yes;
    cert.notes.push_back("all partitions with a fixed first index were enumerated");
  }
  return cert;
}

Certificate yields_phase_retrieval_vectors(const Frame& f, const ToleranceConfig& tol,
                                           std::size_t max_m) {
  tol.validate();
  const std::size_t m = f.size();
  const std::size_t n = f.dim();

  if (m + 1 < 2 * n) {
    // Too few vectors: split roughly in half; neither side can span.
    std::vector<std::size_t> half;
    for (std::size_t i = 0; i < (m + 1) / 2; ++i) half.push_back(i);
    Certificate cert;
    cert.arithmetic_mode = f.field();
    cert.method = Method::CountBound;
    cert.verdict = Verdict::No;
    cert.subset = half;
    cert.pair = pr_witness_from_partition(f, half, tol);
    cert.notes.push_back("fewer than 2*dim - 1 vectors");
    return cert;
  }

  Certificate cert = complement_property(f, tol, max_m);
  if (cert.no()) {
    cert.pair = pr_witness_from_partition(f, *cert.subset, tol);
  }
  return cert;
}

}  // namespace framecert
