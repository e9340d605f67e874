#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "framecert/matrix.hpp"

namespace framecert {

enum class Verdict { Yes, No, Unknown };

/// How a verdict was reached. Tags name the decision rule, so a NO or YES can
/// be re-checked without re-running the original computation.
enum class Method {
  ComplementProperty,       // exhaustive partition enumeration
  CountBound,               // too few vectors for any partition to work
  SparkEnumeration,         // subset-size sweep
  IdentityInSpan,           // identity expressed in span of the projections
  SumProjectionsIdentity,   // dimension-count branch: sum of projections vs I
  Orthogonality,            // exactly-N-unit-vectors branch
  SpanDeficit,              // members do not jointly span the space
  IdentityCoefficientSum,   // identity coefficients with sum != 1
  ComplementNrEquivalence,  // norm retrieval of complements transfer
  NaimarkBounds,            // vector-count bounds from two-sided retrieval
  GramComplement,           // complement construction, checked by Gram sums
  FrameBounds,              // frame operator eigenvalue bounds
  SearchExhausted,          // optimization search found nothing
  GradientSearch,           // optimization search produced the witness
  Undecided,                // no decision rule applied
};

const char* verdict_name(Verdict v);
const char* method_name(Method m);
Verdict verdict_from_name(const std::string& name);
Method method_from_name(const std::string& name);

/// Two inputs with (near-)equal measurements. Gaps are recomputed from x and y
/// against the measurement family at construction time:
///   measurement_gap = max_i | m_i(x) - m_i(y) | on the family's measurement
///                     scale: |<x, phi_i>| for vector frames, ||P_i x||^2 for
///                     projection families
///   norm_gap        = | ||x|| - ||y|| |
///   phase_gap       = min(||x - y||, ||x + y||)
struct WitnessPair {
  Vector x;
  Vector y;
  double measurement_gap = 0.0;
  double norm_gap = 0.0;
  double phase_gap = 0.0;
};

/// Outcome of a decision procedure plus enough data to re-check it.
struct Certificate {
  Verdict verdict = Verdict::Unknown;
  Method method = Method::Undecided;
  Field arithmetic_mode = Field::Float;
  /// Violating partition side, dependent subset, or similar index witness.
  std::optional<std::vector<std::size_t>> subset;
  std::optional<WitnessPair> pair;
  /// Coefficients a_i for span certificates.
  std::optional<Vector> coefficients;
  /// Scalar payload (spark value, vector-count bounds, ...).
  std::optional<std::size_t> value;
  /// Hypotheses asserted by the caller rather than checked here.
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
};

}  // namespace framecert
