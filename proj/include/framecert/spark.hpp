#pragma once

#include <cstddef>
#include <vector>

#include "framecert/certificate.hpp"
#include "framecert/frame.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

/// Default cap on the vector count for the exponential enumerations below;
/// callers may raise it explicitly (and accept the runtime).
inline constexpr std::size_t kDefaultMaxEnumeration = 24;

/// Size of the smallest linearly dependent subset; M + 1 when every subset is
/// independent. Certificate carries the value and, when one exists, the
/// lexicographically first dependent subset of that size. Raises TooLarge when
/// M exceeds max_m.
Certificate spark_certificate(const Frame& f, const ToleranceConfig& tol = {},
                              std::size_t max_m = kDefaultMaxEnumeration);
std::size_t spark(const Frame& f, const ToleranceConfig& tol = {},
                  std::size_t max_m = kDefaultMaxEnumeration);

/// Whether spark(f) == dim + 1 (every dim-subset spans). Requires M >= dim.
bool is_full_spark(const Frame& f, const ToleranceConfig& tol = {},
                   std::size_t max_m = kDefaultMaxEnumeration);

/// Exhaustively decides whether every partition of the frame has a spanning
/// side. NO certificates carry the lexicographically smallest violating
/// subset (always contains index 0). 2^{M-1} partitions are examined.
Certificate complement_property(const Frame& f, const ToleranceConfig& tol = {},
                                std::size_t max_m = kDefaultMaxEnumeration);

/// Phase retrieval decision for a vector frame over the reals: short-circuits
/// NO when M < 2*dim - 1 (with a concrete violating partition and input pair),
/// otherwise reduces to the complement property. NO certificates always carry
/// both the partition and an equal-measurement input pair.
Certificate yields_phase_retrieval_vectors(const Frame& f, const ToleranceConfig& tol = {},
                                           std::size_t max_m = kDefaultMaxEnumeration);

}  // namespace framecert
