#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framecert/certificate.hpp"
#include "framecert/frame.hpp"
#include "framecert/naimark.hpp"
#include "framecert/subspace.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

// ===========================================================================
// named, reproducible example constructions
// ===========================================================================

/// Parseval frame with a duplicated vector: the frame itself yields phase
/// retrieval, but the complement property fails for its Naimark complement,
/// and the violating partition side is exactly the duplicated index pair.
struct DuplicateVectorExample {
  Frame primary;              // canonical Parseval frame, N = 3, M = 6
  Frame complement;           // Naimark complement, dim M - N = 3
  Certificate primary_pr;     // YES
  Certificate complement_cp;  // NO with subset {0, 1}
};
DuplicateVectorExample duplicate_vector_example(const ToleranceConfig& tol = {});

/// Full spark frame {e1, e2, e3, (1,1,1), (1,2,4)}: on unit vectors the
/// measurement against e3 is redundant, |<x,e3>|^2 = 1 - |<x,e1>|^2 -
/// |<x,e2>|^2, yet dropping e3 leaves too few vectors for phase retrieval.
struct FreeMeasurementExample {
  Frame full;     // five vectors, full spark
  Frame reduced;  // e3 removed
  Certificate full_pr;                    // YES
  Certificate reduced_pr;                 // NO (count bound)
  std::size_t trials = 0;                 // random unit vectors checked
  double max_reconstruction_error = 0.0;  // worst |direct - derived| measurement
};
FreeMeasurementExample free_measurement_example(std::uint64_t seed = 0, std::size_t trials = 100,
                                                const ToleranceConfig& tol = {});

/// Generic rank-one family of six lines in R^3: the identity lies in the span
/// of the projections with all-positive coefficients and no proper subfamily
/// spans it.
struct GenericFamilyExample {
  RankOneFamily sample;
  Certificate certificate;  // YES, IDENTITY_IN_SPAN
  double identity_residual = 0.0;
  bool proper_subfamilies_excluded = false;
};
GenericFamilyExample generic_family_example(std::uint64_t seed = 0,
                                            const ToleranceConfig& tol = {});

/// Full spark Parseval frames at N = 3 with M = 5, 6, 7: the frame and its
/// Naimark complement both yield phase retrieval, exercising the vector-count
/// window 2N - 1 <= M <= 2N + 1 from both ends.
struct BoundsCase {
  Frame frame;
  Frame complement;
  Certificate bounds;         // YES, NAIMARK_BOUNDS
  Certificate primary_pr;     // YES
  Certificate complement_pr;  // YES
};
struct NaimarkBoundsExample {
  std::vector<BoundsCase> cases;  // M = 5, 6, 7 in order
};
NaimarkBoundsExample naimark_bounds_example(std::uint64_t seed = 0,
                                            const ToleranceConfig& tol = {});

/// Names accepted by the `example` subcommand, in catalog order:
/// duplicate-vector, free-measurement, pop-generic, naimark-bounds.
std::vector<std::string> example_names();

}  // namespace framecert
