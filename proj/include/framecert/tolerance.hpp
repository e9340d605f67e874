#pragma once

#include "framecert/errors.hpp"

namespace framecert {

/// Shared tolerance knobs. rank_rel_tol is relative to the largest singular
/// value; symmetry_tol and witness_tol are relative to the largest entry
/// magnitude (with a floor of 1). Exact-mode decisions ignore all of them.
struct ToleranceConfig {
  double rank_rel_tol = 1e-10;
  double symmetry_tol = 1e-12;
  double witness_tol = 1e-9;

  void validate() const {
    if (!(rank_rel_tol > 0) || !(symmetry_tol > 0) || !(witness_tol > 0)) {
      fail(ErrorCode::RangeError, "tolerances must be positive");
    }
  }
};

}  // namespace framecert
