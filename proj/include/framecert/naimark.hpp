#pragma once

#include <cstddef>
#include <vector>

#include "framecert/certificate.hpp"
#include "framecert/frame.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

// === Naimark pairs =========================================================

/// A Parseval frame for R^N together with a concrete complement: M vectors in
/// R^{M-N} whose Gram matrix is I_M minus the Gram matrix of the primary.
/// Equivalently, {phi_i (+) psi_i} is an orthonormal basis of R^M.
struct NaimarkPair {
  Frame primary;
  Frame complement;
};

/// Builds the complement from an orthonormal basis B of the kernel of the
/// synthesis map: complement vector i is row i of B, sign-canonicalized per
/// column. The complement is always a float frame (the basis is orthonormal).
/// Errors: NotParseval; NoComplement when M = N.
NaimarkPair naimark_complement(const Frame& f, const ToleranceConfig& tol = {});

/// True iff both frames are Parseval and ||G_primary + G_complement - I||_max
/// is at most witness_tol. Never throws; malformed pairs return false.
bool verify_naimark_pair(const NaimarkPair& p, const ToleranceConfig& tol = {});

// === Duality checks ========================================================

/// Checks the biconditional: {phi_i : i in subset} is linearly independent
/// iff the complement vectors over the complementary index set span R^{M-N}.
/// Expected to hold for every Parseval frame and every subset. Exact frames
/// are decided in exact arithmetic (rank decisions about the complement do
/// not depend on the choice of kernel basis).
bool li_span_duality_check(const Frame& f, const std::vector<std::size_t>& subset,
                           const ToleranceConfig& tol = {});

/// Checks that a Parseval frame is full spark iff its complement is.
/// Expected to hold always. Errors: NotParseval; NoComplement when M = N.
bool full_spark_duality(const Frame& f, const ToleranceConfig& tol = {});

/// When both a Parseval frame and its complement yield phase retrieval, the
/// vector count must satisfy 2N - 1 <= M <= 2N + 1. Returns YES when the
/// implication was verified (including vacuously, with a note naming the
/// failed hypothesis) and NO with value = M only if both hypotheses hold and
/// a bound fails. Errors: NotParseval.
Certificate naimark_pr_bounds_check(const Frame& f, const ToleranceConfig& tol = {});

}  // namespace framecert
