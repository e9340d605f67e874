#pragma once

#include <json.hpp>

#include <string>

#include "framecert/certificate.hpp"
#include "framecert/frame.hpp"
#include "framecert/subspace.hpp"
#include "framecert/tolerance.hpp"

namespace framecert {

/// Key order is fixed so identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "framecert 0.1.0";

/// {"dim": int, "field": "exact"|"float", "vectors": [[...], ...]}. Exact
/// scalars are "p/q" strings (integer literals are accepted on input); float
/// scalars are JSON numbers.
Json frame_to_json(const Frame& f);
Frame frame_from_json(const Json& j);

/// {"dim": int, "field": ..., "subspaces": [{"basis": [[...], ...]}, ...]},
/// each basis a list of spanning vectors (columns).
Json family_to_json(const SubspaceFamily& fam);
SubspaceFamily family_from_json(const Json& j, const ToleranceConfig& tol = {});

/// Certificate payload with inputs_digest and tool_version attached. The
/// witness object carries whichever of subset / pair / coefficients / value
/// are present; `extra_witness` entries (e.g. a complement frame or an
/// operator matrix) are merged into it.
Json certificate_to_json(const Certificate& cert, const std::string& inputs_digest,
                         const Json& extra_witness = Json::object());
Certificate certificate_from_json(const Json& j);

/// Vector serialization used inside witness payloads.
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, Field field);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, Field field);
Json witness_pair_to_json(const WitnessPair& pair);
WitnessPair witness_pair_from_json(const Json& j);

/// Parses text as JSON; malformed input raises ParseError.
Json parse_json_text(const std::string& text);

/// Whole file as a string; missing or unreadable file raises ParseError.
std::string read_text_file(const std::string& path);

}  // namespace framecert
