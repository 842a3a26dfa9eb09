#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "packedge/constructive.hpp"
#include "packedge/packing.hpp"

namespace packedge {

using Json = nlohmann::ordered_json;

inline constexpr int kCertificateSchema = 1;

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Certificate fields, in emission order:
///   schema_version  always 1
///   graph           graph6 record (no prefix, no newline)
///   graph_sha256    hex SHA-256 of the graph6 bytes
///   sequence        list of radii
///   status          "colorable" | "not_colorable" | "timeout"
///   assignment      [{"edge":[u,v],"color":c}, ...] in edge order; colorable only
///   method          "exact_solver" or a construction name such as "11133"
///   intermediates   constructions only: 2-factor cycles and matching, A/B/C, notes
///   stats           {"nodes":n,"seconds":s}
Json make_certificate(const Graph& g, const PackingSequence& s, const SolveOutcome& outcome);
Json make_certificate(const Graph& g, const Construction& c, double seconds = 0);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Re-checks a certificate from its own contents. Colorable certificates
/// pass when the assignment is a valid packing coloring of the encoded graph.
/// Not-colorable certificates pass when a fresh exhaustive search agrees.
/// Timeout certificates and anything malformed fail.
CertificateCheck check_certificate(const Json& cert);

}  // namespace packedge
