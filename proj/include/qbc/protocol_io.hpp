#pragma once

#include <string>
#include <string_view>

#include "qbc/errors.hpp"
#include "qbc/protocol.hpp"

namespace qbc {

/// Thrown when a file parses but violates protocol invariants; carries the
/// full report.
struct ValidationError : std::runtime_error {
  ValidationReport report;

  explicit ValidationError(ValidationReport r);
};

/// Reads a protocol document. Total: every input yields either a validated
/// instance or a ParseError/ValidationError diagnostic.
ProtocolInstance parse_protocol(std::string_view text);
ProtocolInstance load_protocol(const std::string& path);

/// Stable serialization: sorted keys, two-space indent, shortest
/// round-tripping double representation. parse(serialize(x)) == x bit-exact.
std::string serialize_protocol(const ProtocolInstance& inst);

// json <-> numeric helpers shared with the generators and the CLI.
nlohmann::json matrix_to_json(const Operator& m);
Operator matrix_from_json(const nlohmann::json& j, const std::string& path);
nlohmann::json amplitudes_to_json(const std::vector<cplx>& v);
std::vector<cplx> amplitudes_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace qbc
