#pragma once

#include "capsula/prov/model.hpp"

#include <string>
#include <string_view>

namespace capsula::prov {

/// Parses a PROV-JSON style document (sections entity/activity/agent plus the
/// four edge kinds). Rejects syntax errors (MalformedDocument), unknown
/// sections or entity subkinds (UnknownKind), edges with missing endpoints
/// (DanglingEdge) and derivation cycles (CycleDetected).
ProvenanceGraph parse_prov_document(std::string_view text);

/// Canonical serialization: object keys sorted, nodes grouped by kind,
/// edge records renumbered in (src, dst) order. parse(serialize(g)) is
/// structurally equal to g, and serialize is a fixed point under
/// parse-then-serialize.
std::string serialize_prov_document(const ProvenanceGraph& g);

} // namespace capsula::prov
