#pragma once

#include "ldiag/bounds.hpp"
#include "ldiag/grid.hpp"
#include "ldiag/oracle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ldiag {

inline constexpr int arrangement_schema_version = 1;

/// {"schema":1,"n":..,"l":..,"diagonals":[{"x":..,"y":..},...]} with the
/// anchors in (y, x) order. Keys keep insertion order.
nlohmann::ordered_json arrangement_to_json(const Arrangement& a);

/// Parses the arrangement schema. Unknown keys are ignored; the schema
/// number, n and l are required. Throws PreconditionError on malformed input.
Arrangement arrangement_from_json(const nlohmann::ordered_json& j);

/// Streams the anchor list [{"x":..,"y":..},...] in (y, x) order, byte for
/// byte what arrangement_to_json would produce for "diagonals".
void write_anchors_json(std::ostream& os, const Arrangement& a);

/// Streamed arrangement_to_json(a).dump(); never builds a JSON tree.
void write_arrangement_json(std::ostream& os, const Arrangement& a);
std::string dump_arrangement(const Arrangement& a);

nlohmann::ordered_json bounds_to_json(const BoundsReport& r);
nlohmann::ordered_json exact_to_json(const ExactResult& r);
nlohmann::ordered_json cross_validation_to_json(const CrossValidation& cv);

} // namespace ldiag
