#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "enriques_kit/cone.hpp"
#include "enriques_kit/constraints.hpp"
#include "enriques_kit/isometry.hpp"
#include "enriques_kit/lattice.hpp"
#include "enriques_kit/transport.hpp"

namespace enriques::io {

using nlohmann::json;

/// Reads and parses a JSON file; ParseError carries the path and the
/// parser's line/column diagnostics.
json load_json_file(const std::filesystem::path& path);

// Scalars and arrays. Integers may be JSON numbers or decimal strings (for
// values beyond 64 bits); rationals may also be "p/q" strings. `field` names
// the location for diagnostics.
Integer integer_from_json(const json& j, const std::string& field);
Rational rational_from_json(const json& j, const std::string& field);
IntVector int_vector_from_json(const json& j, const std::string& field);
RatVector rat_vector_from_json(const json& j, const std::string& field);
IntMatrix int_matrix_from_json(const json& j, const std::string& field);
std::vector<IntVector> int_vectors_from_json(const json& j, const std::string& field);

json to_json(const Integer& x);
json to_json(const Rational& x);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntMatrix& m);

/// Grammar: expr := "U" | "E8" | "twist(" expr "," int ")" |
///                  "sum(" expr ("," expr)+ ")" | "rank1(" int ")".
IntegralLattice parse_lattice_expression(std::string_view text);

/// A lattice given as an expression string, {"expr": ...}, or
/// {"label": ..., "gram": [[...]]}.
IntegralLattice lattice_from_json(const json& j);

/// {"lattice": <lattice>, "matrix": [[...]]}.
LatticeIsometry isometry_from_json(const json& j);
/// Matrix-only form on a known lattice: [[...]] or {"matrix": [[...]]}.
LatticeIsometry isometry_on(const IntegralLattice& lattice, const json& j, const std::string& field);

/// {"dim": n, "rays": [...]} or {"dim": n, "halfspaces": [...]}, with an
/// optional "allow_lineality" flag.
RationalCone cone_from_json(const json& j);

json to_json(const IntegralLattice& lattice);
json to_json(const RationalCone& cone);

/// Everything verify_tiling needs, as read from a scenario file.
struct Scenario {
  std::string name;
  IntegralLattice lattice;
  std::vector<LatticeIsometry> generators;
  std::size_t word_length = 0;
  std::vector<LatticeIsometry> kernel;
  RationalCone cone;
  std::vector<RatVector> samples;
  std::optional<IntVector> positive_reference;
};

/// Schema:
///   { "name": str?, "lattice": <lattice>, "generators": [<matrix>...],
///     "word_length": int, "kernel": [<matrix>...]?, "cone": <cone>,
///     "samples": { "grid": {"min": [...], "max": [...]}?, "points": [...]? },
///     "predicate": { "kind": "positive_cone", "reference": [...] } | {"kind": "none"} }
/// Grid samples are all integer points in the box except the origin.
Scenario scenario_from_json(const json& j);

GroupData group_of(const Scenario& scenario);
AmbientPredicate predicate_of(const Scenario& scenario);
TilingReport run_scenario(const Scenario& scenario);

json to_json(const TilingReport& report);
json to_json(const IndexStatus& status);
json to_json(const CyclotomicProfile& profile);
json to_json(const Sublattice& sublattice);
json to_json(const DecompositionReport& report);

std::string format_rational_vector(const RatVector& v);

}  // namespace enriques::io
