#pragma once

#include <iosfwd>
#include <string>

#include "enriques_kit/io.hpp"

namespace enriques::cli {

using io::json;

enum class Format { Table, Json };

struct Context {
  std::string format_flag;
  std::uint64_t seed = 0;
  std::string families_file;
  int exit_code = 0;

  /// --format, else $ENRIQUES_KIT_FORMAT, else table.
  Format format() const;
  /// Writes `doc` as pretty JSON or as a plain-text table.
  void emit(const json& doc) const;
  /// Marks a negative verdict (exit status 2).
  void negative() { exit_code = 2; }
  /// Family table, with overrides from --families when given.
  FamilyTable families() const;
};

/// Inline JSON text, or the path of a JSON file.
json read_json_argument(const std::string& arg, const std::string& what);

/// A lattice expression, inline JSON, or a JSON file.
IntegralLattice read_lattice_argument(const std::string& arg);

std::string render_table(const json& doc);

}  // namespace enriques::cli
