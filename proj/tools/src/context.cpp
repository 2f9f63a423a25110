#include "context.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace enriques::cli {

namespace {

bool is_scalar_array(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
}

bool is_matrix(const json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_scalar_array);
}

bool is_record_list(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_object()) return false;
  const json& first = j.front();
  return std::all_of(j.begin(), j.end(), [&first](const json& row) {
    if (!row.is_object() || row.size() != first.size()) return false;
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (!first.contains(it.key()) || !(it.value().is_primitive() || is_scalar_array(it.value()))) return false;
    }
    return true;
  });
}

std::string scalar(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string inline_array(const json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += scalar(j[i]);
  }
  return out + "]";
}

std::string cell(const json& j) { return j.is_array() ? inline_array(j) : scalar(j); }

void render(std::ostringstream& out, const json& j, const std::string& indent);

void render_matrix(std::ostringstream& out, const json& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, scalar(x).size());
  for (const auto& row : m) {
    out << indent;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string s = scalar(row[i]);
      out << (i ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
}

void render_records(std::ostringstream& out, const json& rows, const std::string& indent) {
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  std::vector<std::size_t> width;
  for (const auto& k : keys) width.push_back(k.size());
  for (const auto& row : rows)
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], cell(row[keys[c]]).size());
  // Widest column last so long text does not push the short ones around.
  const auto widest = static_cast<std::ptrdiff_t>(std::max_element(width.begin(), width.end()) - width.begin());
  std::rotate(keys.begin() + widest, keys.begin() + widest + 1, keys.end());
  std::rotate(width.begin() + widest, width.begin() + widest + 1, width.end());
  auto line = [&](auto&& text_of) {
    std::string s = indent;
    for (std::size_t c = 0; c < keys.size(); ++c) {
      const std::string t = text_of(c);
      s += t;
      if (c + 1 < keys.size()) s += std::string(width[c] - t.size() + 2, ' ');
    }
    out << s << '\n';
  };
  line([&](std::size_t c) { return keys[c]; });
  for (const auto& row : rows) line([&](std::size_t c) { return cell(row[keys[c]]); });
}

void render(std::ostringstream& out, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_primitive()) {
        out << indent << it.key() << ": " << scalar(v) << '\n';
      } else if (is_scalar_array(v)) {
        out << indent << it.key() << ": " << inline_array(v) << '\n';
      } else if (v.is_object() && v.empty()) {
        out << indent << it.key() << ": {}\n";
      } else {
        out << indent << it.key() << ":\n";
        render(out, v, indent + "  ");
      }
    }
  } else if (is_matrix(j)) {
    render_matrix(out, j, indent);
  } else if (is_record_list(j)) {
    render_records(out, j, indent);
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (x.is_primitive() || is_scalar_array(x)) {
        out << indent << "- " << cell(x) << '\n';
      } else {
        out << indent << "-\n";
        render(out, x, indent + "  ");
      }
    }
  } else {
    out << indent << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_table(const json& doc) {
  std::ostringstream out;
  render(out, doc, "");
  return out.str();
}

Format Context::format() const {
  std::string chosen = format_flag;
  if (chosen.empty()) {
    if (const char* env = std::getenv("ENRIQUES_KIT_FORMAT"); env != nullptr && *env != '\0') chosen = env;
  }
  if (chosen.empty() || chosen == "table") return Format::Table;
  if (chosen == "json") return Format::Json;
  throw Error(ErrorCode::UsageError, "ENRIQUES_KIT_FORMAT must be table or json, got '" + chosen + "'");
}

void Context::emit(const json& doc) const {
  if (format() == Format::Json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << render_table(doc);
  }
}

FamilyTable Context::families() const {
  FamilyTable table = FamilyTable::defaults();
  if (families_file.empty()) return table;
  const json j = io::load_json_file(families_file);
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array()) {
    throw Error(ErrorCode::ParseError, families_file + ": expected {\"families\": [...]}");
  }
  for (std::size_t i = 0; i < j["families"].size(); ++i) {
    const json& e = j["families"][i];
    const std::string field = "families[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("family") || !e["family"].is_string() || !e.contains("b2")) {
      throw Error(ErrorCode::ParseError, families_file + ": " + field + " needs \"family\" and \"b2\"");
    }
    const Integer b2 = io::integer_from_json(e["b2"], field + ".b2");
    if (b2 < 3 || !b2.fits_ulong_p()) throw Error(ErrorCode::ParseError, families_file + ": " + field + ".b2 must be >= 3");
    std::string provenance = e.value("provenance", std::string());
    table.set(FamilyInfo{parse_family(e["family"].get<std::string>()), b2.get_ui(), std::move(provenance)});
  }
  return table;
}

json read_json_argument(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::ParseError, what + ": invalid inline JSON: " + e.what());
    }
  }
  return io::load_json_file(arg);
}

IntegralLattice read_lattice_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return io::lattice_from_json(read_json_argument(arg, "lattice"));
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return io::lattice_from_json(io::load_json_file(arg));
  return io::parse_lattice_expression(arg);
}

}  // namespace enriques::cli
