#include "enriques_kit/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace enriques::io {

namespace {

[[noreturn]] void parse_error(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + message);
}

const json& require(const json& j, const char* key, const std::string& context) {
  if (!j.is_object()) parse_error(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

std::string child(const std::string& field, std::size_t index) { return field + "[" + std::to_string(index) + "]"; }

// Odometer over an integer box, last coordinate fastest.
bool next_grid_point(IntVector& point, const IntVector& lo, const IntVector& hi) {
  for (std::size_t k = point.size(); k-- > 0;) {
    if (point[k] < hi[k]) {
      point[k] += 1;
      return true;
    }
    point[k] = lo[k];
  }
  return false;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) parse_error(field, "not a decimal integer");
    return out;
  }
  parse_error(field, "expected an integer, got " + std::string(j.type_name()));
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    Rational out;
    if (out.set_str(j.get<std::string>(), 10) != 0) parse_error(field, "not a rational 'p/q'");
    if (out.get_den() == 0) parse_error(field, "zero denominator");
    out.canonicalize();
    return out;
  }
  return Rational(integer_from_json(j, field));
}

IntVector int_vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) parse_error(field, "expected an array");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], child(field, i)));
  return out;
}

RatVector rat_vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) parse_error(field, "expected an array");
  RatVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], child(field, i)));
  return out;
}

std::vector<IntVector> int_vectors_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) parse_error(field, "expected an array of vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_vector_from_json(j[i], child(field, i)));
  return out;
}

IntMatrix int_matrix_from_json(const json& j, const std::string& field) {
  const auto rows = int_vectors_from_json(j, field);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      parse_error(child(field, i), "row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                       std::to_string(rows[0].size()));
    }
  }
  return IntMatrix::from_rows(rows);
}

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(x.get_num());
  return json(x.get_str());
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  IntegralLattice parse() {
    IntegralLattice result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError, "lattice expression '" + std::string(text_) + "' at offset " +
                                           std::to_string(pos_) + ": " + message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    Integer out;
    if (digits.empty() || digits == "-" || out.set_str(digits, 10) != 0) fail("expected an integer");
    return out;
  }

  IntegralLattice expr() {
    const std::string name = identifier();
    if (name == "U" || name == "E8") return standard_lattice(name);
    if (name == "twist") {
      expect('(');
      IntegralLattice inner = expr();
      expect(',');
      const Integer k = integer();
      expect(')');
      return twist(inner, k);
    }
    if (name == "sum") {
      expect('(');
      IntegralLattice acc = expr();
      std::size_t terms = 1;
      while (accept(',')) {
        acc = direct_sum(acc, expr());
        ++terms;
      }
      expect(')');
      if (terms < 2) fail("sum needs at least two terms");
      return acc;
    }
    if (name == "rank1") {
      expect('(');
      const Integer k = integer();
      expect(')');
      return rank_one(k);
    }
    throw Error(ErrorCode::UnknownName, "unknown lattice constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegralLattice parse_lattice_expression(std::string_view text) {
  IntegralLattice lattice = ExpressionParser(text).parse();
  return lattice.label().empty() ? lattice.with_label(std::string(text)) : lattice;
}

IntegralLattice lattice_from_json(const json& j) {
  if (j.is_string()) return parse_lattice_expression(j.get<std::string>());
  if (!j.is_object()) parse_error("lattice", "expected an expression string or an object");
  if (j.contains("expr")) return parse_lattice_expression(require(j, "expr", "lattice").get<std::string>());
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) parse_error("lattice.label", "expected a string");
    label = j["label"].get<std::string>();
  }
  const IntMatrix gram = int_matrix_from_json(require(j, "gram", "lattice"), "lattice.gram");
  if (!gram.is_square()) parse_error("lattice.gram", "matrix is " + gram.shape() + ", expected square");
  return make_lattice(gram, label);
}

LatticeIsometry isometry_on(const IntegralLattice& lattice, const json& j, const std::string& field) {
  if (j.is_object()) return make_isometry(lattice, int_matrix_from_json(require(j, "matrix", field), field + ".matrix"));
  return make_isometry(lattice, int_matrix_from_json(j, field));
}

LatticeIsometry isometry_from_json(const json& j) {
  const IntegralLattice lattice = lattice_from_json(require(j, "lattice", ""));
  const IntMatrix m = int_matrix_from_json(require(j, "matrix", ""), "matrix");
  if (!m.is_square() || m.rows() != lattice.rank()) {
    parse_error("matrix", "matrix is " + m.shape() + ", lattice rank is " + std::to_string(lattice.rank()));
  }
  return make_isometry(lattice, m);
}

RationalCone cone_from_json(const json& j) {
  const Integer dim_value = integer_from_json(require(j, "dim", ""), "dim");
  if (dim_value < 1 || !dim_value.fits_ulong_p()) parse_error("dim", "must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_value.get_ui());
  bool allow_lineality = false;
  if (j.contains("allow_lineality")) {
    if (!j["allow_lineality"].is_boolean()) parse_error("allow_lineality", "expected a boolean");
    allow_lineality = j["allow_lineality"].get<bool>();
  }
  const bool has_rays = j.contains("rays");
  const bool has_halfspaces = j.contains("halfspaces");
  if (has_rays == has_halfspaces) parse_error("rays/halfspaces", "exactly one of the two must be given");
  if (has_rays) return cone_from_rays(dim, int_vectors_from_json(j["rays"], "rays"), allow_lineality);
  return cone_from_halfspaces(dim, int_vectors_from_json(j["halfspaces"], "halfspaces"), allow_lineality);
}

json to_json(const IntegralLattice& lattice) {
  const Signature sig = signature(lattice);
  return json{{"label", lattice.label()},
              {"rank", lattice.rank()},
              {"determinant", to_json(lattice.determinant())},
              {"signature", json::array({sig.positive, sig.negative})},
              {"even", lattice.is_even()},
              {"gram", to_json(lattice.gram())}};
}

json to_json(const RationalCone& cone) {
  json rays = json::array();
  for (const auto& r : cone.rays()) rays.push_back(to_json(r));
  json halfspaces = json::array();
  for (const auto& h : cone.halfspaces()) halfspaces.push_back(to_json(h));
  return json{{"dim", cone.ambient_dim()},
              {"span_dim", cone.dimension()},
              {"lineality_dim", cone.lineality_dim()},
              {"lineality", to_json(cone.lineality())},
              {"rays", rays},
              {"halfspaces", halfspaces}};
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) parse_error("scenario", "expected an object");
  Scenario s{.name = j.value("name", std::string{}),
             .lattice = lattice_from_json(require(j, "lattice", "")),
             .generators = {},
             .word_length = 0,
             .kernel = {},
             .cone = cone_from_json(require(j, "cone", "")),
             .samples = {},
             .positive_reference = std::nullopt};

  const json& gens = require(j, "generators", "");
  if (!gens.is_array()) parse_error("generators", "expected an array of matrices");
  for (std::size_t i = 0; i < gens.size(); ++i) s.generators.push_back(isometry_on(s.lattice, gens[i], child("generators", i)));

  const Integer len = integer_from_json(require(j, "word_length", ""), "word_length");
  if (len < 0 || !len.fits_ulong_p()) parse_error("word_length", "must be a non-negative integer");
  s.word_length = static_cast<std::size_t>(len.get_ui());

  if (j.contains("kernel")) {
    const json& kernel = j["kernel"];
    if (!kernel.is_array()) parse_error("kernel", "expected an array of matrices");
    for (std::size_t i = 0; i < kernel.size(); ++i) s.kernel.push_back(isometry_on(s.lattice, kernel[i], child("kernel", i)));
  }

  const std::size_t dim = s.lattice.rank();
  if (s.cone.ambient_dim() != dim) parse_error("cone.dim", "does not match the lattice rank");

  if (j.contains("samples")) {
    const json& samples = j["samples"];
    if (samples.contains("grid")) {
      const IntVector lo = int_vector_from_json(require(samples["grid"], "min", "samples.grid"), "samples.grid.min");
      const IntVector hi = int_vector_from_json(require(samples["grid"], "max", "samples.grid"), "samples.grid.max");
      if (lo.size() != dim || hi.size() != dim) parse_error("samples.grid", "bounds must have length " + std::to_string(dim));
      for (std::size_t i = 0; i < dim; ++i)
        if (lo[i] > hi[i]) parse_error("samples.grid", "min exceeds max in coordinate " + std::to_string(i));
      IntVector point = lo;
      do {
        if (!is_zero(point)) s.samples.push_back(to_rational(point));
      } while (next_grid_point(point, lo, hi));
    }
    if (samples.contains("points")) {
      const json& points = samples["points"];
      if (!points.is_array()) parse_error("samples.points", "expected an array");
      for (std::size_t i = 0; i < points.size(); ++i) {
        RatVector v = rat_vector_from_json(points[i], child("samples.points", i));
        if (v.size() != dim) parse_error(child("samples.points", i), "expected length " + std::to_string(dim));
        s.samples.push_back(std::move(v));
      }
    }
  }

  if (j.contains("predicate")) {
    const json& p = j["predicate"];
    const std::string kind = require(p, "kind", "predicate").get<std::string>();
    if (kind == "positive_cone") {
      IntVector ref = int_vector_from_json(require(p, "reference", "predicate"), "predicate.reference");
      if (ref.size() != dim) parse_error("predicate.reference", "expected length " + std::to_string(dim));
      s.positive_reference = std::move(ref);
    } else if (kind != "none") {
      parse_error("predicate.kind", "unknown predicate '" + kind + "'");
    }
  }
  return s;
}

GroupData group_of(const Scenario& scenario) {
  return GroupData::from_generators(scenario.lattice, scenario.generators, scenario.word_length, scenario.kernel);
}

AmbientPredicate predicate_of(const Scenario& scenario) {
  if (!scenario.positive_reference) return {};
  return positive_cone_predicate(scenario.lattice, *scenario.positive_reference);
}

TilingReport run_scenario(const Scenario& scenario) {
  return verify_tiling(scenario.cone, group_of(scenario), scenario.samples, predicate_of(scenario));
}

json to_json(const TilingReport& report) {
  json witnesses = json::array();
  for (const auto& w : report.uncovered_witnesses) witnesses.push_back(to_json(w));
  json violations = json::array();
  for (const auto& [a, b] : report.disjointness_violations) violations.push_back(json::array({a, b}));
  return json{{"verdict", std::string(to_string(report.verdict))},
              {"samples", report.sample_count},
              {"skipped_samples", report.skipped_samples},
              {"covered_samples", report.covered_samples},
              {"uncovered_witnesses", witnesses},
              {"disjointness_violations", violations}};
}

json to_json(const IndexStatus& status) {
  return json{{"family", std::string(to_string(status.family))},
              {"d", status.d},
              {"phi", euler_phi(status.d)},
              {"status", std::string(to_string(status.status))},
              {"citation", status.citation}};
}

json to_json(const CyclotomicProfile& profile) {
  json out = json::object();
  for (const auto& [d, m] : profile.multiplicities) out[std::to_string(d)] = m;
  return out;
}

json to_json(const Sublattice& sublattice) {
  return json{{"rank", sublattice.rank()}, {"basis", to_json(sublattice.basis)}, {"gram", to_json(sublattice.gram)}};
}

json to_json(const DecompositionReport& report) {
  return json{{"lattice_rank", report.lattice_rank},
              {"invariant_rank", report.invariant_rank},
              {"coinvariant_rank", report.coinvariant_rank},
              {"direct", report.direct}};
}

std::string format_rational_vector(const RatVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].get_str();
  out << ")";
  return out.str();
}

}  // namespace enriques::io
