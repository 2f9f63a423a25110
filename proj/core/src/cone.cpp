#include "enriques_kit/cone.hpp"

#include <algorithm>

#include "enriques_kit/linalg.hpp"

namespace enriques {

namespace {

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
  return primitive(std::move(out));
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

void check_lengths(std::size_t dim, const std::vector<IntVector>& vectors, const char* what) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, std::string(what) + " " + std::to_string(i) + " has length " +
                                                    std::to_string(vectors[i].size()) + ", ambient dim is " +
                                                    std::to_string(dim));
    }
  }
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConeGenerators double_description(const IntMatrix& constraints, std::size_t dim) {
  if (constraints.rows() > 0 && constraints.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "constraint length != ambient dim");
  }
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (std::size_t row = 0; row < constraints.rows(); ++row) {
    const IntVector a = constraints.row(row);
    if (is_zero(a)) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&a](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      // The new constraint cuts the lineality space: l0 becomes a ray and
      // everything else is sheared onto the hyperplane a x = 0.
      IntVector l0 = *pivot;
      lineality.erase(pivot);
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = negated(std::move(l0));
        al0 = -al0;
      }
      for (auto& l : lineality) l = combine(al0, l, dot(a, l), l0);
      for (auto& r : rays) r = combine(al0, r, dot(a, r), l0);
      rays.push_back(primitive(l0));
      processed.push_back(a);
      continue;
    }

    const std::size_t pointed_dim = dim - lineality.size();
    std::vector<Integer> values;
    values.reserve(rays.size());
    for (const auto& r : rays) values.push_back(dot(a, r));

    // Zero sets against the constraints processed so far.
    std::vector<std::vector<bool>> tight(rays.size(), std::vector<bool>(processed.size(), false));
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t c = 0; c < processed.size(); ++c) tight[i][c] = dot(processed[c], rays[i]) == 0;

    std::vector<IntVector> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (values[i] >= 0) next.push_back(rays[i]);

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (values[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (values[n] >= 0) continue;
        IntMatrix common(0, dim);
        for (std::size_t c = 0; c < processed.size(); ++c)
          if (tight[p][c] && tight[n][c]) common.append_row(processed[c]);
        if (pointed_dim < 2) continue;
        if (common.rows() + 2 < pointed_dim) continue;
        if (rank(common) != pointed_dim - 2) continue;
        next.push_back(combine(values[p], rays[n], values[n], rays[p]));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  ConeGenerators gens;
  IntMatrix constraint_rows(0, dim);
  for (const auto& c : processed) constraint_rows.append_row(c);
  gens.lineality = integer_kernel(processed.empty() ? IntMatrix(0, dim) : constraint_rows);
  for (const auto& r : rays) {
    IntVector canonical = primitive(project_onto_complement(to_rational(r), gens.lineality));
    if (!is_zero(canonical)) gens.rays.push_back(std::move(canonical));
  }
  sort_unique(gens.rays);
  return gens;
}

RationalCone RationalCone::from_generators(std::size_t dim, ConeGenerators gens, bool allow_lineality) {
  if (gens.lineality.rows() > 0 && !allow_lineality) {
    throw Error(ErrorCode::NotPointed, "cone contains a line (lineality dimension " +
                                           std::to_string(gens.lineality.rows()) + ")");
  }
  RationalCone cone;
  cone.dim_ = dim;
  cone.rays_ = std::move(gens.rays);
  cone.lineality_ = std::move(gens.lineality);

  IntMatrix polar_constraints(0, dim);
  for (const auto& r : cone.rays_) polar_constraints.append_row(r);
  for (std::size_t i = 0; i < cone.lineality_.rows(); ++i) {
    polar_constraints.append_row(cone.lineality_.row(i));
    polar_constraints.append_row(negated(cone.lineality_.row(i)));
  }
  ConeGenerators polar = double_description(polar_constraints, dim);
  cone.facets_ = std::move(polar.rays);
  cone.equations_ = std::move(polar.lineality);
  cone.span_dim_ = dim - cone.equations_.rows();

  cone.halfspaces_ = cone.facets_;
  for (std::size_t i = 0; i < cone.equations_.rows(); ++i) {
    cone.halfspaces_.push_back(cone.equations_.row(i));
    cone.halfspaces_.push_back(negated(cone.equations_.row(i)));
  }
  sort_unique(cone.halfspaces_);
  return cone;
}

RationalCone RationalCone::from_halfspaces(std::size_t dim, const std::vector<IntVector>& normals,
                                           bool allow_lineality) {
  if (normals.empty()) throw Error(ErrorCode::EmptyInput, "no halfspaces given");
  check_lengths(dim, normals, "halfspace");
  return from_generators(dim, double_description(IntMatrix::from_rows(normals, dim), dim), allow_lineality);
}

RationalCone RationalCone::from_rays(std::size_t dim, const std::vector<IntVector>& rays, bool allow_lineality) {
  if (rays.empty()) throw Error(ErrorCode::EmptyInput, "no rays given");
  check_lengths(dim, rays, "ray");
  // V -> H via the polar cone, then H -> V for the canonical generators.
  const ConeGenerators polar = double_description(IntMatrix::from_rows(rays, dim), dim);
  IntMatrix normals(0, dim);
  for (const auto& f : polar.rays) normals.append_row(f);
  for (std::size_t i = 0; i < polar.lineality.rows(); ++i) {
    normals.append_row(polar.lineality.row(i));
    normals.append_row(negated(polar.lineality.row(i)));
  }
  return from_generators(dim, double_description(normals, dim), allow_lineality);
}

RationalCone RationalCone::zero(std::size_t dim) {
  IntMatrix all(0, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    all.append_row(e);
    all.append_row(negated(e));
  }
  return from_generators(dim, double_description(all, dim), false);
}

ConeUnion::ConeUnion(std::vector<RationalCone> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::EmptyInput, "cone union needs at least one piece");
  for (const auto& p : pieces_) {
    if (p.ambient_dim() != pieces_.front().ambient_dim()) {
      throw Error(ErrorCode::DimensionMismatch, "union pieces have different ambient dimensions");
    }
  }
}

ConeUnion ConeUnion::deduplicated() const {
  std::vector<RationalCone> out;
  for (const auto& p : pieces_) {
    if (std::none_of(out.begin(), out.end(), [&p](const RationalCone& q) { return cones_equal(p, q); })) {
      out.push_back(p);
    }
  }
  return ConeUnion(std::move(out));
}

Location ConeUnion::locate(const RatVector& v) const {
  Location best = Location::Outside;
  for (const auto& p : pieces_) {
    const Location l = contains(p, v);
    if (l == Location::Interior) return l;
    if (l == Location::Boundary) best = l;
  }
  return best;
}

RationalCone cone_from_rays(std::size_t dim, const std::vector<IntVector>& rays, bool allow_lineality) {
  return RationalCone::from_rays(dim, rays, allow_lineality);
}

RationalCone cone_from_halfspaces(std::size_t dim, const std::vector<IntVector>& normals, bool allow_lineality) {
  return RationalCone::from_halfspaces(dim, normals, allow_lineality);
}

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot intersect cones in dimensions " +
                                                  std::to_string(a.ambient_dim()) + " and " +
                                                  std::to_string(b.ambient_dim()));
  }
  std::vector<IntVector> normals = a.halfspaces();
  normals.insert(normals.end(), b.halfspaces().begin(), b.halfspaces().end());
  if (normals.empty()) return a;  // both are the whole space
  return RationalCone::from_halfspaces(a.ambient_dim(), normals, !a.is_pointed() || !b.is_pointed());
}

RationalCone linear_image(const RationalCone& c, const IntMatrix& m) {
  if (m.cols() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map " + m.shape() + " does not act on dimension " +
                                                  std::to_string(c.ambient_dim()));
  }
  std::vector<IntVector> gens;
  for (const auto& r : c.rays()) gens.push_back(m * r);
  for (std::size_t i = 0; i < c.lineality().rows(); ++i) {
    gens.push_back(m * c.lineality().row(i));
    gens.push_back(negated(gens.back()));
  }
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const IntVector& v) { return is_zero(v); }), gens.end());
  if (gens.empty()) return RationalCone::zero(m.rows());
  return RationalCone::from_rays(m.rows(), gens, true);
}

RationalCone linear_preimage(const RationalCone& c, const IntMatrix& m) {
  if (m.rows() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "map " + m.shape() + " does not land in dimension " +
                                                  std::to_string(c.ambient_dim()));
  }
  const IntMatrix mt = m.transpose();
  std::vector<IntVector> normals;
  for (const auto& n : c.halfspaces()) normals.push_back(mt * n);
  if (normals.empty()) {
    IntVector zero(m.cols(), Integer(0));
    normals.push_back(zero);
  }
  return RationalCone::from_halfspaces(m.cols(), normals, true);
}

Location contains(const RationalCone& c, const RatVector& v) {
  if (v.size() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point has length " + std::to_string(v.size()) +
                                                  ", ambient dim is " + std::to_string(c.ambient_dim()));
  }
  for (std::size_t i = 0; i < c.span_equations().rows(); ++i) {
    if (dot(c.span_equations().row(i), v) != 0) return Location::Outside;
  }
  bool on_boundary = false;
  for (const auto& n : c.facets()) {
    const int s = sgn(dot(n, v));
    if (s < 0) return Location::Outside;
    if (s == 0) on_boundary = true;
  }
  return on_boundary ? Location::Boundary : Location::Interior;
}

Location contains(const RationalCone& c, const IntVector& v) { return contains(c, to_rational(v)); }

bool interiors_intersect(const RationalCone& a, const RationalCone& b) {
  const RationalCone both = intersect(a, b);
  // The sum of the extreme rays lies in the relative interior of `both`; the
  // relative interiors of a and b meet iff that point is interior to each.
  RatVector centre(a.ambient_dim(), Rational(0));
  for (const auto& r : both.rays())
    for (std::size_t i = 0; i < r.size(); ++i) centre[i] += r[i];
  return contains(a, centre) == Location::Interior && contains(b, centre) == Location::Interior;
}

bool cones_equal(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "cones live in different dimensions");
  }
  return a == b;
}

std::string_view to_string(Location location) noexcept {
  switch (location) {
    case Location::Outside: return "Outside";
    case Location::Boundary: return "Boundary";
    case Location::Interior: return "Interior";
  }
  return "?";
}

}  // namespace enriques
