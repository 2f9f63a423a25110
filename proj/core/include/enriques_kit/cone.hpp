#pragma once

#include <cstddef>
#include <vector>

#include "enriques_kit/matrix.hpp"

namespace enriques {

/// Generators of { x in Q^n : a x >= 0 for every row a }: a lineality basis
/// plus extreme rays of the pointed part, which lies in the orthogonal
/// complement of the lineality space.
struct ConeGenerators {
  IntMatrix lineality;  ///< HNF rows; saturated
  std::vector<IntVector> rays;  ///< primitive, sorted
};

/// Incremental double description with exact integer arithmetic and the
/// algebraic (rank) adjacency test.
ConeGenerators double_description(const IntMatrix& constraints, std::size_t dim);

enum class Location { Outside, Boundary, Interior };

/// A rational polyhedral cone in Q^n held in both descriptions.
///
/// Canonical form:
///  * rays: extreme rays of the pointed part, primitive, lexicographically
///    sorted; lineality: HNF basis of the lineality space (empty when pointed).
///  * halfspaces: primitive facet normals taken inside the linear span of the
///    cone, followed by +-b for each HNF row b of the span's orthogonal
///    complement; the whole list is sorted.
/// Both descriptions are recomputed from each other on construction, so equal
/// cones have equal canonical forms.
class RationalCone {
 public:
  static RationalCone from_rays(std::size_t dim, const std::vector<IntVector>& rays,
                                bool allow_lineality = false);
  static RationalCone from_halfspaces(std::size_t dim, const std::vector<IntVector>& normals,
                                      bool allow_lineality = false);
  /// {0} in Q^dim.
  static RationalCone zero(std::size_t dim);

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& halfspaces() const noexcept { return halfspaces_; }
  const IntMatrix& lineality() const noexcept { return lineality_; }
  std::size_t lineality_dim() const noexcept { return lineality_.rows(); }
  bool is_pointed() const noexcept { return lineality_.rows() == 0; }
  bool is_zero() const noexcept { return rays_.empty() && lineality_.rows() == 0; }

  /// Dimension of the linear span.
  std::size_t dimension() const noexcept { return span_dim_; }
  /// Facet normals only (the halfspaces that are not span equations).
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  /// HNF basis of the orthogonal complement of the span.
  const IntMatrix& span_equations() const noexcept { return equations_; }

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }

 private:
  RationalCone() = default;
  static RationalCone from_generators(std::size_t dim, ConeGenerators gens, bool allow_lineality);

  std::size_t dim_ = 0;
  std::size_t span_dim_ = 0;
  std::vector<IntVector> rays_;
  IntMatrix lineality_;
  std::vector<IntVector> facets_;
  IntMatrix equations_;
  std::vector<IntVector> halfspaces_;
};

/// Non-empty list of cones sharing an ambient dimension.
class ConeUnion {
 public:
  explicit ConeUnion(std::vector<RationalCone> pieces);

  const std::vector<RationalCone>& pieces() const noexcept { return pieces_; }
  std::size_t ambient_dim() const noexcept { return pieces_.front().ambient_dim(); }
  std::size_t size() const noexcept { return pieces_.size(); }

  /// Drops pieces equal to an earlier piece; keeps first-appearance order.
  ConeUnion deduplicated() const;
  Location locate(const RatVector& v) const;

 private:
  std::vector<RationalCone> pieces_;
};

RationalCone cone_from_rays(std::size_t dim, const std::vector<IntVector>& rays, bool allow_lineality = false);
RationalCone cone_from_halfspaces(std::size_t dim, const std::vector<IntVector>& normals,
                                  bool allow_lineality = false);

RationalCone intersect(const RationalCone& a, const RationalCone& b);

/// { m x : x in c }; m has c.ambient_dim() columns.
RationalCone linear_image(const RationalCone& c, const IntMatrix& m);
/// { x : m x in c }; m has c.ambient_dim() rows.
RationalCone linear_preimage(const RationalCone& c, const IntMatrix& m);

/// Position relative to the cone; Interior means the relative interior
/// within the cone's linear span.
Location contains(const RationalCone& c, const RatVector& v);
Location contains(const RationalCone& c, const IntVector& v);

/// Whether the relative interiors meet. For two cones with a common span
/// this is "the intersection is full-dimensional in that span".
bool interiors_intersect(const RationalCone& a, const RationalCone& b);

bool cones_equal(const RationalCone& a, const RationalCone& b);

std::string_view to_string(Location location) noexcept;

}  // namespace enriques
