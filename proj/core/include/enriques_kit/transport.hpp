#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "enriques_kit/cone.hpp"
#include "enriques_kit/isometry.hpp"

namespace enriques {

/// A finite sample of a group acting on a lattice, plus the finite kernel K of
/// the action on the lattice. The identity is always a member of K.
class GroupData {
 public:
  GroupData(IntegralLattice lattice, std::vector<LatticeIsometry> elements,
            std::vector<LatticeIsometry> kernel = {});

  /// All products of at most `max_length` generators and their inverses,
  /// deduplicated by matrix, shortest words first.
  static GroupData from_generators(const IntegralLattice& lattice, const std::vector<LatticeIsometry>& generators,
                                   std::size_t max_length, std::vector<LatticeIsometry> kernel = {});

  const IntegralLattice& lattice() const noexcept { return lattice_; }
  const std::vector<LatticeIsometry>& elements() const noexcept { return elements_; }
  const std::vector<LatticeIsometry>& kernel() const noexcept { return kernel_; }

 private:
  IntegralLattice lattice_;
  std::vector<LatticeIsometry> elements_;
  std::vector<LatticeIsometry> kernel_;
};

/// D~ intersected with span(subspace_basis), in coordinates of that basis.
RationalCone restrict_domain(const RationalCone& domain, const std::vector<IntVector>& subspace_basis);

enum class TranslateMode {
  Pullback,     ///< piece (gamma^-1)*(D~): the matrix inverse applied to D~
  Pushforward,  ///< piece gamma(D~)
};

/// {D~} together with one translate per coset representative, deduplicated.
ConeUnion enlarge_domain(const RationalCone& domain, const std::vector<LatticeIsometry>& coset_reps,
                         TranslateMode mode = TranslateMode::Pullback);

/// True iff the commutator defect of (tau, g) is a member of kernel_set. An
/// empty kernel_set means {identity}.
bool descends(const LatticeIsometry& tau, const LatticeIsometry& g,
              const std::vector<LatticeIsometry>& kernel_set = {});

struct CosetClass {
  IntMatrix defect;
  std::vector<std::size_t> members;  ///< candidate indices, input order
  std::size_t representative() const { return members.front(); }
};

/// Candidates grouped by commutator defect with g, in order of first
/// appearance. DefectOutsideKernel when a defect is not in kernel_set.
std::vector<CosetClass> coset_partition(const std::vector<LatticeIsometry>& candidates, const LatticeIsometry& g,
                                        const std::vector<LatticeIsometry>& kernel_set = {});

enum class Verdict { ConsistentWithTiling, Refuted };

struct TilingReport {
  std::size_t sample_count = 0;
  std::size_t skipped_samples = 0;  ///< rejected by the ambient predicate
  std::size_t covered_samples = 0;
  std::vector<RatVector> uncovered_witnesses;
  std::vector<std::pair<std::size_t, std::size_t>> disjointness_violations;
  Verdict verdict = Verdict::ConsistentWithTiling;
};

using AmbientPredicate = std::function<bool(const RatVector&)>;

/// Positive-cone predicate for a hyperbolic lattice: q(v) > 0 and
/// <v, reference> > 0.
AmbientPredicate positive_cone_predicate(const IntegralLattice& lattice, IntVector reference);

/// Finite audit of the fundamental-domain conditions: translates g(Pi) of
/// distinct induced maps must have disjoint relative interiors, and every
/// admissible sample must land in some translate. Only ever claims
/// consistency, never the tiling itself.
TilingReport verify_tiling(const RationalCone& fundamental, const GroupData& group, const std::vector<RatVector>& samples,
                           const AmbientPredicate& ambient_predicate = {});

std::string_view to_string(Verdict verdict) noexcept;

}  // namespace enriques
