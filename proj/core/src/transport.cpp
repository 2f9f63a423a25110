#include "enriques_kit/transport.hpp"

#include <algorithm>
#include <set>

#include "enriques_kit/linalg.hpp"

namespace enriques {

namespace {

bool in_kernel(const LatticeIsometry& defect, const std::vector<LatticeIsometry>& kernel_set) {
  if (defect.is_identity()) return true;
  return std::any_of(kernel_set.begin(), kernel_set.end(),
                     [&defect](const LatticeIsometry& k) { return k.matrix() == defect.matrix(); });
}

void require_same_lattice(const IntegralLattice& lattice, const LatticeIsometry& iso, const char* what) {
  if (!(iso.lattice() == lattice)) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " acts on a different lattice");
  }
}

}  // namespace

GroupData::GroupData(IntegralLattice lattice, std::vector<LatticeIsometry> elements,
                     std::vector<LatticeIsometry> kernel)
    : lattice_(std::move(lattice)), elements_(std::move(elements)), kernel_(std::move(kernel)) {
  for (const auto& e : elements_) require_same_lattice(lattice_, e, "group element");
  for (const auto& k : kernel_) require_same_lattice(lattice_, k, "kernel element");
  if (std::none_of(kernel_.begin(), kernel_.end(), [](const LatticeIsometry& k) { return k.is_identity(); })) {
    kernel_.insert(kernel_.begin(), LatticeIsometry::identity(lattice_));
  }
}

GroupData GroupData::from_generators(const IntegralLattice& lattice, const std::vector<LatticeIsometry>& generators,
                                     std::size_t max_length, std::vector<LatticeIsometry> kernel) {
  std::vector<LatticeIsometry> letters;
  for (const auto& g : generators) {
    require_same_lattice(lattice, g, "generator");
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  std::set<IntMatrix> seen;
  std::vector<LatticeIsometry> elements{LatticeIsometry::identity(lattice)};
  seen.insert(elements.front().matrix());
  std::vector<LatticeIsometry> frontier = elements;
  for (std::size_t length = 1; length <= max_length; ++length) {
    std::vector<LatticeIsometry> next;
    for (const auto& w : frontier) {
      for (const auto& l : letters) {
        LatticeIsometry candidate = w * l;
        if (seen.insert(candidate.matrix()).second) next.push_back(candidate);
      }
    }
    elements.insert(elements.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return GroupData(lattice, std::move(elements), std::move(kernel));
}

RationalCone restrict_domain(const RationalCone& domain, const std::vector<IntVector>& subspace_basis) {
  if (subspace_basis.empty()) throw Error(ErrorCode::EmptyInput, "subspace basis is empty");
  const IntMatrix basis = IntMatrix::from_rows(subspace_basis);
  if (basis.cols() != domain.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "basis vectors must have length " + std::to_string(domain.ambient_dim()));
  }
  if (rank(basis) != basis.rows()) throw Error(ErrorCode::DependentBasis, "subspace basis is linearly dependent");
  // Inclusion s -> B^T s; halfspace n pulls back to B n.
  return linear_preimage(domain, basis.transpose());
}

ConeUnion enlarge_domain(const RationalCone& domain, const std::vector<LatticeIsometry>& coset_reps,
                         TranslateMode mode) {
  std::vector<RationalCone> pieces{domain};
  for (const auto& rep : coset_reps) {
    if (rep.rank() != domain.ambient_dim()) {
      throw Error(ErrorCode::DimensionMismatch, "coset representative has rank " + std::to_string(rep.rank()) +
                                                    ", domain lives in dimension " +
                                                    std::to_string(domain.ambient_dim()));
    }
    const IntMatrix m = mode == TranslateMode::Pullback ? rep.inverse().matrix() : rep.matrix();
    pieces.push_back(linear_image(domain, m));
  }
  return ConeUnion(std::move(pieces)).deduplicated();
}

bool descends(const LatticeIsometry& tau, const LatticeIsometry& g, const std::vector<LatticeIsometry>& kernel_set) {
  return in_kernel(commutator_defect(tau, g), kernel_set);
}

std::vector<CosetClass> coset_partition(const std::vector<LatticeIsometry>& candidates, const LatticeIsometry& g,
                                        const std::vector<LatticeIsometry>& kernel_set) {
  std::vector<CosetClass> classes;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const LatticeIsometry defect = commutator_defect(candidates[i], g);
    if (!in_kernel(defect, kernel_set)) {
      throw Error(ErrorCode::DefectOutsideKernel,
                  "candidate " + std::to_string(i) + " has a commutator defect outside the kernel set");
    }
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&defect](const CosetClass& c) { return c.defect == defect.matrix(); });
    if (it == classes.end()) {
      classes.push_back(CosetClass{defect.matrix(), {i}});
    } else {
      it->members.push_back(i);
    }
  }
  return classes;
}

AmbientPredicate positive_cone_predicate(const IntegralLattice& lattice, IntVector reference) {
  if (reference.size() != lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "reference vector length must equal lattice rank");
  }
  const RatVector ref = to_rational(reference);
  return [lattice, ref](const RatVector& v) {
    return inner_product(lattice, v, v) > 0 && inner_product(lattice, v, ref) > 0;
  };
}

TilingReport verify_tiling(const RationalCone& fundamental, const GroupData& group, const std::vector<RatVector>& samples,
                           const AmbientPredicate& ambient_predicate) {
  const std::size_t dim = fundamental.ambient_dim();
  if (group.lattice().rank() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "group acts in rank " + std::to_string(group.lattice().rank()) +
                                                  ", cone lives in dimension " + std::to_string(dim));
  }
  const auto& elements = group.elements();

  std::vector<RationalCone> translates;
  translates.reserve(elements.size());
  for (const auto& e : elements) translates.push_back(linear_image(fundamental, e.matrix()));

  // Vectors spanning the cone's linear span, to compare induced maps there.
  std::vector<IntVector> span = fundamental.rays();
  for (std::size_t i = 0; i < fundamental.lineality().rows(); ++i) span.push_back(fundamental.lineality().row(i));
  auto same_on_span = [&span](const IntMatrix& a, const IntMatrix& b) {
    return std::all_of(span.begin(), span.end(), [&](const IntVector& v) { return a * v == b * v; });
  };

  TilingReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (same_on_span(elements[i].matrix(), elements[j].matrix())) continue;
      if (interiors_intersect(translates[i], translates[j])) report.disjointness_violations.emplace_back(i, j);
    }
  }

  for (const auto& v : samples) {
    if (v.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "sample has length " + std::to_string(v.size()) +
                                                    ", expected " + std::to_string(dim));
    }
    if (ambient_predicate && !ambient_predicate(v)) {
      ++report.skipped_samples;
      continue;
    }
    ++report.sample_count;
    const bool covered = std::any_of(translates.begin(), translates.end(),
                                     [&v](const RationalCone& t) { return contains(t, v) != Location::Outside; });
    if (covered) {
      ++report.covered_samples;
    } else {
      report.uncovered_witnesses.push_back(v);
    }
  }

  report.verdict = report.disjointness_violations.empty() && report.uncovered_witnesses.empty()
                       ? Verdict::ConsistentWithTiling
                       : Verdict::Refuted;
  return report;
}

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::ConsistentWithTiling ? "ConsistentWithTiling" : "Refuted";
}

}  // namespace enriques
