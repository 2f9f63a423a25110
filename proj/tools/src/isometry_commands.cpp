#include "commands.hpp"
#include "enriques_kit/fixtures.hpp"
#include "enriques_kit/linalg.hpp"

namespace enriques::cli {

namespace {

struct IsometryArgs {
  std::string file;
  std::string fixture;
  std::uint64_t bound = 1000;
  std::string phi;
  std::string g;
  std::string lattice;
};

LatticeIsometry load_isometry(const std::string& file, const std::string& fixture) {
  if (file.empty() == fixture.empty()) {
    throw Error(ErrorCode::UsageError, "give exactly one of an isometry file or --fixture");
  }
  if (!fixture.empty()) return fixtures::kummer_psi();
  return io::isometry_from_json(read_json_argument(file, "isometry"));
}

/// A full isometry description, or a bare matrix when --lattice is given.
LatticeIsometry load_on(const std::string& arg, const std::string& lattice, const std::string& what) {
  const json j = read_json_argument(arg, what);
  if (lattice.empty()) return io::isometry_from_json(j);
  return io::isometry_on(read_lattice_argument(lattice), j, what);
}

json analyze(const LatticeIsometry& iso, std::uint64_t bound) {
  json out;
  out["lattice"] = io::to_json(iso.lattice());
  out["matrix"] = io::to_json(iso.matrix());
  out["characteristic_polynomial"] = characteristic_polynomial(iso.matrix()).to_string();
  try {
    out["order"] = order(iso, bound);
    const auto profile = cyclotomic_profile(iso);
    out["cyclotomic_profile"] = io::to_json(profile);
    json dims = json::object();
    for (const auto& [d, m] : profile.multiplicities) dims[std::to_string(d)] = eigenspace_dimension(iso, d);
    out["eigenspace_dimensions"] = dims;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OrderExceedsBound) throw;
    out["order"] = nullptr;
    out["order_note"] = "no power up to " + std::to_string(bound) + " is the identity";
    out["cyclotomic_profile"] = nullptr;
  }
  out["invariant"] = io::to_json(invariant_sublattice(iso));
  out["coinvariant"] = io::to_json(coinvariant_sublattice(iso));
  out["decomposition"] = io::to_json(decomposition_check(iso));
  return out;
}

}  // namespace

void register_isometry(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("isometry", "Finite-order lattice isometries");
  group->require_subcommand(1);
  auto args = std::make_shared<IsometryArgs>();

  auto* an = group->add_subcommand("analyze", "Order, cyclotomic profile, (co)invariant sublattices, decomposition");
  an->add_option("isometry", args->file, "Isometry JSON {\"lattice\", \"matrix\"} (inline or file)");
  an->add_option("--fixture", args->fixture, "kummer-psi")->check(CLI::IsMember({"kummer-psi"}));
  an->add_option("--bound", args->bound, "Largest order tried")->check(CLI::PositiveNumber);
  an->callback([args, &ctx] {
    const json out = analyze(load_isometry(args->file, args->fixture), args->bound);
    ctx.emit(out);
    if (!out["decomposition"]["direct"].get<bool>()) ctx.negative();
  });

  auto* comm = group->add_subcommand("commutator", "Commutator defect phi g^-1 phi^-1 g");
  comm->add_option("phi", args->phi, "Isometry phi")->required();
  comm->add_option("g", args->g, "Isometry g")->required();
  comm->add_option("--lattice", args->lattice, "Lattice for bare matrices");
  comm->callback([args, &ctx] {
    const auto phi = load_on(args->phi, args->lattice, "phi");
    const auto g = load_on(args->g, args->lattice, "g");
    if (!(phi.lattice() == g.lattice())) throw Error(ErrorCode::DimensionMismatch, "phi and g act on different lattices");
    const auto defect = commutator_defect(phi, g);
    ctx.emit(json{{"defect", io::to_json(defect.matrix())}, {"commute", defect.is_identity()}});
  });
}

}  // namespace enriques::cli
