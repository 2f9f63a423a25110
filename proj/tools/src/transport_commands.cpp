#include "commands.hpp"
#include "enriques_kit/fixtures.hpp"

namespace enriques::cli {

namespace {

struct TransportArgs {
  std::string cone;
  std::string basis;
  std::string lattice;
  std::string reps;
  std::string scenario;
  std::string fixture;
  std::string tau;
  std::string g;
  std::string kernel;
  bool pushforward = false;
};

std::vector<LatticeIsometry> read_isometry_list(const std::string& arg, const IntegralLattice& lattice,
                                                const std::string& what) {
  const json j = read_json_argument(arg, what);
  if (!j.is_array()) throw Error(ErrorCode::ParseError, what + ": expected a list of matrices");
  std::vector<LatticeIsometry> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(io::isometry_on(lattice, j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

io::Scenario load_scenario(const TransportArgs& a) {
  if (a.scenario.empty() == a.fixture.empty()) {
    throw Error(ErrorCode::UsageError, "give exactly one of --scenario or --fixture");
  }
  if (!a.fixture.empty()) return fixtures::pell_tiling();
  return io::scenario_from_json(io::load_json_file(a.scenario));
}

}  // namespace

void register_transport(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("transport", "Restrict, enlarge and audit fundamental domains");
  group->require_subcommand(1);
  auto args = std::make_shared<TransportArgs>();

  auto* re = group->add_subcommand("restrict", "D ∩ span(basis), in coordinates of the basis");
  re->add_option("cone", args->cone, "Cone file or inline JSON")->required();
  re->add_option("--basis", args->basis, "Independent integer vectors (inline JSON or file)")->required();
  re->callback([args, &ctx] {
    const RationalCone d = io::cone_from_json(read_json_argument(args->cone, "cone"));
    const auto basis = io::int_vectors_from_json(read_json_argument(args->basis, "basis"), "basis");
    ctx.emit(io::to_json(restrict_domain(d, basis)));
  });

  auto* en = group->add_subcommand("enlarge", "D together with its translates by coset representatives");
  en->add_option("cone", args->cone, "Cone file or inline JSON");
  en->add_option("--lattice", args->lattice, "Lattice the representatives act on");
  en->add_option("--reps", args->reps, "List of representative matrices (inline JSON or file)");
  en->add_option("--fixture", args->fixture, "pell-tiling: its cone and generators")->check(CLI::IsMember({"pell-tiling"}));
  en->add_flag("--pushforward", args->pushforward, "Use gamma(D) instead of the pullback (gamma^-1)(D)");
  en->callback([args, &ctx] {
    RationalCone d = RationalCone::zero(1);
    std::vector<LatticeIsometry> reps;
    if (!args->fixture.empty()) {
      if (!args->cone.empty() || !args->reps.empty()) throw Error(ErrorCode::UsageError, "--fixture replaces the cone and --reps");
      const auto s = fixtures::pell_tiling();
      d = s.cone;
      reps = s.generators;
    } else {
      if (args->cone.empty() || args->lattice.empty()) throw Error(ErrorCode::UsageError, "need a cone and --lattice");
      d = io::cone_from_json(read_json_argument(args->cone, "cone"));
      if (!args->reps.empty()) reps = read_isometry_list(args->reps, read_lattice_argument(args->lattice), "reps");
    }
    const auto mode = args->pushforward ? TranslateMode::Pushforward : TranslateMode::Pullback;
    const ConeUnion u = enlarge_domain(d, reps, mode);
    json pieces = json::array();
    for (const auto& p : u.pieces()) pieces.push_back(io::to_json(p));
    ctx.emit(json{{"mode", args->pushforward ? "pushforward" : "pullback"}, {"pieces", pieces}});
  });

  auto* ve = group->add_subcommand("verify", "Sampled audit of the fundamental-domain conditions");
  ve->add_option("--scenario", args->scenario, "Scenario JSON file");
  ve->add_option("--fixture", args->fixture, "pell-tiling")->check(CLI::IsMember({"pell-tiling"}));
  ve->callback([args, &ctx] {
    const io::Scenario s = load_scenario(*args);
    const GroupData group = io::group_of(s);
    json out = io::to_json(verify_tiling(s.cone, group, s.samples, io::predicate_of(s)));
    out["scenario"] = s.name;
    out["elements"] = group.elements().size();
    ctx.emit(out);
    if (out["verdict"] != "ConsistentWithTiling") ctx.negative();
  });

  auto* de = group->add_subcommand("descends", "Is the commutator defect of (tau, g) in the kernel set?");
  de->add_option("tau", args->tau, "Matrix of tau (inline JSON or file)")->required();
  de->add_option("g", args->g, "Matrix of g (inline JSON or file)")->required();
  de->add_option("--lattice", args->lattice, "Lattice both act on")->required();
  de->add_option("--kernel", args->kernel, "List of kernel matrices; the identity is always included");
  de->callback([args, &ctx] {
    const IntegralLattice l = read_lattice_argument(args->lattice);
    const auto tau = io::isometry_on(l, read_json_argument(args->tau, "tau"), "tau");
    const auto g = io::isometry_on(l, read_json_argument(args->g, "g"), "g");
    std::vector<LatticeIsometry> kernel;
    if (!args->kernel.empty()) kernel = read_isometry_list(args->kernel, l, "kernel");
    const bool ok = descends(tau, g, kernel);
    ctx.emit(json{{"defect", io::to_json(commutator_defect(tau, g).matrix())}, {"descends", ok}});
    if (!ok) ctx.negative();
  });
}

}  // namespace enriques::cli
