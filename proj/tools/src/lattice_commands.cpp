#include "commands.hpp"
#include "enriques_kit/fixtures.hpp"

namespace enriques::cli {

namespace {

struct LatticeArgs {
  std::string lattice;
  std::vector<std::string> parts;
  std::string k;
  std::string fixture;
  unsigned long n = 2;
};

}  // namespace

void register_lattice(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("lattice", "Integral lattices: invariants, sums, twists");
  group->require_subcommand(1);
  auto args = std::make_shared<LatticeArgs>();

  auto* info = group->add_subcommand("info", "Rank, determinant, signature, parity and Gram matrix");
  info->add_option("lattice", args->lattice, "Expression (U, E8, twist(e,k), sum(e,...), rank1(k)), inline JSON or file");
  info->add_option("--fixture", args->fixture, "enriques-involution-invariant")
      ->check(CLI::IsMember({"enriques-involution-invariant"}));
  info->add_option("--n", args->n, "n of the fixture, n >= 2")->check(CLI::PositiveNumber);
  info->callback([args, &ctx] {
    if (args->fixture.empty() == args->lattice.empty()) {
      throw Error(ErrorCode::UsageError, "give exactly one of a lattice argument or --fixture");
    }
    const IntegralLattice l = args->fixture.empty() ? read_lattice_argument(args->lattice)
                                                    : fixtures::enriques_involution_invariant(args->n);
    ctx.emit(io::to_json(l));
  });

  auto* sum = group->add_subcommand("sum", "Orthogonal direct sum of two or more lattices");
  sum->add_option("lattices", args->parts, "Lattices to sum")->required()->expected(2, -1);
  sum->callback([args, &ctx] {
    IntegralLattice acc = read_lattice_argument(args->parts.front());
    for (std::size_t i = 1; i < args->parts.size(); ++i) acc = direct_sum(acc, read_lattice_argument(args->parts[i]));
    ctx.emit(io::to_json(acc));
  });

  auto* tw = group->add_subcommand("twist", "Multiply the form by a nonzero integer k");
  tw->add_option("lattice", args->lattice, "Lattice")->required();
  tw->add_option("k", args->k, "Twist factor")->required();
  tw->callback([args, &ctx] {
    const Integer k = io::integer_from_json(io::json(args->k), "k");
    ctx.emit(io::to_json(twist(read_lattice_argument(args->lattice), k)));
  });
}

}  // namespace enriques::cli
