#include "commands.hpp"
#include "enriques_kit/number_theory.hpp"

namespace enriques::cli {

namespace {

struct EnriquesArgs {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t k = 1;
  long t_dim = 0;
  bool minus_one = false;
};

json index_list(const std::vector<std::uint64_t>& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(x);
  return out;
}

}  // namespace

void register_enriques(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("enriques", "Lefschetz obstructions, admissible indices, proof status");
  group->require_subcommand(1);
  auto args = std::make_shared<EnriquesArgs>();

  auto* indices = group->add_subcommand("indices", "Admissible indices with phi(d) <= b2 - 1 and their status");
  indices->add_option("--family", args->family, "k3n, kumn, og6 or og10")->required();
  indices->callback([args, &ctx] {
    const FamilyTable table = ctx.families();
    const Family family = parse_family(args->family);
    const auto& info = table.info(family);
    json statuses = json::array();
    for (const auto& s : status_table(table, family)) statuses.push_back(io::to_json(s));
    json out;
    out["family"] = std::string(to_string(family));
    out["b2"] = info.b2;
    out["b2_provenance"] = info.provenance;
    out["admissible"] = index_list(admissible_indices(info.b2));
    out["holds"] = index_list(holds_list(table, family));
    out["holds_supplementary"] = index_list(supplementary_holds_list(table, family));
    out["statuses"] = statuses;
    ctx.emit(out);
  });

  auto* lef = group->add_subcommand("lefschetz", "L(g) = 1 + conj(lambda) + ... + conj(lambda)^n in Z[zeta_d]");
  lef->add_option("--n", args->n, "Half-dimension n >= 1")->required();
  lef->add_option("--d", args->d, "Order d >= 2")->required();
  lef->add_option("--k", args->k, "lambda = zeta_d^k with gcd(k, d) = 1");
  lef->callback([args, &ctx] {
    const auto l = lefschetz_number(args->n, args->d, args->k);
    json out;
    out["n"] = args->n;
    out["d"] = args->d;
    out["k"] = args->k;
    out["value"] = l.to_string();
    out["coefficients"] = io::to_json(l.coefficients());
    out["vanishes"] = l.is_zero();
    out["d_divides_n_plus_1"] = (args->n + 1) % args->d == 0;
    ctx.emit(out);
  });

  auto* st = group->add_subcommand("status", "Proof-coverage status of one index");
  st->add_option("--family", args->family, "k3n, kumn, og6 or og10")->required();
  st->add_option("--d", args->d, "Index d >= 2")->required();
  st->add_option("--n", args->n, "Half-dimension (only affects K3n, d = 3)");
  st->callback([args, &ctx] {
    const auto half = args->n == 0 ? std::nullopt : std::optional<std::uint64_t>(args->n);
    ctx.emit(io::to_json(cone_conjecture_status(ctx.families(), parse_family(args->family), args->d, half)));
  });

  auto* pd = group->add_subcommand("period-dim", "Dimension of the period domain of the eigenspace T(lambda)");
  pd->add_option("--t-dim", args->t_dim, "dim T(lambda)")->required();
  pd->add_flag("--minus-one", args->minus_one, "lambda = -1");
  pd->callback([args, &ctx] {
    json out;
    out["t_lambda_dim"] = args->t_dim;
    out["lambda_is_minus_one"] = args->minus_one;
    out["dimension"] = period_domain_dimension(args->t_dim, args->minus_one);
    ctx.emit(out);
  });
}

}  // namespace enriques::cli
