#include <cstdlib>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace enriques;
  using namespace enriques::cli;

  Context ctx;
  CLI::App app{"Exact lattice, cyclotomic and polyhedral computations for Enriques manifolds", "enriques-kit"};
  app.set_version_flag("--version", "enriques-kit 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", ctx.format_flag, "table or json (default: $ENRIQUES_KIT_FORMAT, else table)")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", ctx.seed, "Seed for randomized audits");
  app.add_option("--families", ctx.families_file, "JSON overriding per-family b2 values");

  register_lattice(app, ctx);
  register_isometry(app, ctx);
  register_enriques(app, ctx);
  register_cone(app, ctx);
  register_transport(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return ctx.exit_code;
}
