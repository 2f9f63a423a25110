#pragma once

#include <CLI11.hpp>

#include "context.hpp"

namespace enriques::cli {

void register_lattice(CLI::App& app, Context& ctx);
void register_isometry(CLI::App& app, Context& ctx);
void register_enriques(CLI::App& app, Context& ctx);
void register_cone(CLI::App& app, Context& ctx);
void register_transport(CLI::App& app, Context& ctx);

}  // namespace enriques::cli
