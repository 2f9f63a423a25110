#include <random>

#include "commands.hpp"

namespace enriques::cli {

namespace {

struct ConeArgs {
  std::string a;
  std::string b;
  std::string matrix;
  std::string point;
  bool preimage = false;
  bool lineality = false;
  std::size_t count = 100;
  std::size_t max_dim = 5;
  std::size_t max_rays = 8;
};

/// {"dim", "rays"|"halfspaces"}, or a bare list of vectors read as `key`
/// (rays when no key is required).
RationalCone read_cone(const std::string& arg, const char* key, bool lineality) {
  json j = read_json_argument(arg, "cone");
  if (j.is_array()) {
    if (j.empty() || !j.front().is_array()) throw Error(ErrorCode::ParseError, "cone: expected a list of vectors");
    j = json{{"dim", j.front().size()}, {key != nullptr ? key : "rays", j}};
  }
  if (j.is_object() && lineality && !j.contains("allow_lineality")) j["allow_lineality"] = true;
  if (key != nullptr && j.is_object() && !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("cone: missing \"") + key + "\"");
  }
  return io::cone_from_json(j);
}

IntVector random_vector(std::mt19937_64& rng, std::size_t dim, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  IntVector v(dim);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

void register_cone(CLI::App& app, Context& ctx) {
  auto* group = app.add_subcommand("cone", "Rational polyhedral cones");
  group->require_subcommand(1);
  auto args = std::make_shared<ConeArgs>();

  auto* fr = group->add_subcommand("from-rays", "Both descriptions from generating rays");
  fr->add_option("cone", args->a, "{\"dim\", \"rays\"} or a list of rays (inline or file)")->required();
  fr->add_flag("--allow-lineality", args->lineality, "Accept cones containing lines");
  fr->callback([args, &ctx] { ctx.emit(io::to_json(read_cone(args->a, "rays", args->lineality))); });

  auto* fh = group->add_subcommand("from-halfspaces", "Both descriptions from inward normals");
  fh->add_option("cone", args->a, "{\"dim\", \"halfspaces\"} or a list of normals (inline or file)")->required();
  fh->add_flag("--allow-lineality", args->lineality, "Accept cones containing lines");
  fh->callback([args, &ctx] { ctx.emit(io::to_json(read_cone(args->a, "halfspaces", args->lineality))); });

  auto* in = group->add_subcommand("intersect", "Intersection of two cones");
  in->add_option("a", args->a, "Cone file or inline JSON")->required();
  in->add_option("b", args->b, "Cone file or inline JSON")->required();
  in->callback([args, &ctx] {
    ctx.emit(io::to_json(intersect(read_cone(args->a, nullptr, false), read_cone(args->b, nullptr, false))));
  });

  auto* im = group->add_subcommand("image", "Image m(C), or preimage m^-1(C) with --preimage");
  im->add_option("cone", args->a, "Cone file or inline JSON")->required();
  im->add_option("--matrix", args->matrix, "Integer matrix (inline JSON or file)")->required();
  im->add_flag("--preimage", args->preimage, "Compute { x : m x in C }");
  im->callback([args, &ctx] {
    const RationalCone c = read_cone(args->a, nullptr, true);
    const IntMatrix m = io::int_matrix_from_json(read_json_argument(args->matrix, "matrix"), "matrix");
    ctx.emit(io::to_json(args->preimage ? linear_preimage(c, m) : linear_image(c, m)));
  });

  auto* co = group->add_subcommand("contains", "Locate a rational point: Outside, Boundary or Interior");
  co->add_option("cone", args->a, "Cone file or inline JSON")->required();
  co->add_option("--point", args->point, "Point, e.g. [1, \"1/2\"]")->required();
  co->callback([args, &ctx] {
    const RationalCone c = read_cone(args->a, nullptr, true);
    const RatVector v = io::rat_vector_from_json(read_json_argument(args->point, "point"), "point");
    ctx.emit(json{{"point", io::to_json(v)}, {"location", std::string(to_string(contains(c, v)))}});
  });

  auto* audit = group->add_subcommand("audit", "Double-description round trips on seeded random cones");
  audit->add_option("--count", args->count, "Number of random cones")->check(CLI::PositiveNumber);
  audit->add_option("--max-dim", args->max_dim, "Largest ambient dimension")->check(CLI::Range(1, 8));
  audit->add_option("--max-rays", args->max_rays, "Largest generator count")->check(CLI::Range(1, 16));
  audit->callback([args, &ctx] {
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<std::size_t> dim_dist(1, args->max_dim), ray_dist(1, args->max_rays);
    json failures = json::array();
    for (std::size_t i = 0; i < args->count; ++i) {
      const std::size_t dim = dim_dist(rng);
      const std::size_t count = ray_dist(rng);
      IntVector f;
      do f = random_vector(rng, dim, 3);
      while (is_zero(f));
      std::vector<IntVector> rays;
      while (rays.size() < count) {
        IntVector r = random_vector(rng, dim, 4);
        const Integer s = dot(f, r);
        if (s == 0) continue;
        if (s < 0)
          for (auto& x : r) x = -x;
        rays.push_back(std::move(r));
      }
      const RationalCone c = cone_from_rays(dim, rays);
      if (!(cone_from_halfspaces(dim, c.halfspaces()) == c)) {
        failures.push_back(json{{"index", i}, {"dim", dim}, {"rays", io::to_json(IntMatrix::from_rows(rays))}});
      }
    }
    ctx.emit(json{{"seed", ctx.seed}, {"count", args->count}, {"round_trip_failures", failures}});
    if (!failures.empty()) ctx.negative();
  });
}

}  // namespace enriques::cli
