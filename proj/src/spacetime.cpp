#include "causet/spacetime.hpp"

#include <algorithm>

#include "causet/errors.hpp"

namespace causet {

double SpacetimeModel::flip_distance(const Point&, const Point&) const {
  throw CapabilityError("flip_distance: model '" + kind() + "' has no flip metric");
}

std::optional<double> SpacetimeModel::analytic_volume(const Region&) const { return std::nullopt; }

std::unique_ptr<SpacetimeModel> make_model(const ModelSpec& spec) {
  if (spec.kind == "lightcone_square") {
    if (!spec.params.empty()) throw ConfigError("lightcone_square takes no parameters");
    return std::make_unique<LightconeSquare>();
  }
  auto only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : spec.params)
      if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end())
        throw ConfigError(spec.kind + ": unknown parameter '" + k + "'");
  };
  if (spec.kind == "flat_cylinder") {
    only({"T", "n"});
    const long n = spec.integer_or("n", 1);
    return std::make_unique<FlatCylinder>(spec.number("T"), static_cast<int>(n));
  }
  if (spec.kind == "needle_slab") {
    only({"T", "needle_center", "needle_width", "needle_start", "lambda"});
    NeedleSlab::Params p;
    p.T = spec.number_or("T", p.T);
    p.needle_center = spec.number_or("needle_center", p.needle_center);
    p.needle_width = spec.number_or("needle_width", p.needle_width);
    p.needle_start = spec.number_or("needle_start", p.needle_start);
    p.lambda = spec.number_or("lambda", p.lambda);
    return std::make_unique<NeedleSlab>(p);
  }
  throw ConfigError("unknown model kind '" + spec.kind + "'");
}

}  // namespace causet
