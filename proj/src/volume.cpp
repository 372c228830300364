#include "causet/volume.hpp"

#include <cmath>

#include "causet/errors.hpp"

namespace causet {

VolumeEstimate region_volume_mc(const SpacetimeModel& model, const Region& region, std::size_t n_mc,
                                std::uint64_t seed) {
  if (n_mc == 0) throw EstimationError("region_volume: no closed form and n_mc = 0");
  Rng rng = make_rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_mc; ++i)
    if (region.contains(model, model.sample_uniform(rng))) ++hits;
  const double p = static_cast<double>(hits) / static_cast<double>(n_mc);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n_mc)), false};
}

VolumeEstimate region_volume(const SpacetimeModel& model, const Region& region, std::size_t n_mc,
                             std::uint64_t seed) {
  if (auto v = model.analytic_volume(region)) return {*v, 0.0, true};
  return region_volume_mc(model, region, n_mc, seed);
}

}  // namespace causet
