#pragma once

#include <cstdint>

#include "causet/region.hpp"
#include "causet/spacetime.hpp"

namespace causet {

// A real-valued estimate with its standard error (0 for exact values).
struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

struct VolumeEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  bool analytic = false;
};

// Volume of a cone expression: the model's closed form when it has one,
// otherwise the hit fraction of n_mc uniform samples.
// Throws EstimationError if n_mc == 0 and no closed form exists.
VolumeEstimate region_volume(const SpacetimeModel& model, const Region& region, std::size_t n_mc,
                             std::uint64_t seed);

// Pure Monte Carlo estimate, never using closed forms.
VolumeEstimate region_volume_mc(const SpacetimeModel& model, const Region& region, std::size_t n_mc,
                                std::uint64_t seed);

}  // namespace causet
