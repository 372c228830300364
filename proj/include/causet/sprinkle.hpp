#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "causet/class_distribution.hpp"
#include "causet/finite_order.hpp"
#include "causet/spacetime.hpp"
#include "causet/volume.hpp"

namespace causet {

// leq[i][j] = causal_leq(points[i], points[j]). Throws DegenerateSampleError
// when two distinct indices are mutually related (coincident points).
FiniteOrder order_from_points(const SpacetimeModel& model, std::span<const Point> points);

struct Sprinkle {
  std::uint64_t seed = 0;
  std::size_t K = 0;
  std::vector<Point> points;
  FiniteOrder order;
  int resamples = 0;  // degenerate draws replaced with derived sub-seeds

  // CSV with columns index,x0,x1,...
  std::string points_csv() const;
};

// K independent volume-uniform points and their induced order. Fully
// determined by (model, K, seed).
Sprinkle sprinkle(const SpacetimeModel& model, std::size_t K, std::uint64_t seed);

inline constexpr std::size_t kMaxClassDistributionSize = 8;

// Empirical class frequencies over n_trials sprinkles; trial i uses
// derive_seed(seed, {i}), so the result does not depend on `workers`.
ClassDistribution estimate_class_distribution(const SpacetimeModel& model, std::size_t K, std::size_t n_trials,
                                              std::uint64_t seed, int workers = 1);

// Fraction of sprinkles whose order is a chain.
Estimate total_order_probability(const SpacetimeModel& model, std::size_t K, std::size_t n_trials,
                                 std::uint64_t seed, int workers = 1);

}  // namespace causet
