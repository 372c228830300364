#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "causet/spacetime.hpp"

namespace causet {

// Concatenated greedy coverings: block k (k = 1, 2, ...) covers the model by
// flip-metric balls of radius 1/k. Block k occupies
// points[block_start[k-1] .. block_start[k]).
struct CoveringSequence {
  std::vector<Point> points;
  std::vector<std::size_t> block_start{0};

  std::size_t blocks() const { return block_start.size() - 1; }
  std::size_t block_size(std::size_t k) const { return block_start[k] - block_start[k - 1]; }
  std::span<const Point> block(std::size_t k) const {
    return std::span<const Point>(points).subspan(block_start[k - 1], block_size(k));
  }
};

// Farthest-point insertion on a randomly offset grid of spacing ≤ r/4, stopped
// once the grid covering radius leaves room for the grid's half-diagonal, so
// the block covers the whole chart. CapabilityError without a flip metric.
std::vector<Point> greedy_covering(const SpacetimeModel& model, double radius, std::uint64_t seed);

CoveringSequence hausdorff_covering_sequence(const SpacetimeModel& model, std::size_t k_max, std::uint64_t seed);

// Blocks k = 1, 2, ... until the sequence holds at least n points.
CoveringSequence hausdorff_covering_sequence_of_length(const SpacetimeModel& model, std::size_t n,
                                                       std::uint64_t seed);

// max over a regular grid of spacing `resolution` (per chart axis) of the
// flip distance to the nearest center.
double covering_radius_on_grid(const SpacetimeModel& model, std::span<const Point> centers, double resolution);

}  // namespace causet
