#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "causet/spacetime.hpp"

namespace causet {

struct DiamondDeviation {
  Point p;
  Point q;
  double volume = 0.0;
  std::size_t count = 0;
  double fraction = 0.0;
  double deviation = 0.0;  // |count/n - volume|
  double tolerance = 0.0;  // sigmas · sqrt(v(1-v)/n)
  bool passed = false;
};

struct VolumeLawReport {
  std::size_t n = 0;
  std::vector<DiamondDeviation> diamonds;
  std::size_t passed_count = 0;
  double pass_fraction() const {
    return diamonds.empty() ? 1.0 : static_cast<double>(passed_count) / static_cast<double>(diamonds.size());
  }
};

// Compares the prefix counts #(a⁻¹(J(p,q)) ∩ [0,n)) / n with vol J(p,q).
// Diamond volumes must have closed forms (EstimationError otherwise).
VolumeLawReport volume_law_check(std::span<const Point> sequence, const SpacetimeModel& model,
                                 const std::vector<std::pair<Point, Point>>& diamonds, std::size_t n,
                                 double sigmas = 4.0);

// Random causally related pairs p ≤ q.
std::vector<std::pair<Point, Point>> random_diamonds(const SpacetimeModel& model, std::size_t count,
                                                     std::uint64_t seed);

}  // namespace causet
