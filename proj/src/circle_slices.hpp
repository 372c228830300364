#pragma once

// Exact integration of cone expressions on 1+1 cylinders by time slicing.
// Every cone boundary is a line θ = c ± t (mod L); between consecutive
// crossing times the weighted slice measure is linear in t, so the midpoint
// rule on each piece is exact.

#include <functional>
#include <optional>
#include <vector>

#include "causet/interval_set.hpp"
#include "causet/region.hpp"

namespace causet::detail {

IntervalSet circle_slice(const Region& region, double t, double circumference);

struct CircleIntegrand {
  double T = 1.0;
  double circumference = 1.0;
  std::vector<double> fixed_lines;   // constant-θ boundaries of the density
  std::vector<double> extra_times;   // constant-t boundaries of the density
  std::function<double(double t, const IntervalSet& slice)> weight;
};

// nullopt when the breakpoint count would exceed max_breakpoints.
std::optional<double> integrate_circle_region(const Region& region, const CircleIntegrand& f,
                                              std::size_t max_breakpoints = 400000);

}  // namespace causet::detail
