#include "causet/volume_law.hpp"

#include <cmath>

#include "causet/errors.hpp"
#include "causet/volume.hpp"

namespace causet {

VolumeLawReport volume_law_check(std::span<const Point> sequence, const SpacetimeModel& model,
                                 const std::vector<std::pair<Point, Point>>& diamonds, std::size_t n,
                                 double sigmas) {
  if (n == 0 || n > sequence.size()) throw ArgumentError("volume_law_check: prefix length out of range");
  VolumeLawReport r;
  r.n = n;
  const double nn = static_cast<double>(n);
  for (const auto& [p, q] : diamonds) {
    DiamondDeviation dd;
    dd.p = p;
    dd.q = q;
    const Region region = Region::diamond(p, q);
    dd.volume = region_volume(model, region, 0, 0).value;
    for (std::size_t i = 0; i < n; ++i)
      if (model.causal_leq(p, sequence[i]) && model.causal_leq(sequence[i], q)) ++dd.count;
    dd.fraction = static_cast<double>(dd.count) / nn;
    dd.deviation = std::abs(dd.fraction - dd.volume);
    dd.tolerance = sigmas * std::sqrt(std::max(0.0, dd.volume * (1.0 - dd.volume)) / nn);
    dd.passed = dd.deviation <= dd.tolerance;
    r.passed_count += dd.passed ? 1 : 0;
    r.diamonds.push_back(dd);
  }
  return r;
}

std::vector<std::pair<Point, Point>> random_diamonds(const SpacetimeModel& model, std::size_t count,
                                                     std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<std::pair<Point, Point>> out;
  while (out.size() < count) {
    const Point a = model.sample_uniform(rng);
    const Point b = model.sample_uniform(rng);
    if (model.causal_leq(a, b)) {
      out.emplace_back(a, b);
    } else if (model.causal_leq(b, a)) {
      out.emplace_back(b, a);
    }
  }
  return out;
}

}  // namespace causet
