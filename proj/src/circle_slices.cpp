#include "circle_slices.hpp"

#include <algorithm>
#include <cmath>

namespace causet::detail {

IntervalSet circle_slice(const Region& region, double t, double L) {
  switch (region.kind()) {
    case Region::Kind::kWhole:
      return IntervalSet::full(0.0, L);
    case Region::Kind::kPast: {
      const double h = region.apex()[0] - t;
      return h < 0.0 ? IntervalSet::empty(0.0, L) : IntervalSet::arc(L, region.apex()[1], h);
    }
    case Region::Kind::kFuture: {
      const double h = t - region.apex()[0];
      return h < 0.0 ? IntervalSet::empty(0.0, L) : IntervalSet::arc(L, region.apex()[1], h);
    }
    case Region::Kind::kComplement:
      return circle_slice(region.children()[0], t, L).complement();
    case Region::Kind::kIntersection: {
      IntervalSet s = IntervalSet::full(0.0, L);
      for (const auto& c : region.children()) s = s.intersect(circle_slice(c, t, L));
      return s;
    }
    case Region::Kind::kUnion: {
      IntervalSet s = IntervalSet::empty(0.0, L);
      for (const auto& c : region.children()) s = s.unite(circle_slice(c, t, L));
      return s;
    }
  }
  return IntervalSet::empty(0.0, L);
}

namespace {

void dedupe(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Appends every t in (0, T) with t = (d + kL) / s for integer k.
bool add_crossings(std::vector<double>& out, double d, double s, double L, double T, std::size_t cap) {
  // s > 0: t = (d + kL)/s ∈ (0,T)  <=>  kL ∈ (-d, sT - d)
  const double kmin = std::ceil((-d) / L);
  const double kmax = std::floor((s * T - d) / L);
  if (kmax - kmin + out.size() > static_cast<double>(cap)) return false;
  for (double k = kmin; k <= kmax; k += 1.0) {
    const double t = (d + k * L) / s;
    if (t > 0.0 && t < T) out.push_back(t);
  }
  return true;
}

}  // namespace

std::optional<double> integrate_circle_region(const Region& region, const CircleIntegrand& f,
                                              std::size_t max_breakpoints) {
  const double L = f.circumference;
  const double T = f.T;
  std::vector<std::pair<Point, bool>> apexes;
  region.collect_apexes(apexes);

  // Boundary lines θ = c+ + t and θ = c- - t.
  std::vector<double> rising, falling;
  std::vector<double> cuts{0.0, T};
  for (const auto& [a, is_past] : apexes) {
    rising.push_back(a[1] - a[0]);
    falling.push_back(a[1] + a[0]);
    if (a[0] > 0.0 && a[0] < T) cuts.push_back(a[0]);
  }
  for (double t : f.extra_times)
    if (t > 0.0 && t < T) cuts.push_back(t);
  dedupe(rising);
  dedupe(falling);

  for (double cp : rising)
    for (double cm : falling)
      if (!add_crossings(cuts, cm - cp, 2.0, L, T, max_breakpoints)) return std::nullopt;
  for (double c : f.fixed_lines) {
    for (double cp : rising)
      if (!add_crossings(cuts, c - cp, 1.0, L, T, max_breakpoints)) return std::nullopt;
    for (double cm : falling)
      if (!add_crossings(cuts, cm - c, 1.0, L, T, max_breakpoints)) return std::nullopt;
  }
  dedupe(cuts);

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double width = cuts[i + 1] - cuts[i];
    if (width <= 0.0) continue;
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    total += width * f.weight(mid, circle_slice(region, mid, L));
  }
  return total;
}

}  // namespace causet::detail
