#include <algorithm>
#include <cmath>

#include "causet/errors.hpp"
#include "causet/interval_set.hpp"
#include "causet/spacetime.hpp"

namespace causet {

namespace {

// Slice of a cone expression at fixed u, as a subset of v ∈ [0, 1].
IntervalSet v_slice(const Region& region, double u) {
  switch (region.kind()) {
    case Region::Kind::kWhole:
      return IntervalSet::full(0.0, 1.0);
    case Region::Kind::kPast:
      return u <= region.apex()[0] ? IntervalSet::span(0.0, 1.0, 0.0, region.apex()[1])
                                   : IntervalSet::empty(0.0, 1.0);
    case Region::Kind::kFuture:
      return u >= region.apex()[0] ? IntervalSet::span(0.0, 1.0, region.apex()[1], 1.0)
                                   : IntervalSet::empty(0.0, 1.0);
    case Region::Kind::kComplement:
      return v_slice(region.children()[0], u).complement();
    case Region::Kind::kIntersection: {
      IntervalSet s = IntervalSet::full(0.0, 1.0);
      for (const auto& c : region.children()) s = s.intersect(v_slice(c, u));
      return s;
    }
    case Region::Kind::kUnion: {
      IntervalSet s = IntervalSet::empty(0.0, 1.0);
      for (const auto& c : region.children()) s = s.unite(v_slice(c, u));
      return s;
    }
  }
  return IntervalSet::empty(0.0, 1.0);
}

}  // namespace

ModelSpec LightconeSquare::spec() const { return ModelSpec{"lightcone_square", {}}; }

void LightconeSquare::check_domain(const Point& x) const {
  if (x.size() != 2 || !(x[0] >= 0.0 && x[0] <= 1.0) || !(x[1] >= 0.0 && x[1] <= 1.0))
    throw DomainError("lightcone_square: point " + x.to_string() + " outside [0,1]^2");
}

bool LightconeSquare::causal_leq(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  return x[0] <= y[0] && x[1] <= y[1];
}

double LightconeSquare::signed_tau(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  const double du = y[0] - x[0];
  const double dv = y[1] - x[1];
  if (du >= 0.0 && dv >= 0.0) return std::sqrt(du * dv);
  if (du <= 0.0 && dv <= 0.0) return -std::sqrt(du * dv);
  return 0.0;
}

Point LightconeSquare::sample_uniform(Rng& rng) const {
  const double u = uniform_open01(rng);
  const double v = uniform_open01(rng);
  return Point{u, v};
}

double LightconeSquare::flip_distance(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  // t = (u+v)/2, s = (u-v)/2, so dt² + ds² = (du² + dv²)/2.
  const double du = y[0] - x[0];
  const double dv = y[1] - x[1];
  return std::sqrt(0.5 * (du * du + dv * dv));
}

std::optional<FlatChart> LightconeSquare::flat_chart() const {
  const double s = 1.0 / std::sqrt(2.0);
  return FlatChart{{1.0, 1.0}, {s, s}, {false, false}};
}

std::optional<double> LightconeSquare::analytic_volume(const Region& region) const {
  std::vector<std::pair<Point, bool>> apexes;
  region.collect_apexes(apexes);
  std::vector<double> cuts{0.0, 1.0};
  for (const auto& [a, is_past] : apexes) {
    check_domain(a);
    cuts.push_back(a[0]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // The slice is constant on each open u-interval between apex coordinates.
  double vol = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double width = cuts[i + 1] - cuts[i];
    if (width <= 0.0) continue;
    vol += width * v_slice(region, 0.5 * (cuts[i] + cuts[i + 1])).measure();
  }
  return vol;
}

}  // namespace causet
