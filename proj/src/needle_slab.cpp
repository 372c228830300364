#include <algorithm>
#include <cmath>

#include "causet/errors.hpp"
#include "causet/spacetime.hpp"
#include "circle_slices.hpp"

namespace causet {

namespace {

double wrap(double theta, double L) {
  double r = std::fmod(theta, L);
  return r < 0.0 ? r + L : r;
}

double circle_gap(double a, double b, double L) {
  double d = std::fmod(std::abs(a - b), L);
  return std::min(d, L - d);
}

}  // namespace

NeedleSlab::NeedleSlab(const Params& p) : p_(p), base_(p.T, 1) {
  const double L = base_.circumference();
  if (!(p.needle_start >= 0.0 && p.needle_start < p.T))
    throw ArgumentError("needle_slab: needle_start must lie in [0, T)");
  if (!(p.needle_width > 0.0 && p.needle_width <= L))
    throw ArgumentError("needle_slab: needle_width must lie in (0, circumference]");
  if (!(p.lambda >= 1.0) || !std::isfinite(p.lambda)) throw ArgumentError("needle_slab: lambda must be >= 1");
  if (!std::isfinite(p.needle_center)) throw ArgumentError("needle_slab: needle_center must be finite");
  p_.needle_center = wrap(p.needle_center, L);
  Z_ = 1.0 + (p.lambda * p.lambda - 1.0) * p.needle_width * (p.T - p.needle_start);
}

ModelSpec NeedleSlab::spec() const {
  return ModelSpec{"needle_slab",
                   {{"T", format_number(p_.T)},
                    {"needle_center", format_number(p_.needle_center)},
                    {"needle_width", format_number(p_.needle_width)},
                    {"needle_start", format_number(p_.needle_start)},
                    {"lambda", format_number(p_.lambda)}}};
}

bool NeedleSlab::in_strip(const Point& x) const {
  return x[0] > p_.needle_start &&
         circle_gap(x[1], p_.needle_center, base_.circumference()) < 0.5 * p_.needle_width;
}

double NeedleSlab::strip_mass() const {
  return p_.lambda * p_.lambda * p_.needle_width * (p_.T - p_.needle_start) / Z_;
}

double NeedleSlab::density(const Point& x) const {
  return (in_strip(x) ? p_.lambda * p_.lambda : 1.0) / Z_;
}

double NeedleSlab::needle_curve_length() const {
  return (p_.needle_start + p_.lambda * (p_.T - p_.needle_start)) / std::sqrt(Z_);
}

TdiamBounds NeedleSlab::tdiam() const {
  // Lower: the curve θ = θ0 realizes this length. Upper: any causal curve has
  // length ≤ ∫ Ω dt with Ω ≤ 1 before t0 and Ω ≤ λ after, same total.
  const double len = needle_curve_length();
  return {len, len};
}

Point NeedleSlab::sample_uniform(Rng& rng) const {
  const double L = base_.circumference();
  if (uniform01(rng) < strip_mass()) {
    const double t = p_.needle_start + (p_.T - p_.needle_start) * uniform_open01(rng);
    const double theta = p_.needle_center + p_.needle_width * (uniform_open01(rng) - 0.5);
    return Point{t, wrap(theta, L)};
  }
  for (;;) {
    Point z = base_.sample_uniform(rng);
    if (!in_strip(z)) return z;
  }
}

double NeedleSlab::tau_lower(const Point& x, const Point& y) const {
  const double L = base_.circumference();
  const double root_z = std::sqrt(Z_);
  // Y-length of any causal curve is at least its flat length / sqrt(Z).
  double best = base_.signed_tau(x, y);

  // Three-segment curves x -> (t1, s) -> (t2, s) -> y with the middle piece
  // vertical inside the strip (length λ(t2 - t1)).
  const double half = 0.5 * p_.needle_width * (1.0 - 1e-9);
  std::vector<double> candidates;
  for (int k = -8; k <= 8; ++k) candidates.push_back(p_.needle_center + half * k / 8.0);
  for (const Point* e : {&x, &y}) {
    double off = std::remainder((*e)[1] - p_.needle_center, L);
    candidates.push_back(p_.needle_center + std::clamp(off, -half, half));
  }
  for (double s : candidates) {
    s = wrap(s, L);
    const double t1 = std::max(p_.needle_start, x[0] + circle_gap(x[1], s, L));
    const double t2 = y[0] - circle_gap(s, y[1], L);
    if (!(t2 > t1)) continue;
    const Point p1{t1, s};
    const Point p2{t2, s};
    const double len = base_.signed_tau(x, p1) + p_.lambda * (t2 - t1) + base_.signed_tau(p2, y);
    best = std::max(best, len);
  }
  return best / root_z;
}

double NeedleSlab::signed_tau(const Point& x, const Point& y) const {
  if (base_.causal_leq(x, y)) return tau_lower(x, y);
  if (base_.causal_leq(y, x)) return -tau_lower(y, x);
  return 0.0;
}

std::optional<double> NeedleSlab::analytic_volume(const Region& region) const {
  std::vector<std::pair<Point, bool>> apexes;
  region.collect_apexes(apexes);
  for (const auto& a : apexes) check_domain(a.first);
  const double L = base_.circumference();
  const IntervalSet strip = IntervalSet::arc(L, p_.needle_center, 0.5 * p_.needle_width);
  const double l2 = p_.lambda * p_.lambda;
  const double t0 = p_.needle_start;
  const double Z = Z_;

  detail::CircleIntegrand f;
  f.T = p_.T;
  f.circumference = L;
  f.fixed_lines = {wrap(p_.needle_center - 0.5 * p_.needle_width, L),
                   wrap(p_.needle_center + 0.5 * p_.needle_width, L)};
  f.extra_times = {t0};
  f.weight = [&](double t, const IntervalSet& s) {
    const double m = s.measure();
    if (t <= t0) return m / Z;
    return (m + (l2 - 1.0) * s.intersect(strip).measure()) / Z;
  };
  return detail::integrate_circle_region(region, f);
}

}  // namespace causet
