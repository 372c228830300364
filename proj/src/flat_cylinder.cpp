#include <cmath>

#include "causet/errors.hpp"
#include "causet/spacetime.hpp"
#include "circle_slices.hpp"

namespace causet {

namespace {

double circle_gap(double a, double b, double L) {
  double d = std::fmod(std::abs(a - b), L);
  return std::min(d, L - d);
}

}  // namespace

FlatCylinder::FlatCylinder(double T, int n) : T_(T), n_(n) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ArgumentError("flat_cylinder: T must be positive");
  if (n < 1 || n + 1 > static_cast<int>(Point::kMaxCoords))
    throw ArgumentError("flat_cylinder: spatial dimension n must be in [1, 3]");
  // Circumference T^(-1/n) makes the volume T·L^n exactly one.
  L_ = std::pow(T, -1.0 / n);
}

ModelSpec FlatCylinder::spec() const {
  return ModelSpec{"flat_cylinder", {{"T", format_number(T_)}, {"n", std::to_string(n_)}}};
}

void FlatCylinder::check_domain(const Point& x) const {
  bool ok = x.size() == static_cast<std::size_t>(n_ + 1) && x[0] >= 0.0 && x[0] <= T_;
  for (std::size_t i = 1; ok && i < x.size(); ++i) ok = std::isfinite(x[i]);
  if (!ok) throw DomainError("flat_cylinder: point " + x.to_string() + " outside chart domain");
}

double FlatCylinder::spatial_distance(const Point& x, const Point& y) const {
  if (n_ == 1) return circle_gap(x[1], y[1], L_);
  double s = 0.0;
  for (int i = 1; i <= n_; ++i) {
    const double d = circle_gap(x[i], y[i], L_);
    s += d * d;
  }
  return std::sqrt(s);
}

bool FlatCylinder::causal_leq(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  const double dt = y[0] - x[0];
  return dt >= 0.0 && dt >= spatial_distance(x, y);
}

double FlatCylinder::signed_tau(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  const double dt = y[0] - x[0];
  const double ds = spatial_distance(x, y);
  if (std::abs(dt) < ds) return 0.0;
  const double tau = std::sqrt(std::max(0.0, dt * dt - ds * ds));
  return dt >= 0.0 ? tau : -tau;
}

Point FlatCylinder::sample_uniform(Rng& rng) const {
  std::array<double, Point::kMaxCoords> c{};
  c[0] = T_ * uniform_open01(rng);
  for (int i = 1; i <= n_; ++i) c[i] = L_ * uniform01(rng);
  return Point(std::span<const double>(c.data(), n_ + 1));
}

double FlatCylinder::flip_distance(const Point& x, const Point& y) const {
  check_domain(x);
  check_domain(y);
  const double dt = y[0] - x[0];
  const double ds = spatial_distance(x, y);
  return std::sqrt(dt * dt + ds * ds);
}

std::optional<FlatChart> FlatCylinder::flat_chart() const {
  FlatChart c;
  c.extent = chart_extent();
  c.scale.assign(n_ + 1, 1.0);
  c.periodic.assign(n_ + 1, true);
  c.periodic[0] = false;
  return c;
}

std::vector<double> FlatCylinder::chart_extent() const {
  std::vector<double> e(n_ + 1, L_);
  e[0] = T_;
  return e;
}

std::optional<double> FlatCylinder::analytic_volume(const Region& region) const {
  std::vector<std::pair<Point, bool>> apexes;
  region.collect_apexes(apexes);
  for (const auto& a : apexes) check_domain(a.first);
  if (n_ != 1) {
    if (apexes.empty()) return region.contains(*this, Point{0.5 * T_, 0.0, 0.0, 0.0}) ? 1.0 : 0.0;
    return std::nullopt;
  }
  detail::CircleIntegrand f;
  f.T = T_;
  f.circumference = L_;
  f.weight = [](double, const IntervalSet& s) { return s.measure(); };
  return detail::integrate_circle_region(region, f);
}

}  // namespace causet
