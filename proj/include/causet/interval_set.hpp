#pragma once

#include <utility>
#include <vector>

namespace causet {

// Finite union of disjoint closed intervals inside a base interval [lo, hi].
// Used to evaluate constant-time slices of cone expressions.
class IntervalSet {
 public:
  IntervalSet(double lo, double hi) : lo_(lo), hi_(hi) {}

  static IntervalSet empty(double lo, double hi) { return IntervalSet(lo, hi); }
  static IntervalSet full(double lo, double hi);
  // [a, b] clipped to the base interval.
  static IntervalSet span(double lo, double hi, double a, double b);
  // Arc of a circle of circumference hi - lo (lo = 0), centered at c with
  // half-width h; wraps around the seam.
  static IntervalSet arc(double circumference, double center, double half_width);

  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet complement() const;

  double measure() const;
  // Measure of the part inside [a, b].
  double measure_within(double a, double b) const;

  const std::vector<std::pair<double, double>>& pieces() const { return pieces_; }

 private:
  void normalize();

  double lo_;
  double hi_;
  std::vector<std::pair<double, double>> pieces_;
};

}  // namespace causet
