#include "causet/interval_set.hpp"

#include <algorithm>
#include <cmath>

namespace causet {

IntervalSet IntervalSet::full(double lo, double hi) {
  IntervalSet s(lo, hi);
  if (hi > lo) s.pieces_.emplace_back(lo, hi);
  return s;
}

IntervalSet IntervalSet::span(double lo, double hi, double a, double b) {
  IntervalSet s(lo, hi);
  a = std::max(a, lo);
  b = std::min(b, hi);
  if (b > a) s.pieces_.emplace_back(a, b);
  return s;
}

IntervalSet IntervalSet::arc(double circumference, double center, double half_width) {
  const double L = circumference;
  IntervalSet s(0.0, L);
  if (half_width < 0.0) return s;
  if (2.0 * half_width >= L) return full(0.0, L);
  double a = std::fmod(center - half_width, L);
  if (a < 0.0) a += L;
  const double b = a + 2.0 * half_width;
  if (b <= L) {
    s.pieces_.emplace_back(a, b);
  } else {
    s.pieces_.emplace_back(0.0, b - L);
    s.pieces_.emplace_back(a, L);
  }
  s.normalize();
  return s;
}

void IntervalSet::normalize() {
  std::sort(pieces_.begin(), pieces_.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& p : pieces_) {
    if (p.second <= p.first) continue;
    if (!merged.empty() && p.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, p.second);
    } else {
      merged.push_back(p);
    }
  }
  pieces_ = std::move(merged);
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out(lo_, hi_);
  std::size_t i = 0, j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const double a = std::max(pieces_[i].first, other.pieces_[j].first);
    const double b = std::min(pieces_[i].second, other.pieces_[j].second);
    if (b > a) out.pieces_.emplace_back(a, b);
    if (pieces_[i].second < other.pieces_[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet out(lo_, hi_);
  out.pieces_ = pieces_;
  out.pieces_.insert(out.pieces_.end(), other.pieces_.begin(), other.pieces_.end());
  out.normalize();
  return out;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out(lo_, hi_);
  double cursor = lo_;
  for (const auto& p : pieces_) {
    if (p.first > cursor) out.pieces_.emplace_back(cursor, p.first);
    cursor = std::max(cursor, p.second);
  }
  if (hi_ > cursor) out.pieces_.emplace_back(cursor, hi_);
  return out;
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& p : pieces_) m += p.second - p.first;
  return m;
}

double IntervalSet::measure_within(double a, double b) const {
  double m = 0.0;
  for (const auto& p : pieces_) {
    const double lo = std::max(a, p.first);
    const double hi = std::min(b, p.second);
    if (hi > lo) m += hi - lo;
  }
  return m;
}

}  // namespace causet
