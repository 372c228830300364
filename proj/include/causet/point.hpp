#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

namespace causet {

// Chart coordinates of a spacetime point. The time coordinate comes first;
// the meaning of the remaining coordinates is fixed by the model (arc-length
// positions on a circle, or lightcone coordinates).
class Point {
 public:
  static constexpr std::size_t kMaxCoords = 4;

  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  std::size_t size() const { return size_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  double time() const { return coords_[0]; }
  std::span<const double> coords() const { return {coords_.data(), size_}; }

  std::string to_string() const;

  friend bool operator==(const Point& a, const Point& b);

 private:
  std::array<double, kMaxCoords> coords_{};
  std::size_t size_ = 0;
};

}  // namespace causet
