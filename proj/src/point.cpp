#include "causet/point.hpp"

#include <algorithm>
#include <sstream>

#include "causet/errors.hpp"

namespace causet {

Point::Point(std::initializer_list<double> coords)
    : Point(std::span<const double>(coords.begin(), coords.size())) {}

Point::Point(std::span<const double> coords) : size_(coords.size()) {
  if (coords.size() > kMaxCoords) throw ArgumentError("Point: too many coordinates");
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < size_; ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

bool operator==(const Point& a, const Point& b) {
  return a.size_ == b.size_ && std::equal(a.coords().begin(), a.coords().end(), b.coords().begin());
}

}  // namespace causet
