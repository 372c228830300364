#pragma once

#include <memory>
#include <string>
#include <vector>

#include "causet/point.hpp"

namespace causet {

class SpacetimeModel;

// A boolean combination of causal cones J+(p), J-(p). Cones are closed
// (non-strict causal relation); boundaries carry no volume.
class Region {
 public:
  enum class Kind { kWhole, kPast, kFuture, kComplement, kIntersection, kUnion };

  static Region whole();
  static Region past(const Point& apex);
  static Region future(const Point& apex);
  // J+(p) ∩ J-(q).
  static Region diamond(const Point& p, const Point& q);
  // J(p) = J+(p) ∪ J-(p).
  static Region causal_cone(const Point& p);
  // Union of the pasts of all given points (empty list gives the empty set).
  static Region past_of_set(const std::vector<Point>& points);

  friend Region operator&(const Region& a, const Region& b);
  friend Region operator|(const Region& a, const Region& b);
  friend Region operator~(const Region& a);

  bool contains(const SpacetimeModel& model, const Point& z) const;

  Kind kind() const;
  const Point& apex() const;
  const std::vector<Region>& children() const;
  // Every cone apex in the expression, with a flag telling past (true) or future.
  void collect_apexes(std::vector<std::pair<Point, bool>>& out) const;

  std::string describe() const;

 private:
  struct Node;
  explicit Region(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace causet
