#include "causet/region.hpp"

#include "causet/errors.hpp"
#include "causet/spacetime.hpp"

namespace causet {

struct Region::Node {
  Kind kind;
  Point apex;
  std::vector<Region> children;
};

Region Region::whole() { return Region(std::make_shared<const Node>(Node{Kind::kWhole, {}, {}})); }

Region Region::past(const Point& apex) {
  return Region(std::make_shared<const Node>(Node{Kind::kPast, apex, {}}));
}

Region Region::future(const Point& apex) {
  return Region(std::make_shared<const Node>(Node{Kind::kFuture, apex, {}}));
}

Region Region::diamond(const Point& p, const Point& q) { return future(p) & past(q); }

Region Region::causal_cone(const Point& p) { return future(p) | past(p); }

Region Region::past_of_set(const std::vector<Point>& points) {
  std::vector<Region> cones;
  cones.reserve(points.size());
  for (const auto& p : points) cones.push_back(past(p));
  if (cones.empty()) return ~whole();
  return Region(std::make_shared<const Node>(Node{Kind::kUnion, {}, std::move(cones)}));
}

Region operator&(const Region& a, const Region& b) {
  return Region(std::make_shared<const Region::Node>(
      Region::Node{Region::Kind::kIntersection, {}, {a, b}}));
}

Region operator|(const Region& a, const Region& b) {
  return Region(std::make_shared<const Region::Node>(Region::Node{Region::Kind::kUnion, {}, {a, b}}));
}

Region operator~(const Region& a) {
  return Region(std::make_shared<const Region::Node>(Region::Node{Region::Kind::kComplement, {}, {a}}));
}

Region::Kind Region::kind() const { return node_->kind; }
const Point& Region::apex() const { return node_->apex; }
const std::vector<Region>& Region::children() const { return node_->children; }

bool Region::contains(const SpacetimeModel& model, const Point& z) const {
  switch (node_->kind) {
    case Kind::kWhole:
      return true;
    case Kind::kPast:
      return model.causal_leq(z, node_->apex);
    case Kind::kFuture:
      return model.causal_leq(node_->apex, z);
    case Kind::kComplement:
      return !node_->children[0].contains(model, z);
    case Kind::kIntersection:
      for (const auto& c : node_->children)
        if (!c.contains(model, z)) return false;
      return true;
    case Kind::kUnion:
      for (const auto& c : node_->children)
        if (c.contains(model, z)) return true;
      return false;
  }
  return false;
}

void Region::collect_apexes(std::vector<std::pair<Point, bool>>& out) const {
  if (node_->kind == Kind::kPast) out.emplace_back(node_->apex, true);
  if (node_->kind == Kind::kFuture) out.emplace_back(node_->apex, false);
  for (const auto& c : node_->children) c.collect_apexes(out);
}

std::string Region::describe() const {
  switch (node_->kind) {
    case Kind::kWhole:
      return "X";
    case Kind::kPast:
      return "J-" + node_->apex.to_string();
    case Kind::kFuture:
      return "J+" + node_->apex.to_string();
    case Kind::kComplement:
      return "~" + node_->children[0].describe();
    case Kind::kIntersection:
    case Kind::kUnion: {
      std::string s = "(";
      const char* op = node_->kind == Kind::kUnion ? " | " : " & ";
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (i) s += op;
        s += node_->children[i].describe();
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace causet
