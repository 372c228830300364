#include "causet/class_distribution.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "causet/errors.hpp"
#include "causet/model_spec.hpp"

namespace causet {

ClassDistribution ClassDistribution::from_counts(std::size_t K, const std::map<OrderClass, std::uint64_t>& counts) {
  ClassDistribution d(K);
  for (const auto& [c, n] : counts) d.samples_ += n;
  if (d.samples_ == 0) throw ArgumentError("ClassDistribution: no samples");
  for (const auto& [c, n] : counts) {
    if (c.order_size() != K) throw ArgumentError("ClassDistribution: class of wrong size");
    d.entries_[c] = Entry{static_cast<double>(n) / static_cast<double>(d.samples_), n};
  }
  return d;
}

ClassDistribution ClassDistribution::exact(std::size_t K, const std::map<OrderClass, double>& weights) {
  ClassDistribution d(K);
  double total = 0.0;
  for (const auto& [c, w] : weights) {
    if (!(w >= 0.0)) throw ArgumentError("ClassDistribution: negative weight");
    if (c.order_size() != K) throw ArgumentError("ClassDistribution: class of wrong size");
    total += w;
    d.entries_[c] = Entry{w, 0};
  }
  if (std::abs(total - 1.0) > 1e-12) throw ArgumentError("ClassDistribution: weights do not sum to 1");
  return d;
}

double ClassDistribution::probability(const OrderClass& c) const {
  auto it = entries_.find(c);
  return it == entries_.end() ? 0.0 : it->second.probability;
}

double ClassDistribution::standard_error(const OrderClass& c) const {
  if (samples_ == 0) return 0.0;
  const double p = probability(c);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples_));
}

std::string ClassDistribution::to_csv() const {
  std::ostringstream os;
  os << "canonical_key,probability,count\n";
  for (const auto& [c, e] : entries_) os << c.to_hex() << ',' << format_number(e.probability) << ',' << e.count << '\n';
  return os.str();
}

ClassDistribution ClassDistribution::from_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "canonical_key,probability,count")
    throw ArgumentError("class distribution CSV: bad header");
  std::map<OrderClass, std::uint64_t> counts;
  std::map<OrderClass, double> weights;
  std::size_t K = 0;
  bool sampled = false;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string hex, prob, count;
    if (!std::getline(ls, hex, ',') || !std::getline(ls, prob, ',') || !std::getline(ls, count))
      throw ArgumentError("class distribution CSV: line " + std::to_string(lineno) + " needs 3 fields");
    OrderClass c = OrderClass::from_hex(hex);
    K = c.order_size();
    const std::uint64_t n = std::stoull(count);
    sampled = sampled || n > 0;
    counts[c] = n;
    weights[c] = std::stod(prob);
  }
  return sampled ? from_counts(K, counts) : exact(K, weights);
}

double l1_distance(const ClassDistribution& p, const ClassDistribution& q) {
  if (p.K() != q.K()) throw ArgumentError("l1_distance: distributions have different K");
  std::set<OrderClass> keys;
  for (const auto& [c, e] : p.entries()) keys.insert(c);
  for (const auto& [c, e] : q.entries()) keys.insert(c);
  double s = 0.0;
  for (const auto& c : keys) s += std::abs(p.probability(c) - q.probability(c));
  return s;
}

double l1_combined_sigma(const ClassDistribution& p, const ClassDistribution& q) {
  std::set<OrderClass> keys;
  for (const auto& [c, e] : p.entries()) keys.insert(c);
  for (const auto& [c, e] : q.entries()) keys.insert(c);
  double s = 0.0;
  for (const auto& c : keys) {
    const double a = p.standard_error(c);
    const double b = q.standard_error(c);
    s += std::sqrt(a * a + b * b);
  }
  return s;
}

}  // namespace causet
