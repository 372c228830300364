#include "causet/sprinkle.hpp"

#include <cmath>
#include <sstream>

#include "causet/errors.hpp"
#include "causet/parallel.hpp"

namespace causet {

FiniteOrder order_from_points(const SpacetimeModel& model, std::span<const Point> points) {
  const std::size_t K = points.size();
  OrderBuilder b(K);
  for (std::size_t i = 0; i < K; ++i) {
    b.set_leq(i, i);
    for (std::size_t j = i + 1; j < K; ++j) {
      if (model.causal_leq(points[i], points[j])) b.set_leq(i, j);
      if (model.causal_leq(points[j], points[i])) b.set_leq(j, i);
    }
  }
  return std::move(b).build();
}

std::string Sprinkle::points_csv() const {
  std::ostringstream os;
  os << "index";
  const std::size_t dims = points.empty() ? 0 : points[0].size();
  for (std::size_t d = 0; d < dims; ++d) os << ",x" << d;
  os << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << i;
    for (double c : points[i].coords()) os << ',' << format_number(c);
    os << '\n';
  }
  return os.str();
}

Sprinkle sprinkle(const SpacetimeModel& model, std::size_t K, std::uint64_t seed) {
  if (K == 0) throw ArgumentError("sprinkle: K must be >= 1");
  Sprinkle s;
  s.seed = seed;
  s.K = K;
  for (int attempt = 0;; ++attempt) {
    Rng rng = make_rng(attempt == 0 ? seed : derive_seed(seed, {static_cast<std::uint64_t>(attempt)}));
    s.points.clear();
    s.points.reserve(K);
    for (std::size_t i = 0; i < K; ++i) s.points.push_back(model.sample_uniform(rng));
    try {
      s.order = order_from_points(model, s.points);
      s.resamples = attempt;
      return s;
    } catch (const DegenerateSampleError&) {
      if (attempt >= 64) throw;
    }
  }
}

ClassDistribution estimate_class_distribution(const SpacetimeModel& model, std::size_t K, std::size_t n_trials,
                                              std::uint64_t seed, int workers) {
  if (K == 0 || K > kMaxClassDistributionSize) throw CapabilityError("estimate_class_distribution: K must be in [1, 8]");
  if (n_trials == 0) throw ArgumentError("estimate_class_distribution: n_trials must be >= 1");
  std::vector<OrderClass> classes(n_trials);
  parallel_for(n_trials, workers, [&](std::size_t i) {
    classes[i] = canonical_class(sprinkle(model, K, derive_seed(seed, {i})).order);
  });
  std::map<OrderClass, std::uint64_t> counts;
  for (auto& c : classes) ++counts[c];
  return ClassDistribution::from_counts(K, counts);
}

Estimate total_order_probability(const SpacetimeModel& model, std::size_t K, std::size_t n_trials,
                                 std::uint64_t seed, int workers) {
  if (n_trials == 0) throw ArgumentError("total_order_probability: n_trials must be >= 1");
  std::vector<char> chain(n_trials, 0);
  parallel_for(n_trials, workers, [&](std::size_t i) {
    chain[i] = sprinkle(model, K, derive_seed(seed, {i})).order.is_chain() ? 1 : 0;
  });
  std::size_t hits = 0;
  for (char c : chain) hits += c;
  const double n = static_cast<double>(n_trials);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n)};
}

}  // namespace causet
