#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "causet/canonical.hpp"

namespace causet {

// Probability distribution over isomorphism classes of K-element orders.
// Exact distributions carry sample_count == 0.
class ClassDistribution {
 public:
  struct Entry {
    double probability = 0.0;
    std::uint64_t count = 0;
  };

  ClassDistribution() = default;
  explicit ClassDistribution(std::size_t K) : K_(K) {}

  static ClassDistribution from_counts(std::size_t K, const std::map<OrderClass, std::uint64_t>& counts);
  // Weights must be nonnegative and sum to 1 within 1e-12.
  static ClassDistribution exact(std::size_t K, const std::map<OrderClass, double>& weights);

  std::size_t K() const { return K_; }
  std::uint64_t sample_count() const { return samples_; }
  const std::map<OrderClass, Entry>& entries() const { return entries_; }
  double probability(const OrderClass& c) const;
  // Binomial standard error sqrt(p(1-p)/n); 0 for exact distributions.
  double standard_error(const OrderClass& c) const;

  // CSV with header canonical_key,probability,count.
  std::string to_csv() const;
  static ClassDistribution from_csv(const std::string& csv);

 private:
  std::size_t K_ = 0;
  std::uint64_t samples_ = 0;
  std::map<OrderClass, Entry> entries_;
};

// Σ |p - q| over the union of supports; ArgumentError if K differs.
double l1_distance(const ClassDistribution& p, const ClassDistribution& q);

// Σ over classes of the combined standard error of p(c) - q(c).
double l1_combined_sigma(const ClassDistribution& p, const ClassDistribution& q);

}  // namespace causet
