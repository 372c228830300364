#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace causet {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Reflexive partial order on {0, ..., K-1}, stored transitively closed as
// row (up-set) and column (down-set) bitsets.
class FiniteOrder {
 public:
  FiniteOrder() = default;

  static FiniteOrder antichain(std::size_t K);
  static FiniteOrder chain(std::size_t K);  // 0 < 1 < ... < K-1
  // Builds from an arbitrary predicate and validates the partial-order axioms;
  // throws ArgumentError naming the first violated axiom.
  static FiniteOrder from_predicate(std::size_t K, const std::function<bool(std::size_t, std::size_t)>& leq);
  static FiniteOrder from_matrix(const std::vector<std::vector<bool>>& leq);
  // Reflexive-transitive closure of a relation given as pairs i < j.
  static FiniteOrder from_cover_pairs(std::size_t K, std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && up_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return up_[i][j] || up_[j][i]; }
  // {j : i ≤ j}
  const Bitset& up(std::size_t i) const { return up_[i]; }
  // {j : j ≤ i}
  const Bitset& down(std::size_t i) const { return down_[i]; }

  bool is_chain() const;
  std::size_t relation_count() const;  // number of pairs i < j

  // First line K, then K rows of '0'/'1' (row i, column j is i ≤ j).
  std::string to_text() const;
  static FiniteOrder from_text(const std::string& text);

  friend bool operator==(const FiniteOrder& a, const FiniteOrder& b) { return a.up_ == b.up_; }

 private:
  explicit FiniteOrder(std::size_t K);
  void set(std::size_t i, std::size_t j) {
    up_[i].set(j);
    down_[j].set(i);
  }
  // Returns an empty string if valid, else the violated axiom.
  std::string violation() const;

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;

  friend class OrderBuilder;
};

// Relation with unchecked bits; build() validates.
class OrderBuilder {
 public:
  explicit OrderBuilder(std::size_t K);
  void set_leq(std::size_t i, std::size_t j) { order_.set(i, j); }
  // Throws ArgumentError on reflexivity or transitivity failures and
  // DegenerateSampleError on antisymmetry failures.
  FiniteOrder build() &&;

 private:
  FiniteOrder order_;
};

// Common lower bounds of A: {m : m ≤ a for all a ∈ A}. The empty A gives everything.
Bitset down_set(const FiniteOrder& order, std::span<const std::size_t> A);
// {k : u ≤ k ≤ v}.
Bitset interval(const FiniteOrder& order, std::size_t u, std::size_t v);
// True if every two elements of `members` are comparable.
bool is_totally_ordered(const FiniteOrder& order, const Bitset& members);

// (x, y) is marked iff x ≤ y and some u, v satisfy x < u < v < y with
// interval(u, v) not totally ordered. Returned as rows of bitsets.
std::vector<Bitset> chronology_from_order(const FiniteOrder& order);

// |interval(u, v)| / K. Requires u ≤ v.
double interval_measure_estimate(const FiniteOrder& order, std::size_t u, std::size_t v);

// Relabels element i as sigma[i]. Throws ArgumentError unless sigma is a bijection.
FiniteOrder permute(const FiniteOrder& order, std::span<const std::size_t> sigma);

// Transitive closure applied to an already valid order is the identity.
bool is_transitively_closed(const FiniteOrder& order);

// Every labeled partial order on K ≤ 5 elements.
std::vector<FiniteOrder> enumerate_orders(std::size_t K);

}  // namespace causet

namespace causet {
// Warshall closure over the stored relation.
FiniteOrder transitive_closure(const FiniteOrder& order);
}  // namespace causet
