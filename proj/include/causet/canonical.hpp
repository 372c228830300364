#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "causet/finite_order.hpp"

namespace causet {

inline constexpr std::size_t kMaxCanonicalSize = 12;

// Isomorphism class of a finite order: the size byte followed by the
// row-major bits of the lexicographically least relabeled matrix.
class OrderClass {
 public:
  OrderClass() = default;
  explicit OrderClass(std::string key) : key_(std::move(key)) {}

  const std::string& key() const { return key_; }
  std::size_t order_size() const { return key_.empty() ? 0 : static_cast<unsigned char>(key_[0]); }
  std::string to_hex() const;
  static OrderClass from_hex(const std::string& hex);
  // The canonical representative.
  FiniteOrder representative() const;

  friend auto operator<=>(const OrderClass&, const OrderClass&) = default;

 private:
  std::string key_;
};

// Canonical form by color refinement plus individualization search, with
// twin pruning. CapabilityError for K > 12.
OrderClass canonical_class(const FiniteOrder& order);

// Number of order-preserving bijections of the ground set onto itself.
std::uint64_t automorphism_count(const FiniteOrder& order);

}  // namespace causet
