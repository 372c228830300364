#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "causet/cone_metrics.hpp"
#include "causet/correspondence.hpp"
#include "causet/correspondence_search.hpp"
#include "causet/finite_order.hpp"
#include "causet/sprinkle.hpp"

namespace causet {

// m(i, j) = signed_tau(points[i], points[j]).
DenseMatrix tau_matrix(const SpacetimeModel& model, std::span<const Point> points);

// n volume-uniform points drawn from `seed`.
std::vector<Point> volume_uniform_net(const SpacetimeModel& model, std::size_t n, std::uint64_t seed);

struct DminusResult {
  double estimate = 0.0;       // best distortion found (upper bound for the nets)
  double lower_bound = 0.0;    // dminus_lower_tdiam
  std::size_t net_size = 0;
  bool exact = false;          // net-level optimum certified by branch-and-bound
  bool tau_lower_bounds = false;  // some τ matrix only holds certified lower bounds
  SearchResult search;
};

// Both nets are drawn with derive_seed(seed, {0}), so identical models give
// identical nets. Exact search for net_size ≤ 6 (when budget > 0); budget 0
// evaluates the rank-matched starting correspondence only.
DminusResult dminus_upper(const SpacetimeModel& x, const SpacetimeModel& y, std::size_t net_size,
                          std::size_t optimizer_budget, std::uint64_t seed);

// max(0, lower(X) - upper(Y), lower(Y) - upper(X)) from certified tdiam bounds.
double dminus_lower_tdiam(const SpacetimeModel& x, const SpacetimeModel& y);

// Sprinkle indices in the causal past and future of a point.
struct ConeSignature {
  Bitset down;
  Bitset up;

  friend bool operator==(const ConeSignature&, const ConeSignature&) = default;
};

ConeSignature cone_signature(const SpacetimeModel& model, const Sprinkle& s, const Point& p);

std::size_t signature_distance(const ConeSignature& a, const ConeSignature& b);

struct OrderCorrespondence {
  Correspondence correspondence;
  std::size_t slack = 0;        // largest signature distance among fallback pairs
  std::size_t unmatched = 0;    // net points that needed a fallback partner
};

// x ~ y iff their signatures agree. Points without an exact partner are
// paired with a signature-nearest one. PreconditionError if the two
// sprinkles induce different orders.
OrderCorrespondence order_correspondence(const SpacetimeModel& model_x, const Sprinkle& sx,
                                         std::span<const Point> net_x, const SpacetimeModel& model_y,
                                         const Sprinkle& sy, std::span<const Point> net_y);

struct DtimesResult {
  double value = 0.0;                    // max over components, shared correspondence
  std::array<double, 3> component{};     // per-D_r distortion of the shared correspondence
  double standard_error = 0.0;           // largest combined entry error over related pairs
  std::optional<std::array<double, 3>> independent;  // per-component minimized distortions
};

// Shared-correspondence distortion of Φ×. With independent_budget > 0 each
// component is also minimized on its own.
DtimesResult dtimes_upper(const std::array<FiniteMetric, 3>& phi_x, const std::array<FiniteMetric, 3>& phi_y,
                          const Correspondence& corr, std::size_t independent_budget = 0, std::uint64_t seed = 0);

}  // namespace causet
