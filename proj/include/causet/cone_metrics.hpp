#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "causet/dense_matrix.hpp"
#include "causet/spacetime.hpp"

namespace causet {

// Causal class of a point z relative to x.
enum class ConeClass : int { kPast = 0, kSpacelike = 1, kFuture = 2 };

ConeClass cone_class(const SpacetimeModel& model, const Point& x, const Point& z);

// volume[a][b]: volume of {z : class of z w.r.t. x is a, w.r.t. y is b},
// estimated from n uniform samples.
struct ConeCells {
  std::array<std::array<double, 3>, 3> volume{};
  std::array<std::array<double, 3>, 3> standard_error{};
  std::size_t n_mc = 0;
};

ConeCells cone_cell_volumes(const SpacetimeModel& model, const Point& x, const Point& y, std::size_t n_mc,
                            std::uint64_t seed);

// F_r on the three classes: -(1-r)/2, 0, (1+r)/2.
std::array<double, 3> step_values(double r);

struct DrEstimate {
  double value = 0.0;
  double standard_error = 0.0;
};

// D_r from cell volumes. Transposed cells give bit-identical results.
DrEstimate dr_from_cells(const ConeCells& cells, double r);

DrEstimate Dr_metric(const SpacetimeModel& model, const Point& x, const Point& y, double r, std::size_t n_mc,
                     std::uint64_t seed);

// Symmetric distance matrix with per-entry standard errors.
struct FiniteMetric {
  DenseMatrix d;
  DenseMatrix standard_error;

  std::size_t size() const { return d.size(); }
  // Throws ArgumentError unless symmetric with zero diagonal and nonnegative.
  void validate() const;
  // d(i,k) - d(i,j) - d(j,k) in units of the combined standard error
  // (large positive values mean a violated triangle inequality).
  double triangle_excess_sigmas(std::size_t i, std::size_t j, std::size_t k) const;
  std::string to_csv() const { return d.to_csv(); }
};

inline constexpr std::array<double, 3> kPhiTimesR{-0.5, 0.0, 0.5};

// The D_{-1/2}, D_0, D_{1/2} matrices on a net. Pair (i, j), i < j, uses one
// cell pass seeded with derive_seed(seed, {i, j}).
std::array<FiniteMetric, 3> phi_times_metrics(const SpacetimeModel& model, std::span<const Point> net,
                                              std::size_t n_mc, std::uint64_t seed, int workers = 1);

}  // namespace causet
