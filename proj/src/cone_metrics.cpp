#include "causet/cone_metrics.hpp"

#include <cmath>
#include <limits>

#include "causet/errors.hpp"
#include "causet/parallel.hpp"
#include "causet/random.hpp"

namespace causet {

ConeClass cone_class(const SpacetimeModel& model, const Point& x, const Point& z) {
  if (model.causal_leq(z, x)) return ConeClass::kPast;
  if (model.causal_leq(x, z)) return ConeClass::kFuture;
  return ConeClass::kSpacelike;
}

ConeCells cone_cell_volumes(const SpacetimeModel& model, const Point& x, const Point& y, std::size_t n_mc,
                            std::uint64_t seed) {
  if (n_mc == 0) throw ArgumentError("cone_cell_volumes: n_mc must be positive");
  std::array<std::array<std::size_t, 3>, 3> count{};
  Rng rng = make_rng(seed);
  for (std::size_t s = 0; s < n_mc; ++s) {
    const Point z = model.sample_uniform(rng);
    ++count[static_cast<int>(cone_class(model, x, z))][static_cast<int>(cone_class(model, y, z))];
  }
  ConeCells c;
  c.n_mc = n_mc;
  const double n = static_cast<double>(n_mc);
  const double total = model.total_volume();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double p = static_cast<double>(count[a][b]) / n;
      c.volume[a][b] = total * p;
      c.standard_error[a][b] = total * std::sqrt(p * (1.0 - p) / n);
    }
  return c;
}

std::array<double, 3> step_values(double r) {
  if (!(r >= -1.0 && r <= 1.0)) throw ArgumentError("D_r: r must lie in [-1, 1]");
  return {-(1.0 - r) / 2.0, 0.0, (1.0 + r) / 2.0};
}

DrEstimate dr_from_cells(const ConeCells& cells, double r) {
  const auto F = step_values(r);
  // Per-sample weight w = (F_a - F_b)^2; the estimate of D^2 is its mean.
  double m1 = 0.0, m2 = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double w = (F[a] - F[b]) * (F[a] - F[b]);
      const double v = cells.volume[a][b] + cells.volume[b][a];
      m1 += v * w;
      m2 += v * w * w;
    }
  const double d2 = std::max(0.0, m1);
  DrEstimate e;
  e.value = std::sqrt(d2);
  if (cells.n_mc > 0) {
    const double se2 = std::sqrt(std::max(0.0, m2 - m1 * m1) / static_cast<double>(cells.n_mc));
    e.standard_error = e.value > 0.0 ? std::min(se2 / (2.0 * e.value), std::sqrt(se2)) : std::sqrt(se2);
  }
  return e;
}

DrEstimate Dr_metric(const SpacetimeModel& model, const Point& x, const Point& y, double r, std::size_t n_mc,
                     std::uint64_t seed) {
  step_values(r);
  return dr_from_cells(cone_cell_volumes(model, x, y, n_mc, seed), r);
}

void FiniteMetric::validate() const {
  const std::size_t n = d.size();
  if (standard_error.size() != n) throw ArgumentError("FiniteMetric: error matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) throw ArgumentError("FiniteMetric: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) != d(j, i)) throw ArgumentError("FiniteMetric: not symmetric");
      if (!(d(i, j) >= 0.0)) throw ArgumentError("FiniteMetric: negative or NaN entry");
    }
  }
}

double FiniteMetric::triangle_excess_sigmas(std::size_t i, std::size_t j, std::size_t k) const {
  const double excess = d(i, k) - d(i, j) - d(j, k);
  const double s = std::sqrt(standard_error(i, k) * standard_error(i, k) + standard_error(i, j) * standard_error(i, j) +
                             standard_error(j, k) * standard_error(j, k));
  if (s == 0.0) return excess > 1e-12 ? std::numeric_limits<double>::infinity() : 0.0;
  return excess / s;
}

std::array<FiniteMetric, 3> phi_times_metrics(const SpacetimeModel& model, std::span<const Point> net,
                                              std::size_t n_mc, std::uint64_t seed, int workers) {
  if (net.empty()) throw ArgumentError("phi_times_metrics: empty net");
  const std::size_t n = net.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<ConeCells> cells(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    cells[p] = cone_cell_volumes(model, net[i], net[j], n_mc, derive_seed(seed, {i, j}));
  });
  std::array<FiniteMetric, 3> out;
  for (std::size_t c = 0; c < 3; ++c) {
    out[c].d = DenseMatrix(n);
    out[c].standard_error = DenseMatrix(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [i, j] = pairs[p];
      const DrEstimate e = dr_from_cells(cells[p], kPhiTimesR[c]);
      out[c].d(i, j) = out[c].d(j, i) = e.value;
      out[c].standard_error(i, j) = out[c].standard_error(j, i) = e.standard_error;
    }
  }
  return out;
}

}  // namespace causet
