#include "causet/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "causet/errors.hpp"

namespace causet {

DenseMatrix tau_matrix(const SpacetimeModel& model, std::span<const Point> points) {
  DenseMatrix m(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      if (i != j) m(i, j) = model.signed_tau(points[i], points[j]);
  return m;
}

std::vector<Point> volume_uniform_net(const SpacetimeModel& model, std::size_t n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(model.sample_uniform(rng));
  return out;
}

DminusResult dminus_upper(const SpacetimeModel& x, const SpacetimeModel& y, std::size_t net_size,
                          std::size_t optimizer_budget, std::uint64_t seed) {
  if (net_size == 0) throw ArgumentError("dminus_upper: net_size must be at least 1");
  const std::uint64_t net_seed = derive_seed(seed, {0});
  const auto net_x = volume_uniform_net(x, net_size, net_seed);
  const auto net_y = volume_uniform_net(y, net_size, net_seed);
  const DenseMatrix tx = positive_part(tau_matrix(x, net_x));
  const DenseMatrix ty = positive_part(tau_matrix(y, net_y));

  DminusResult r;
  r.net_size = net_size;
  r.lower_bound = dminus_lower_tdiam(x, y);
  r.tau_lower_bounds = x.tau_is_lower_bound() || y.tau_is_lower_bound();
  SearchOptions o;
  o.budget = optimizer_budget;
  o.seed = derive_seed(seed, {1});
  // Rank keys from the signed matrices carry time orientation, which the
  // clamped matrices lose.
  const DenseMatrix sx = tau_matrix(x, net_x), sy = tau_matrix(y, net_y);
  auto keys = [](const DenseMatrix& m) {
    std::vector<double> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) k[i] -= m(i, j);
    return k;
  };
  o.left_keys = keys(sx);
  o.right_keys = keys(sy);
  if (optimizer_budget == 0) {
    r.search.correspondence = rank_matched_correspondence(tx, ty, o);
    r.search.distortion = distortion(r.search.correspondence, tx, ty);
    r.search.trace.push_back({0, r.search.distortion});
  } else {
    r.search = minimize_distortion(tx, ty, o);
  }
  r.estimate = r.search.distortion;
  r.exact = r.search.exact;
  return r;
}

double dminus_lower_tdiam(const SpacetimeModel& x, const SpacetimeModel& y) {
  const TdiamBounds a = x.tdiam(), b = y.tdiam();
  return std::max({0.0, a.lower - b.upper, b.lower - a.upper});
}

ConeSignature cone_signature(const SpacetimeModel& model, const Sprinkle& s, const Point& p) {
  ConeSignature sig{Bitset(s.points.size()), Bitset(s.points.size())};
  for (std::size_t m = 0; m < s.points.size(); ++m) {
    if (model.causal_leq(s.points[m], p)) sig.down.set(m);
    if (model.causal_leq(p, s.points[m])) sig.up.set(m);
  }
  return sig;
}

std::size_t signature_distance(const ConeSignature& a, const ConeSignature& b) {
  return (a.down ^ b.down).count() + (a.up ^ b.up).count();
}

OrderCorrespondence order_correspondence(const SpacetimeModel& model_x, const Sprinkle& sx,
                                         std::span<const Point> net_x, const SpacetimeModel& model_y,
                                         const Sprinkle& sy, std::span<const Point> net_y) {
  if (!(sx.order == sy.order)) throw PreconditionError("order_correspondence: sprinkles induce different orders");
  if (net_x.empty() || net_y.empty()) throw ArgumentError("order_correspondence: empty net");
  std::vector<ConeSignature> gx, gy;
  for (const auto& p : net_x) gx.push_back(cone_signature(model_x, sx, p));
  for (const auto& p : net_y) gy.push_back(cone_signature(model_y, sy, p));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> x_done(gx.size()), y_done(gy.size());
  for (std::size_t i = 0; i < gx.size(); ++i)
    for (std::size_t j = 0; j < gy.size(); ++j)
      if (gx[i] == gy[j]) {
        pairs.emplace_back(i, j);
        x_done[i] = y_done[j] = true;
      }

  OrderCorrespondence out;
  auto nearest = [&](const ConeSignature& g, const std::vector<ConeSignature>& pool) {
    std::size_t best = 0, best_d = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const std::size_t d = signature_distance(g, pool[k]);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return std::pair{best, best_d};
  };
  for (std::size_t i = 0; i < gx.size(); ++i)
    if (!x_done[i]) {
      auto [j, d] = nearest(gx[i], gy);
      pairs.emplace_back(i, j);
      out.slack = std::max(out.slack, d);
      ++out.unmatched;
    }
  for (std::size_t j = 0; j < gy.size(); ++j)
    if (!y_done[j]) {
      auto [i, d] = nearest(gy[j], gx);
      pairs.emplace_back(i, j);
      out.slack = std::max(out.slack, d);
      ++out.unmatched;
    }
  out.correspondence = Correspondence(net_x.size(), net_y.size(), std::move(pairs));
  return out;
}

DtimesResult dtimes_upper(const std::array<FiniteMetric, 3>& phi_x, const std::array<FiniteMetric, 3>& phi_y,
                          const Correspondence& corr, std::size_t independent_budget, std::uint64_t seed) {
  DtimesResult r;
  for (std::size_t c = 0; c < 3; ++c) {
    r.component[c] = distortion(corr, phi_x[c].d, phi_y[c].d);
    r.value = std::max(r.value, r.component[c]);
    for (auto [m1, n1] : corr.pairs())
      for (auto [m2, n2] : corr.pairs()) {
        const double a = phi_x[c].standard_error(m1, m2), b = phi_y[c].standard_error(n1, n2);
        r.standard_error = std::max(r.standard_error, std::sqrt(a * a + b * b));
      }
  }
  if (independent_budget > 0) {
    std::array<double, 3> ind{};
    for (std::size_t c = 0; c < 3; ++c) {
      SearchOptions o;
      o.budget = independent_budget;
      o.seed = derive_seed(seed, {c});
      ind[c] = minimize_distortion(phi_x[c].d, phi_y[c].d, o).distortion;
    }
    r.independent = ind;
  }
  return r;
}

}  // namespace causet
