#include "causet/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "causet/errors.hpp"

namespace causet {

namespace {

constexpr double kCoveringInset = 0.65;

struct Grid {
  std::vector<std::size_t> count;
  std::vector<double> step;       // chart units
  std::vector<double> flip_step;  // flip-metric units
  std::vector<double> offset;
  std::vector<bool> periodic;
  std::vector<std::size_t> stride;
  std::size_t total = 1;

  Point point(std::size_t idx) const {
    std::array<double, Point::kMaxCoords> c{};
    for (std::size_t i = 0; i < count.size(); ++i) {
      const std::size_t j = idx / stride[i] % count[i];
      c[i] = (static_cast<double>(j) + offset[i]) * step[i];
    }
    return Point(std::span<const double>(c.data(), count.size()));
  }
};

}  // namespace

std::vector<Point> greedy_covering(const SpacetimeModel& model, double radius, std::uint64_t seed) {
  const auto chart = model.flat_chart();
  if (!chart) throw CapabilityError("greedy_covering: model '" + model.kind() + "' has no flip metric");
  if (!(radius > 0.0)) throw ArgumentError("greedy_covering: radius must be positive");
  Rng rng = make_rng(seed);
  const std::size_t d = chart->extent.size();
  const double h = radius / 4.0;

  Grid g;
  double margin2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double flip_len = chart->extent[i] * chart->scale[i];
    const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(flip_len / h)));
    g.count.push_back(n);
    g.step.push_back(chart->extent[i] / static_cast<double>(n));
    g.flip_step.push_back(flip_len / static_cast<double>(n));
    g.offset.push_back(uniform_open01(rng));
    g.periodic.push_back(chart->periodic[i]);
    // Farthest chart point from the grid along this axis.
    const double gap = chart->periodic[i] ? 0.5 : std::max({0.5, g.offset[i], 1.0 - g.offset[i]});
    margin2 += std::pow(gap * g.flip_step[i], 2);
  }
  g.stride.assign(d, 1);
  for (std::size_t i = d; i-- > 1;) g.stride[i - 1] = g.stride[i] * g.count[i];
  g.total = g.stride[0] * g.count[0];
  if (g.total > 50'000'000) throw CapabilityError("greedy_covering: radius too small for the grid budget");
  const double target = radius - std::sqrt(margin2);

  std::vector<double> dist(g.total, std::numeric_limits<double>::infinity());
  using Entry = std::pair<double, std::size_t>;
  auto cmp = [](const Entry& a, const Entry& b) { return a.first < b.first || (a.first == b.first && a.second > b.second); };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

  std::vector<Point> centers;
  auto insert = [&](std::size_t c, double reach) {
    centers.push_back(g.point(c));
    std::vector<std::size_t> cj(d);
    for (std::size_t i = 0; i < d; ++i) cj[i] = c / g.stride[i] % g.count[i];
    // Odometer over the index box that can lie within `reach` of the center.
    std::vector<long> lo(d), hi(d), cur(d);
    for (std::size_t i = 0; i < d; ++i) {
      const double m = std::isfinite(reach) ? std::ceil(reach / g.flip_step[i]) : static_cast<double>(g.count[i]);
      const long n = static_cast<long>(g.count[i]);
      const long w = static_cast<long>(std::min(m, static_cast<double>(n)));
      if (g.periodic[i] && 2 * w + 1 >= n) {
        lo[i] = 0;
        hi[i] = n - 1;
      } else if (g.periodic[i]) {
        lo[i] = static_cast<long>(cj[i]) - w;
        hi[i] = static_cast<long>(cj[i]) + w;
      } else {
        lo[i] = std::max(0L, static_cast<long>(cj[i]) - w);
        hi[i] = std::min(n - 1, static_cast<long>(cj[i]) + w);
      }
      cur[i] = lo[i];
    }
    for (;;) {
      std::size_t idx = 0;
      double s2 = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const long n = static_cast<long>(g.count[i]);
        const long j = ((cur[i] % n) + n) % n;
        idx += static_cast<std::size_t>(j) * g.stride[i];
        long delta = std::abs(j - static_cast<long>(cj[i]));
        if (g.periodic[i]) delta = std::min(delta, n - delta);
        s2 += std::pow(static_cast<double>(delta) * g.flip_step[i], 2);
      }
      const double dd = std::sqrt(s2);
      if (dd < dist[idx]) {
        dist[idx] = dd;
        heap.emplace(dd, idx);
      }
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (cur[i] < hi[i]) {
          ++cur[i];
          break;
        }
        cur[i] = lo[i];
        if (i == 0) return;
      }
    }
  };

  // Centers keep a distance `inset` from non-periodic chart edges; without
  // it the farthest points sit on the boundary and a prefix of the
  // sequence overweights the edges.
  const double inset = kCoveringInset * std::max(0.0, target);
  auto inward = [&](std::size_t idx) {
    std::size_t out = 0;
    double moved2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const long j0 = static_cast<long>(idx / g.stride[i] % g.count[i]);
      long j = j0;
      if (!g.periodic[i]) {
        const double n = static_cast<double>(g.count[i]);
        const long jlo = static_cast<long>(std::ceil(inset / g.flip_step[i] - g.offset[i]));
        const long jhi = static_cast<long>(std::floor(n - g.offset[i] - inset / g.flip_step[i]));
        if (jlo <= jhi) j = std::clamp(j, jlo, jhi);
      }
      moved2 += std::pow(static_cast<double>(j - j0) * g.flip_step[i], 2);
      out += static_cast<std::size_t>(j) * g.stride[i];
    }
    // The new center must still cover the point that triggered it.
    return std::sqrt(moved2) < 0.9 * target ? out : idx;
  };

  insert(inward(uniform_index(rng, g.total)), std::numeric_limits<double>::infinity());
  for (;;) {
    while (!heap.empty() && heap.top().first != dist[heap.top().second]) heap.pop();
    if (heap.empty() || heap.top().first <= target) break;
    const auto [far, idx] = heap.top();
    insert(inward(idx), far);
  }
  return centers;
}

CoveringSequence hausdorff_covering_sequence(const SpacetimeModel& model, std::size_t k_max, std::uint64_t seed) {
  CoveringSequence seq;
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto block = greedy_covering(model, 1.0 / static_cast<double>(k), derive_seed(seed, {k}));
    seq.points.insert(seq.points.end(), block.begin(), block.end());
    seq.block_start.push_back(seq.points.size());
  }
  return seq;
}

CoveringSequence hausdorff_covering_sequence_of_length(const SpacetimeModel& model, std::size_t n,
                                                       std::uint64_t seed) {
  CoveringSequence seq;
  for (std::size_t k = 1; seq.points.size() < n; ++k) {
    auto block = greedy_covering(model, 1.0 / static_cast<double>(k), derive_seed(seed, {k}));
    seq.points.insert(seq.points.end(), block.begin(), block.end());
    seq.block_start.push_back(seq.points.size());
  }
  return seq;
}

double covering_radius_on_grid(const SpacetimeModel& model, std::span<const Point> centers, double resolution) {
  const auto chart = model.flat_chart();
  if (!chart) throw CapabilityError("covering_radius_on_grid: model has no flip metric");
  if (centers.empty()) return std::numeric_limits<double>::infinity();
  const std::size_t d = chart->extent.size();
  std::vector<std::size_t> n(d);
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n[i] = static_cast<std::size_t>(std::ceil(chart->extent[i] / resolution)) + (chart->periodic[i] ? 0 : 1);
    total *= n[i];
  }
  double worst = 0.0;
  std::array<double, Point::kMaxCoords> c{};
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = d; i-- > 0;) {
      const std::size_t j = rest % n[i];
      rest /= n[i];
      c[i] = std::min(chart->extent[i], static_cast<double>(j) * resolution);
    }
    const Point z(std::span<const double>(c.data(), d));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ctr : centers) best = std::min(best, model.flip_distance(z, ctr));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace causet
