#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "causet/cone_metrics.hpp"
#include "causet/correspondence_search.hpp"
#include "causet/distances.hpp"
#include "causet/errors.hpp"
#include "causet/volume.hpp"

using namespace causet;

namespace {

DenseMatrix random_matrix(std::size_t n, Rng& rng) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = std::round(uniform01(rng) * 8.0) / 4.0;
  return m;
}

// Minimum distortion over every left- and right-total relation.
double brute_force_min_distortion(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  double best = 1e300;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n * m)); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> lx(n), ry(m);
    for (std::size_t k = 0; k < n * m; ++k)
      if (mask >> k & 1) {
        pairs.emplace_back(k / m, k % m);
        lx[k / m] = ry[k % m] = true;
      }
    if (std::find(lx.begin(), lx.end(), false) != lx.end() || std::find(ry.begin(), ry.end(), false) != ry.end())
      continue;
    double d = 0.0;
    for (auto [x1, y1] : pairs)
      for (auto [x2, y2] : pairs) d = std::max(d, std::abs(a(x1, x2) - b(y1, y2)));
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

TEST_CASE("distortion of hand-computed 3-point nets") {
  DenseMatrix a(3), b(3);
  a(0, 1) = 0.5;
  a(0, 2) = 1.0;
  a(1, 2) = 0.25;
  b(0, 1) = 0.75;
  b(0, 2) = 0.5;
  b(1, 2) = 0.0;
  const auto id = Correspondence::identity(3);
  double oracle = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) oracle = std::max(oracle, std::abs(a(i, j) - b(i, j)));
  CHECK(distortion(id, a, b) == oracle);
  CHECK(oracle == 0.5);
  CHECK(distortion(id, a, a) == 0.0);
  CHECK(distortion(Correspondence::identity(1), DenseMatrix(1), DenseMatrix(1)) == 0.0);
  CHECK_THROWS_AS(distortion(Correspondence(), a, b), ArgumentError);
  CHECK_THROWS_AS(Correspondence(2, 2, {{0, 0}}), ArgumentError);
  CHECK_THROWS_AS(distortion(Correspondence::identity(2), a, b), ArgumentError);
}

TEST_CASE("tau distortion clamps the past cone to zero") {
  DenseMatrix a(2), b(2);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  b(0, 1) = 1.0;
  b(1, 0) = -3.0;
  CHECK(tau_distortion(Correspondence::identity(2), a, b) == 0.0);
  CHECK(distortion(Correspondence::identity(2), a, b) == 2.0);
}

TEST_CASE("branch-and-bound equals exhaustive search over all relations") {
  Rng rng = make_rng(1);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + uniform_index(rng, 3), m = 1 + uniform_index(rng, 3);
    const DenseMatrix a = random_matrix(n, rng), b = random_matrix(m, rng);
    const auto r = minimize_distortion_exact(a, b, 1e9);
    CHECK(r.exact);
    CHECK(r.distortion == brute_force_min_distortion(a, b));
    CHECK(distortion(r.correspondence, a, b) == r.distortion);
  }
}

TEST_CASE("heuristic search finds the exact optimum on 5-point nets") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 20; ++t) {
    DenseMatrix a(5), b(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (i != j) {
          a(i, j) = uniform01(rng);
          b(i, j) = uniform01(rng);
        }
    const auto exact = minimize_distortion_exact(a, b, 1e9);
    SearchOptions o;
    o.budget = 200000;
    o.seed = derive_seed(9, {static_cast<std::uint64_t>(t)});
    o.allow_exact = false;
    const auto heur = minimize_distortion(a, b, o);
    CHECK_FALSE(heur.exact);
    CHECK(std::abs(heur.distortion - exact.distortion) <= 1e-12);
  }
}

TEST_CASE("search trace is monotone and the result never worsens with budget") {
  FlatCylinder x(1.0, 1), y(1.5, 1);
  double prev = 1e300;
  for (std::size_t budget : {0u, 50u, 500u, 5000u, 50000u}) {
    const auto r = dminus_upper(x, y, 9, budget, 4);
    CHECK(r.estimate <= prev + 1e-15);
    prev = r.estimate;
    for (std::size_t i = 1; i < r.search.trace.size(); ++i)
      CHECK(r.search.trace[i].best <= r.search.trace[i - 1].best);
    CHECK(r.estimate >= 0.0);
  }
}

TEST_CASE("d-minus of a model with itself is zero on shared-seed nets") {
  FlatCylinder x(2.0, 1);
  LightconeSquare s;
  for (std::size_t n : {1u, 5u, 12u}) {
    CHECK(dminus_upper(x, x, n, 1000, 3).estimate == 0.0);
    CHECK(dminus_upper(s, s, n, 0, 3).estimate == 0.0);
  }
  CHECK(dminus_upper(x, x, 5, 1000, 3).exact);
  CHECK_THROWS_AS(dminus_upper(x, x, 0, 10, 3), ArgumentError);
}

TEST_CASE("cylinder separation: lower bound |S - U| exactly") {
  FlatCylinder c1(1.0, 1), c2(2.0, 1), c5(5.0, 1);
  CHECK(dminus_lower_tdiam(c1, c2) == 1.0);
  CHECK(dminus_lower_tdiam(c5, c2) == 3.0);
  CHECK(dminus_lower_tdiam(c1, c1) == 0.0);
  NeedleSlab::Params p{1.0, 0.5, 0.001, 0.8, 50.0};
  NeedleSlab y(p);
  CHECK(dminus_lower_tdiam(c1, y) >= y.needle_curve_length() - 1.0 - 1e-12);
}

TEST_CASE("nets containing near-diameter pairs force distortion near |S - U|") {
  FlatCylinder c1(1.0, 1), c2(2.0, 1);
  std::vector<Point> n1{Point{0.001, 0.1}, Point{0.999, 0.1}, Point{0.5, 0.6}};
  std::vector<Point> n2{Point{0.001, 0.2}, Point{1.999, 0.2}, Point{1.0, 0.45}};
  const auto r = minimize_distortion_exact(positive_part(tau_matrix(c1, n1)), positive_part(tau_matrix(c2, n2)), 1e9);
  CHECK(r.distortion >= 0.99);
}

TEST_CASE("cone cells: identical points, worked rectangle, partition") {
  LightconeSquare m;
  const Point x{0.3, 0.3}, y{0.7, 0.7};
  const auto same = cone_cell_volumes(m, x, x, 20000, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) CHECK(same.volume[a][b] == 0.0);
  const auto c = cone_cell_volumes(m, x, y, 100000, 2);
  CHECK(std::abs(c.volume[0][0] - 0.09) <= 4 * c.standard_error[0][0]);
  double total = 0.0;
  for (const auto& row : c.volume)
    for (double v : row) total += v;
  CHECK(total == doctest::Approx(1.0));
  CHECK_THROWS_AS(cone_cell_volumes(m, x, y, 0, 1), ArgumentError);
}

TEST_CASE("D_-1 on the worked pair is sqrt(0.40)") {
  LightconeSquare m;
  const Point x{0.3, 0.3}, y{0.7, 0.7};
  const auto d = Dr_metric(m, x, y, -1.0, 100000, 5);
  CHECK(std::abs(d.value - std::sqrt(0.40)) <= 4 * d.standard_error);
  // Independent estimator: symmetric difference of the pasts.
  const Region sym = (Region::past(x) & ~Region::past(y)) | (~Region::past(x) & Region::past(y));
  const auto v = region_volume_mc(m, sym, 100000, 6);
  const double se_sqrt = v.standard_error / (2 * std::sqrt(v.value));
  CHECK(std::abs(std::sqrt(v.value) - d.value) <= 4 * std::hypot(se_sqrt, d.standard_error));
  CHECK_THROWS_AS(Dr_metric(m, x, y, 1.5, 10, 1), ArgumentError);
}

TEST_CASE("D_0 from cells matches a direct indicator-difference estimate") {
  FlatCylinder m(1.0, 1);
  const Point x{0.3, 0.2}, y{0.6, 0.7};
  const auto d = Dr_metric(m, x, y, 0.0, 100000, 7);
  Rng rng = make_rng(8);
  double sum = 0.0, sum2 = 0.0;
  const int n = 100000;
  auto sgn = [&](const Point& p, const Point& z) {
    return m.causal_leq(z, p) ? -1.0 : (m.causal_leq(p, z) ? 1.0 : 0.0);
  };
  for (int i = 0; i < n; ++i) {
    const Point z = m.sample_uniform(rng);
    const double w = 0.25 * std::pow(sgn(x, z) - sgn(y, z), 2);
    sum += w;
    sum2 += w * w;
  }
  const double mean = sum / n, se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::abs(d.value * d.value - mean) <= 4 * std::hypot(se, 2 * d.value * d.standard_error));
}

TEST_CASE("D_r is exactly symmetric with a zero diagonal") {
  NeedleSlab m(NeedleSlab::Params{1.0, 0.5, 0.05, 0.5, 3.0});
  Rng rng = make_rng(10);
  for (int t = 0; t < 20; ++t) {
    const Point x = m.sample_uniform(rng), y = m.sample_uniform(rng);
    for (double r : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      CHECK(Dr_metric(m, x, y, r, 2000, 3).value == Dr_metric(m, y, x, r, 2000, 3).value);
      CHECK(Dr_metric(m, x, x, r, 2000, 3).value == 0.0);
    }
  }
}

TEST_CASE("phi-times metrics satisfy the metric axioms") {
  LightconeSquare m;
  const auto single = phi_times_metrics(m, std::vector<Point>{Point{0.5, 0.5}}, 100, 1);
  for (const auto& f : single) CHECK(f.d(0, 0) == 0.0);
  const auto net = volume_uniform_net(m, 10, 3);
  const auto phi = phi_times_metrics(m, net, 20000, 4, 2);
  Rng rng = make_rng(5);
  for (const auto& f : phi) {
    CHECK_NOTHROW(f.validate());
    for (int t = 0; t < 100; ++t) {
      const std::size_t i = uniform_index(rng, 10), j = uniform_index(rng, 10), k = uniform_index(rng, 10);
      CHECK(f.triangle_excess_sigmas(i, j, k) <= 3.0);
    }
  }
  CHECK(phi_times_metrics(m, net, 20000, 4, 1)[1].d == phi[1].d);
  CHECK_THROWS_AS(phi_times_metrics(m, {}, 10, 1), ArgumentError);
}

TEST_CASE("order correspondence on shared sprinkles") {
  LightconeSquare m;
  const auto s = sprinkle(m, 200, 1);
  const auto net = volume_uniform_net(m, 8, 2);
  const auto oc = order_correspondence(m, s, net, m, s, net);
  CHECK(oc.slack == 0);
  CHECK(oc.unmatched == 0);
  for (auto [x, y] : oc.correspondence.pairs()) CHECK(cone_signature(m, s, net[x]) == cone_signature(m, s, net[y]));
  bool has_identity = true;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& p = oc.correspondence.pairs();
    has_identity = has_identity && std::find(p.begin(), p.end(), std::pair{i, i}) != p.end();
  }
  CHECK(has_identity);

  // Disjoint nets: every pair's signature distance is within the slack.
  const auto other = volume_uniform_net(m, 8, 3);
  const auto od = order_correspondence(m, s, net, m, s, other);
  for (auto [x, y] : od.correspondence.pairs())
    CHECK(signature_distance(cone_signature(m, s, net[x]), cone_signature(m, s, other[y])) <= od.slack);

  const auto t = sprinkle(m, 200, 9);
  CHECK_THROWS_AS(order_correspondence(m, s, net, m, t, net), PreconditionError);
}

TEST_CASE("d-times: identity is zero, shared bound dominates independent minima") {
  LightconeSquare m;
  const auto net = volume_uniform_net(m, 5, 2);
  const auto phi = phi_times_metrics(m, net, 5000, 3);
  const auto zero = dtimes_upper(phi, phi, Correspondence::identity(5));
  CHECK(zero.value == 0.0);
  const auto net2 = volume_uniform_net(m, 5, 7);
  const auto phi2 = phi_times_metrics(m, net2, 5000, 3);
  const auto r = dtimes_upper(phi, phi2, Correspondence::identity(5), 20000, 1);
  REQUIRE(r.independent.has_value());
  for (double v : *r.independent) CHECK(r.value >= v);
  CHECK(r.value == *std::max_element(r.component.begin(), r.component.end()));
  CHECK(r.standard_error > 0.0);
}
