#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "doctest.h"

#include "causet/canonical.hpp"
#include "causet/covering.hpp"
#include "causet/errors.hpp"
#include "causet/sprinkle.hpp"
#include "causet/uniformity.hpp"
#include "causet/volume_law.hpp"

using namespace causet;

namespace {

// Exact PC_K on the lightcone square: u-ranks and v-ranks are independent
// uniform permutations, so fixing the u-ranks leaves K! equally likely
// v-rank permutations.
std::map<OrderClass, double> lightcone_oracle(std::size_t K) {
  std::vector<std::size_t> pi(K);
  std::iota(pi.begin(), pi.end(), 0);
  std::map<OrderClass, double> out;
  double total = 0.0;
  do {
    const auto o = FiniteOrder::from_predicate(K, [&](std::size_t i, std::size_t j) { return i <= j && pi[i] <= pi[j]; });
    out[canonical_class(o)] += 1.0;
    total += 1.0;
  } while (std::next_permutation(pi.begin(), pi.end()));
  for (auto& [c, p] : out) p /= total;
  return out;
}

// max over grid points of the flip distance to the nearest center.
double grid_covering_radius(const SpacetimeModel& m, const std::vector<Point>& centers, int n) {
  const auto ext = m.chart_extent();
  double worst = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const Point z{ext[0] * i / n, ext[1] * j / n};
      double best = 1e300;
      for (const auto& c : centers) best = std::min(best, m.flip_distance(z, c));
      worst = std::max(worst, best);
    }
  return worst;
}

}  // namespace

TEST_CASE("sprinkles are seeded and induce the causal order") {
  FlatCylinder m(2.0, 1);
  const auto a = sprinkle(m, 50, 7), b = sprinkle(m, 50, 7), c = sprinkle(m, 50, 8);
  CHECK(a.points == b.points);
  CHECK(a.order == b.order);
  CHECK_FALSE(a.points == c.points);
  REQUIRE(a.points.size() == 50);
  for (std::size_t i = 0; i < 50; ++i)
    for (std::size_t j = 0; j < 50; ++j) CHECK(a.order.leq(i, j) == m.causal_leq(a.points[i], a.points[j]));
  CHECK(a.points_csv().rfind("index,x0,x1\n", 0) == 0);
}

TEST_CASE("coincident points are a degenerate sample") {
  LightconeSquare m;
  const std::vector<Point> pts{Point{0.2, 0.2}, Point{0.2, 0.2}};
  CHECK_THROWS_AS(order_from_points(m, pts), DegenerateSampleError);
}

TEST_CASE("lightcone square PC_2 and PC_3 match the permutation oracle") {
  LightconeSquare m;
  for (std::size_t K : {2u, 3u, 4u}) {
    const auto exact = lightcone_oracle(K);
    const auto est = estimate_class_distribution(m, K, 40000, 100 + K);
    CHECK(est.sample_count() == 40000);
    for (const auto& [c, p] : exact) {
      const double se = std::sqrt(p * (1 - p) / 40000);
      CHECK(std::abs(est.probability(c) - p) <= 4 * se);
    }
    for (const auto& [c, e] : est.entries()) CHECK(exact.count(c) == 1);
  }
  const auto k3 = lightcone_oracle(3);
  REQUIRE(k3.size() == 5);
  std::vector<double> ps;
  for (const auto& [c, p] : k3) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  CHECK(ps[0] == doctest::Approx(1.0 / 6));
  CHECK(ps[3] == doctest::Approx(1.0 / 6));
  CHECK(ps[4] == doctest::Approx(1.0 / 3));
}

TEST_CASE("two points on the 1+1 cylinder are spacelike with the closed-form probability") {
  for (double T : {1.0, 3.0}) {
    FlatCylinder m(T, 1);
    const double L = m.circumference();
    const double p = L / (2 * T) - L * L / (12 * T * T);
    const auto E = total_order_probability(m, 2, 100000, 17);
    CHECK(std::abs((1 - E.value) - p) <= 4 * std::sqrt(p * (1 - p) / 100000));
  }
}

TEST_CASE("single points and empty trials") {
  FlatCylinder m(5.0, 1);
  CHECK(total_order_probability(m, 1, 1000, 1).value == 1.0);
  CHECK_THROWS_AS(estimate_class_distribution(m, 9, 10, 1), CapabilityError);
}

TEST_CASE("class estimates do not depend on the worker count") {
  FlatCylinder m(1.0, 1);
  const auto a = estimate_class_distribution(m, 4, 5000, 3, 1);
  const auto b = estimate_class_distribution(m, 4, 5000, 3, 4);
  CHECK(a.to_csv() == b.to_csv());
}

TEST_CASE("s-uniformity equals the direct worst-region deviation") {
  LightconeSquare m;
  const auto s = sprinkle(m, 300, 5);
  const auto regions = sample_probes(m, ProbeFamily::kMixed, 60, 9);
  const auto rep = check_s_uniform_regions(s, m, regions, 1, 0);
  double worst = 0.0;
  for (const auto& r : regions) {
    int count = 0;
    for (const auto& p : s.points) count += r.contains(m, p);
    worst = std::max(worst, std::abs(count / 300.0 - *m.analytic_volume(r)));
  }
  CHECK(rep.s_achieved == doctest::Approx(worst).epsilon(1e-12));
  CHECK(rep.probe_count == 60);
  CHECK(rep.volume_standard_error == 0.0);
  const auto whole = check_s_uniform_regions(s, m, {Region::whole()}, 1, 0);
  CHECK(whole.s_achieved == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("s-uniformity shrinks roughly like 1/sqrt(K)") {
  LightconeSquare m;
  std::vector<double> s100, s1600;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s100.push_back(check_s_uniform(sprinkle(m, 100, seed), m, ProbeFamily::kDiamonds, 50, 77, 0).s_achieved);
    s1600.push_back(check_s_uniform(sprinkle(m, 1600, seed), m, ProbeFamily::kDiamonds, 50, 77, 0).s_achieved);
  }
  const double a = std::accumulate(s100.begin(), s100.end(), 0.0), b = std::accumulate(s1600.begin(), s1600.end(), 0.0);
  CHECK(a / b > 2.0);
  CHECK(a / b < 8.0);
}

TEST_CASE("cone approximation: B inside C, hull inside cone") {
  FlatCylinder m(1.0, 1);
  const auto s = sprinkle(m, 400, 12);
  const Point x{0.8, 0.4};
  const auto a = cone_approximation(s, m, x, 3, 0);
  for (auto b : a.B) CHECK(std::find(a.C.begin(), a.C.end(), b) != a.C.end());
  for (auto c : a.C) CHECK(m.causal_leq(s.points[c], x));
  CHECK(a.hull_volume <= a.cone_volume + 1e-12);
  CHECK(a.cone_volume > 0.0);
}

TEST_CASE("greedy coverings cover, checked on a fine grid") {
  FlatCylinder cyl(1.0, 1);
  const auto c1 = greedy_covering(cyl, 1.0, 4);
  CHECK(c1.size() <= 4);
  CHECK(grid_covering_radius(cyl, c1, 1000) <= 1.0);
  LightconeSquare sq;
  for (int k : {2, 5, 9}) {
    const auto c = greedy_covering(sq, 1.0 / k, k);
    CHECK(grid_covering_radius(sq, c, 400) <= 1.0 / k);
  }
  FlatCylinder wide(10.0, 1);
  const auto c3 = greedy_covering(wide, 1.0 / 3, 1);
  CHECK(grid_covering_radius(wide, c3, 600) <= 1.0 / 3);
  NeedleSlab y(NeedleSlab::Params{});
  CHECK_THROWS_AS(greedy_covering(y, 0.5, 1), CapabilityError);
}

TEST_CASE("covering sequences record their blocks") {
  LightconeSquare m;
  const auto seq = hausdorff_covering_sequence(m, 6, 3);
  CHECK(seq.blocks() == 6);
  std::size_t total = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    total += seq.block_size(k);
    CHECK(grid_covering_radius(m, std::vector<Point>(seq.block(k).begin(), seq.block(k).end()), 200) <= 1.0 / k);
  }
  CHECK(total == seq.points.size());
  const auto longer = hausdorff_covering_sequence_of_length(m, 500, 3);
  CHECK(longer.points.size() >= 500);
  CHECK(std::equal(seq.points.begin(), seq.points.end(), longer.points.begin()));
}

TEST_CASE("volume law for an i.i.d. sequence") {
  FlatCylinder m(1.0, 1);
  Rng rng = make_rng(44);
  std::vector<Point> pts;
  for (int i = 0; i < 20000; ++i) pts.push_back(m.sample_uniform(rng));
  const auto diamonds = random_diamonds(m, 20, 5);
  const auto rep = volume_law_check(pts, m, diamonds, 20000);
  CHECK(rep.pass_fraction() >= 0.9);
  for (const auto& d : rep.diamonds) {
    CHECK(d.volume > 0.0);
    CHECK(d.tolerance == doctest::Approx(4 * std::sqrt(d.volume * (1 - d.volume) / 20000)));
  }
  NeedleSlab y(NeedleSlab::Params{});
  CHECK_NOTHROW(volume_law_check(pts, y, diamonds, 100));
}
