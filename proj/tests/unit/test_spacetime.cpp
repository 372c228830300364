#include <cmath>
#include <vector>

#include "doctest.h"

#include "causet/errors.hpp"
#include "causet/random.hpp"
#include "causet/region.hpp"
#include "causet/spacetime.hpp"
#include "causet/volume.hpp"

using namespace causet;

namespace {

// Wavefront oracle on the (1+n)-cylinder: y is reachable from x iff some
// lift of y in the universal cover lies in the flat Minkowski future cone.
bool wavefront_leq(double L, const Point& x, const Point& y) {
  const double dt = y[0] - x[0];
  if (dt < 0.0) return false;
  const int n = static_cast<int>(x.size()) - 1;
  const int R = 3;
  std::vector<int> k(n, -R);
  for (;;) {
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = y[i + 1] - x[i + 1] + k[i] * L;
      s2 += d * d;
    }
    if (s2 <= dt * dt) return true;
    int i = 0;
    while (i < n && ++k[i] > R) k[i++] = -R;
    if (i == n) return false;
  }
}

// Midpoint-grid area of {z : pred(z)} on [0,T] x [0,L].
template <class Pred>
double grid_area(double T, double L, int nt, int nx, Pred pred) {
  long hits = 0;
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < nx; ++j)
      if (pred(Point{(i + 0.5) * T / nt, (j + 0.5) * L / nx})) ++hits;
  return static_cast<double>(hits) / (static_cast<double>(nt) * nx) * T * L;
}

// Longest causal curve on a lattice: layers in t, lateral steps |dθ| ≤ dt,
// weight = conformal factor at the step midpoint times the Minkowski length.
double lattice_longest_path(const NeedleSlab& y, int layers, int lateral) {
  const double T = y.params().T, L = y.base().circumference();
  const double dt = T / layers;
  const int nx = static_cast<int>(std::round(L / (dt / lateral)));
  const double dx = L / nx;
  std::vector<double> best(nx, 0.0), next(nx);
  for (int l = 0; l < layers; ++l) {
    std::fill(next.begin(), next.end(), -1.0);
    for (int j = 0; j < nx; ++j)
      for (int s = -lateral; s <= lateral; ++s) {
        const int k = ((j + s) % nx + nx) % nx;
        const double step = std::sqrt(std::max(0.0, dt * dt - (s * dx) * (s * dx)));
        const Point mid{(l + 0.5) * dt, (j + 0.5 * s + 0.5) * dx};
        const double w = std::sqrt(y.density(mid));
        next[k] = std::max(next[k], best[j] + w * step);
      }
    best.swap(next);
  }
  return *std::max_element(best.begin(), best.end());
}

}  // namespace

TEST_CASE("lightcone square: product order and time separation") {
  LightconeSquare m;
  CHECK(m.causal_leq(Point{0.1, 0.2}, Point{0.3, 0.4}));
  CHECK_FALSE(m.causal_leq(Point{0.1, 0.5}, Point{0.3, 0.4}));
  CHECK(m.signed_tau(Point{0.1, 0.1}, Point{0.5, 0.2}) == doctest::Approx(std::sqrt(0.4 * 0.1)));
  CHECK(m.signed_tau(Point{0.5, 0.2}, Point{0.1, 0.1}) == doctest::Approx(-std::sqrt(0.4 * 0.1)));
  CHECK(m.signed_tau(Point{0.1, 0.5}, Point{0.3, 0.4}) == 0.0);
  CHECK(m.tdiam().is_exact());
  CHECK(m.tdiam().upper == 1.0);
  CHECK_THROWS_AS(m.causal_leq(Point{1.2, 0.0}, Point{0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(m.check_domain(Point{0.5}), DomainError);
}

TEST_CASE("lightcone square: flip distance of the worked pair") {
  LightconeSquare m;
  CHECK(m.flip_distance(Point{0.0, 0.0}, Point{0.3, 0.4}) == doctest::Approx(std::sqrt((0.09 + 0.16) / 2)));
}

TEST_CASE("signed tau is antisymmetric and vanishes exactly off the cones") {
  std::vector<std::unique_ptr<SpacetimeModel>> models;
  models.push_back(std::make_unique<LightconeSquare>());
  models.push_back(std::make_unique<FlatCylinder>(1.0, 1));
  models.push_back(std::make_unique<FlatCylinder>(3.0, 2));
  models.push_back(std::make_unique<NeedleSlab>(NeedleSlab::Params{1.0, 0.5, 0.02, 0.6, 3.0}));
  for (const auto& m : models) {
    Rng rng = make_rng(11);
    for (int i = 0; i < 2000; ++i) {
      const Point x = m->sample_uniform(rng), y = m->sample_uniform(rng);
      const double t = m->signed_tau(x, y);
      CHECK(t == -m->signed_tau(y, x));
      if (!m->causal_leq(x, y) && !m->causal_leq(y, x)) CHECK(t == 0.0);
      if (m->causal_leq(x, y)) CHECK(t >= 0.0);
    }
  }
}

TEST_CASE("flat cylinder causal relation matches the wavefront oracle") {
  for (auto [T, n] : {std::pair{1.0, 1}, std::pair{10.0, 1}, std::pair{0.5, 1}, std::pair{2.0, 2}, std::pair{8.0, 3}}) {
    FlatCylinder m(T, n);
    Rng rng = make_rng(derive_seed(3, {static_cast<std::uint64_t>(T * 10), static_cast<std::uint64_t>(n)}));
    int related = 0;
    for (int i = 0; i < 5000; ++i) {
      const Point x = m.sample_uniform(rng);
      Point y = m.sample_uniform(rng);
      // Bias half the pairs toward the light cone.
      if (i % 2 == 0) y[0] = std::min(T, x[0] + m.spatial_distance(x, y) * (0.999 + 0.002 * uniform01(rng)));
      const bool got = m.causal_leq(x, y);
      CHECK(got == wavefront_leq(m.circumference(), x, y));
      related += got;
    }
    CHECK(related > 0);
  }
}

TEST_CASE("flat cylinder: circumference, diameter and normalization") {
  FlatCylinder m(10.0, 1);
  CHECK(m.circumference() == doctest::Approx(0.1));
  CHECK(m.tdiam().lower == 10.0);
  CHECK(m.tdiam().upper == 10.0);
  CHECK(*m.analytic_volume(Region::whole()) == doctest::Approx(1.0));
  CHECK(FlatCylinder(8.0, 3).circumference() == doctest::Approx(0.5));
  CHECK_THROWS_AS(FlatCylinder(-1.0, 1), ArgumentError);
  CHECK_THROWS_AS(FlatCylinder(1.0, 4), ArgumentError);
  CHECK_THROWS_AS(m.check_domain(Point{10.5, 0.0}), DomainError);
}

TEST_CASE("spacelike region of a mid-slab point on C(10) has volume L^2/2") {
  FlatCylinder m(10.0, 1);
  const Point p{5.0, 0.03};
  const double L = m.circumference();
  const auto exact = m.analytic_volume(~Region::causal_cone(p));
  REQUIRE(exact.has_value());
  CHECK(*exact == doctest::Approx(L * L / 2).epsilon(1e-9));
  const double grid = grid_area(10.0, L, 20000, 200, [&](const Point& z) {
    return !m.causal_leq(p, z) && !m.causal_leq(z, p);
  });
  CHECK(grid == doctest::Approx(0.005).epsilon(0.02));
}

TEST_CASE("analytic volumes agree with grid quadrature on random cone expressions") {
  FlatCylinder cyl(1.0, 1);
  NeedleSlab needle(NeedleSlab::Params{1.0, 0.3, 0.1, 0.4, 2.0});
  Rng rng = make_rng(5);
  for (int i = 0; i < 12; ++i) {
    const Point a = cyl.sample_uniform(rng), b = cyl.sample_uniform(rng), c = cyl.sample_uniform(rng);
    const std::vector<Region> regions{Region::future(a) & Region::past(b), Region::past(a) | Region::past(c),
                                      ~Region::causal_cone(a) & Region::future(c),
                                      (Region::past(a) & ~Region::past(b)) | (~Region::past(a) & Region::past(b))};
    for (const auto& r : regions) {
      const double base_grid = grid_area(1.0, 1.0, 800, 800, [&](const Point& z) { return r.contains(cyl, z); });
      CHECK(*cyl.analytic_volume(r) == doctest::Approx(base_grid).epsilon(0.01).scale(1.0));
      // Weighted quadrature for the needle measure.
      double w = 0.0;
      const int n = 800;
      for (int ti = 0; ti < n; ++ti)
        for (int xi = 0; xi < n; ++xi) {
          const Point z{(ti + 0.5) / n, (xi + 0.5) / n};
          if (r.contains(needle, z)) w += needle.density(z);
        }
      CHECK(*needle.analytic_volume(r) == doctest::Approx(w / (n * n)).epsilon(0.01).scale(1.0));
    }
  }
}

TEST_CASE("lightcone square diamonds have rectangle areas") {
  LightconeSquare m;
  CHECK(*m.analytic_volume(Region::diamond(Point{0.1, 0.2}, Point{0.6, 0.9})) == doctest::Approx(0.35));
  CHECK(*m.analytic_volume(Region::past(Point{0.3, 0.3}) & Region::past(Point{0.7, 0.7})) == doctest::Approx(0.09));
  CHECK(*m.analytic_volume(Region::whole()) == doctest::Approx(1.0));
  CHECK(*m.analytic_volume(Region::past_of_set({})) == 0.0);
}

TEST_CASE("Monte Carlo and analytic volume agree within 4 sigma") {
  LightconeSquare m;
  const Region r = Region::past(Point{0.3, 0.8}) | Region::future(Point{0.6, 0.1});
  const auto mc = region_volume_mc(m, r, 200000, 9);
  const auto ex = region_volume(m, r, 0, 0);
  CHECK(ex.analytic);
  CHECK(std::abs(mc.value - ex.value) <= 4 * mc.standard_error);
  CHECK_THROWS_AS(region_volume_mc(m, r, 0, 1), EstimationError);
}

TEST_CASE("needle slab: conformal order invariance on 10^4 pairs") {
  NeedleSlab y(NeedleSlab::Params{1.0, 0.5, 0.001, 0.9, 40.0});
  Rng rng = make_rng(21);
  for (int i = 0; i < 10000; ++i) {
    const Point a = y.sample_uniform(rng), b = y.sample_uniform(rng);
    REQUIRE(y.causal_leq(a, b) == y.base().causal_leq(a, b));
  }
}

TEST_CASE("needle slab: normalization and strip mass") {
  NeedleSlab::Params p{1.0, 0.5, 0.05, 0.8, 3.0};
  NeedleSlab y(p);
  const double a = 0.05 * 0.2;
  CHECK(y.normalization() == doctest::Approx(1 + 8 * a));
  CHECK(y.strip_mass() == doctest::Approx(9 * a / (1 + 8 * a)));
  CHECK(*y.analytic_volume(Region::whole()) == doctest::Approx(1.0));
  Rng rng = make_rng(4);
  int in = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) in += y.in_strip(y.sample_uniform(rng));
  const double sigma = std::sqrt(y.strip_mass() * (1 - y.strip_mass()) / n);
  CHECK(std::abs(in / double(n) - y.strip_mass()) < 4 * sigma);
}

TEST_CASE("needle slab: needle length against a lattice longest-path oracle") {
  NeedleSlab y(NeedleSlab::Params{1.0, 0.5, 0.02, 0.5, 5.0});
  const double exact = (0.5 + 5.0 * 0.5) / std::sqrt(y.normalization());
  CHECK(y.needle_curve_length() == doctest::Approx(exact));
  CHECK(y.tdiam().is_exact());
  const double lattice = lattice_longest_path(y, 400, 4);
  CHECK(lattice <= exact * (1 + 1e-9));
  CHECK(lattice == doctest::Approx(exact).epsilon(0.01));
  // The certified τ realizes the needle between its end points.
  CHECK(y.signed_tau(Point{0.0, 0.5}, Point{1.0, 0.5}) == doctest::Approx(exact));
}

TEST_CASE("needle slab: tau lower bound dominates the rescaled base tau") {
  NeedleSlab y(NeedleSlab::Params{1.0, 0.5, 0.05, 0.3, 4.0});
  Rng rng = make_rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Point a = y.sample_uniform(rng), b = y.sample_uniform(rng);
    CHECK(std::abs(y.signed_tau(a, b)) >= std::abs(y.base().signed_tau(a, b)) / std::sqrt(y.normalization()) - 1e-12);
  }
  CHECK(y.tau_is_lower_bound());
}

TEST_CASE("model construction from specs") {
  CHECK(make_model(ModelSpec::from_text("kind = flat_cylinder\nT = 10\n"))->kind() == "flat_cylinder");
  CHECK(make_model(ModelSpec{"lightcone_square", {}})->dimension() == 2);
  CHECK_THROWS_AS(make_model(ModelSpec{"de_sitter", {}}), ConfigError);
  CHECK_THROWS_AS(make_model(ModelSpec{"flat_cylinder", {{"T", "1"}, {"bogus", "2"}}}), ConfigError);
  CHECK_THROWS_AS(make_model(ModelSpec{"needle_slab", {{"lambda", "0.5"}}}), ArgumentError);
  const auto m = make_model(ModelSpec{"needle_slab", {{"lambda", "2"}, {"needle_start", "0.25"}}});
  CHECK(make_model(m->spec())->spec() == m->spec());
}

TEST_CASE("lightcone square flip capability and needle slab lacks it") {
  NeedleSlab y(NeedleSlab::Params{});
  CHECK_FALSE(y.has_flip_metric());
  CHECK_THROWS_AS(y.flip_distance(Point{0.1, 0.1}, Point{0.2, 0.2}), CapabilityError);
}
