#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "causet/model_spec.hpp"
#include "causet/point.hpp"
#include "causet/random.hpp"
#include "causet/region.hpp"

namespace causet {

// Certified bracket for the timelike diameter sup τ(X×X).
struct TdiamBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool is_exact() const { return lower == upper; }
};

// Chart box in which the flip metric is Euclidean after per-axis scaling.
struct FlatChart {
  std::vector<double> extent;  // chart coordinate i ranges over [0, extent[i]]
  std::vector<double> scale;   // flip-metric length per unit chart coordinate
  std::vector<bool> periodic;
};

// Normalized (unit-volume) spatially compact Cauchy slab with exactly
// computable causal structure. Immutable; every query is const and
// thread-safe.
class SpacetimeModel {
 public:
  virtual ~SpacetimeModel() = default;

  virtual std::string kind() const = 0;
  virtual int dimension() const = 0;
  virtual double total_volume() const { return 1.0; }
  virtual ModelSpec spec() const = 0;

  // Throws DomainError if x is not a valid chart point.
  virtual void check_domain(const Point& x) const = 0;

  // y ∈ J+(x).
  virtual bool causal_leq(const Point& x, const Point& y) const = 0;

  // τ(x,y) if x ≤ y, -τ(y,x) if y ≤ x, 0 otherwise.
  virtual double signed_tau(const Point& x, const Point& y) const = 0;
  // True if signed_tau only returns a certified lower bound on |τ|.
  virtual bool tau_is_lower_bound() const { return false; }

  virtual Point sample_uniform(Rng& rng) const = 0;

  // Volume density with respect to chart Lebesgue measure.
  virtual double density(const Point& x) const = 0;

  virtual TdiamBounds tdiam() const = 0;

  virtual bool has_flip_metric() const { return false; }
  // Distance of the Riemannian flip metric; CapabilityError if unsupported.
  virtual double flip_distance(const Point& x, const Point& y) const;
  virtual std::optional<FlatChart> flat_chart() const { return std::nullopt; }

  // Exact volume of a cone expression when the model can integrate it in
  // closed form; nullopt otherwise.
  virtual std::optional<double> analytic_volume(const Region& region) const;

  // Chart box used by quadrature oracles and covering grids.
  virtual std::vector<double> chart_extent() const = 0;
};

// Unit square in lightcone coordinates (u, v) with the product order and
// τ = sqrt(Δu Δv).
class LightconeSquare final : public SpacetimeModel {
 public:
  std::string kind() const override { return "lightcone_square"; }
  int dimension() const override { return 2; }
  ModelSpec spec() const override;
  void check_domain(const Point& x) const override;
  bool causal_leq(const Point& x, const Point& y) const override;
  double signed_tau(const Point& x, const Point& y) const override;
  Point sample_uniform(Rng& rng) const override;
  double density(const Point&) const override { return 1.0; }
  TdiamBounds tdiam() const override { return {1.0, 1.0}; }
  bool has_flip_metric() const override { return true; }
  double flip_distance(const Point& x, const Point& y) const override;
  std::optional<FlatChart> flat_chart() const override;
  std::optional<double> analytic_volume(const Region& region) const override;
  std::vector<double> chart_extent() const override { return {1.0, 1.0}; }
};

// (0,T) × (flat n-torus of circumference T^(-1/n)) with metric -dt² + dx².
// Spatial coordinates are arc lengths, periodic with the circumference.
class FlatCylinder final : public SpacetimeModel {
 public:
  FlatCylinder(double T, int n);

  double T() const { return T_; }
  int spatial_dims() const { return n_; }
  double circumference() const { return L_; }

  std::string kind() const override { return "flat_cylinder"; }
  int dimension() const override { return n_ + 1; }
  ModelSpec spec() const override;
  void check_domain(const Point& x) const override;
  bool causal_leq(const Point& x, const Point& y) const override;
  double signed_tau(const Point& x, const Point& y) const override;
  Point sample_uniform(Rng& rng) const override;
  double density(const Point&) const override { return 1.0; }
  TdiamBounds tdiam() const override { return {T_, T_}; }
  bool has_flip_metric() const override { return true; }
  double flip_distance(const Point& x, const Point& y) const override;
  std::optional<FlatChart> flat_chart() const override;
  std::optional<double> analytic_volume(const Region& region) const override;
  std::vector<double> chart_extent() const override;

  // Shortest distance on the spatial torus.
  double spatial_distance(const Point& x, const Point& y) const;

 private:
  double T_;
  int n_;
  double L_;
};

// Flat 1+1 cylinder whose metric is multiplied by λ² on the strip
// {t > t0, |θ - θ0| < w/2}, then rescaled by 1/Z so the total volume is 1.
// The causal order is the cylinder's (conformal invariance); volume is
// exact; τ is a certified lower bound.
class NeedleSlab final : public SpacetimeModel {
 public:
  struct Params {
    double T = 1.0;
    double needle_center = 0.0;   // θ0, arc length
    double needle_width = 0.01;   // w
    double needle_start = 0.5;    // t0
    double lambda = 1.0;          // conformal factor is λ²
  };

  explicit NeedleSlab(const Params& p);

  const Params& params() const { return p_; }
  const FlatCylinder& base() const { return base_; }
  // Z = 1 + (λ² - 1)·w·(T - t0), the pre-normalization volume.
  double normalization() const { return Z_; }
  // Y-volume of the strip.
  double strip_mass() const;
  bool in_strip(const Point& x) const;
  // Y-length of the curve θ = θ0 from t = 0 to t = T.
  double needle_curve_length() const;

  std::string kind() const override { return "needle_slab"; }
  int dimension() const override { return 2; }
  ModelSpec spec() const override;
  void check_domain(const Point& x) const override { base_.check_domain(x); }
  bool causal_leq(const Point& x, const Point& y) const override { return base_.causal_leq(x, y); }
  double signed_tau(const Point& x, const Point& y) const override;
  bool tau_is_lower_bound() const override { return true; }
  Point sample_uniform(Rng& rng) const override;
  double density(const Point& x) const override;
  TdiamBounds tdiam() const override;
  std::optional<double> analytic_volume(const Region& region) const override;
  std::vector<double> chart_extent() const override { return base_.chart_extent(); }

 private:
  double tau_lower(const Point& x, const Point& y) const;

  Params p_;
  FlatCylinder base_;
  double Z_;
};

std::unique_ptr<SpacetimeModel> make_model(const ModelSpec& spec);

// Free-function forms of the model queries.
inline bool causal_leq(const SpacetimeModel& m, const Point& x, const Point& y) { return m.causal_leq(x, y); }
inline double signed_tau(const SpacetimeModel& m, const Point& x, const Point& y) { return m.signed_tau(x, y); }
inline double flip_distance(const SpacetimeModel& m, const Point& x, const Point& y) { return m.flip_distance(x, y); }
inline TdiamBounds tdiam(const SpacetimeModel& m) { return m.tdiam(); }

}  // namespace causet
