#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causet/region.hpp"
#include "causet/sprinkle.hpp"

namespace causet {

enum class ProbeFamily { kDiamonds, kPastCones, kFutureCones, kPastIntersections, kMixed };

ProbeFamily parse_probe_family(const std::string& name);
std::string to_string(ProbeFamily f);

// Normalized s-uniformity: s_achieved = max over probes U of |#a⁻¹(U)/K - vol(U)|.
struct UniformityReport {
  double s_achieved = 0.0;
  std::size_t probe_count = 0;
  std::string worst_region;
  std::size_t skipped = 0;               // probes rejected with a domain error
  double volume_standard_error = 0.0;    // largest MC error among probe volumes (0 if all analytic)
};

// Random causally convex probes of the given family, drawn from `seed`.
UniformityReport check_s_uniform(const Sprinkle& s, const SpacetimeModel& model, ProbeFamily family,
                                 std::size_t n_probes, std::uint64_t seed, std::size_t n_mc = 100000);

// Same statistic over explicit regions.
UniformityReport check_s_uniform_regions(const Sprinkle& s, const SpacetimeModel& model,
                                         const std::vector<Region>& regions, std::uint64_t seed,
                                         std::size_t n_mc = 100000);

std::vector<Region> sample_probes(const SpacetimeModel& model, ProbeFamily family, std::size_t n_probes,
                                  std::uint64_t seed);

// Inner approximation of J-(x) through the sprinkle: B = {m : a(m) ≤ x} and
// C = {m : a(m) ∈ J-(a(B))}.
struct ConeApproximation {
  std::vector<std::size_t> B;
  std::vector<std::size_t> C;
  double cone_volume = 0.0;   // vol J-(x)
  double hull_volume = 0.0;   // vol J-(a(B))
  Region cone = Region::whole();
  Region hull = Region::whole();
};

ConeApproximation cone_approximation(const Sprinkle& s, const SpacetimeModel& model, const Point& x,
                                     std::uint64_t seed, std::size_t n_mc = 100000);

}  // namespace causet
