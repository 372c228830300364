#include "causet/uniformity.hpp"

#include <cmath>

#include "causet/errors.hpp"
#include "causet/volume.hpp"

namespace causet {

ProbeFamily parse_probe_family(const std::string& name) {
  if (name == "diamonds") return ProbeFamily::kDiamonds;
  if (name == "past_cones") return ProbeFamily::kPastCones;
  if (name == "future_cones") return ProbeFamily::kFutureCones;
  if (name == "past_intersections") return ProbeFamily::kPastIntersections;
  if (name == "mixed") return ProbeFamily::kMixed;
  throw ArgumentError("unknown probe family '" + name + "'");
}

std::string to_string(ProbeFamily f) {
  switch (f) {
    case ProbeFamily::kDiamonds:
      return "diamonds";
    case ProbeFamily::kPastCones:
      return "past_cones";
    case ProbeFamily::kFutureCones:
      return "future_cones";
    case ProbeFamily::kPastIntersections:
      return "past_intersections";
    case ProbeFamily::kMixed:
      return "mixed";
  }
  return "?";
}

std::vector<Region> sample_probes(const SpacetimeModel& model, ProbeFamily family, std::size_t n_probes,
                                  std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<Region> probes;
  probes.reserve(n_probes);
  for (std::size_t i = 0; i < n_probes; ++i) {
    ProbeFamily f = family;
    if (f == ProbeFamily::kMixed) f = static_cast<ProbeFamily>(i % 4);
    const Point p = model.sample_uniform(rng);
    switch (f) {
      case ProbeFamily::kPastCones:
        probes.push_back(Region::past(p));
        break;
      case ProbeFamily::kFutureCones:
        probes.push_back(Region::future(p));
        break;
      case ProbeFamily::kPastIntersections:
        probes.push_back(Region::past(p) & Region::past(model.sample_uniform(rng)));
        break;
      case ProbeFamily::kDiamonds:
      case ProbeFamily::kMixed: {
        // Prefer a causally related pair; a few tries, then accept the empty diamond.
        Point q = model.sample_uniform(rng);
        for (int tries = 0; tries < 32 && !model.causal_leq(p, q) && !model.causal_leq(q, p); ++tries)
          q = model.sample_uniform(rng);
        probes.push_back(model.causal_leq(q, p) ? Region::diamond(q, p) : Region::diamond(p, q));
        break;
      }
    }
  }
  return probes;
}

UniformityReport check_s_uniform_regions(const Sprinkle& s, const SpacetimeModel& model,
                                         const std::vector<Region>& regions, std::uint64_t seed,
                                         std::size_t n_mc) {
  UniformityReport r;
  const double K = static_cast<double>(s.points.size());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    try {
      const VolumeEstimate vol = region_volume(model, regions[i], n_mc, derive_seed(seed, {0x766f6cULL, i}));
      std::size_t count = 0;
      for (const auto& pt : s.points)
        if (regions[i].contains(model, pt)) ++count;
      const double dev = std::abs(static_cast<double>(count) / K - vol.value);
      ++r.probe_count;
      r.volume_standard_error = std::max(r.volume_standard_error, vol.standard_error);
      if (r.worst_region.empty() || dev > r.s_achieved) {
        r.s_achieved = dev;
        r.worst_region = regions[i].describe();
      }
    } catch (const DomainError&) {
      ++r.skipped;
    }
  }
  return r;
}

UniformityReport check_s_uniform(const Sprinkle& s, const SpacetimeModel& model, ProbeFamily family,
                                 std::size_t n_probes, std::uint64_t seed, std::size_t n_mc) {
  return check_s_uniform_regions(s, model, sample_probes(model, family, n_probes, seed), seed, n_mc);
}

ConeApproximation cone_approximation(const Sprinkle& s, const SpacetimeModel& model, const Point& x,
                                     std::uint64_t seed, std::size_t n_mc) {
  ConeApproximation a;
  std::vector<Point> base;
  for (std::size_t m = 0; m < s.points.size(); ++m)
    if (model.causal_leq(s.points[m], x)) {
      a.B.push_back(m);
      base.push_back(s.points[m]);
    }
  a.cone = Region::past(x);
  a.hull = Region::past_of_set(base);
  for (std::size_t m = 0; m < s.points.size(); ++m)
    if (a.hull.contains(model, s.points[m])) a.C.push_back(m);
  a.cone_volume = region_volume(model, a.cone, n_mc, derive_seed(seed, {1})).value;
  a.hull_volume = region_volume(model, a.hull, n_mc, derive_seed(seed, {2})).value;
  return a;
}

}  // namespace causet
