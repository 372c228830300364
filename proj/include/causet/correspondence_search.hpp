#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "causet/correspondence.hpp"
#include "causet/dense_matrix.hpp"

namespace causet {

struct SearchOptions {
  std::size_t budget = 20000;       // candidate evaluations for local search
  std::uint64_t seed = 0;
  std::size_t exact_limit = 6;      // branch-and-bound when both sides are this small
  bool allow_exact = true;
  // Optional per-point keys (e.g. past-cone volumes) used to rank-match the
  // starting correspondence. Defaults derive from the matrices.
  std::optional<std::vector<double>> left_keys;
  std::optional<std::vector<double>> right_keys;
};

struct TracePoint {
  std::size_t evaluations = 0;
  double best = 0.0;
};

struct SearchResult {
  Correspondence correspondence;
  double distortion = 0.0;
  bool exact = false;
  std::size_t evaluations = 0;
  std::vector<TracePoint> trace;
};

// Minimizes the distortion of a against b over correspondences. Any
// correspondence contains one of the form graph(f) ∪ graph(g)ᵀ with
// f: left → right and g: right → left, so the search runs over such pairs.
SearchResult minimize_distortion(const DenseMatrix& a, const DenseMatrix& b, const SearchOptions& options);

// Exhaustive branch-and-bound; CapabilityError above 8 points per side.
SearchResult minimize_distortion_exact(const DenseMatrix& a, const DenseMatrix& b, double upper_bound);

// The rank-matched starting correspondence (budget 0 result).
Correspondence rank_matched_correspondence(const DenseMatrix& a, const DenseMatrix& b, const SearchOptions& options);

}  // namespace causet
