#pragma once

#include <utility>
#include <vector>

#include "causet/dense_matrix.hpp"

namespace causet {

// Left- and right-total relation between nets {0..left-1} and {0..right-1}.
class Correspondence {
 public:
  Correspondence() = default;
  // Throws ArgumentError unless every index on both sides occurs in a pair.
  Correspondence(std::size_t left, std::size_t right, std::vector<std::pair<std::size_t, std::size_t>> pairs);

  static Correspondence identity(std::size_t n);

  std::size_t left_size() const { return left_; }
  std::size_t right_size() const { return right_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

// sup over (m1,n1), (m2,n2) in the relation of |a(m1,m2) - b(n1,n2)|.
// ArgumentError for an empty relation or mismatched sizes.
double distortion(const Correspondence& corr, const DenseMatrix& a, const DenseMatrix& b);

// Distortion of time separations: signed τ matrices are clamped at 0, so τ
// vanishes off J+ as in the Lorentzian distance function.
double tau_distortion(const Correspondence& corr, const DenseMatrix& tau_x, const DenseMatrix& tau_y);

DenseMatrix positive_part(const DenseMatrix& m);

}  // namespace causet
