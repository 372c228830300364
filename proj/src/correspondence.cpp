#include "causet/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include "causet/errors.hpp"

namespace causet {

Correspondence::Correspondence(std::size_t left, std::size_t right,
                               std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : left_(left), right_(right), pairs_(std::move(pairs)) {
  std::vector<bool> l(left, false), r(right, false);
  for (auto [a, b] : pairs_) {
    if (a >= left || b >= right) throw ArgumentError("correspondence: index out of range");
    l[a] = true;
    r[b] = true;
  }
  if (std::find(l.begin(), l.end(), false) != l.end()) throw ArgumentError("correspondence: not left-total");
  if (std::find(r.begin(), r.end(), false) != r.end()) throw ArgumentError("correspondence: not right-total");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Correspondence Correspondence::identity(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(i, i);
  return Correspondence(n, n, std::move(p));
}

double distortion(const Correspondence& corr, const DenseMatrix& a, const DenseMatrix& b) {
  if (corr.empty()) throw ArgumentError("distortion: empty correspondence");
  if (corr.left_size() != a.size() || corr.right_size() != b.size())
    throw ArgumentError("distortion: correspondence does not match matrix sizes");
  double worst = 0.0;
  for (auto [m1, n1] : corr.pairs())
    for (auto [m2, n2] : corr.pairs()) worst = std::max(worst, std::abs(a(m1, m2) - b(n1, n2)));
  return worst;
}

DenseMatrix positive_part(const DenseMatrix& m) {
  DenseMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = std::max(0.0, m(i, j));
  return out;
}

double tau_distortion(const Correspondence& corr, const DenseMatrix& tau_x, const DenseMatrix& tau_y) {
  return distortion(corr, positive_part(tau_x), positive_part(tau_y));
}

}  // namespace causet
