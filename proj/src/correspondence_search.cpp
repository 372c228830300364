#include "causet/correspondence_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "causet/errors.hpp"
#include "causet/random.hpp"

namespace causet {

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

// f: left -> right, g: right -> left. g[j] pointing at some i with f[i] = j
// adds nothing, so every g is admissible.
struct Assignment {
  std::vector<std::size_t> f;
  std::vector<std::size_t> g;
};

struct Score {
  double max = 0.0;
  double sumsq = 0.0;
};

Pairs pairs_of(const Assignment& s) {
  Pairs p;
  p.reserve(s.f.size() + s.g.size());
  for (std::size_t i = 0; i < s.f.size(); ++i) p.emplace_back(i, s.f[i]);
  for (std::size_t j = 0; j < s.g.size(); ++j) p.emplace_back(s.g[j], j);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

Score score(const Pairs& p, const DenseMatrix& a, const DenseMatrix& b) {
  Score s;
  for (auto [m1, n1] : p)
    for (auto [m2, n2] : p) {
      const double d = std::abs(a(m1, m2) - b(n1, n2));
      s.max = std::max(s.max, d);
      s.sumsq += d * d;
    }
  return s;
}

bool better(const Score& x, const Score& y) {
  if (x.max < y.max) return true;
  if (x.max > y.max) return false;
  return x.sumsq < y.sumsq * (1.0 - 1e-12);
}

std::vector<std::size_t> rank_order(const DenseMatrix& m, const std::optional<std::vector<double>>& keys) {
  const std::size_t n = m.size();
  std::vector<std::pair<double, double>> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (keys) {
      k[i] = {(*keys)[i], 0.0};
      continue;
    }
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    k[i] = {col - row, row};
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return k[x] < k[y]; });
  return idx;
}

Assignment rank_matched(const DenseMatrix& a, const DenseMatrix& b, const SearchOptions& o) {
  const std::size_t n = a.size(), m = b.size();
  const auto ra = rank_order(a, o.left_keys);
  const auto rb = rank_order(b, o.right_keys);
  auto scale = [](std::size_t r, std::size_t from, std::size_t to) {
    if (from <= 1 || to <= 1) return std::size_t{0};
    return static_cast<std::size_t>(std::llround(static_cast<double>(r) * static_cast<double>(to - 1) /
                                                 static_cast<double>(from - 1)));
  };
  Assignment s;
  s.f.resize(n);
  s.g.resize(m);
  for (std::size_t r = 0; r < n; ++r) s.f[ra[r]] = rb[scale(r, n, m)];
  for (std::size_t r = 0; r < m; ++r) s.g[rb[r]] = ra[scale(r, m, n)];
  return s;
}

Correspondence to_correspondence(const Assignment& s) { return Correspondence(s.f.size(), s.g.size(), pairs_of(s)); }

struct Exact {
  const DenseMatrix& a;
  const DenseMatrix& b;
  Pairs current;
  Pairs best_pairs;
  double best;
  std::size_t nodes = 0;
  std::vector<int> covered;

  double added(std::size_t x, std::size_t y) const {
    double w = std::abs(a(x, x) - b(y, y));
    for (auto [c, d] : current) w = std::max({w, std::abs(a(x, c) - b(y, d)), std::abs(a(c, x) - b(d, y))});
    return w;
  }

  void assign_left(std::size_t i, double cur) {
    if (i == a.size()) {
      assign_right(0, cur);
      return;
    }
    for (std::size_t y = 0; y < b.size(); ++y) {
      ++nodes;
      const double next = std::max(cur, added(i, y));
      if (next >= best) continue;
      current.emplace_back(i, y);
      ++covered[y];
      assign_left(i + 1, next);
      --covered[y];
      current.pop_back();
    }
  }

  void assign_right(std::size_t j, double cur) {
    while (j < b.size() && covered[j] > 0) ++j;
    if (j == b.size()) {
      if (cur < best) {
        best = cur;
        best_pairs = current;
      }
      return;
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      ++nodes;
      const double next = std::max(cur, added(x, j));
      if (next >= best) continue;
      current.emplace_back(x, j);
      assign_right(j + 1, next);
      current.pop_back();
    }
  }
};

}  // namespace

Correspondence rank_matched_correspondence(const DenseMatrix& a, const DenseMatrix& b, const SearchOptions& options) {
  if (a.size() == 0 || b.size() == 0) throw ArgumentError("correspondence search: empty net");
  return to_correspondence(rank_matched(a, b, options));
}

SearchResult minimize_distortion_exact(const DenseMatrix& a, const DenseMatrix& b, double upper_bound) {
  if (a.size() > 8 || b.size() > 8) throw CapabilityError("exact distortion search supports at most 8 points per side");
  if (a.size() == 0 || b.size() == 0) throw ArgumentError("correspondence search: empty net");
  // Strictly above any attainable value so the bound itself is reachable.
  Exact e{a, b, {}, {}, std::nextafter(upper_bound, std::numeric_limits<double>::infinity()), 0,
          std::vector<int>(b.size(), 0)};
  e.assign_left(0, 0.0);
  SearchResult r;
  if (e.best_pairs.empty()) throw Error("exact distortion search: upper bound was not attainable");
  r.correspondence = Correspondence(a.size(), b.size(), e.best_pairs);
  r.distortion = distortion(r.correspondence, a, b);
  r.exact = true;
  r.evaluations = e.nodes;
  r.trace.push_back({e.nodes, r.distortion});
  return r;
}

SearchResult minimize_distortion(const DenseMatrix& a, const DenseMatrix& b, const SearchOptions& o) {
  if (a.size() == 0 || b.size() == 0) throw ArgumentError("correspondence search: empty net");
  const std::size_t n = a.size(), m = b.size();
  Assignment best = rank_matched(a, b, o);
  Score best_score = score(pairs_of(best), a, b);

  SearchResult r;
  r.trace.push_back({0, best_score.max});

  Rng rng = make_rng(o.seed);
  Assignment cur = best;
  Score cur_score = best_score;
  std::size_t evals = 0;
  // Moves: 0 = reassign f[i], 1 = reassign g[j], 2 = swap f[i1], f[i2].
  const std::size_t n_moves = n * m + m * n + n * (n - 1) / 2;
  std::size_t cursor = 0;
  while (evals < o.budget && n_moves > 0) {
    bool improved = false;
    for (std::size_t step = 0; step < n_moves && evals < o.budget; ++step) {
      std::size_t mv = (cursor + step) % n_moves;
      Assignment cand = cur;
      if (mv < n * m) {
        const std::size_t i = mv / m, y = mv % m;
        if (cand.f[i] == y) continue;
        cand.f[i] = y;
      } else if ((mv -= n * m) < m * n) {
        const std::size_t j = mv / n, x = mv % n;
        if (cand.g[j] == x) continue;
        cand.g[j] = x;
      } else {
        mv -= m * n;
        std::size_t i1 = 0;
        while (mv >= n - 1 - i1) mv -= n - 1 - i1++;
        const std::size_t i2 = i1 + 1 + mv;
        if (cand.f[i1] == cand.f[i2]) continue;
        std::swap(cand.f[i1], cand.f[i2]);
      }
      ++evals;
      const Score s = score(pairs_of(cand), a, b);
      if (better(s, cur_score)) {
        cur = std::move(cand);
        cur_score = s;
        cursor = (cursor + step + 1) % n_moves;
        improved = true;
        if (better(cur_score, best_score)) {
          best = cur;
          best_score = cur_score;
          r.trace.push_back({evals, best_score.max});
        }
        break;
      }
    }
    if (!improved) {
      // Local minimum: kick from the best point, or restart at random.
      if (uniform01(rng) < 0.5) {
        cur = best;
        const std::size_t kicks = 1 + uniform_index(rng, std::max<std::size_t>(1, n / 2));
        for (std::size_t k = 0; k < kicks; ++k) cur.f[uniform_index(rng, n)] = uniform_index(rng, m);
        for (std::size_t k = 0; k < kicks; ++k) cur.g[uniform_index(rng, m)] = uniform_index(rng, n);
      } else {
        for (auto& y : cur.f) y = uniform_index(rng, m);
        for (auto& x : cur.g) x = uniform_index(rng, n);
      }
      cur_score = score(pairs_of(cur), a, b);
      ++evals;
      if (better(cur_score, best_score)) {
        best = cur;
        best_score = cur_score;
        r.trace.push_back({evals, best_score.max});
      }
    }
  }

  r.correspondence = to_correspondence(best);
  r.distortion = best_score.max;
  r.evaluations = evals;
  if (o.allow_exact && n <= o.exact_limit && m <= o.exact_limit && o.budget > 0) {
    SearchResult exact = minimize_distortion_exact(a, b, r.distortion);
    exact.evaluations += evals;
    exact.trace.insert(exact.trace.begin(), r.trace.begin(), r.trace.end());
    exact.trace.back().evaluations = exact.evaluations;
    return exact;
  }
  return r;
}

}  // namespace causet
