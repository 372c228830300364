#include "causet/finite_order.hpp"

#include <numeric>
#include <sstream>

#include "causet/errors.hpp"

namespace causet {

FiniteOrder::FiniteOrder(std::size_t K) : up_(K, Bitset(K)), down_(K, Bitset(K)) {}

FiniteOrder FiniteOrder::antichain(std::size_t K) {
  FiniteOrder o(K);
  for (std::size_t i = 0; i < K; ++i) o.set(i, i);
  return o;
}

FiniteOrder FiniteOrder::chain(std::size_t K) {
  FiniteOrder o(K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i; j < K; ++j) o.set(i, j);
  return o;
}

std::string FiniteOrder::violation() const {
  const std::size_t K = size();
  for (std::size_t i = 0; i < K; ++i)
    if (!up_[i][i]) return "reflexivity fails at " + std::to_string(i);
  for (std::size_t i = 0; i < K; ++i) {
    Bitset both = up_[i] & down_[i];
    both.reset(i);
    if (both.any()) return "antisymmetry fails between " + std::to_string(i) + " and " + std::to_string(both.find_first());
  }
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j))
      if (!up_[j].is_subset_of(up_[i]))
        return "transitivity fails along " + std::to_string(i) + " <= " + std::to_string(j);
  return {};
}

FiniteOrder FiniteOrder::from_predicate(std::size_t K, const std::function<bool(std::size_t, std::size_t)>& leq) {
  FiniteOrder o(K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (leq(i, j)) o.set(i, j);
  if (auto v = o.violation(); !v.empty()) throw ArgumentError("not a partial order: " + v);
  return o;
}

FiniteOrder FiniteOrder::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const std::size_t K = leq.size();
  for (const auto& row : leq)
    if (row.size() != K) throw ArgumentError("order matrix is not square");
  return from_predicate(K, [&](std::size_t i, std::size_t j) { return leq[i][j]; });
}

FiniteOrder FiniteOrder::from_cover_pairs(std::size_t K, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  FiniteOrder o = antichain(K);
  for (auto [i, j] : pairs) {
    if (i >= K || j >= K) throw ArgumentError("relation index out of range");
    o.set(i, j);
  }
  try {
    return transitive_closure(o);
  } catch (const DegenerateSampleError& e) {
    throw ArgumentError(std::string("relation closure is not a partial order: ") + e.what());
  }
}

bool FiniteOrder::is_chain() const {
  const std::size_t K = size();
  for (std::size_t i = 0; i < K; ++i)
    if ((up_[i] | down_[i]).count() != K) return false;
  return true;
}

std::size_t FiniteOrder::relation_count() const {
  std::size_t n = 0;
  for (const auto& r : up_) n += r.count();
  return n - size();
}

std::string FiniteOrder::to_text() const {
  std::ostringstream os;
  os << size() << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) os << (up_[i][j] ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

FiniteOrder FiniteOrder::from_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t K = 0;
  if (!(is >> K)) throw ArgumentError("order text: missing size line");
  std::vector<std::vector<bool>> m(K, std::vector<bool>(K));
  for (std::size_t i = 0; i < K; ++i) {
    std::string row;
    if (!(is >> row) || row.size() != K)
      throw ArgumentError("order text: row " + std::to_string(i + 1) + " must have " + std::to_string(K) + " characters");
    for (std::size_t j = 0; j < K; ++j) {
      if (row[j] != '0' && row[j] != '1') throw ArgumentError("order text: row " + std::to_string(i + 1) + " has a non-0/1 character");
      m[i][j] = row[j] == '1';
    }
  }
  std::string extra;
  if (is >> extra) throw ArgumentError("order text: trailing data");
  return from_matrix(m);
}

OrderBuilder::OrderBuilder(std::size_t K) : order_(K) {}

FiniteOrder OrderBuilder::build() && {
  if (auto v = order_.violation(); !v.empty()) {
    if (v.rfind("antisymmetry", 0) == 0) throw DegenerateSampleError("degenerate sample: " + v);
    throw ArgumentError("not a partial order: " + v);
  }
  return std::move(order_);
}

Bitset down_set(const FiniteOrder& order, std::span<const std::size_t> A) {
  Bitset out(order.size());
  out.set();
  for (std::size_t a : A) {
    if (a >= order.size()) throw ArgumentError("down_set: index out of range");
    out &= order.down(a);
  }
  return out;
}

Bitset interval(const FiniteOrder& order, std::size_t u, std::size_t v) {
  if (u >= order.size() || v >= order.size()) throw ArgumentError("interval: index out of range");
  return order.up(u) & order.down(v);
}

bool is_totally_ordered(const FiniteOrder& order, const Bitset& members) {
  for (std::size_t k = members.find_first(); k != Bitset::npos; k = members.find_next(k))
    if (!members.is_subset_of(order.up(k) | order.down(k))) return false;
  return true;
}

std::vector<Bitset> chronology_from_order(const FiniteOrder& order) {
  const std::size_t K = order.size();
  // wide[u] = {v : u < v and interval(u, v) is not a chain}
  std::vector<Bitset> wide(K, Bitset(K));
  for (std::size_t u = 0; u < K; ++u) {
    const Bitset& above = order.up(u);
    for (std::size_t v = above.find_first(); v != Bitset::npos; v = above.find_next(v)) {
      if (v == u) continue;
      if (!is_totally_ordered(order, above & order.down(v))) wide[u].set(v);
    }
  }
  std::vector<Bitset> marked(K, Bitset(K));
  for (std::size_t x = 0; x < K; ++x) {
    // Every v reachable as the upper end of a wide interval starting above x.
    Bitset reach(K);
    const Bitset& above = order.up(x);
    for (std::size_t u = above.find_first(); u != Bitset::npos; u = above.find_next(u))
      if (u != x) reach |= wide[u];
    if (reach.none()) continue;
    for (std::size_t y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
      if (y == x) continue;
      Bitset below_y = order.down(y);
      below_y.reset(y);
      if (reach.intersects(below_y)) marked[x].set(y);
    }
  }
  return marked;
}

double interval_measure_estimate(const FiniteOrder& order, std::size_t u, std::size_t v) {
  if (u >= order.size() || v >= order.size()) throw ArgumentError("interval_measure_estimate: index out of range");
  if (!order.leq(u, v)) throw ArgumentError("interval_measure_estimate: requires u <= v");
  return static_cast<double>(interval(order, u, v).count()) / static_cast<double>(order.size());
}

FiniteOrder permute(const FiniteOrder& order, std::span<const std::size_t> sigma) {
  const std::size_t K = order.size();
  if (sigma.size() != K) throw ArgumentError("permute: permutation has wrong length");
  std::vector<bool> seen(K, false);
  for (std::size_t s : sigma) {
    if (s >= K || seen[s]) throw ArgumentError("permute: not a bijection");
    seen[s] = true;
  }
  OrderBuilder b(K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = order.up(i).find_first(); j != Bitset::npos; j = order.up(i).find_next(j))
      b.set_leq(sigma[i], sigma[j]);
  return std::move(b).build();
}

FiniteOrder transitive_closure(const FiniteOrder& order) {
  const std::size_t K = order.size();
  std::vector<Bitset> rows(K);
  for (std::size_t i = 0; i < K; ++i) rows[i] = order.up(i);
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t i = 0; i < K; ++i)
      if (rows[i][k]) rows[i] |= rows[k];
  OrderBuilder b(K);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = rows[i].find_first(); j != Bitset::npos; j = rows[i].find_next(j)) b.set_leq(i, j);
  return std::move(b).build();
}

bool is_transitively_closed(const FiniteOrder& order) { return transitive_closure(order) == order; }

namespace {

bool is_down_closed(const FiniteOrder& o, unsigned mask) {
  for (std::size_t i = 0; i < o.size(); ++i)
    if (mask >> i & 1u)
      for (std::size_t j = 0; j < o.size(); ++j)
        if (o.leq(j, i) && !(mask >> j & 1u)) return false;
  return true;
}

bool is_up_closed(const FiniteOrder& o, unsigned mask) {
  for (std::size_t i = 0; i < o.size(); ++i)
    if (mask >> i & 1u)
      for (std::size_t j = 0; j < o.size(); ++j)
        if (o.leq(i, j) && !(mask >> j & 1u)) return false;
  return true;
}

}  // namespace

std::vector<FiniteOrder> enumerate_orders(std::size_t K) {
  if (K > 5) throw CapabilityError("enumerate_orders: K must be <= 5");
  std::vector<FiniteOrder> level{FiniteOrder::antichain(0)};
  // Grow one element at a time: the new element k gets a down-closed set D
  // below it and an up-closed set U above it with D < U elementwise.
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<FiniteOrder> next;
    const unsigned subsets = 1u << k;
    for (const auto& o : level) {
      std::vector<unsigned> downs, ups;
      for (unsigned m = 0; m < subsets; ++m) {
        if (is_down_closed(o, m)) downs.push_back(m);
        if (is_up_closed(o, m)) ups.push_back(m);
      }
      for (unsigned d : downs) {
        for (unsigned u : ups) {
          if (d & u) continue;
          bool ok = true;
          for (std::size_t a = 0; ok && a < k; ++a)
            if (d >> a & 1u)
              for (std::size_t b = 0; ok && b < k; ++b)
                if ((u >> b & 1u) && !o.leq(a, b)) ok = false;
          if (!ok) continue;
          OrderBuilder bld(k + 1);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
              if (o.leq(i, j)) bld.set_leq(i, j);
          bld.set_leq(k, k);
          for (std::size_t a = 0; a < k; ++a) {
            if (d >> a & 1u) bld.set_leq(a, k);
            if (u >> a & 1u) bld.set_leq(k, a);
          }
          next.push_back(std::move(bld).build());
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace causet
