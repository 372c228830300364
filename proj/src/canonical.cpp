#include "causet/canonical.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "causet/errors.hpp"

namespace causet {

namespace {

using Colors = std::vector<int>;

// Refines `colors` to the coarsest equitable coloring compatible with it.
// New colors are ranks of (old color, down-color multiset, up-color multiset),
// which depend only on the structure, never on labels.
Colors refine(const FiniteOrder& order, Colors colors) {
  const std::size_t K = order.size();
  int classes = static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
  for (;;) {
    std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> sig(K);
    for (std::size_t i = 0; i < K; ++i) {
      auto& [c, down, up] = sig[i];
      c = colors[i];
      for (std::size_t j = 0; j < K; ++j) {
        if (j == i) continue;
        if (order.leq(j, i)) down.push_back(colors[j]);
        if (order.leq(i, j)) up.push_back(colors[j]);
      }
      std::sort(down.begin(), down.end());
      std::sort(up.begin(), up.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t i = 0; i < K; ++i)
      colors[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[i]) - uniq.begin());
    const int now = static_cast<int>(uniq.size());
    if (now == classes) return colors;
    classes = now;
  }
}

Colors individualize(Colors colors, std::size_t v) {
  const int cv = colors[v];
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = 2 * colors[i] + (colors[i] == cv && i != v ? 1 : 0);
  colors[v] = 2 * cv;
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& c : colors) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  return colors;
}

bool are_twins(const FiniteOrder& o, std::size_t u, std::size_t v) {
  if (o.comparable(u, v)) return false;
  Bitset du = o.down(u), dv = o.down(v), uu = o.up(u), uv = o.up(v);
  du.reset(u);
  dv.reset(v);
  uu.reset(u);
  uv.reset(v);
  return du == dv && uu == uv;
}

std::string key_for(const FiniteOrder& o, const Colors& position) {
  const std::size_t K = o.size();
  std::vector<std::size_t> at(K);
  for (std::size_t i = 0; i < K; ++i) at[position[i]] = i;
  std::string key(1 + (K * K + 7) / 8, '\0');
  key[0] = static_cast<char>(K);
  for (std::size_t p = 0; p < K; ++p)
    for (std::size_t q = 0; q < K; ++q)
      if (o.leq(at[p], at[q])) {
        const std::size_t bit = p * K + q;
        key[1 + bit / 8] = static_cast<char>(static_cast<unsigned char>(key[1 + bit / 8]) | (0x80u >> (bit % 8)));
      }
  return key;
}

void search(const FiniteOrder& o, const Colors& start, std::string& best) {
  const Colors colors = refine(o, start);
  const std::size_t K = o.size();
  std::vector<int> cell_size(K, 0);
  for (int c : colors) ++cell_size[c];
  int target = -1;
  for (std::size_t c = 0; c < K; ++c)
    if (cell_size[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    std::string key = key_for(o, colors);
    if (best.empty() || key < best) best = std::move(key);
    return;
  }
  std::vector<std::size_t> explored;
  for (std::size_t v = 0; v < K; ++v) {
    if (colors[v] != target) continue;
    // Swapping twins is an automorphism fixing the current partition, so
    // their subtrees yield identical leaves.
    if (std::any_of(explored.begin(), explored.end(), [&](std::size_t u) { return are_twins(o, u, v); })) continue;
    explored.push_back(v);
    search(o, individualize(colors, v), best);
  }
}

void count_maps(const FiniteOrder& q, const Colors& colors, std::vector<int>& image, std::vector<bool>& used,
                std::size_t next, std::uint64_t& count) {
  const std::size_t n = q.size();
  if (next == n) {
    ++count;
    return;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w] || colors[w] != colors[next]) continue;
    bool ok = true;
    for (std::size_t a = 0; ok && a < next; ++a) {
      const auto fa = static_cast<std::size_t>(image[a]);
      ok = q.leq(a, next) == q.leq(fa, w) && q.leq(next, a) == q.leq(w, fa);
    }
    if (!ok) continue;
    used[w] = true;
    image[next] = static_cast<int>(w);
    count_maps(q, colors, image, used, next + 1, count);
    used[w] = false;
  }
}

}  // namespace

std::string OrderClass::to_hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (unsigned char c : key_) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 15]);
  }
  return s;
}

OrderClass OrderClass::from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw ArgumentError("OrderClass: bad hex digit");
  };
  if (hex.size() % 2 != 0 || hex.empty()) throw ArgumentError("OrderClass: bad hex length");
  std::string key;
  for (std::size_t i = 0; i < hex.size(); i += 2) key.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  const std::size_t K = static_cast<unsigned char>(key[0]);
  if (key.size() != 1 + (K * K + 7) / 8) throw ArgumentError("OrderClass: key length does not match size");
  return OrderClass(std::move(key));
}

FiniteOrder OrderClass::representative() const {
  const std::size_t K = order_size();
  return FiniteOrder::from_predicate(K, [&](std::size_t p, std::size_t q) {
    const std::size_t bit = p * K + q;
    return (static_cast<unsigned char>(key_[1 + bit / 8]) & (0x80u >> (bit % 8))) != 0;
  });
}

OrderClass canonical_class(const FiniteOrder& order) {
  if (order.size() > kMaxCanonicalSize) throw CapabilityError("canonical_class: K must be <= 12");
  std::string best;
  search(order, Colors(order.size(), 0), best);
  if (order.size() == 0) best = std::string(1, '\0');
  return OrderClass(std::move(best));
}

std::uint64_t automorphism_count(const FiniteOrder& order) {
  const std::size_t K = order.size();
  if (K > kMaxCanonicalSize) throw CapabilityError("automorphism_count: K must be <= 12");
  // Aut = (product of symmetric groups on twin classes) ⋊ Aut(quotient).
  std::vector<int> cls(K, -1);
  std::vector<std::size_t> reps;
  std::vector<int> sizes;
  for (std::size_t v = 0; v < K; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = static_cast<int>(reps.size());
    int size = 1;
    for (std::size_t w = v + 1; w < K; ++w)
      if (cls[w] < 0 && are_twins(order, v, w)) {
        cls[w] = cls[v];
        ++size;
      }
    reps.push_back(v);
    sizes.push_back(size);
  }
  std::uint64_t factor = 1;
  for (int s : sizes)
    for (int k = 2; k <= s; ++k) factor *= static_cast<std::uint64_t>(k);

  const FiniteOrder quotient = FiniteOrder::from_predicate(
      reps.size(), [&](std::size_t a, std::size_t b) { return order.leq(reps[a], reps[b]); });
  Colors colors = refine(quotient, Colors(sizes.begin(), sizes.end()));
  std::vector<int> image(reps.size(), -1);
  std::vector<bool> used(reps.size(), false);
  std::uint64_t count = 0;
  count_maps(quotient, colors, image, used, 0, count);
  return factor * count;
}

}  // namespace causet
