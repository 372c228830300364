#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"

#include "causet/canonical.hpp"
#include "causet/class_distribution.hpp"
#include "causet/errors.hpp"
#include "causet/finite_order.hpp"
#include "causet/random.hpp"

using namespace causet;

namespace {

using Matrix = std::vector<std::vector<bool>>;

// Brute force over all off-diagonal 0/1 matrices, keeping antisymmetric
// transitive ones.
std::vector<Matrix> brute_force_orders(std::size_t K) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (i != j) cells.emplace_back(i, j);
  std::vector<Matrix> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    Matrix m(K, std::vector<bool>(K, false));
    for (std::size_t i = 0; i < K; ++i) m[i][i] = true;
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (mask >> c & 1) m[cells[c].first][cells[c].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < K && ok; ++i)
      for (std::size_t j = 0; j < K && ok; ++j) {
        if (i != j && m[i][j] && m[j][i]) ok = false;
        for (std::size_t k = 0; k < K && ok; ++k)
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
      }
    if (ok) out.push_back(m);
  }
  return out;
}

Matrix matrix_of(const FiniteOrder& o) {
  Matrix m(o.size(), std::vector<bool>(o.size()));
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = 0; j < o.size(); ++j) m[i][j] = o.leq(i, j);
  return m;
}

bool isomorphic(const FiniteOrder& a, const FiniteOrder& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(p[i], p[j]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::uint64_t brute_automorphisms(const FiniteOrder& a) {
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t n = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == a.leq(p[i], p[j]);
    n += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

FiniteOrder random_order(std::size_t K, double density, Rng& rng) {
  // Random DAG on a random labeling, then closed.
  std::vector<std::size_t> perm(K);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j)
      if (uniform01(rng) < density) pairs.emplace_back(perm[i], perm[j]);
  return FiniteOrder::from_cover_pairs(K, pairs);
}

}  // namespace

TEST_CASE("labeled order counts match the brute-force matrix filter") {
  const std::size_t expected[] = {1, 3, 19, 219, 4231};
  for (std::size_t K = 1; K <= 5; ++K) {
    const auto orders = enumerate_orders(K);
    CHECK(orders.size() == expected[K - 1]);
    const auto oracle = brute_force_orders(K);
    CHECK(oracle.size() == expected[K - 1]);
    std::set<Matrix> a, b(oracle.begin(), oracle.end());
    for (const auto& o : orders) a.insert(matrix_of(o));
    CHECK(a == b);
  }
  CHECK_THROWS_AS(enumerate_orders(6), CapabilityError);
}

TEST_CASE("class counts 1, 2, 5, 16, 63") {
  const std::size_t expected[] = {1, 2, 5, 16, 63};
  for (std::size_t K = 1; K <= 5; ++K) {
    std::set<OrderClass> classes;
    for (const auto& o : enumerate_orders(K)) classes.insert(canonical_class(o));
    CHECK(classes.size() == expected[K - 1]);
  }
}

TEST_CASE("canonical class is invariant under every relabeling for K <= 4") {
  for (std::size_t K = 1; K <= 4; ++K)
    for (const auto& o : enumerate_orders(K)) {
      const OrderClass c = canonical_class(o);
      std::vector<std::size_t> p(K);
      std::iota(p.begin(), p.end(), 0);
      do {
        REQUIRE(canonical_class(permute(o, p)) == c);
      } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("equal classes iff isomorphic (K = 4, exhaustive)") {
  const auto orders = enumerate_orders(4);
  std::vector<OrderClass> cls;
  for (const auto& o : orders) cls.push_back(canonical_class(o));
  Rng rng = make_rng(1);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t i = uniform_index(rng, orders.size()), j = uniform_index(rng, orders.size());
    CHECK((cls[i] == cls[j]) == isomorphic(orders[i], orders[j]));
  }
}

TEST_CASE("canonical form on larger random orders survives relabeling") {
  Rng rng = make_rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t K = 6 + uniform_index(rng, 7);
    const FiniteOrder o = random_order(K, uniform01(rng) * 0.5, rng);
    std::vector<std::size_t> p(K);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(canonical_class(permute(o, p)) == canonical_class(o));
    if (K <= 8) CHECK(isomorphic(canonical_class(o).representative(), o));
  }
  CHECK_THROWS_AS(canonical_class(FiniteOrder::antichain(13)), CapabilityError);
}

TEST_CASE("automorphism counts match brute force for K <= 5") {
  for (std::size_t K = 1; K <= 5; ++K)
    for (const auto& o : enumerate_orders(K)) REQUIRE(automorphism_count(o) == brute_automorphisms(o));
  CHECK(automorphism_count(FiniteOrder::antichain(12)) == 479001600ULL);
  CHECK(automorphism_count(FiniteOrder::chain(12)) == 1);
}

TEST_CASE("orbit-stabilizer: labelings per class times automorphisms is K!") {
  for (std::size_t K = 1; K <= 5; ++K) {
    std::map<OrderClass, std::uint64_t> labelings;
    std::map<OrderClass, std::uint64_t> aut;
    for (const auto& o : enumerate_orders(K)) {
      const auto c = canonical_class(o);
      ++labelings[c];
      aut[c] = automorphism_count(o);
    }
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= K; ++i) fact *= i;
    for (const auto& [c, n] : labelings) CHECK(n * aut[c] == fact);
  }
}

TEST_CASE("order axioms are validated") {
  CHECK_THROWS_AS(FiniteOrder::from_predicate(2, [](std::size_t, std::size_t) { return false; }), ArgumentError);
  CHECK_THROWS_AS(FiniteOrder::from_predicate(3,
                                              [](std::size_t i, std::size_t j) {
                                                return i == j || (i == 0 && j == 1) || (i == 1 && j == 2);
                                              }),
                  ArgumentError);
  OrderBuilder b(2);
  b.set_leq(0, 0);
  b.set_leq(1, 1);
  b.set_leq(0, 1);
  b.set_leq(1, 0);
  CHECK_THROWS_AS(std::move(b).build(), DegenerateSampleError);
  const std::vector<std::pair<std::size_t, std::size_t>> cyc{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(FiniteOrder::from_cover_pairs(2, cyc), ArgumentError);
}

TEST_CASE("transitive closure matches a Floyd-Warshall oracle") {
  Rng rng = make_rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t K = 2 + uniform_index(rng, 15);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Matrix m(K, std::vector<bool>(K, false));
    for (std::size_t i = 0; i < K; ++i) m[i][i] = true;
    for (std::size_t i = 0; i < K; ++i)
      for (std::size_t j = i + 1; j < K; ++j)
        if (uniform01(rng) < 0.2) {
          pairs.emplace_back(i, j);
          m[i][j] = true;
        }
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
          if (m[i][k] && m[k][j]) m[i][j] = true;
    const auto o = FiniteOrder::from_cover_pairs(K, pairs);
    CHECK(matrix_of(o) == m);
    CHECK(is_transitively_closed(o));
    CHECK(transitive_closure(o) == o);
  }
}

TEST_CASE("intervals, down sets and chains") {
  // 0 < 1 < 3, 0 < 2 < 3, 1 and 2 incomparable.
  const std::vector<std::pair<std::size_t, std::size_t>> p{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const auto o = FiniteOrder::from_cover_pairs(4, p);
  CHECK(interval(o, 0, 3).count() == 4);
  CHECK(interval(o, 1, 3).count() == 2);
  CHECK(interval_measure_estimate(o, 0, 3) == 1.0);
  CHECK(interval_measure_estimate(o, 0, 1) == 0.5);
  CHECK_THROWS_AS(interval_measure_estimate(o, 1, 2), ArgumentError);
  const std::size_t A[] = {1, 2};
  CHECK(down_set(o, A).count() == 1);
  CHECK(down_set(o, std::span<const std::size_t>{}).count() == 4);
  CHECK_FALSE(is_totally_ordered(o, interval(o, 0, 3)));
  CHECK(is_totally_ordered(o, interval(o, 1, 3)));
  CHECK_FALSE(o.is_chain());
  CHECK(FiniteOrder::chain(5).is_chain());
  CHECK(o.relation_count() == 5);
}

TEST_CASE("chronology marks pairs that enclose a non-chain interval") {
  // 0 < 1 < {2,3} < 4 < 5: the pair (0,5) has 1 < 4 with I(1,4) not a chain.
  std::vector<std::pair<std::size_t, std::size_t>> p{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  const auto o = FiniteOrder::from_cover_pairs(6, p);
  const auto chron = chronology_from_order(o);
  CHECK(chron[0][5]);
  CHECK_FALSE(chron[1][4]);
  CHECK_FALSE(chron[0][4]);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      if (chron[x][y]) CHECK(o.leq(x, y));
  const auto c = chronology_from_order(FiniteOrder::chain(6));
  for (const auto& row : c) CHECK(row.none());
}

TEST_CASE("text round trips") {
  Rng rng = make_rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto o = random_order(1 + uniform_index(rng, 10), 0.3, rng);
    CHECK(FiniteOrder::from_text(o.to_text()) == o);
    const auto c = canonical_class(o);
    CHECK(OrderClass::from_hex(c.to_hex()) == c);
  }
  CHECK_THROWS_AS(OrderClass::from_hex("zz"), ArgumentError);
  CHECK_THROWS_AS(FiniteOrder::from_text("2\n00\n01\n"), ArgumentError);
}

TEST_CASE("permute validates bijections") {
  const auto o = FiniteOrder::chain(3);
  const std::size_t bad[] = {0, 0, 1};
  CHECK_THROWS_AS(permute(o, bad), ArgumentError);
  const std::size_t rev[] = {2, 1, 0};
  const auto r = permute(o, rev);
  CHECK(r.leq(2, 0));
  CHECK_FALSE(r.leq(0, 2));
}

TEST_CASE("class distributions: CSV round trip and l1") {
  std::map<OrderClass, std::uint64_t> counts{{canonical_class(FiniteOrder::chain(2)), 30},
                                             {canonical_class(FiniteOrder::antichain(2)), 70}};
  const auto d = ClassDistribution::from_counts(2, counts);
  CHECK(d.probability(canonical_class(FiniteOrder::chain(2))) == doctest::Approx(0.3));
  CHECK(d.standard_error(canonical_class(FiniteOrder::chain(2))) == doctest::Approx(std::sqrt(0.21 / 100)));
  const auto back = ClassDistribution::from_csv(d.to_csv());
  CHECK(l1_distance(d, back) == 0.0);
  CHECK(back.sample_count() == 100);
  const auto e = ClassDistribution::exact(2, {{canonical_class(FiniteOrder::chain(2)), 0.5},
                                              {canonical_class(FiniteOrder::antichain(2)), 0.5}});
  CHECK(l1_distance(d, e) == doctest::Approx(0.4));
  CHECK(e.standard_error(canonical_class(FiniteOrder::chain(2))) == 0.0);
  CHECK_THROWS_AS(l1_distance(d, ClassDistribution(3)), ArgumentError);
  CHECK_THROWS_AS(ClassDistribution::exact(2, {{canonical_class(FiniteOrder::chain(2)), 0.4}}), ArgumentError);
}
