#include <doctest.h>

#include <random>

#include "canext/error.hpp"
#include "canext/order.hpp"

using namespace canext;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Poset(Preorder::saturate(n, pairs));
}

Poset diamond() {
  return Poset(Preorder::saturate(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                  {"0", "a", "b", "1"}));
}

Poset pentagon() {
  return Poset(Preorder::saturate(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}},
                                  {"0", "a", "b", "c", "1"}));
}

}  // namespace

TEST_CASE("saturate closes transitively") {
  Preorder p = Preorder::saturate(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(2, 0));
}

TEST_CASE("saturate with no pairs gives the discrete order") {
  Preorder p = Preorder::saturate(2, {});
  CHECK(p.leq(0, 0));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(0, 1));
  CHECK_FALSE(p.leq(1, 0));
}

TEST_CASE("saturate keeps order-equivalent elements as a preorder") {
  Preorder p = Preorder::saturate(2, {{0, 1}, {1, 0}});
  CHECK(p.leq(0, 1));
  CHECK(p.leq(1, 0));
  CHECK_FALSE(p.isAntisymmetric());
  CHECK_THROWS_AS(Poset{p}, PreconditionError);
}

TEST_CASE("saturate rejects out-of-range pairs") {
  CHECK_THROWS_AS(Preorder::saturate(2, {{0, 5}}), PreconditionError);
}

TEST_CASE("saturate output is reflexive and transitive on random pair sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k)
      pairs.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    Preorder p = Preorder::saturate(n, pairs);
    for (int i = 0; i < n; ++i) {
      CHECK(p.leq(i, i));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
    }
  }
}

TEST_CASE("quotientToPoset collapses order-equivalent elements") {
  auto [q1, s1] = quotientToPoset(Preorder::saturate(2, {{0, 1}, {1, 0}}));
  CHECK(q1.size() == 1);
  CHECK(s1(0) == s1(1));

  // Identity on a poset.
  auto [q2, s2] = quotientToPoset(chain(3));
  CHECK(q2.size() == 3);
  CHECK(s2.image == std::vector<int>{0, 1, 2});

  // 0 and 1 equivalent, 2 above both: a 2-chain of classes.
  auto [q3, s3] = quotientToPoset(
      Preorder::saturate(3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}));
  CHECK(q3.size() == 2);
  CHECK(s3(0) == s3(1));
  CHECK(q3.leq(s3(0), s3(2)));
  CHECK_FALSE(q3.leq(s3(2), s3(0)));
}

TEST_CASE("quotient surjection reflects order on classes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n + 2; ++k)
      pairs.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    Preorder p = Preorder::saturate(n, pairs);
    auto [q, s] = quotientToPoset(p);
    CHECK(q.isAntisymmetric());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(p.leq(i, j) == q.leq(s(i), s(j)));
  }
}

TEST_CASE("downSet and upSet") {
  Poset c3 = chain(3);
  Subset mid = Subset::single(3, 1);
  CHECK(downSet(c3, mid) == Subset(3, 0b011));
  CHECK(upSet(c3, mid) == Subset(3, 0b110));
  CHECK(downSet(c3, Subset(3)) == Subset(3));

  Poset b2 = diamond();
  Subset ab(4);
  ab.set(1).set(2);
  CHECK(downSet(b2, ab) == Subset(4, 0b0111));
}

TEST_CASE("downSet is a closure operator") {
  std::mt19937_64 rng(3);
  Poset b2 = diamond();
  for (int trial = 0; trial < 20; ++trial) {
    Subset s(4, rng() % 16), t(4, rng() % 16);
    Subset ds = downSet(b2, s);
    CHECK(s.subsetOf(ds));
    CHECK(downSet(b2, ds) == ds);
    if (s.subsetOf(t)) CHECK(downSet(b2, s).subsetOf(downSet(b2, t)));
  }
}

TEST_CASE("isDirected") {
  Poset b2 = diamond();
  Subset abTop(4);
  abTop.set(1).set(2).set(3);
  CHECK(isDirected(b2, abTop));

  Subset ab(4);
  ab.set(1).set(2);
  CHECK_FALSE(isDirected(b2, ab));

  CHECK(isDirected(b2, Subset::single(4, 2)));
  CHECK_FALSE(isDirected(b2, Subset(4)));  // directed means nonempty
}

TEST_CASE("finite directed subsets have maxima") {
  std::mt19937_64 rng(5);
  Poset n5 = pentagon();
  for (std::uint64_t bits = 1; bits < 32; ++bits) {
    Subset s(5, bits);
    if (!isDirected(n5, s)) continue;
    int m = maximumOf(n5, s);
    REQUIRE(m >= 0);
    s.forEach([&](int x) { CHECK(n5.leq(x, m)); });
  }
  (void)rng;
}

TEST_CASE("productOrder of two 2-chains is the diamond") {
  Poset prod = productOrder(chain(2), chain(2));
  CHECK(prod.size() == 4);
  REQUIRE(findOrderIsomorphism(prod, diamond()).has_value());
}

TEST_CASE("pentagon is self-dual") {
  Poset n5 = pentagon();
  REQUIRE(findOrderIsomorphism(dualOrder(n5), n5).has_value());
}

TEST_CASE("dual is an involution") {
  Poset n5 = pentagon();
  CHECK(dualOrder(dualOrder(n5)).sameOrderAs(n5));
}

TEST_CASE("hasseEdges of a chain") {
  auto edges = hasseEdges(chain(3));
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == std::pair<int, int>{0, 1});
  CHECK(edges[1] == std::pair<int, int>{1, 2});
}

TEST_CASE("hasse edges regenerate the order") {
  for (const Poset& p : {diamond(), pentagon(), chain(4)}) {
    auto edges = hasseEdges(p);
    Preorder again = Preorder::saturate(p.size(), edges, p.labels());
    CHECK(again.sameOrderAs(p));
    // Minimality: dropping any edge loses the order.
    for (std::size_t drop = 0; drop < edges.size(); ++drop) {
      std::vector<std::pair<int, int>> rest;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (i != drop) rest.push_back(edges[i]);
      CHECK_FALSE(Preorder::saturate(p.size(), rest).sameOrderAs(p));
    }
  }
}

TEST_CASE("findOrderIsomorphism distinguishes the diamond from the 4-chain") {
  CHECK_FALSE(findOrderIsomorphism(diamond(), chain(4)).has_value());
}
