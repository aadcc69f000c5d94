#include <doctest.h>

#include <random>

#include "canext/error.hpp"
#include "canext/lattice.hpp"
#include "oracle_helpers.hpp"

using namespace canext;

namespace {

FiniteLattice fromPairs(int n, std::vector<std::string> labels,
                        std::vector<std::pair<int, int>> pairs) {
  return FiniteLattice::fromPoset(Poset(Preorder::saturate(n, pairs, std::move(labels))));
}

FiniteLattice b2() {
  return fromPairs(4, {"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}
FiniteLattice n5() {
  // 0 < a < c < 1 and 0 < b < 1.
  return fromPairs(5, {"0", "a", "b", "c", "1"},
                   {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}
FiniteLattice m3() {
  return fromPairs(5, {"0", "a", "b", "c", "1"},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}
FiniteLattice ch2() { return fromPairs(2, {"0", "1"}, {{0, 1}}); }

OpTable joinWith(const FiniteLattice& lat, int c) {
  std::vector<int> v(lat.size());
  for (int x = 0; x < lat.size(); ++x) v[x] = lat.join(x, c);
  return OpTable(lat.size(), 1, v);
}

OpTable tableOf(const FiniteLattice& lat, bool meet) {
  const int n = lat.size();
  std::vector<int> v(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      v[i * n + j] = meet ? lat.meet(i, j) : lat.join(i, j);
  return OpTable(n, 2, v);
}

OrderedAlgebra diamondAlgebra() {
  FiniteLattice lat = b2();
  Signature sig({{"join", 2}, {"meet", 2}, {"0", 0}, {"1", 0}, {"dia", 1}});
  std::vector<OpTable> interp;
  interp.push_back(tableOf(lat, false));
  interp.push_back(tableOf(lat, true));
  interp.emplace_back(4, 0, std::vector<int>{lat.bottom()});
  interp.emplace_back(4, 0, std::vector<int>{lat.top()});
  interp.push_back(joinWith(lat, 1));  // dia = join with the atom a
  return OrderedAlgebra(lat, sig, interp);
}

}  // namespace

TEST_CASE("latticeFromPoset on the diamond") {
  FiniteLattice lat = b2();
  CHECK(lat.meet(1, 2) == 0);
  CHECK(lat.join(1, 2) == 3);
  CHECK(lat.bottom() == 0);
  CHECK(lat.top() == 3);
}

TEST_CASE("latticeFromPoset rejects the 2-element antichain") {
  Poset anti(Preorder::saturate(2, {}));
  CHECK_THROWS_AS(FiniteLattice::fromPoset(anti), NotALatticeError);
}

TEST_CASE("latticeFromPoset tables agree with the brute-force glb/lub oracle") {
  for (const FiniteLattice& lat : {b2(), n5(), m3()}) {
    for (int i = 0; i < lat.size(); ++i)
      for (int j = 0; j < lat.size(); ++j) {
        CHECK(lat.meet(i, j) == oracle::naiveGlb(lat.poset(), i, j));
        CHECK(lat.join(i, j) == oracle::naiveLub(lat.poset(), i, j));
      }
  }
}

TEST_CASE("pentagon tables") {
  FiniteLattice lat = n5();
  // indices: 0, a=1, b=2, c=3, 1=4
  CHECK(lat.join(1, 2) == 4);
  CHECK(lat.meet(1, 2) == 0);
  CHECK(lat.join(2, 3) == 4);
  CHECK(lat.meet(2, 3) == 0);
  CHECK(lat.join(1, 3) == 3);
}

TEST_CASE("isDistributive") {
  CHECK(isDistributive(b2()).distributive);
  DistributivityReport n = isDistributive(n5());
  CHECK_FALSE(n.distributive);
  // First witness in enumeration order; verify it is a genuine violation.
  FiniteLattice lat = n5();
  auto [x, y, z] = std::tuple{n.witness[0], n.witness[1], n.witness[2]};
  CHECK(lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z)));
  CHECK_FALSE(isDistributive(m3()).distributive);
}

TEST_CASE("the spec witness triple (c,a,b) fails distributivity on the pentagon") {
  FiniteLattice lat = n5();
  const int a = 1, b = 2, c = 3;
  CHECK(lat.meet(c, lat.join(a, b)) == c);
  CHECK(lat.join(lat.meet(c, a), lat.meet(c, b)) == a);
}

TEST_CASE("filtersOf matches the exhaustive oracle") {
  for (const FiniteLattice& lat : {ch2(), b2(), n5(), m3()}) {
    std::vector<Subset> got = filtersOf(lat);
    std::vector<Subset> want = oracle::naiveFilters(lat);
    std::sort(want.begin(), want.end(),
              [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
    CHECK(got == want);
  }
}

TEST_CASE("filter counts: 4 on the diamond, 5 on the pentagon, 2 on the 2-chain") {
  CHECK(filtersOf(b2()).size() == 4);
  CHECK(filtersOf(n5()).size() == 5);
  CHECK(filtersOf(ch2()).size() == 2);
}

TEST_CASE("every filter is the up-set of the meet of its members") {
  for (const FiniteLattice& lat : {b2(), n5(), m3()}) {
    for (const Subset& f : filtersOf(lat))
      CHECK(f == lat.poset().up(lat.meetAll(f)));
    for (const Subset& i : idealsOf(lat))
      CHECK(i == lat.poset().down(lat.joinAll(i)));
  }
}

TEST_CASE("filtersOf respects the size guard") {
  Limits tiny;
  tiny.maxCarrier = 3;
  CHECK_THROWS_AS(filtersOf(b2(), tiny), SizeGuardError);
}

TEST_CASE("join is an operator on every corpus lattice") {
  for (const FiniteLattice& lat : {ch2(), b2(), n5(), m3()})
    CHECK(isOperator(lat, tableOf(lat, false)).isOperator);
}

TEST_CASE("meet is an operator exactly on the distributive lattices") {
  CHECK(isOperator(b2(), tableOf(b2(), true)).isOperator);
  CHECK(isOperator(ch2(), tableOf(ch2(), true)).isOperator);

  OperatorReport bad = isOperator(n5(), tableOf(n5(), true));
  CHECK_FALSE(bad.isOperator);
  // The spec witness: fixing c in one coordinate, c&(a|b)=c but (c&a)|(c&b)=a.
  FiniteLattice lat = n5();
  CHECK(lat.meet(3, lat.join(1, 2)) == 3);
  CHECK(lat.join(lat.meet(3, 1), lat.meet(3, 2)) == 1);

  CHECK_FALSE(isOperator(m3(), tableOf(m3(), true)).isOperator);
}

TEST_CASE("operators are monotone in each coordinate") {
  std::mt19937_64 rng(17);
  FiniteLattice lat = n5();
  const int n = lat.size();
  int found = 0;
  for (int trial = 0; trial < 2000 && found < 30; ++trial) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = static_cast<int>(rng() % n);
    OpTable t(n, 1, v);
    if (!isOperator(lat, t).isOperator) continue;
    ++found;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (lat.leq(x, y)) CHECK(lat.leq(t.apply({{x}}), t.apply({{y}})));
  }
  CHECK(found > 0);
}

TEST_CASE("evalTerm") {
  OrderedAlgebra alg = diamondAlgebra();
  Term x = Term::variable(0), y = Term::variable(1);

  Term joinXY = Term::apply("join", {x, y});
  CHECK(evalTerm(joinXY, alg, std::vector<int>{1, 2}) == 3);

  CHECK(evalTerm(x, alg, std::vector<int>{2}) == 2);

  Term diaJoin = Term::apply("dia", {joinXY});
  CHECK(evalTerm(diaJoin, alg, std::vector<int>{0, 2}) == 3);  // dia(0 v b) = 1

  CHECK_THROWS_AS(evalTerm(Term::apply("join", {x}), alg, std::vector<int>{0}),
                  PreconditionError);
}

TEST_CASE("satisfiesInequation") {
  OrderedAlgebra alg = diamondAlgebra();
  Term x = Term::variable(0), y = Term::variable(1), z = Term::variable(2);

  // x <= x v y holds everywhere.
  Inequation weakening{x, Term::apply("join", {x, y}), 2};
  CHECK(satisfiesInequation(alg, weakening).holds);

  // dia(x v y) <= dia x v dia y holds on the diamond.
  Inequation diaLaw{Term::apply("dia", {Term::apply("join", {x, y})}),
                    Term::apply("join", {Term::apply("dia", {x}), Term::apply("dia", {y})}),
                    2};
  CHECK(satisfiesInequation(alg, diaLaw).holds);

  // Distributivity fails on the pentagon with first witness (c,a,b).
  FiniteLattice lat = n5();
  Signature sig({{"join", 2}, {"meet", 2}});
  OrderedAlgebra pent(lat, sig, {tableOf(lat, false), tableOf(lat, true)});
  Inequation dist{Term::apply("meet", {x, Term::apply("join", {y, z})}),
                  Term::apply("join", {Term::apply("meet", {x, y}),
                                       Term::apply("meet", {x, z})}),
                  3};
  SatisfactionReport r = satisfiesInequation(pent, dist);
  CHECK_FALSE(r.holds);
  CHECK(r.witness == std::vector<int>{3, 1, 2});
}

TEST_CASE("satisfaction is antitone in the left term and monotone in the right") {
  OrderedAlgebra alg = diamondAlgebra();
  std::mt19937_64 rng(23);
  auto randomTerm = [&](auto&& self, int depth) -> Term {
    if (depth == 0 || rng() % 3 == 0) {
      switch (rng() % 4) {
        case 0: return Term::variable(0);
        case 1: return Term::variable(1);
        case 2: return Term::apply("0");
        default: return Term::apply("1");
      }
    }
    if (rng() % 3 == 0) return Term::apply("dia", {self(self, depth - 1)});
    return Term::apply(rng() % 2 ? "join" : "meet",
                       {self(self, depth - 1), self(self, depth - 1)});
  };
  auto dominates = [&](const Term& lo, const Term& hi) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        std::vector<int> asn{a, b};
        if (!alg.lattice().leq(evalTerm(lo, alg, asn), evalTerm(hi, alg, asn)))
          return false;
      }
    return true;
  };
  for (int trial = 0; trial < 60; ++trial) {
    Term s = randomTerm(randomTerm, 2), sLow = randomTerm(randomTerm, 2);
    Term t = randomTerm(randomTerm, 2), tHigh = randomTerm(randomTerm, 2);
    if (dominates(sLow, s) && satisfiesInequation(alg, {s, t, 2}).holds)
      CHECK(satisfiesInequation(alg, {sLow, t, 2}).holds);
    if (dominates(t, tHigh) && satisfiesInequation(alg, {s, t, 2}).holds)
      CHECK(satisfiesInequation(alg, {s, tHigh, 2}).holds);
  }
}

TEST_CASE("OrderedAlgebra rejects non-monotone interpretations") {
  FiniteLattice lat = ch2();
  // f(0)=1, f(1)=0 is antitone.
  CHECK_THROWS_AS(OrderedAlgebra(lat, Signature({{"f", 1}}),
                                 {OpTable(2, 1, {1, 0})}),
                  PreconditionError);
}

TEST_CASE("Signature rejects duplicates and bad arities") {
  CHECK_THROWS_AS(Signature({{"f", 1}, {"f", 2}}), PreconditionError);
  CHECK_THROWS_AS(Signature({{"f", -1}}), PreconditionError);
}

TEST_CASE("lattice laws hold on random lattice tables") {
  // Meet-closed subsets of the 16-element Boolean algebra are lattices.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    Subset s(16);
    s.set(15);
    for (int grow = 0; grow < 5; ++grow) {
      Subset cand = s;
      cand.set(static_cast<int>(rng() % 16));
      for (;;) {
        Subset next = cand;
        cand.forEach([&](int x) {
          cand.forEach([&](int y) { next.set(x & y); });
        });
        if (next == cand) break;
        cand = next;
      }
      if (cand.count() <= 7) s = cand;
    }
    std::vector<int> codes = s.members();
    const int n = static_cast<int>(codes.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((codes[i] & codes[j]) == codes[i]) pairs.emplace_back(i, j);
    // fromPoset runs the law audit internally; reaching here is the check.
    FiniteLattice lat = FiniteLattice::fromPoset(Poset(Preorder::saturate(n, pairs)));
    CHECK(lat.size() == n);
  }
}
