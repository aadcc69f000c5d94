#include "canext/corpus.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "canext/error.hpp"

namespace canext::corpus {

namespace {

FiniteLattice latticeFrom(int n, std::vector<std::string> labels,
                          std::vector<std::pair<int, int>> pairs) {
  return FiniteLattice::fromPoset(Poset(Preorder::saturate(n, pairs, std::move(labels))));
}

}  // namespace

std::vector<NamedLattice> corpusLattices() {
  std::vector<NamedLattice> out;
  out.push_back({"ch2", latticeFrom(2, {"0", "1"}, {{0, 1}})});
  out.push_back({"ch3", latticeFrom(3, {"0", "m", "1"}, {{0, 1}, {1, 2}})});
  out.push_back({"b2", latticeFrom(4, {"0", "a", "b", "1"},
                                   {{0, 1}, {0, 2}, {1, 3}, {2, 3}})});
  {
    // Boolean algebra on three atoms; order is bit-subset inclusion.
    std::vector<std::string> labels = {"0", "a", "b", "c", "ab", "ac", "bc", "1"};
    std::vector<int> codes = {0, 1, 2, 4, 3, 5, 6, 7};
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if ((codes[i] & codes[j]) == codes[i]) pairs.emplace_back(i, j);
    out.push_back({"b3", latticeFrom(8, labels, pairs)});
  }
  // Pentagon: 0 < a < c < 1 on one side, 0 < b < 1 on the other.
  out.push_back({"n5", latticeFrom(5, {"0", "a", "b", "c", "1"},
                                   {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}})});
  // Diamond with three atoms.
  out.push_back({"m3", latticeFrom(5, {"0", "a", "b", "c", "1"},
                                   {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})});
  return out;
}

std::vector<NamedPresentation> corpusPresentations() {
  std::vector<NamedPresentation> out;
  {
    Preorder base = Preorder::saturate(3, {}, {"a", "b", "t"});
    Subset u(3);
    u.set(0).set(1);
    out.push_back({"pres1", Presentation::extensional(
                                base, Presentation::Kind::Suplattice, {{2, u}})});
  }
  {
    Preorder base = Preorder::saturate(2, {}, {"x", "y"});
    Subset u(2);
    u.set(1);
    out.push_back({"pres2", Presentation::extensional(
                                base, Presentation::Kind::Dcpo, {{0, u}})});
  }
  return out;
}

OrderedAlgebra b2DiamondAlgebra() {
  FiniteLattice b2 = corpusLattices()[2].lattice;
  const int n = b2.size();
  std::vector<int> joinV(n * n), meetV(n * n), diaV(n);
  for (int i = 0; i < n; ++i) {
    diaV[i] = b2.join(i, 1);  // join with the atom a
    for (int j = 0; j < n; ++j) {
      joinV[i * n + j] = b2.join(i, j);
      meetV[i * n + j] = b2.meet(i, j);
    }
  }
  Signature sig({{"join", 2}, {"meet", 2}, {"0", 0}, {"1", 0}, {"dia", 1}});
  std::vector<OpTable> interp;
  interp.emplace_back(n, 2, joinV);
  interp.emplace_back(n, 2, meetV);
  interp.emplace_back(n, 0, std::vector<int>{b2.bottom()});
  interp.emplace_back(n, 0, std::vector<int>{b2.top()});
  interp.emplace_back(n, 1, diaV);
  return OrderedAlgebra(b2, sig, interp);
}

Document corpusDocument() {
  Document doc;
  doc.kind = Document::Kind::Corpus;
  for (const NamedLattice& nl : corpusLattices()) {
    Document d;
    d.kind = Document::Kind::Lattice;
    d.name = nl.name;
    d.lattice = nl.lattice;
    doc.entries.push_back(std::move(d));
  }
  for (const NamedPresentation& np : corpusPresentations()) {
    Document d;
    d.kind = Document::Kind::Presentation;
    d.name = np.name;
    d.presentation = np.presentation;
    doc.entries.push_back(std::move(d));
  }
  {
    Document d;
    d.kind = Document::Kind::Algebra;
    d.name = "b2_diamond";
    d.algebra = b2DiamondAlgebra();
    d.lattice = d.algebra->lattice();
    doc.entries.push_back(std::move(d));
  }
  {
    Document d;
    d.kind = Document::Kind::Inequation;
    d.name = "dia_join";
    d.varNames = {"x", "y"};
    Term x = Term::variable(0), y = Term::variable(1);
    Term lhs = Term::apply("dia", {Term::apply("join", {x, y})});
    Term rhs = Term::apply("join", {Term::apply("dia", {x}), Term::apply("dia", {y})});
    d.inequation = Inequation{lhs, rhs, 2};
    doc.entries.push_back(std::move(d));
  }
  return doc;
}

namespace {

Subset meetCloseB4(Subset s) {
  for (;;) {
    Subset next = s;
    s.forEach([&](int x) {
      s.forEach([&](int y) { next.set(x & y); });
    });
    if (next == s) return s;
    s = next;
  }
}

FiniteLattice latticeFromCodes(const std::vector<int>& codes) {
  const int n = static_cast<int>(codes.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "b";
    for (int b = 3; b >= 0; --b) l += ((codes[i] >> b) & 1) ? '1' : '0';
    labels[i] = l;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((codes[i] & codes[j]) == codes[i]) pairs.emplace_back(i, j);
  return latticeFrom(n, labels, pairs);
}

}  // namespace

FiniteLattice randomLattice(std::uint64_t seed, int maxSize) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xC0FFEE);
  const int target = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxSize - 1));
  for (int attempt = 0; attempt < 200; ++attempt) {
    Subset s(16);
    s.set(15);
    for (int grow = 0; grow < target * 4 && s.count() < target; ++grow) {
      Subset cand = s;
      cand.set(static_cast<int>(rng() % 16));
      cand = meetCloseB4(cand);
      if (cand.count() <= target) s = cand;
    }
    if (s.count() >= 2) {
      std::vector<int> codes = s.members();
      return latticeFromCodes(codes);
    }
  }
  // Deterministic fallback: a chain.
  std::vector<std::string> labels(target);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < target; ++i) {
    labels[i] = "c" + std::to_string(i);
    if (i + 1 < target) pairs.emplace_back(i, i + 1);
  }
  return latticeFrom(target, labels, pairs);
}

Presentation randomPresentation(std::uint64_t seed, int maxSize) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xBEEF);
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxSize - 1));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  std::vector<std::pair<int, int>> pairs;
  const int pairCount = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
  for (int i = 0; i < pairCount; ++i)
    pairs.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
  Preorder base = Preorder::saturate(n, pairs, labels);

  std::vector<Cover> covers;
  const int coverCount = 1 + static_cast<int>(rng() % 2);
  for (int c = 0; c < coverCount; ++c) {
    int m = static_cast<int>(rng() % n);
    // Right sides containing their maximum are directed by construction.
    Subset u(base.size(), rng() & base.down(m).bits());
    u.set(m);
    covers.push_back({static_cast<int>(rng() % n), u});
  }
  return Presentation::extensional(base, Presentation::Kind::Dcpo, covers);
}

std::vector<OpTable> allUnaryOperators(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<OpTable> out;
  std::uint64_t total = 1;
  bool enumerable = true;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > (std::uint64_t(1) << 20)) enumerable = false;
  }
  if (enumerable) {
    std::vector<int> values(n, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
      std::uint64_t r = it;
      for (int i = n - 1; i >= 0; --i) {
        values[i] = static_cast<int>(r % n);
        r /= n;
      }
      OpTable t(n, 1, values);
      if (isOperator(lat, t).isOperator) out.push_back(t);
    }
    return out;
  }
  // Larger carriers: modular candidates x -> (x meet c) join d, plus
  // join-with-constant maps; keep the ones that pass the operator check.
  std::set<std::vector<int>> seen;
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      std::vector<int> values(n);
      for (int x = 0; x < n; ++x) values[x] = lat.join(lat.meet(x, c), d);
      if (!seen.insert(values).second) continue;
      OpTable t(n, 1, values);
      if (isOperator(lat, t).isOperator) out.push_back(t);
    }
  return out;
}

std::vector<Term> enumerateTerms(const Signature& sig, int maxVars, int maxDepth, int cap) {
  std::vector<Term> terms;
  std::set<std::string> seen;
  auto add = [&](const Term& t) {
    if (static_cast<int>(terms.size()) >= cap) return;
    if (seen.insert(t.text()).second) terms.push_back(t);
  };
  for (int v = 0; v < maxVars; ++v) add(Term::variable(v));
  for (const auto& sym : sig.symbols())
    if (sym.arity == 0) add(Term::apply(sym.name));
  for (int round = 0; round < maxDepth; ++round) {
    const std::vector<Term> snapshot = terms;
    for (const auto& sym : sig.symbols()) {
      if (sym.arity == 0) continue;
      std::vector<int> idx(sym.arity, 0);
      const std::size_t count = snapshot.size();
      std::uint64_t combos = 1;
      for (int i = 0; i < sym.arity; ++i) combos *= count;
      for (std::uint64_t it = 0; it < combos; ++it) {
        std::uint64_t r = it;
        std::vector<Term> args;
        for (int i = sym.arity - 1; i >= 0; --i) {
          idx[i] = static_cast<int>(r % count);
          r /= count;
        }
        for (int i = 0; i < sym.arity; ++i) args.push_back(snapshot[idx[i]]);
        Term t = Term::apply(sym.name, std::move(args));
        if (t.depth() <= maxDepth) add(t);
      }
    }
  }
  return terms;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t substream(std::uint64_t seed, std::uint64_t lane, std::uint64_t index) {
  return seed ^ (lane * 0x100000001B3ULL + index * 0x9E3779B9ULL + 0x12345);
}

OpTable joinTableOf(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> v(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i * n + j] = lat.join(i, j);
  return OpTable(n, 2, std::move(v));
}

OpTable meetTableOf(const FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<int> v(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[i * n + j] = lat.meet(i, j);
  return OpTable(n, 2, std::move(v));
}

OpTable joinWithConstant(const FiniteLattice& lat, int c) {
  const int n = lat.size();
  std::vector<int> v(n);
  for (int x = 0; x < n; ++x) v[x] = lat.join(x, c);
  return OpTable(n, 1, std::move(v));
}

// Operator corpus algebras for the canonicity sweep; every symbol is an
// operator by construction.
std::vector<std::pair<std::string, OrderedAlgebra>> canonicityAlgebras(
    const std::string& name, const FiniteLattice& lat, std::uint64_t seed) {
  const int n = lat.size();
  std::vector<std::pair<std::string, OrderedAlgebra>> out;

  std::vector<Signature::Symbol> baseSyms = {{"join", 2}, {"0", 0}, {"1", 0}};
  std::vector<OpTable> baseTabs;
  baseTabs.push_back(joinTableOf(lat));
  baseTabs.emplace_back(n, 0, std::vector<int>{lat.bottom()});
  baseTabs.emplace_back(n, 0, std::vector<int>{lat.top()});
  if (isDistributive(lat).distributive) {
    baseSyms.push_back({"meet", 2});
    baseTabs.push_back(meetTableOf(lat));
  }
  out.emplace_back(name + "/base", OrderedAlgebra(lat, Signature(baseSyms), baseTabs));

  for (int c = 0; c < n; ++c) {
    if (c == lat.bottom()) continue;
    Signature sig({{"join", 2}, {"0", 0}, {"1", 0}, {"dia", 1}});
    std::vector<OpTable> tabs;
    tabs.push_back(joinTableOf(lat));
    tabs.emplace_back(n, 0, std::vector<int>{lat.bottom()});
    tabs.emplace_back(n, 0, std::vector<int>{lat.top()});
    tabs.push_back(joinWithConstant(lat, c));
    out.emplace_back(name + "/dia_" + lat.label(c),
                     OrderedAlgebra(lat, sig, std::move(tabs)));
  }

  std::vector<OpTable> pool = allUnaryOperators(lat);
  std::mt19937_64 rng(substream(seed, 6, std::hash<std::string>{}(name)));
  for (int k = 0; k < 2 && !pool.empty(); ++k) {
    const OpTable& f = pool[rng() % pool.size()];
    Signature sig({{"join", 2}, {"0", 0}, {"1", 0}, {"f", 1}});
    std::vector<OpTable> tabs;
    tabs.push_back(joinTableOf(lat));
    tabs.emplace_back(n, 0, std::vector<int>{lat.bottom()});
    tabs.emplace_back(n, 0, std::vector<int>{lat.top()});
    tabs.push_back(f);
    out.emplace_back(name + "/rand" + std::to_string(k),
                     OrderedAlgebra(lat, sig, std::move(tabs)));
  }
  return out;
}

std::string describeAssignment(const Preorder& order, const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += order.label(w[i]);
  }
  return out + ")";
}

}  // namespace

Report runAcceptance(std::uint64_t seed, const Limits& limits) {
  Report report("acceptance");
  const std::vector<NamedLattice> lattices = corpusLattices();
  const std::vector<NamedPresentation> presentations = corpusPresentations();

  struct Criterion {
    int id;
    std::string name;
    double boundSeconds;
    std::function<std::pair<bool, std::string>()> run;
  };
  std::vector<Criterion> criteria;

  // 1. Free-completion universal property.
  criteria.push_back({1, "free-completion universal property", 60.0, [&]() {
    std::vector<std::pair<std::string, Presentation>> pool;
    for (const auto& np : presentations) pool.emplace_back(np.name, np.presentation);
    for (int i = 0; i < 20; ++i)
      pool.emplace_back("rand" + std::to_string(i),
                        randomPresentation(substream(seed, 1, i), 4));
    int runs = 0;
    for (const auto& [pname, pres] : pool)
      for (const NamedLattice& nl : lattices) {
        if (nl.lattice.size() > 5) continue;
        Report r = universalPropertyOracle(pres, nl.lattice, limits);
        ++runs;
        if (!r.ok())
          return std::make_pair(false, pname + " vs " + nl.name + ": " + r.text());
      }
    return std::make_pair(true, std::to_string(runs) +
                                    " oracle runs, all extensions exist uniquely");
  }});

  // 2. C-ideal enumeration oracle.
  criteria.push_back({2, "C-ideal enumeration matches exhaustive filtering", 30.0, [&]() {
    std::vector<std::pair<std::string, Presentation>> pool;
    for (const auto& np : presentations) pool.emplace_back(np.name, np.presentation);
    for (int i = 0; i < 20; ++i)
      pool.emplace_back("rand" + std::to_string(i),
                        randomPresentation(substream(seed, 1, i), 4));
    for (const NamedLattice& nl : lattices) {
      DeltaPresentation dp = deltaPresentation(nl.lattice, limits);
      pool.emplace_back("delta(" + nl.name + ")", dp.plain);
      pool.emplace_back("delta-sup(" + nl.name + ")", dp.suplattice);
    }
    int checked = 0;
    for (const auto& [pname, pres] : pool) {
      const int n = pres.base().size();
      if (n > 10) continue;
      CIdealFamily fam = allCIdeals(pres, limits);
      std::vector<Subset> exhaustive;
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
        Subset s(n, bits);
        if (isCIdeal(pres, s)) exhaustive.push_back(s);
      }
      if (exhaustive != fam.ideals)
        return std::make_pair(false, pname + ": generation differs from filtering");
      ++checked;
    }
    return std::make_pair(true, std::to_string(checked) + " presentations, bit-exact");
  }});

  // 3. Co-completion axioms, F(A) = A, and products.
  criteria.push_back({3, "co-completion axioms and product identification", 60.0, [&]() {
    std::vector<std::pair<std::string, FiniteLattice>> pool;
    for (const NamedLattice& nl : lattices) pool.emplace_back(nl.name, nl.lattice);
    for (int i = 0; i < 50; ++i)
      pool.emplace_back("rand" + std::to_string(i),
                        randomLattice(substream(seed, 3, i), 7));
    std::map<std::string, FilterCompletion> completions;
    for (const auto& [name, lat] : pool) {
      FilterCompletion fc = filterCompletion(lat, limits);
      Report ax = checkCoCompletionAxioms(fc, limits);
      if (!ax.ok()) return std::make_pair(false, name + ": " + ax.text());
      if (static_cast<int>(fc.filters.size()) != lat.size() ||
          !findOrderIsomorphism(lat.poset(), fc.carrier.poset()))
        return std::make_pair(false, name + ": F(A) is not isomorphic to A");
      completions.emplace(name, std::move(fc));
    }
    int products = 0;
    for (std::size_t i = 0; i < lattices.size(); ++i)
      for (std::size_t j = i; j < lattices.size(); ++j) {
        if (lattices[i].lattice.size() * lattices[j].lattice.size() > 36) continue;
        const FilterCompletion& fp = completions.at(lattices[i].name);
        const FilterCompletion& fq = completions.at(lattices[j].name);
        try {
          productIdentification({&fp, &fq}, limits);
        } catch (const Error& e) {
          return std::make_pair(false, lattices[i].name + " x " + lattices[j].name +
                                           ": " + e.what());
        }
        ++products;
      }
    return std::make_pair(true, std::to_string(pool.size()) + " lattices, " +
                                    std::to_string(products) + " product pairs");
  }});

  // 4. Canonical extension correctness.
  criteria.push_back({4, "canonical extension density/compactness and collapse", 120.0, [&]() {
    std::vector<std::pair<std::string, FiniteLattice>> pool;
    for (const NamedLattice& nl : lattices) pool.emplace_back(nl.name, nl.lattice);
    for (int i = 0; i < 20; ++i)
      pool.emplace_back("rand" + std::to_string(i),
                        randomLattice(substream(seed, 4, i), 6));
    for (const auto& [name, lat] : pool) {
      CanonicalExtension ce = canonicalExtension(lat, limits);
      Report dc = verifyDensityCompactness(ce, limits);
      if (!dc.ok()) return std::make_pair(false, name + ": " + dc.text());
      // Finite collapse: e is an order-isomorphism.
      if (ce.carrier.size() != lat.size())
        return std::make_pair(false, name + ": carrier size differs from the base");
      std::vector<bool> hit(ce.carrier.size(), false);
      for (int x : ce.embed) hit[x] = true;
      for (bool h : hit)
        if (!h) return std::make_pair(false, name + ": e is not onto");
      // Principal C-ideals are principal down-sets, under both readings.
      const int m = ce.fc.carrier.size();
      for (int x = 0; x < m; ++x) {
        Subset down = ce.fc.carrier.poset().down(x);
        if (cIdealClosure(ce.delta.plain, Subset::single(m, x)) != down ||
            cIdealClosure(ce.delta.suplattice, Subset::single(m, x)) != down)
          return std::make_pair(false, name + ": <x> differs from the down-set of x");
      }
      // Directed unions of embedded principals stay in the carrier family.
      const int n = lat.size();
      for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
        Subset t(n, bits);
        if (!isDirected(lat.poset(), t)) continue;
        Subset unionSet(m);
        Subset mapped(ce.carrier.size());
        t.forEach([&](int b) {
          unionSet |= ce.family.ideals[ce.embed[b]];
          mapped.set(ce.embed[b]);
        });
        if (ce.family.ideals[ce.carrier.joinAll(mapped)] != unionSet)
          return std::make_pair(false, name + ": directed union identity failed");
      }
    }
    return std::make_pair(true, std::to_string(pool.size()) + " lattices verified");
  }});

  // 5. Dual-path sigma oracle.
  criteria.push_back({5, "sigma extension: lift route equals direct route", 120.0, [&]() {
    std::vector<std::pair<std::string, FiniteLattice>> pool;
    for (const NamedLattice& nl : lattices)
      if (nl.lattice.size() <= 5) pool.emplace_back(nl.name, nl.lattice);
    for (int i = 0; i < 5; ++i)
      pool.emplace_back("rand" + std::to_string(i),
                        randomLattice(substream(seed, 5, i), 5));
    int ops = 0;
    for (const auto& [name, lat] : pool) {
      const int n = lat.size();
      CanonicalExtension ce = canonicalExtension(lat, limits);
      std::vector<std::pair<std::string, TupleMap>> candidates;
      for (int c = 0; c < n; ++c) {
        TupleMap t;
        t.dims = {n};
        t.targetSize = n;
        t.values = joinWithConstant(lat, c).values();
        candidates.emplace_back("join-with-" + lat.label(c), t);
      }
      candidates.emplace_back("join", TupleMap::fromTable(joinTableOf(lat)));
      std::vector<OpTable> unaryPool = allUnaryOperators(lat);
      std::mt19937_64 rng(substream(seed, 5, 100 + std::hash<std::string>{}(name)));
      for (int t = 0; t < 20 && !unaryPool.empty(); ++t) {
        if (t % 2 == 0) {
          candidates.emplace_back(
              "rand-unary" + std::to_string(t),
              TupleMap::fromTable(unaryPool[rng() % unaryPool.size()]));
        } else {
          const OpTable& g = unaryPool[rng() % unaryPool.size()];
          const OpTable& h = unaryPool[rng() % unaryPool.size()];
          TupleMap bin;
          bin.dims = {n, n};
          bin.targetSize = n;
          bin.values.resize(static_cast<std::size_t>(n) * n);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
              bin.values[static_cast<std::size_t>(x) * n + y] =
                  lat.join(g.apply({{x}}), h.apply({{y}}));
          candidates.emplace_back("rand-binary" + std::to_string(t), bin);
        }
      }
      for (const auto& [opName, f] : candidates) {
        std::vector<const CanonicalExtension*> srcs(f.dims.size(), &ce);
        try {
          sigmaExtensionViaLift(srcs, ce, f, limits);
        } catch (const Error& e) {
          return std::make_pair(false, name + "/" + opName + ": " + e.what());
        }
        ++ops;
      }
    }
    return std::make_pair(true, std::to_string(ops) + " operators, zero discrepancies");
  }});

  // 6. Canonicity of true inequations.
  criteria.push_back({6, "canonicity theorem sweep", 300.0, [&]() {
    std::uint64_t pairsTested = 0;
    for (const NamedLattice& nl : lattices) {
      const FiniteLattice& lat = nl.lattice;
      FilterCompletion fc = filterCompletion(lat, limits);
      CanonicalExtension ce = canonicalExtension(lat, fc, limits);
      std::map<int, ProductFilterIdentification> identByArity;
      auto identFor = [&](int arity) -> const ProductFilterIdentification* {
        if (arity == 0) return nullptr;
        auto it = identByArity.find(arity);
        if (it == identByArity.end()) {
          std::vector<const FilterCompletion*> comps(arity, &fc);
          it = identByArity.emplace(arity, productIdentification(comps, limits)).first;
        }
        return &it->second;
      };

      for (auto& [algName, alg] : canonicityAlgebras(nl.name, lat, seed)) {
        // Lift every symbol once: to F(A), then to the carrier.
        std::vector<OpTable> fTables, sigmaTables;
        for (int s = 0; s < alg.sig().size(); ++s) {
          const int arity = alg.sig().symbols()[s].arity;
          OpTable lifted = extendOperationToF(alg, s, fc, limits, identFor(arity));
          fTables.push_back(lifted);
          TupleMap fF = TupleMap::fromTable(lifted);
          std::vector<const CanonicalExtension*> srcs(arity, &ce);
          TupleMap sigma = sigmaFromFilterExtension(srcs, ce, fF, limits);
          sigmaTables.emplace_back(ce.carrier.size(), arity, sigma.values);
        }
        OrderedAlgebra liftedF(fc.carrier, alg.sig(), fTables);
        OrderedAlgebra sigmaAlg(ce.carrier, alg.sig(), sigmaTables);

        // Transport cross-check along the finite isomorphism.
        for (int s = 0; s < alg.sig().size(); ++s) {
          const int arity = alg.sig().symbols()[s].arity;
          std::vector<int> args(arity, 0);
          std::function<bool(int)> walk = [&](int pos) -> bool {
            if (pos == arity) {
              std::vector<int> mapped(arity);
              for (int i = 0; i < arity; ++i) mapped[i] = ce.embed[args[i]];
              return sigmaTables[s].apply(mapped) == ce.embed[alg.interp(s).apply(args)];
            }
            for (int v = 0; v < lat.size(); ++v) {
              args[pos] = v;
              if (!walk(pos + 1)) return false;
            }
            return true;
          };
          if (!walk(0))
            return std::make_pair(false, algName + ": sigma table does not transport along e");
        }

        std::vector<Term> terms = enumerateTerms(alg.sig(), 2, 3, 34);
        int truePairs = 0;
        for (std::size_t i = 0; i < terms.size() && truePairs < 600; ++i)
          for (std::size_t j = 0; j < terms.size() && truePairs < 600; ++j) {
            Inequation ineq{terms[i], terms[j], 2};
            if (!satisfiesInequation(alg, ineq, limits).holds) continue;
            ++truePairs;
            ++pairsTested;
            SatisfactionReport f = satisfiesInequation(liftedF, ineq, limits);
            if (!f.holds)
              return std::make_pair(false, algName + ": " + ineq.text() +
                                               " fails in F(A) at " +
                                               describeAssignment(fc.carrier.poset(), f.witness));
            SatisfactionReport c = satisfiesInequation(sigmaAlg, ineq, limits);
            if (!c.holds)
              return std::make_pair(false, algName + ": " + ineq.text() +
                                               " fails in the canonical extension at " +
                                               describeAssignment(ce.carrier.poset(), c.witness));
          }
      }
    }
    if (pairsTested < 10000)
      return std::make_pair(false, "only " + std::to_string(pairsTested) +
                                       " (algebra, inequation) pairs; need 10000");
    return std::make_pair(true, std::to_string(pairsTested) +
                                    " true inequations transfer, zero counterexamples");
  }});

  // 7. Operator/distributivity equivalence.
  criteria.push_back({7, "meet is an operator exactly on distributive lattices", 5.0, [&]() {
    for (const NamedLattice& nl : lattices) {
      DistributivityReport d = isDistributive(nl.lattice);
      OperatorReport op = isOperator(nl.lattice, meetTableOf(nl.lattice));
      if (d.distributive != op.isOperator)
        return std::make_pair(false, nl.name + ": distributivity and operator status disagree");
      if (!op.isOperator && op.tuple.empty())
        return std::make_pair(false, nl.name + ": missing witness");
    }
    return std::make_pair(true,
                          std::string("agreement on all corpus lattices, witnesses on N5/M3"));
  }});

  // 8. Generic inequation lifting.
  criteria.push_back({8, "cover-stable inequation lifting", 60.0, [&]() {
    int done = 0;
    for (int t = 0; t < 50; ++t) {
      Presentation pres = randomPresentation(substream(seed, 8, t), 4);
      const int n = pres.base().size();
      std::mt19937_64 rng(substream(seed, 8, 1000 + t));

      // A cover-stable unary operation; identity always qualifies.
      std::vector<int> op(n);
      for (int i = 0; i < n; ++i) op[i] = i;
      for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<int> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = static_cast<int>(rng() % n);
        bool monotone = true;
        for (int x = 0; x < n && monotone; ++x)
          for (int y = 0; y < n && monotone; ++y)
            if (pres.base().leq(x, y) && !pres.base().leq(cand[x], cand[y]))
              monotone = false;
        if (!monotone) continue;
        TupleMap m;
        m.dims = {n};
        m.targetSize = n;
        m.values = cand;
        if (isCoverStable({&pres}, pres, m, limits).stable) {
          op = cand;
          break;
        }
      }
      OrderedAlgebra alg(pres.base(), Signature({{"f", 1}}),
                         {OpTable(n, 1, op)});

      // A random inequation true in the base; x0 <= x0 as a fallback.
      auto randomTerm = [&](auto&& self, int depth) -> Term {
        if (depth == 0 || rng() % 2 == 0)
          return Term::variable(static_cast<int>(rng() % 2));
        return Term::apply("f", {self(self, depth - 1)});
      };
      Inequation ineq{Term::variable(0), Term::variable(0), 2};
      for (int attempt = 0; attempt < 200; ++attempt) {
        Inequation cand{randomTerm(randomTerm, 2), randomTerm(randomTerm, 2), 2};
        if (satisfiesInequation(alg, cand, limits).holds) {
          ineq = cand;
          break;
        }
      }

      Report r = checkInequationLifting(pres, alg, ineq, limits);
      if (!r.ok())
        return std::make_pair(false, "triple " + std::to_string(t) + ": " + r.text());
      ++done;
    }
    return std::make_pair(true, std::to_string(done) + " random triples, zero violations");
  }});

  // 9. I/O round-trip and DOT emission.
  criteria.push_back({9, "document round-trip and DOT emission", 5.0, [&]() {
    Document corpus = corpusDocument();
    std::string text = serializeDocument(corpus);
    Document re = parseDocument(text);
    if (!documentsEqual(corpus, re))
      return std::make_pair(false, std::string("round-trip changed the corpus document"));
    if (serializeDocument(re) != text)
      return std::make_pair(false, std::string("serialization is not stable"));
    const std::map<std::string, int> expected = {{"ch2", 1}, {"b2", 4}, {"n5", 5}};
    for (const NamedLattice& nl : lattices) {
      auto it = expected.find(nl.name);
      if (it == expected.end()) continue;
      std::string dot = emitDot(nl.lattice.poset());
      std::string err;
      if (!validateDot(dot, &err))
        return std::make_pair(false, nl.name + ": invalid DOT: " + err);
      int edges = 0;
      for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2))
        ++edges;
      if (edges != it->second ||
          edges != static_cast<int>(hasseEdges(nl.lattice.poset()).size()))
        return std::make_pair(false, nl.name + ": edge count mismatch");
    }
    return std::make_pair(true, std::string("round-trip identity, edge counts 1/4/5"));
  }});

  for (const Criterion& c : criteria) {
    auto start = Clock::now();
    bool passed = false;
    std::string detail;
    try {
      auto [ok, msg] = c.run();
      passed = ok;
      detail = msg;
    } catch (const Error& e) {
      passed = false;
      detail = std::string("error: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool within = seconds < c.boundSeconds;
    report.add(std::to_string(c.id) + ". " + c.name, passed && within,
               detail + (within ? "" : " [exceeded " + std::to_string(c.boundSeconds) + "s]"),
               seconds * 1000.0);
  }
  return report;
}

}  // namespace canext::corpus
