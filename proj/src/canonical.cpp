#include "canext/canonical.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <random>

#include "canext/error.hpp"

namespace canext {

namespace {

struct DeltaContext {
  FiniteLattice base;
  std::vector<Subset> filters;
  std::vector<Subset> principalIdeals;  // down(a) for each a
  std::vector<Subset> allIdeals;
};

// The C_A condition: for every ideal I, if each member of U meets I, then x
// meets I. Principal filters make "x' <= up(a')" the same as "a' in x'".
bool deltaCondition(const DeltaContext& ctx, int x, const Subset& u,
                    IdealQuantification quant) {
  const auto& ideals =
      quant == IdealQuantification::Principal ? ctx.principalIdeals : ctx.allIdeals;
  for (const Subset& ideal : ideals) {
    bool premise = true;
    u.forEach([&](int xp) {
      if (!ctx.filters[xp].intersects(ideal)) premise = false;
    });
    if (premise && !ctx.filters[x].intersects(ideal)) return false;
  }
  return true;
}

}  // namespace

DeltaPresentation deltaPresentation(const FiniteLattice& a, const Limits& limits,
                                    IdealQuantification quant) {
  return deltaPresentation(a, filterCompletion(a, limits), limits, quant);
}

DeltaPresentation deltaPresentation(const FiniteLattice& a, const FilterCompletion& fc,
                                    const Limits& limits, IdealQuantification quant) {
  DeltaPresentation dp;
  dp.base = a;
  dp.fc = fc;

  auto ctx = std::make_shared<DeltaContext>();
  ctx->base = a;
  ctx->filters = fc.filters;
  ctx->principalIdeals.reserve(a.size());
  for (int e = 0; e < a.size(); ++e) ctx->principalIdeals.push_back(a.poset().down(e));
  ctx->allIdeals = idealsOf(a, limits);
  // Principal quantification is exact only because every ideal of a finite
  // lattice is principal; assert that instead of assuming it.
  for (const Subset& ideal : ctx->allIdeals)
    if (ideal != a.poset().down(a.joinAll(ideal)))
      throw InternalCheckError("deltaPresentation: non-principal ideal on a finite lattice");

  const Poset& carrier = fc.carrier.poset();
  Presentation::CoverOracle oracle = [ctx, quant](int x, const Subset& u) {
    return deltaCondition(*ctx, x, u, quant);
  };
  dp.plain = Presentation::intensional(carrier, Presentation::Kind::Dcpo,
                                       std::move(oracle), /*monotoneInU=*/true);
  dp.suplattice = dp.plain.withJoinStructure(fc.carrier);

  // The monotonicity-in-U declaration above is a derived fact (larger U
  // weakens the premise); audit it on random directed pairs U ⊆ U'.
  {
    std::mt19937_64 rng(0xD171A);
    const int m = carrier.size();
    int audited = 0;
    for (int trial = 0; trial < 400 && audited < 120; ++trial) {
      Subset u(m, rng() & (m == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1)));
      Subset v = u | Subset(m, rng() & (m == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1)));
      if (!isDirected(carrier, u) || !isDirected(carrier, v)) continue;
      int x = static_cast<int>(rng() % m);
      ++audited;
      if (deltaCondition(*ctx, x, u, quant) && !deltaCondition(*ctx, x, v, quant))
        throw InternalCheckError("deltaPresentation: cover oracle is not monotone in U");
    }
  }
  return dp;
}

bool coverHoldsDelta(const DeltaPresentation& dp, int x, const Subset& u,
                     IdealQuantification quant) {
  if (u.empty() || !isDirected(dp.fc.carrier.poset(), u))
    throw PreconditionError("coverHoldsDelta: U must be nonempty and directed");
  DeltaContext ctx{dp.base, dp.fc.filters, {}, {}};
  for (int e = 0; e < dp.base.size(); ++e)
    ctx.principalIdeals.push_back(dp.base.poset().down(e));
  if (quant == IdealQuantification::All) ctx.allIdeals = idealsOf(dp.base);
  return deltaCondition(ctx, x, u, quant);
}

CanonicalExtension canonicalExtension(const FiniteLattice& a, const Limits& limits) {
  return canonicalExtension(a, filterCompletion(a, limits), limits);
}

CanonicalExtension canonicalExtension(const FiniteLattice& a, const FilterCompletion& fc,
                                      const Limits& limits) {
  CanonicalExtension ce;
  ce.base = a;
  ce.fc = fc;
  ce.delta = deltaPresentation(a, fc, limits);
  ce.family = allCIdeals(ce.delta.suplattice, limits);
  ce.carrier = ce.family.carrier;

  const int m = fc.carrier.size();
  auto principal = [&](int x) {
    return cIdealClosure(ce.delta.suplattice, Subset::single(m, x));
  };

  ce.etaF.resize(m);
  for (int x = 0; x < m; ++x) {
    Subset px = principal(x);
    // <x> = down(x) in F(A), under both readings of the presentation.
    if (px != fc.carrier.poset().down(x) ||
        cIdealClosure(ce.delta.plain, Subset::single(m, x)) != px)
      throw InternalCheckError("canonicalExtension: principal C-ideal differs from down-set");
    ce.etaF[x] = ce.family.indexOf(px);
    if (ce.etaF[x] < 0)
      throw InternalCheckError("canonicalExtension: principal C-ideal missing from carrier");
  }
  ce.embed.resize(a.size());
  for (int e = 0; e < a.size(); ++e) ce.embed[e] = ce.etaF[fc.embed[e]];

  // The free dcpo of the plain presentation must give the same carrier as
  // the C-ideal family of the suplattice reading (after join generation,
  // which the finite collapse makes literal equality).
  {
    FreeDcpo fd = freeDcpo(ce.delta.plain, limits);
    if (fd.family != ce.family.ideals)
      throw InternalCheckError("canonicalExtension: free dcpo disagrees with the C-ideal carrier");
  }

  // etaF is a join- and complete-meet-homomorphism.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (ce.etaF[fc.carrier.join(x, y)] != ce.carrier.join(ce.etaF[x], ce.etaF[y]))
        throw InternalCheckError("canonicalExtension: etaF does not preserve joins");
  if ((std::uint64_t(1) << m) > limits.maxSteps)
    throw SizeGuardError("canonicalExtension: meet-homomorphism check too large");
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m); ++bits) {
    Subset s(m, bits);
    Subset mapped(ce.carrier.size());
    s.forEach([&](int x) { mapped.set(ce.etaF[x]); });
    if (ce.etaF[fc.carrier.meetAll(s)] != ce.carrier.meetAll(mapped))
      throw InternalCheckError("canonicalExtension: etaF does not preserve meets");
  }

  // Directed unions of embedded principals are already C-ideals.
  const int n = a.size();
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
    Subset t(n, bits);
    if (!isDirected(a.poset(), t)) continue;
    Subset unionSet(m);
    Subset mapped(ce.carrier.size());
    t.forEach([&](int b) {
      unionSet |= ce.family.ideals[ce.embed[b]];
      mapped.set(ce.embed[b]);
    });
    if (ce.family.ideals[ce.carrier.joinAll(mapped)] != unionSet)
      throw InternalCheckError("canonicalExtension: directed union identity failed");
  }

  // Every carrier element is a lattice ideal of F(A).
  for (const Subset& u : ce.family.ideals) {
    if (u.empty())
      throw InternalCheckError("canonicalExtension: empty carrier element");
    if (downSet(fc.carrier.poset(), u) != u)
      throw InternalCheckError("canonicalExtension: carrier element not down-closed");
    bool joinClosed = true;
    u.forEach([&](int x) {
      u.forEach([&](int y) {
        if (!u.test(fc.carrier.join(x, y))) joinClosed = false;
      });
    });
    if (!joinClosed)
      throw InternalCheckError("canonicalExtension: carrier element not join-closed");
  }

  // e is a lattice embedding.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.leq(x, y) != ce.carrier.leq(ce.embed[x], ce.embed[y]))
        throw InternalCheckError("canonicalExtension: e is not an order-embedding");
      if (ce.embed[a.meet(x, y)] != ce.carrier.meet(ce.embed[x], ce.embed[y]) ||
          ce.embed[a.join(x, y)] != ce.carrier.join(ce.embed[x], ce.embed[y]))
        throw InternalCheckError("canonicalExtension: e is not a lattice embedding");
    }

  closedElements(ce, limits);  // asserts the closed-element identity
  return ce;
}

Report verifyDensityCompactness(const CanonicalExtension& ce, const Limits& limits) {
  Report report("density and compactness");
  std::vector<Subset> filters = filtersOf(ce.base, limits);
  std::vector<Subset> ideals = idealsOf(ce.base, limits);
  const int m = ce.carrier.size();

  auto meetOfFilter = [&](const Subset& f) {
    Subset img(m);
    f.forEach([&](int a) { img.set(ce.embed[a]); });
    return ce.carrier.meetAll(img);
  };
  auto joinOfIdeal = [&](const Subset& i) {
    Subset img(m);
    i.forEach([&](int a) { img.set(ce.embed[a]); });
    return ce.carrier.joinAll(img);
  };

  {
    bool ok = true;
    std::string witness;
    int pairs = 0;
    for (int u = 0; u < m && ok; ++u)
      for (int v = 0; v < m && ok; ++v) {
        if (ce.carrier.leq(u, v)) continue;
        ++pairs;
        bool haveF = false, haveI = false;
        for (const Subset& f : filters) {
          int c = meetOfFilter(f);
          if (ce.carrier.leq(c, u) && !ce.carrier.leq(c, v)) haveF = true;
        }
        for (const Subset& i : ideals) {
          int o = joinOfIdeal(i);
          if (ce.carrier.leq(v, o) && !ce.carrier.leq(u, o)) haveI = true;
        }
        if (!haveF || !haveI) {
          ok = false;
          witness = "no witness for u=" + ce.carrier.label(u) + ", v=" + ce.carrier.label(v);
        }
      }
    report.add("density", ok,
               ok ? "witnessed for all " + std::to_string(pairs) + " pairs" : witness);
  }
  {
    bool ok = true;
    std::string witness;
    int checked = 0;
    for (const Subset& f : filters) {
      for (const Subset& i : ideals) {
        if (!ce.carrier.leq(meetOfFilter(f), joinOfIdeal(i))) continue;
        ++checked;
        bool found = false;
        f.forEach([&](int b) {
          i.forEach([&](int a) {
            if (ce.base.leq(b, a)) found = true;
          });
        });
        if (!found) {
          ok = false;
          witness = "F=" + f.describe(ce.base.poset().labels()) +
                    ", I=" + i.describe(ce.base.poset().labels());
        }
      }
      if (!ok) break;
    }
    report.add("compactness", ok,
               ok ? "witnessed for all " + std::to_string(checked) + " pairs" : witness);
  }
  return report;
}

std::vector<int> closedElements(const CanonicalExtension& ce, const Limits& limits) {
  std::vector<Subset> filters = filtersOf(ce.base, limits);
  const int m = ce.carrier.size();
  std::vector<int> closed;
  for (const Subset& f : filters) {
    Subset img(m);
    f.forEach([&](int a) { img.set(ce.embed[a]); });
    int c = ce.carrier.meetAll(img);
    if (std::find(closed.begin(), closed.end(), c) == closed.end()) closed.push_back(c);
  }
  std::sort(closed.begin(), closed.end());
  std::vector<int> viaEta = ce.etaF;
  std::sort(viaEta.begin(), viaEta.end());
  viaEta.erase(std::unique(viaEta.begin(), viaEta.end()), viaEta.end());
  if (closed != viaEta)
    throw InternalCheckError("closedElements: meets of embedded filters differ from the etaF image");
  return closed;
}

TupleMap sigmaExtensionDirect(const std::vector<const CanonicalExtension*>& sources,
                              const CanonicalExtension& target, const TupleMap& f,
                              const Limits& limits) {
  const int k = static_cast<int>(f.dims.size());
  if (static_cast<int>(sources.size()) != k)
    throw PreconditionError("sigmaExtensionDirect: source count mismatch");
  for (int i = 0; i < k; ++i)
    if (sources[i]->base.size() != f.dims[i])
      throw PreconditionError("sigmaExtensionDirect: map is not over the source lattices");
  // Monotone input required.
  {
    std::vector<int> args(k, 0);
    const std::size_t total = TupleMap::flatSize(f.dims);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t r = flat;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(r % f.dims[i]);
        r /= f.dims[i];
      }
      for (int c = 0; c < k; ++c)
        for (int b = 0; b < f.dims[c]; ++b) {
          if (!sources[c]->base.leq(args[c], b)) continue;
          std::vector<int> hi = args;
          hi[c] = b;
          if (!target.base.leq(f.apply(args), f.apply(hi)))
            throw PreconditionError("sigmaExtensionDirect: map is not monotone");
        }
    }
  }

  std::vector<std::vector<int>> closed(k);
  std::vector<int> dims(k);
  for (int i = 0; i < k; ++i) {
    closed[i] = closedElements(*sources[i], limits);
    dims[i] = sources[i]->carrier.size();
  }

  // Stage one: on closed tuples, meet of embedded f-images over dominating
  // base tuples.
  auto stageOne = [&](const std::vector<int>& x) {
    Subset img(target.carrier.size());
    std::vector<int> a(k, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (pos == k) {
        img.set(target.embed[f.apply(a)]);
        return;
      }
      for (int v = 0; v < f.dims[pos]; ++v) {
        if (!sources[pos]->carrier.leq(x[pos], sources[pos]->embed[v])) continue;
        a[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
    return target.carrier.meetAll(img);
  };

  TupleMap out;
  out.dims = dims;
  out.targetSize = target.carrier.size();
  const std::size_t total = TupleMap::flatSize(dims);
  out.values.assign(total, -1);
  std::vector<int> u(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (int i = k - 1; i >= 0; --i) {
      u[i] = static_cast<int>(r % dims[i]);
      r /= dims[i];
    }
    // Stage two: join over closed tuples below u.
    Subset img(target.carrier.size());
    std::vector<int> x(k, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (pos == k) {
        img.set(stageOne(x));
        return;
      }
      for (int c : closed[pos]) {
        if (!sources[pos]->carrier.leq(c, u[pos])) continue;
        x[pos] = c;
        walk(pos + 1);
      }
    };
    walk(0);
    out.values[flat] = target.carrier.joinAll(img);
  }
  return out;
}

TupleMap sigmaExtensionViaLift(const std::vector<const CanonicalExtension*>& sources,
                               const CanonicalExtension& target, const TupleMap& f,
                               const Limits& limits) {
  const int k = static_cast<int>(f.dims.size());
  if (static_cast<int>(sources.size()) != k)
    throw PreconditionError("sigmaExtensionViaLift: source count mismatch");
  // Operator precondition, checked directly so heterogeneous source sizes
  // work. Nullary maps are operators vacuously.
  {
    bool operator_ = true;
    std::vector<int> args(k, 0);
    const std::size_t total = TupleMap::flatSize(f.dims);
    for (std::size_t flat = 0; flat < total && operator_; ++flat) {
      std::size_t r = flat;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(r % f.dims[i]);
        r /= f.dims[i];
      }
      for (int c = 0; c < k && operator_; ++c)
        for (int b = 0; b < f.dims[c]; ++b) {
          std::vector<int> joined = args, other = args;
          joined[c] = sources[c]->base.join(args[c], b);
          other[c] = b;
          if (f.apply(joined) != target.base.join(f.apply(args), f.apply(other))) {
            operator_ = false;
            break;
          }
        }
    }
    if (!operator_)
      throw PreconditionError("sigmaExtensionViaLift: map is not an operator");
  }

  // Extend to the filter completions through the product identification.
  TupleMap fF;
  {
    fF.targetSize = target.fc.carrier.size();
    for (int i = 0; i < k; ++i)
      fF.dims.push_back(static_cast<int>(sources[i]->fc.filters.size()));
    if (k == 0) {
      fF.values = {target.fc.embed[f.values[0]]};
    } else {
      std::vector<const FilterCompletion*> comps;
      for (int i = 0; i < k; ++i) comps.push_back(&sources[i]->fc);
      ProductFilterIdentification ident = productIdentification(comps, limits);
      MonotoneMap flat(ident.productLattice.poset(), target.base.poset(), f.values);
      MonotoneMap inner = extendMapF(ident.productCompletion, target.fc, flat);
      const std::size_t total = TupleMap::flatSize(fF.dims);
      fF.values.assign(total, -1);
      for (std::size_t idx = 0; idx < total; ++idx)
        fF.values[idx] = inner.image[ident.tupleToProduct[idx]];
    }
  }

  TupleMap lifted = sigmaFromFilterExtension(sources, target, fF, limits);
  TupleMap direct = sigmaExtensionDirect(sources, target, f, limits);
  if (lifted.values != direct.values)
    throw InternalCheckError("sigmaExtensionViaLift: lifted extension differs from the direct sigma extension");
  return lifted;
}

TupleMap sigmaFromFilterExtension(const std::vector<const CanonicalExtension*>& sources,
                                  const CanonicalExtension& target, const TupleMap& fF,
                                  const Limits& limits) {
  const int k = static_cast<int>(fF.dims.size());
  // The extension of an operator is cover-stable for the Delta presentations.
  std::vector<const Presentation*> plainSources;
  for (int i = 0; i < k; ++i) plainSources.push_back(&sources[i]->delta.plain);
  CoverStabilityReport stable = isCoverStable(plainSources, target.delta.plain, fF, limits);
  if (!stable.stable)
    throw InternalCheckError("sigmaFromFilterExtension: operator extension is not cover-stable");

  std::vector<const std::vector<Subset>*> families;
  for (int i = 0; i < k; ++i) families.push_back(&sources[i]->family.ideals);
  return liftOperation(plainSources, families, target.delta.suplattice,
                       target.family.ideals, fF, limits);
}

Report checkCanonicity(const OrderedAlgebra& alg, const Inequation& ineq,
                       const Limits& limits) {
  Report report("canonicity");
  const FiniteLattice& a = alg.lattice();

  // Restrict to the symbols the inequation uses; each must be an operator.
  std::vector<std::string> used;
  std::function<void(const Term&)> collect = [&](const Term& t) {
    if (t.isVariable()) return;
    if (std::find(used.begin(), used.end(), t.symbol()) == used.end())
      used.push_back(t.symbol());
    for (const Term& s : t.args()) collect(s);
  };
  collect(ineq.lhs);
  collect(ineq.rhs);
  std::vector<Signature::Symbol> symbols;
  std::vector<OpTable> interps;
  for (const std::string& name : used) {
    int s = alg.sig().indexOf(name);
    if (s < 0) throw PreconditionError("checkCanonicity: unknown symbol " + name);
    OperatorReport op = isOperator(alg, s);
    if (!op.isOperator)
      throw PreconditionError("checkCanonicity: symbol " + name +
                              " is not an operator: " + op.describe(a));
    symbols.push_back(alg.sig().symbols()[s]);
    interps.push_back(alg.interp(s));
  }
  OrderedAlgebra restricted(a, Signature(symbols), interps);

  SatisfactionReport base = satisfiesInequation(restricted, ineq, limits);
  if (!base.holds) {
    std::string w = "(";
    for (std::size_t i = 0; i < base.witness.size(); ++i) {
      if (i) w += ",";
      w += a.label(base.witness[i]);
    }
    report.add("not applicable", true, "fails in the base algebra at " + w + ")");
    return report;
  }
  report.add("holds in the base algebra", true);

  // Step one: transfer to the filter completion.
  FilterCompletion fc = filterCompletion(a, limits);
  OrderedAlgebra liftedF = liftAlgebraToF(restricted, fc, limits);
  SatisfactionReport fStep = satisfiesInequation(liftedF, ineq, limits);
  report.add("holds in the filter completion", fStep.holds);

  // Step two: cover-stable lifting to the canonical extension carrier.
  CanonicalExtension ce = canonicalExtension(a, fc, limits);
  std::vector<OpTable> sigmaTables;
  std::vector<const CanonicalExtension*> srcs;
  for (std::size_t s = 0; s < symbols.size(); ++s) {
    const int k = symbols[s].arity;
    srcs.assign(k, &ce);
    TupleMap sigma = sigmaExtensionViaLift(srcs, ce, TupleMap::fromTable(interps[s]), limits);
    sigmaTables.emplace_back(ce.carrier.size(), k, sigma.values);
  }
  OrderedAlgebra sigmaAlg(ce.carrier, Signature(symbols), sigmaTables);
  SatisfactionReport cStep = satisfiesInequation(sigmaAlg, ineq, limits);
  std::string w;
  if (!cStep.holds) {
    w = "violated at (";
    for (std::size_t i = 0; i < cStep.witness.size(); ++i) {
      if (i) w += ",";
      w += ce.carrier.label(cStep.witness[i]);
    }
    w += ")";
  }
  report.add("holds in the canonical extension", cStep.holds, w);

  // Cross-check through the finite isomorphism: e transports the original
  // interpretations onto the sigma tables.
  {
    bool iso = static_cast<int>(ce.embed.size()) == ce.carrier.size();
    std::vector<bool> hit(ce.carrier.size(), false);
    for (int x : ce.embed) hit[x] = true;
    for (bool h : hit) iso = iso && h;
    bool transports = iso;
    for (std::size_t s = 0; s < symbols.size() && transports; ++s) {
      const int k = symbols[s].arity;
      std::vector<int> args(k, 0);
      std::function<bool(int)> walk = [&](int pos) -> bool {
        if (pos == k) {
          std::vector<int> mapped(k);
          for (int i = 0; i < k; ++i) mapped[i] = ce.embed[args[i]];
          return sigmaTables[s].apply(mapped) == ce.embed[interps[s].apply(args)];
        }
        for (int v = 0; v < a.size(); ++v) {
          args[pos] = v;
          if (!walk(pos + 1)) return false;
        }
        return true;
      };
      transports = walk(0);
    }
    report.add("sigma algebra transports along the finite isomorphism", transports);
  }
  return report;
}

std::pair<IdealCompletion, MonotoneMap> muEmbedding(const CanonicalExtension& ce,
                                                    const Limits& limits) {
  IdealCompletion ic = idealCompletion(ce.base, limits);
  const int m = ic.carrier.size();
  std::vector<int> image(m);
  for (int y = 0; y < m; ++y) {
    Subset img(ce.carrier.size());
    ic.ideals[y].forEach([&](int b) { img.set(ce.embed[b]); });
    image[y] = ce.carrier.joinAll(img);
  }
  MonotoneMap mu(ic.carrier.poset(), ce.carrier.poset(), image);

  for (int y1 = 0; y1 < m; ++y1)
    for (int y2 = 0; y2 < m; ++y2) {
      if (mu(ic.carrier.join(y1, y2)) != ce.carrier.join(mu(y1), mu(y2)))
        throw InternalCheckError("muEmbedding: finite joins not preserved");
      if (mu(ic.carrier.meet(y1, y2)) != ce.carrier.meet(mu(y1), mu(y2)))
        throw InternalCheckError("muEmbedding: binary meets not preserved");
    }
  if ((std::uint64_t(1) << m) > limits.maxSteps)
    throw SizeGuardError("muEmbedding: directed-join check too large");
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m); ++bits) {
    Subset d(m, bits);
    if (!isDirected(ic.carrier.poset(), d)) continue;
    Subset up(m);
    Subset img(ce.carrier.size());
    d.forEach([&](int y) {
      up.set(y);
      img.set(mu(y));
    });
    if (mu(ic.carrier.joinAll(up)) != ce.carrier.joinAll(img))
      throw InternalCheckError("muEmbedding: directed joins not preserved");
  }
  return {std::move(ic), std::move(mu)};
}

}  // namespace canext
