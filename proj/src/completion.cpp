#include "canext/completion.hpp"

#include <algorithm>
#include <functional>

#include "canext/error.hpp"

namespace canext {

namespace {

int findSubset(const std::vector<Subset>& sets, const Subset& s) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (sets[i] == s) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> completionLabels(const FiniteLattice& base,
                                          const std::vector<Subset>& sets,
                                          bool filters) {
  std::vector<std::string> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Subset& s = sets[i];
    int gen = filters ? base.meetAll(s) : base.joinAll(s);
    Subset principal = filters ? base.poset().up(gen) : base.poset().down(gen);
    if (principal == s)
      out[i] = (filters ? "^" : "v") + base.label(gen);
    else
      out[i] = s.describe(base.poset().labels());
  }
  return out;
}

}  // namespace

Subset filterGeneratedBy(const FiniteLattice& a, Subset s) {
  for (;;) {
    Subset next = upSet(a.poset(), s);
    next.forEach([&](int x) {
      next.forEach([&](int y) { next.set(a.meet(x, y)); });
    });
    if (next == s) return s;
    s = next;
  }
}

Subset idealGeneratedBy(const FiniteLattice& a, Subset s) {
  for (;;) {
    Subset next = downSet(a.poset(), s);
    next.forEach([&](int x) {
      next.forEach([&](int y) { next.set(a.join(x, y)); });
    });
    if (next == s) return s;
    s = next;
  }
}

int FilterCompletion::indexOfFilter(const Subset& f) const {
  return findSubset(filters, f);
}

int IdealCompletion::indexOfIdeal(const Subset& f) const {
  return findSubset(ideals, f);
}

FilterCompletion filterCompletion(const FiniteLattice& a, const Limits& limits) {
  FilterCompletion fc;
  fc.base = a;
  fc.filters = filtersOf(a, limits);
  const int m = static_cast<int>(fc.filters.size());
  requireCarrierWidth(m, "filterCompletion");

  // Reverse inclusion: x <= y iff x contains y.
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (fc.filters[y].subsetOf(fc.filters[x])) pairs.emplace_back(x, y);
  Poset order(Preorder::saturate(m, pairs, completionLabels(a, fc.filters, true)));
  fc.carrier = FiniteLattice::fromPoset(order);

  // Dual route for the lattice operations: meets are generated filters of
  // unions, joins are intersections.
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int viaGen = findSubset(fc.filters, filterGeneratedBy(a, fc.filters[x] | fc.filters[y]));
      if (viaGen != fc.carrier.meet(x, y))
        throw InternalCheckError("filterCompletion: meet disagrees with generated filter");
      int viaCap = findSubset(fc.filters, fc.filters[x] & fc.filters[y]);
      if (viaCap != fc.carrier.join(x, y))
        throw InternalCheckError("filterCompletion: join disagrees with intersection");
    }

  fc.embed.resize(a.size());
  for (int e = 0; e < a.size(); ++e) {
    fc.embed[e] = findSubset(fc.filters, a.poset().up(e));
    if (fc.embed[e] < 0)
      throw InternalCheckError("filterCompletion: principal filter missing");
  }
  // Lattice embedding: order both ways plus meet/join preservation.
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != fc.carrier.leq(fc.embed[x], fc.embed[y]))
        throw InternalCheckError("filterCompletion: embedding is not an order-embedding");
      if (fc.embed[a.meet(x, y)] != fc.carrier.meet(fc.embed[x], fc.embed[y]) ||
          fc.embed[a.join(x, y)] != fc.carrier.join(fc.embed[x], fc.embed[y]))
        throw InternalCheckError("filterCompletion: embedding is not a lattice embedding");
    }
  return fc;
}

IdealCompletion idealCompletion(const FiniteLattice& a, const Limits& limits) {
  IdealCompletion ic;
  ic.base = a;
  ic.ideals = idealsOf(a, limits);
  const int m = static_cast<int>(ic.ideals.size());
  requireCarrierWidth(m, "idealCompletion");

  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (ic.ideals[x].subsetOf(ic.ideals[y])) pairs.emplace_back(x, y);
  Poset order(Preorder::saturate(m, pairs, completionLabels(a, ic.ideals, false)));
  ic.carrier = FiniteLattice::fromPoset(order);

  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int viaGen = findSubset(ic.ideals, idealGeneratedBy(a, ic.ideals[x] | ic.ideals[y]));
      if (viaGen != ic.carrier.join(x, y))
        throw InternalCheckError("idealCompletion: join disagrees with generated ideal");
      int viaCap = findSubset(ic.ideals, ic.ideals[x] & ic.ideals[y]);
      if (viaCap != ic.carrier.meet(x, y))
        throw InternalCheckError("idealCompletion: meet disagrees with intersection");
    }

  ic.embed.resize(a.size());
  for (int e = 0; e < a.size(); ++e) {
    ic.embed[e] = findSubset(ic.ideals, a.poset().down(e));
    if (ic.embed[e] < 0)
      throw InternalCheckError("idealCompletion: principal ideal missing");
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != ic.carrier.leq(ic.embed[x], ic.embed[y]))
        throw InternalCheckError("idealCompletion: embedding is not an order-embedding");
      if (ic.embed[a.meet(x, y)] != ic.carrier.meet(ic.embed[x], ic.embed[y]) ||
          ic.embed[a.join(x, y)] != ic.carrier.join(ic.embed[x], ic.embed[y]))
        throw InternalCheckError("idealCompletion: embedding is not a lattice embedding");
    }
  return ic;
}

Report checkCoCompletionAxioms(const FilterCompletion& fc, const Limits& limits) {
  Report report("co-completion axioms");
  const FiniteLattice& c = fc.carrier;
  const FiniteLattice& a = fc.base;
  const int m = c.size();
  if (m > 0 && (std::uint64_t(1) << m) > limits.maxSteps)
    throw SizeGuardError("checkCoCompletionAxioms: too many subsets to enumerate");

  // 1. Every nonempty co-directed subset has a greatest lower bound.
  {
    bool ok = true;
    std::string witness;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m) && ok; ++bits) {
      Subset s(m, bits);
      if (!isCodirected(c.poset(), s)) continue;
      Subset lower = Subset::full(m);
      s.forEach([&](int x) { lower &= c.poset().down(x); });
      int glb = maximumOf(c.poset(), lower);
      if (glb < 0 || glb != c.meetAll(s)) {
        ok = false;
        witness = "S=" + s.describe(c.poset().labels());
      }
    }
    report.add("co-dcpo: co-directed subsets have meets", ok, witness);
  }

  // 2. The unit is an order-embedding.
  {
    bool ok = true;
    std::string witness;
    for (int x = 0; x < a.size() && ok; ++x)
      for (int y = 0; y < a.size() && ok; ++y)
        if (a.leq(x, y) != c.leq(fc.embed[x], fc.embed[y])) {
          ok = false;
          witness = "(" + a.label(x) + "," + a.label(y) + ")";
        }
    report.add("unit is an order-embedding", ok, witness);
  }

  // 3. Each x is the meet of the embedded elements above it, with a
  //    co-directed index set.
  {
    bool ok = true;
    std::string witness;
    for (int x = 0; x < m && ok; ++x) {
      Subset idx(a.size());
      for (int e = 0; e < a.size(); ++e)
        if (c.leq(x, fc.embed[e])) idx.set(e);
      Subset embedded(m);
      idx.forEach([&](int e) { embedded.set(fc.embed[e]); });
      if (!isCodirected(a.poset(), idx) || c.meetAll(embedded) != x) {
        ok = false;
        witness = "x=" + c.label(x);
      }
    }
    report.add("every element is a co-directed meet of embedded elements", ok, witness);
  }

  // 4. Meets of co-directed sets below an embedded element are witnessed
  //    by a member.
  {
    bool ok = true;
    std::string witness;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m) && ok; ++bits) {
      Subset s(m, bits);
      if (!isCodirected(c.poset(), s)) continue;
      int meet = c.meetAll(s);
      for (int e = 0; e < a.size() && ok; ++e) {
        if (!c.leq(meet, fc.embed[e])) continue;
        bool found = false;
        s.forEach([&](int member) {
          if (c.leq(member, fc.embed[e])) found = true;
        });
        if (!found) {
          ok = false;
          witness = "S=" + s.describe(c.poset().labels()) + ", a=" + a.label(e);
        }
      }
    }
    report.add("co-directed meets below embedded elements are witnessed", ok, witness);
  }
  return report;
}

MonotoneMap extendMapF(const FilterCompletion& src, const FilterCompletion& tgt,
                       const MonotoneMap& f) {
  if (!f.source.sameOrderAs(src.base.poset()) || !f.target.sameOrderAs(tgt.base.poset()))
    throw PreconditionError("extendMapF: map endpoints do not match the completions");
  const int m = src.carrier.size();
  std::vector<int> image(m);
  for (int x = 0; x < m; ++x) {
    Subset above(tgt.carrier.size());
    for (int a = 0; a < src.base.size(); ++a)
      if (src.carrier.leq(x, src.embed[a])) above.set(tgt.embed[f(a)]);
    image[x] = tgt.carrier.meetAll(above);
  }
  MonotoneMap out(src.carrier.poset(), tgt.carrier.poset(), image);
  for (int a = 0; a < src.base.size(); ++a)
    if (out(src.embed[a]) != tgt.embed[f(a)])
      throw InternalCheckError("extendMapF: extension does not commute with the units");
  return out;
}

ProductFilterIdentification productIdentification(
    const std::vector<const FilterCompletion*>& components, const Limits& limits) {
  if (components.empty())
    throw PreconditionError("productIdentification: no components");
  ProductFilterIdentification ident;

  Poset prod = components[0]->base.poset();
  for (std::size_t i = 1; i < components.size(); ++i)
    prod = productOrder(prod, components[i]->base.poset());
  ident.productLattice = FiniteLattice::fromPoset(prod);

  // The component completions were already authorized by the caller; the
  // product may exceed the user-facing bound but stays under the bitset cap.
  Limits wide = limits;
  wide.maxCarrier = kMaxCarrier;
  ident.productCompletion = filterCompletion(ident.productLattice, wide);

  const int k = static_cast<int>(components.size());
  std::vector<int> dims(k);
  std::size_t tuples = 1;
  for (int i = 0; i < k; ++i) {
    dims[i] = static_cast<int>(components[i]->filters.size());
    tuples *= static_cast<std::size_t>(dims[i]);
  }

  ident.tupleToProduct.assign(tuples, -1);
  std::vector<int> tup(k, 0);
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    // Decompose flat index, first component most significant.
    std::size_t rest = flat;
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(rest % dims[i]);
      rest /= dims[i];
    }
    // Cartesian product of the component filters.
    Subset prodFilter(ident.productLattice.size());
    for (int idx = 0; idx < ident.productLattice.size(); ++idx) {
      int code = idx;
      bool in = true;
      for (int i = k - 1; i >= 0; --i) {
        int ai = code % components[i]->base.size();
        code /= components[i]->base.size();
        if (!components[i]->filters[tup[i]].test(ai)) in = false;
      }
      if (in) prodFilter.set(idx);
    }
    int p = ident.productCompletion.indexOfFilter(prodFilter);
    if (p < 0)
      throw InternalCheckError("productIdentification: product of filters is not a filter of the product");
    ident.tupleToProduct[flat] = p;
  }

  // Inverse via coordinate projections, then bijection + order checks.
  ident.productToTuple.assign(ident.productCompletion.filters.size(), {});
  for (std::size_t p = 0; p < ident.productCompletion.filters.size(); ++p) {
    std::vector<Subset> proj;
    proj.reserve(k);
    for (int i = 0; i < k; ++i) proj.emplace_back(components[i]->base.size());
    ident.productCompletion.filters[p].forEach([&](int idx) {
      int code = idx;
      for (int i = k - 1; i >= 0; --i) {
        proj[i].set(code % components[i]->base.size());
        code /= components[i]->base.size();
      }
    });
    std::vector<int> tuple(k);
    std::size_t flat = 0;
    for (int i = 0; i < k; ++i) {
      tuple[i] = components[i]->indexOfFilter(proj[i]);
      if (tuple[i] < 0)
        throw InternalCheckError("productIdentification: projection is not a filter");
      flat = flat * dims[i] + static_cast<std::size_t>(tuple[i]);
    }
    if (ident.tupleToProduct[flat] != static_cast<int>(p))
      throw InternalCheckError("productIdentification: maps are not mutually inverse");
    ident.productToTuple[p] = std::move(tuple);
  }
  for (std::size_t flat = 0; flat < tuples; ++flat) {
    std::size_t rest = flat;
    std::vector<int> tuple(k);
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = static_cast<int>(rest % dims[i]);
      rest /= dims[i];
    }
    if (ident.productToTuple[ident.tupleToProduct[flat]] != tuple)
      throw InternalCheckError("productIdentification: maps are not a bijection");
  }
  // Order-isomorphism: componentwise order agrees with the product order.
  for (std::size_t p = 0; p < ident.productCompletion.filters.size(); ++p)
    for (std::size_t q = 0; q < ident.productCompletion.filters.size(); ++q) {
      bool compLeq = true;
      for (int i = 0; i < k; ++i)
        if (!components[i]->carrier.leq(ident.productToTuple[p][i],
                                        ident.productToTuple[q][i]))
          compLeq = false;
      if (compLeq != ident.productCompletion.carrier.leq(static_cast<int>(p),
                                                         static_cast<int>(q)))
        throw InternalCheckError("productIdentification: not an order-isomorphism");
    }
  return ident;
}

OpTable extendOperationToF(const OrderedAlgebra& alg, int symIdx,
                           const FilterCompletion& fc, const Limits& limits,
                           const ProductFilterIdentification* prebuilt) {
  const auto& sym = alg.sig().symbols()[symIdx];
  const OpTable& t = alg.interp(symIdx);
  const int m = fc.carrier.size();
  if (sym.arity == 0)
    return OpTable(m, 0, {fc.embed[t.apply({})]});

  ProductFilterIdentification local;
  if (!prebuilt) {
    std::vector<const FilterCompletion*> comps(sym.arity, &fc);
    local = productIdentification(comps, limits);
  }
  const ProductFilterIdentification& ident = prebuilt ? *prebuilt : local;

  // The flattening of A^k used by OpTable matches the product lattice
  // indexing, so the table doubles as the image of the flattened map.
  MonotoneMap flat(ident.productLattice.poset(), fc.base.poset(), t.values());
  MonotoneMap inner = extendMapF(ident.productCompletion, fc, flat);

  std::size_t tuples = OpTable::tableSize(m, sym.arity);
  std::vector<int> values(tuples);
  for (std::size_t flatIdx = 0; flatIdx < tuples; ++flatIdx)
    values[flatIdx] = inner.image[ident.tupleToProduct[flatIdx]];
  return OpTable(m, sym.arity, std::move(values));
}

OrderedAlgebra liftAlgebraToF(const OrderedAlgebra& alg, const FilterCompletion& fc,
                              const Limits& limits) {
  std::vector<OpTable> lifted;
  lifted.reserve(alg.sig().size());
  for (int s = 0; s < alg.sig().size(); ++s)
    lifted.push_back(extendOperationToF(alg, s, fc, limits));
  return OrderedAlgebra(fc.carrier, alg.sig(), std::move(lifted));
}

Report checkFilterInequationTransfer(const OrderedAlgebra& alg, const Inequation& ineq,
                                     const Limits& limits) {
  Report report("filter inequation transfer");
  SatisfactionReport base = satisfiesInequation(alg, ineq, limits);
  if (!base.holds) {
    std::string w = "fails in the base algebra at (";
    for (std::size_t i = 0; i < base.witness.size(); ++i) {
      if (i) w += ",";
      w += alg.order().label(base.witness[i]);
    }
    report.add("not applicable", true, w + ")");
    return report;
  }
  FilterCompletion fc = filterCompletion(alg.lattice(), limits);
  OrderedAlgebra lifted = liftAlgebraToF(alg, fc, limits);
  SatisfactionReport up = satisfiesInequation(lifted, ineq, limits);
  std::string w;
  if (!up.holds) {
    w = "violated at (";
    for (std::size_t i = 0; i < up.witness.size(); ++i) {
      if (i) w += ",";
      w += fc.carrier.label(up.witness[i]);
    }
    w += ")";
  }
  report.add("holds in the filter completion", up.holds, w);
  return report;
}

Report checkOperatorPreservation(const OrderedAlgebra& alg, int symIdx,
                                 const Limits& limits) {
  OperatorReport pre = isOperator(alg, symIdx);
  if (!pre.isOperator)
    throw PreconditionError("checkOperatorPreservation: " +
                            alg.sig().symbols()[symIdx].name + " is not an operator: " +
                            pre.describe(alg.lattice()));
  Report report("operator preservation");
  FilterCompletion fc = filterCompletion(alg.lattice(), limits);
  OpTable lifted = extendOperationToF(alg, symIdx, fc, limits);
  OperatorReport post = isOperator(fc.carrier, lifted);
  report.add("lifted map is an operator", post.isOperator,
             post.isOperator ? "" : post.describe(fc.carrier));
  return report;
}

}  // namespace canext
