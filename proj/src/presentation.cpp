#include "canext/presentation.hpp"

#include <algorithm>

#include "canext/error.hpp"

namespace canext {

Presentation Presentation::extensional(Preorder base, Kind kind,
                                       std::vector<Cover> covers) {
  Presentation p;
  p.base_ = std::move(base);
  p.kind_ = kind;
  for (const Cover& c : covers) {
    if (c.lhs < 0 || c.lhs >= p.base_.size())
      throw PreconditionError("Presentation: cover lhs out of range");
    if (c.rhs.size() != p.base_.size())
      throw PreconditionError("Presentation: cover rhs over wrong carrier");
    if (kind == Kind::Dcpo && !isDirected(p.base_, c.rhs))
      throw PreconditionError("Presentation: dcpo cover for " +
                              p.base_.label(c.lhs) + " has a non-directed right side");
  }
  p.covers_ = std::move(covers);
  return p;
}

Presentation Presentation::intensional(Preorder base, Kind kind, CoverOracle oracle,
                                       bool monotoneInU) {
  Presentation p;
  p.base_ = std::move(base);
  p.kind_ = kind;
  p.oracle_ = std::move(oracle);
  p.oracleMonotone_ = monotoneInU;
  return p;
}

Presentation Presentation::withJoinStructure(FiniteLattice joinBase) const {
  if (!joinBase.poset().sameOrderAs(base_))
    throw PreconditionError("withJoinStructure: join base order differs from presentation base");
  Presentation p = *this;
  p.kind_ = Kind::Suplattice;
  p.joinBase_ = std::move(joinBase);
  return p;
}

bool Presentation::coverHolds(int x, const Subset& u) const {
  if (base_.up(x).intersects(u)) return true;  // implicit reflexive cover
  for (const Cover& c : covers_)
    if (c.lhs == x && c.rhs.subsetOf(u)) return true;
  if (joinBase_ && base_.leq(x, joinBase_->joinAll(u))) return true;
  if (oracle_) {
    if (kind_ == Kind::Dcpo && !isDirected(base_, u)) return false;
    return oracle_(x, u);
  }
  return false;
}

Subset Presentation::saturationStep(const Subset& s) const {
  Subset out = s;
  for (const Cover& c : covers_)
    if (c.rhs.subsetOf(out)) out.set(c.lhs);
  if (oracle_) {
    if (!oracleMonotone_)
      throw PreconditionError(
          "Presentation: intensional oracle not declared monotone in U; saturation unavailable");
    // Finite directed subsets have maxima, so testing the sets down(m) & s
    // for members m covers every directed U ⊆ s.
    for (int x = 0; x < base_.size(); ++x) {
      if (out.test(x)) continue;
      bool forced = false;
      s.forEach([&](int m) {
        if (forced) return;
        Subset u = base_.down(m) & s;
        if (!u.empty() && oracle_(x, u)) forced = true;
      });
      if (forced) out.set(x);
    }
  }
  if (joinBase_) {
    out.set(joinBase_->bottom());
    Subset grown = out;
    out.forEach([&](int x) {
      out.forEach([&](int y) { grown.set(joinBase_->join(x, y)); });
    });
    out = grown;
  }
  return out;
}

Subset cIdealClosure(const Presentation& pres, Subset start) {
  Subset s = start;
  for (;;) {
    Subset next = pres.saturationStep(downSet(pres.base(), s));
    if (next == s) return s;
    s = next;
  }
}

bool isCIdeal(const Presentation& pres, const Subset& s) {
  if (downSet(pres.base(), s) != s) return false;
  return pres.saturationStep(s) == s;
}

int CIdealFamily::indexOf(const Subset& s) const {
  for (std::size_t i = 0; i < ideals.size(); ++i)
    if (ideals[i] == s) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> familyLabels(const Preorder& base,
                                      const std::vector<Subset>& sets) {
  std::vector<std::string> out(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    out[i] = sets[i].describe(base.labels());
  return out;
}

void sortSubsets(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end(),
            [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
}

}  // namespace

CIdealFamily allCIdeals(const Presentation& pres, const Limits& limits) {
  const int n = pres.base().size();
  if (n > limits.maxCarrier)
    throw SizeGuardError("allCIdeals: carrier size " + std::to_string(n) +
                         " exceeds enumeration bound " + std::to_string(limits.maxCarrier));

  // Join-closure of the principal C-ideals plus <∅>.
  std::vector<Subset> family;
  auto addUnique = [&](const Subset& s) {
    for (const Subset& t : family)
      if (t == s) return false;
    family.push_back(s);
    return true;
  };
  addUnique(cIdealClosure(pres, Subset(n)));
  for (int x = 0; x < n; ++x)
    addUnique(cIdealClosure(pres, Subset::single(n, x)));
  bool grew = true;
  std::uint64_t steps = 0;
  while (grew) {
    grew = false;
    const std::size_t k = family.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (++steps > limits.maxSteps)
          throw SizeGuardError("allCIdeals: join-closure exceeded step budget");
        if (addUnique(cIdealClosure(pres, family[i] | family[j]))) grew = true;
      }
  }
  sortSubsets(family);

  // Independent oracle on small carriers: exhaustive subset filtering.
  if (n <= 16) {
    std::vector<Subset> oracle;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
      Subset s(n, bits);
      if (isCIdeal(pres, s)) oracle.push_back(s);
    }
    sortSubsets(oracle);
    if (oracle != family)
      throw InternalCheckError("allCIdeals: join-closure generation disagrees with exhaustive filtering");
  }

  CIdealFamily out;
  out.pres = pres;
  out.ideals = std::move(family);
  const int m = static_cast<int>(out.ideals.size());
  requireCarrierWidth(m, "allCIdeals");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (out.ideals[i].subsetOf(out.ideals[j])) pairs.emplace_back(i, j);
  out.carrier = FiniteLattice::fromPoset(
      Poset(Preorder::saturate(m, pairs, familyLabels(pres.base(), out.ideals))));

  // Meets are intersections, joins are closures of unions.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (out.indexOf(out.ideals[i] & out.ideals[j]) != out.carrier.meet(i, j))
        throw InternalCheckError("allCIdeals: family not closed under intersection");
      if (out.indexOf(cIdealClosure(pres, out.ideals[i] | out.ideals[j])) !=
          out.carrier.join(i, j))
        throw InternalCheckError("allCIdeals: join differs from closure of union");
    }
  return out;
}

FreeDcpo freeDcpo(const Presentation& pres, const Limits& limits) {
  if (pres.kind() != Presentation::Kind::Dcpo)
    throw PreconditionError("freeDcpo: presentation kind is not dcpo");
  const int n = pres.base().size();
  if (n > limits.maxCarrier)
    throw SizeGuardError("freeDcpo: carrier size exceeds enumeration bound");

  FreeDcpo out;
  out.pres = pres;
  out.eta.resize(n);
  std::vector<Subset> family;
  for (int x = 0; x < n; ++x) {
    Subset px = cIdealClosure(pres, Subset::single(n, x));
    bool found = false;
    for (const Subset& t : family)
      if (t == px) found = true;
    if (!found) family.push_back(px);
  }
  sortSubsets(family);

  // Close under directed joins. Finite directed families have greatest
  // members, so the loop is expected to add nothing; run it anyway.
  bool grew = true;
  while (grew) {
    grew = false;
    const int m = static_cast<int>(family.size());
    if (m > 0 && (std::uint64_t(1) << m) > limits.maxSteps)
      throw SizeGuardError("freeDcpo: directed-join closure exceeded step budget");
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << m) && !grew; ++bits) {
      // Directedness w.r.t. inclusion among the selected members.
      std::vector<int> sel;
      for (int i = 0; i < m; ++i)
        if ((bits >> i) & 1) sel.push_back(i);
      bool directed = true;
      for (int i : sel)
        for (int j : sel) {
          bool bounded = false;
          for (int k : sel)
            if (family[i].subsetOf(family[k]) && family[j].subsetOf(family[k]))
              bounded = true;
          if (!bounded) directed = false;
        }
      if (!directed) continue;
      Subset uni(n);
      for (int i : sel) uni |= family[i];
      Subset join = cIdealClosure(pres, uni);
      bool present = false;
      for (const Subset& t : family)
        if (t == join) present = true;
      if (!present) {
        family.push_back(join);
        sortSubsets(family);
        grew = true;
      }
    }
  }

  // Finite collapse: the free dcpo carrier is exactly the principal C-ideals.
  for (const Subset& t : family) {
    bool principal = false;
    for (int x = 0; x < n; ++x)
      if (t == cIdealClosure(pres, Subset::single(n, x))) principal = true;
    if (!principal)
      throw InternalCheckError("freeDcpo: directed-join closure left the principal C-ideals");
  }

  out.family = std::move(family);
  const int m = static_cast<int>(out.family.size());
  requireCarrierWidth(m, "freeDcpo");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (out.family[i].subsetOf(out.family[j])) pairs.emplace_back(i, j);
  out.carrier = Poset(Preorder::saturate(m, pairs, familyLabels(pres.base(), out.family)));
  for (int x = 0; x < n; ++x) {
    Subset px = cIdealClosure(pres, Subset::single(n, x));
    out.eta[x] = -1;
    for (int i = 0; i < m; ++i)
      if (out.family[i] == px) out.eta[x] = i;
  }
  return out;
}

CoverPreservationReport isCoverPreserving(const Presentation& pres,
                                          const FiniteLattice& target,
                                          const std::vector<int>& f,
                                          const Limits& limits) {
  const int n = pres.base().size();
  if (static_cast<int>(f.size()) != n)
    throw PreconditionError("isCoverPreserving: map size mismatch");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (pres.base().leq(x, y) && !target.leq(f[x], f[y]))
        throw PreconditionError("isCoverPreserving: map is not order-preserving");

  auto imageJoin = [&](const Subset& u) {
    Subset img(target.size());
    u.forEach([&](int y) { img.set(f[y]); });
    return target.joinAll(img);
  };
  if (pres.isExtensional()) {
    for (const Cover& c : pres.covers())
      if (!target.leq(f[c.lhs], imageJoin(c.rhs)))
        return {false, c.lhs, c.rhs};
  } else {
    if ((std::uint64_t(1) << n) > limits.maxSteps)
      throw SizeGuardError("isCoverPreserving: too many candidate covers");
    for (int x = 0; x < n; ++x)
      for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
        Subset u(n, bits);
        if (!pres.coverHolds(x, u)) continue;
        if (!target.leq(f[x], imageJoin(u))) return {false, x, u};
      }
  }
  return {};
}

namespace {

struct FamilyView {
  std::vector<Subset> members;
  std::vector<int> eta;
  // Join table and bottom only when the suplattice structure is needed.
  std::vector<int> joinTable;
  int bottom = -1;
};

FamilyView freeCarrierFor(const Presentation& pres, const Limits& limits) {
  FamilyView view;
  if (pres.kind() == Presentation::Kind::Dcpo) {
    FreeDcpo fd = freeDcpo(pres, limits);
    view.members = fd.family;
    view.eta = fd.eta;
  } else {
    CIdealFamily fam = allCIdeals(pres, limits);
    view.members = fam.ideals;
    const int n = pres.base().size();
    view.eta.resize(n);
    for (int x = 0; x < n; ++x)
      view.eta[x] = fam.indexOf(cIdealClosure(pres, Subset::single(n, x)));
    const int m = static_cast<int>(view.members.size());
    view.joinTable.assign(m * m, -1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        view.joinTable[i * m + j] = fam.carrier.join(i, j);
    view.bottom = fam.carrier.bottom();
  }
  return view;
}

}  // namespace

Report universalPropertyOracle(const Presentation& pres, const FiniteLattice& target,
                               const Limits& limits) {
  Report report("universal property");
  const int n = pres.base().size();
  const int d = target.size();
  if (n > limits.maxCarrier || d > limits.maxCarrier)
    throw SizeGuardError("universalPropertyOracle: carrier exceeds enumeration bound");

  FamilyView view = freeCarrierFor(pres, limits);
  const int m = static_cast<int>(view.members.size());
  const bool suplat = pres.kind() == Presentation::Kind::Suplattice;

  std::uint64_t totalMaps = 1;
  for (int i = 0; i < n; ++i) {
    totalMaps *= static_cast<std::uint64_t>(d);
    if (totalMaps > limits.maxSteps)
      throw SizeGuardError("universalPropertyOracle: too many candidate maps");
  }

  int coverPreserving = 0;
  int existenceFailures = 0, uniquenessFailures = 0;
  std::string witness;

  std::vector<int> f(n, 0);
  for (std::uint64_t it = 0; it < totalMaps; ++it) {
    std::uint64_t rest = it;
    for (int i = n - 1; i >= 0; --i) {
      f[i] = static_cast<int>(rest % d);
      rest /= d;
    }
    bool monotone = true;
    for (int x = 0; x < n && monotone; ++x)
      for (int y = 0; y < n && monotone; ++y)
        if (pres.base().leq(x, y) && !target.leq(f[x], f[y])) monotone = false;
    if (!monotone) continue;
    if (!isCoverPreserving(pres, target, f, limits).preserves) continue;
    ++coverPreserving;

    // Candidate extension: joins of images over each C-ideal.
    std::vector<int> g0(m);
    for (int i = 0; i < m; ++i) {
      Subset img(d);
      view.members[i].forEach([&](int x) { img.set(f[x]); });
      g0[i] = target.joinAll(img);
    }
    auto valid = [&](const std::vector<int>& g) {
      for (int x = 0; x < n; ++x)
        if (g[view.eta[x]] != f[x]) return false;
      if (suplat) {
        if (g[view.bottom] != target.bottom()) return false;
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (g[view.joinTable[i * m + j]] != target.join(g[i], g[j])) return false;
      } else {
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            if (view.members[i].subsetOf(view.members[j]) && !target.leq(g[i], g[j]))
              return false;
      }
      return true;
    };
    if (!valid(g0)) {
      ++existenceFailures;
      if (witness.empty()) witness = "join-of-images extension invalid for some cover-preserving map";
      continue;
    }

    // Uniqueness: enumerate candidates with the eta-pinned values; anything
    // violating the pin cannot commute with eta, so pinning loses nothing.
    std::vector<int> pinned(m, -1);
    for (int x = 0; x < n; ++x) pinned[view.eta[x]] = f[x];
    std::vector<int> freePos;
    for (int i = 0; i < m; ++i)
      if (pinned[i] < 0) freePos.push_back(i);
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < freePos.size(); ++i) {
      candidates *= static_cast<std::uint64_t>(d);
      if (candidates > limits.maxSteps)
        throw SizeGuardError("universalPropertyOracle: too many candidate extensions");
    }
    int found = 0;
    std::vector<int> g = pinned;
    for (std::uint64_t c = 0; c < candidates; ++c) {
      std::uint64_t r = c;
      for (std::size_t i = 0; i < freePos.size(); ++i) {
        g[freePos[i]] = static_cast<int>(r % d);
        r /= d;
      }
      if (valid(g)) ++found;
    }
    if (found != 1) {
      ++uniquenessFailures;
      if (witness.empty())
        witness = "extension count " + std::to_string(found) + " for some cover-preserving map";
    }
  }

  report.add("cover-preserving maps found", true, std::to_string(coverPreserving));
  report.add("every cover-preserving map extends", existenceFailures == 0,
             existenceFailures ? witness : "");
  report.add("every extension is unique", uniquenessFailures == 0,
             uniquenessFailures ? witness : "");
  return report;
}

int TupleMap::apply(std::span<const int> args) const {
  if (args.size() != dims.size()) throw PreconditionError("TupleMap: arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (args[i] < 0 || args[i] >= dims[i])
      throw PreconditionError("TupleMap: argument out of range");
    idx = idx * static_cast<std::size_t>(dims[i]) + static_cast<std::size_t>(args[i]);
  }
  return values[idx];
}

TupleMap TupleMap::fromTable(const OpTable& t) {
  TupleMap m;
  m.dims.assign(t.arity(), t.carrierSize());
  m.targetSize = t.carrierSize();
  m.values = t.values();
  return m;
}

std::size_t TupleMap::flatSize(const std::vector<int>& dims) {
  std::size_t s = 1;
  for (int d : dims) s *= static_cast<std::size_t>(d);
  return s;
}

namespace {

void checkTupleMapMonotone(const std::vector<const Presentation*>& sources,
                           const Preorder& targetOrder, const TupleMap& f) {
  const int k = static_cast<int>(f.dims.size());
  const std::size_t total = TupleMap::flatSize(f.dims);
  std::vector<int> args(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (int i = k - 1; i >= 0; --i) {
      args[i] = static_cast<int>(r % f.dims[i]);
      r /= f.dims[i];
    }
    for (int c = 0; c < k; ++c)
      for (int b = 0; b < f.dims[c]; ++b) {
        if (!sources[c]->base().leq(args[c], b)) continue;
        std::vector<int> hi = args;
        hi[c] = b;
        if (!targetOrder.leq(f.apply(args), f.apply(hi)))
          throw PreconditionError("map is not order-preserving in coordinate " +
                                  std::to_string(c));
      }
  }
}

// Covers of one source, with subsumption-trivial ones dropped (the target
// membership test passes automatically for those since the map is
// order-preserving).
std::vector<Cover> nontrivialCovers(const Presentation& pres, const Limits& limits) {
  std::vector<Cover> out;
  const int n = pres.base().size();
  if (pres.isExtensional()) {
    for (const Cover& c : pres.covers())
      if (!pres.base().up(c.lhs).intersects(c.rhs)) out.push_back(c);
  } else {
    if ((std::uint64_t(1) << n) > limits.maxSteps)
      throw SizeGuardError("cover enumeration too large");
    for (int x = 0; x < n; ++x)
      for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
        Subset u(n, bits);
        if (pres.base().up(x).intersects(u)) continue;
        if (pres.kind() == Presentation::Kind::Dcpo && !isDirected(pres.base(), u))
          continue;
        if (pres.coverHolds(x, u)) out.push_back({x, u});
      }
  }
  return out;
}

}  // namespace

CoverStabilityReport isCoverStable(const std::vector<const Presentation*>& sources,
                                   const Presentation& target, const TupleMap& f,
                                   const Limits& limits) {
  const int k = static_cast<int>(f.dims.size());
  if (static_cast<int>(sources.size()) != k)
    throw PreconditionError("isCoverStable: source count mismatch");
  for (int i = 0; i < k; ++i)
    if (sources[i]->base().size() != f.dims[i])
      throw PreconditionError("isCoverStable: source size mismatch");
  checkTupleMapMonotone(sources, target.base(), f);

  for (int c = 0; c < k; ++c) {
    std::vector<Cover> covers = nontrivialCovers(*sources[c], limits);
    if (covers.empty()) continue;
    // Iterate assignments of the other coordinates.
    std::vector<int> restDims;
    for (int i = 0; i < k; ++i)
      if (i != c) restDims.push_back(f.dims[i]);
    const std::size_t restTotal = TupleMap::flatSize(restDims);
    std::vector<int> args(k, 0);
    for (std::size_t flat = 0; flat < restTotal; ++flat) {
      std::size_t r = flat;
      for (int i = k - 1, pos = static_cast<int>(restDims.size()) - 1; i >= 0; --i) {
        if (i == c) continue;
        args[i] = static_cast<int>(r % restDims[pos]);
        r /= restDims[pos--];
      }
      for (const Cover& cov : covers) {
        args[c] = cov.lhs;
        const int fx = f.apply(args);
        Subset image(target.base().size());
        cov.rhs.forEach([&](int y) {
          std::vector<int> a = args;
          a[c] = y;
          image.set(f.apply(a));
        });
        if (!target.coverHolds(fx, image)) return {false, c, args, cov.lhs, cov.rhs};
      }
    }
  }
  return {};
}

TupleMap liftOperation(const std::vector<const Presentation*>& sources,
                       const std::vector<const std::vector<Subset>*>& sourceFamilies,
                       const Presentation& target, const std::vector<Subset>& targetFamily,
                       const TupleMap& f, const Limits& limits) {
  CoverStabilityReport stable = isCoverStable(sources, target, f, limits);
  if (!stable.stable)
    throw PreconditionError("liftOperation: map is not cover-stable (coordinate " +
                            std::to_string(stable.coordinate) + ")");
  const int k = static_cast<int>(f.dims.size());
  if (static_cast<int>(sourceFamilies.size()) != k)
    throw PreconditionError("liftOperation: family count mismatch");

  auto familyIndex = [&](const std::vector<Subset>& fam, const Subset& s) {
    for (std::size_t i = 0; i < fam.size(); ++i)
      if (fam[i] == s) return static_cast<int>(i);
    return -1;
  };

  TupleMap out;
  out.targetSize = static_cast<int>(targetFamily.size());
  for (int i = 0; i < k; ++i)
    out.dims.push_back(static_cast<int>(sourceFamilies[i]->size()));
  const std::size_t total = TupleMap::flatSize(out.dims);
  out.values.assign(total, -1);

  std::vector<int> tup(k, 0);
  std::vector<int> args(k, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t r = flat;
    for (int i = k - 1; i >= 0; --i) {
      tup[i] = static_cast<int>(r % out.dims[i]);
      r /= out.dims[i];
    }
    // Image of the cartesian product of the chosen C-ideals.
    Subset image(target.base().size());
    std::function<void(int)> walk = [&](int pos) {
      if (pos == k) {
        image.set(f.apply(args));
        return;
      }
      (*sourceFamilies[pos])[tup[pos]].forEach([&](int x) {
        args[pos] = x;
        walk(pos + 1);
      });
    };
    walk(0);
    int idx = familyIndex(targetFamily, cIdealClosure(target, image));
    if (idx < 0)
      throw InternalCheckError("liftOperation: image closure left the target family");
    out.values[flat] = idx;
  }

  // Principal identity: lifting commutes with eta on generators.
  std::vector<int> baseArgs(k, 0);
  std::function<void(int)> check = [&](int pos) {
    if (pos == k) {
      std::vector<int> etaTup(k);
      for (int i = 0; i < k; ++i) {
        Subset px = cIdealClosure(*sources[i], Subset::single(sources[i]->base().size(), baseArgs[i]));
        etaTup[i] = familyIndex(*sourceFamilies[i], px);
        if (etaTup[i] < 0)
          throw InternalCheckError("liftOperation: principal C-ideal missing from source family");
      }
      Subset expected = cIdealClosure(
          target, Subset::single(target.base().size(), f.apply(baseArgs)));
      if (targetFamily[out.apply(etaTup)] != expected)
        throw InternalCheckError("liftOperation: principal identity violated");
      return;
    }
    for (int v = 0; v < sources[pos]->base().size(); ++v) {
      baseArgs[pos] = v;
      check(pos + 1);
    }
  };
  check(0);
  return out;
}

Report checkInequationLifting(const Presentation& pres, const OrderedAlgebra& alg,
                              const Inequation& ineq, const Limits& limits) {
  if (!alg.order().sameOrderAs(pres.base()))
    throw PreconditionError("checkInequationLifting: algebra carrier differs from presentation base");
  Report report("inequation lifting");

  std::vector<const Presentation*> srcs;
  for (int s = 0; s < alg.sig().size(); ++s) {
    srcs.assign(alg.sig().symbols()[s].arity, &pres);
    CoverStabilityReport stable =
        isCoverStable(srcs, pres, TupleMap::fromTable(alg.interp(s)), limits);
    if (!stable.stable)
      throw PreconditionError("checkInequationLifting: interpretation of " +
                              alg.sig().symbols()[s].name + " is not cover-stable");
  }

  SatisfactionReport base = satisfiesInequation(alg, ineq, limits);
  if (!base.holds) {
    report.add("not applicable", true, "inequation fails in the base");
    return report;
  }

  FamilyView view = freeCarrierFor(pres, limits);
  const int m = static_cast<int>(view.members.size());
  requireCarrierWidth(m, "checkInequationLifting");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (view.members[i].subsetOf(view.members[j])) pairs.emplace_back(i, j);
  Preorder carrier = Preorder::saturate(m, pairs, familyLabels(pres.base(), view.members));

  std::vector<OpTable> lifted;
  for (int s = 0; s < alg.sig().size(); ++s) {
    const int k = alg.sig().symbols()[s].arity;
    std::vector<const Presentation*> sv(k, &pres);
    std::vector<const std::vector<Subset>*> fv(k, &view.members);
    TupleMap lift = liftOperation(sv, fv, pres, view.members,
                                  TupleMap::fromTable(alg.interp(s)), limits);
    lifted.emplace_back(m, k, lift.values);
  }
  OrderedAlgebra liftedAlg(carrier, alg.sig(), std::move(lifted));
  SatisfactionReport up = satisfiesInequation(liftedAlg, ineq, limits);
  std::string w;
  if (!up.holds) {
    w = "violated at (";
    for (std::size_t i = 0; i < up.witness.size(); ++i) {
      if (i) w += ",";
      w += carrier.label(up.witness[i]);
    }
    w += ")";
  }
  report.add("inequation lifts to the free carrier", up.holds, w);
  return report;
}

}  // namespace canext
