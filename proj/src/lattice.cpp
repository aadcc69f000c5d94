#include "canext/lattice.hpp"

#include <algorithm>
#include <functional>

#include "canext/error.hpp"

namespace canext {

FiniteLattice FiniteLattice::fromPoset(const Poset& p) {
  const int n = p.size();
  if (n == 0) throw PreconditionError("fromPoset: empty carrier");
  FiniteLattice lat;
  lat.poset_ = p;
  lat.meet_.assign(n * n, -1);
  lat.join_.assign(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Subset lower = p.down(i) & p.down(j);
      int glb = maximumOf(p, lower);
      if (glb < 0)
        throw NotALatticeError("not a lattice: no meet of " + p.label(i) +
                                   " and " + p.label(j), i, j);
      Subset upper = p.up(i) & p.up(j);
      int lub = minimumOf(p, upper);
      if (lub < 0)
        throw NotALatticeError("not a lattice: no join of " + p.label(i) +
                                   " and " + p.label(j), i, j);
      lat.meet_[i * n + j] = glb;
      lat.join_[i * n + j] = lub;
    }
  lat.bottom_ = 0;
  lat.top_ = 0;
  for (int i = 1; i < n; ++i) {
    lat.bottom_ = lat.meet(lat.bottom_, i);
    lat.top_ = lat.join(lat.top_, i);
  }
  // Law audit over the tables: commutativity, associativity, absorption.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (lat.meet(i, j) != lat.meet(j, i) || lat.join(i, j) != lat.join(j, i))
        throw InternalCheckError("lattice tables not commutative");
      if (lat.meet(i, lat.join(i, j)) != i || lat.join(i, lat.meet(i, j)) != i)
        throw InternalCheckError("lattice tables violate absorption");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (lat.meet(lat.meet(i, j), k) != lat.meet(i, lat.meet(j, k)))
          throw InternalCheckError("meet not associative");
        if (lat.join(lat.join(i, j), k) != lat.join(i, lat.join(j, k)))
          throw InternalCheckError("join not associative");
      }
  return lat;
}

int FiniteLattice::meetAll(const Subset& s) const {
  int acc = top_;
  s.forEach([&](int i) { acc = meet(acc, i); });
  return acc;
}

int FiniteLattice::joinAll(const Subset& s) const {
  int acc = bottom_;
  s.forEach([&](int i) { acc = join(acc, i); });
  return acc;
}

DistributivityReport isDistributive(const FiniteLattice& a) {
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          return {false, {x, y, z}};
  return {};
}

namespace {

// Enumerates nonempty subsets that are closed upward per `above` and closed
// under the binary operation `op` (meets for filters, joins for ideals).
// DFS over elements in an order where everything `above` an element is
// decided first; `required` tracks op-closure obligations.
std::vector<Subset> enumerateClosedSets(
    const Poset& p, const std::function<const Subset&(int)>& above,
    const std::function<int(int, int)>& op, const Limits& limits,
    const char* what) {
  const int n = p.size();
  requireCarrierWidth(n, what);
  if (n > limits.maxCarrier)
    throw SizeGuardError(std::string(what) + ": carrier size " + std::to_string(n) +
                         " exceeds enumeration bound " + std::to_string(limits.maxCarrier));

  // Linear extension processing `above`-closed elements first.
  std::vector<int> order;
  {
    Subset placed(n);
    while (static_cast<int>(order.size()) < n)
      for (int i = 0; i < n; ++i) {
        if (placed.test(i)) continue;
        if (above(i).minus(placed).count() == 1) {  // only i itself left
          order.push_back(i);
          placed.set(i);
        }
      }
  }

  std::vector<Subset> out;
  std::uint64_t steps = 0;
  std::function<void(int, Subset, Subset)> dfs = [&](int pos, Subset included,
                                                     Subset required) {
    if (++steps > limits.maxSteps)
      throw SizeGuardError(std::string(what) + ": enumeration exceeded step budget");
    if (pos == n) {
      if (!included.empty()) out.push_back(included);
      return;
    }
    const int e = order[pos];
    // Exclude branch.
    if (!required.test(e)) dfs(pos + 1, included, required);
    // Include branch: everything above e must already be in.
    if (!above(e).minus(Subset::single(n, e)).subsetOf(included)) return;
    Subset req = required;
    bool dead = false;
    included.forEach([&](int f) {
      int m = op(e, f);
      if (m != e && m != f) req.set(m);
      // m == f would contradict the processing order; m == e needs nothing.
    });
    if (dead) return;
    included.set(e);
    dfs(pos + 1, included, req);
  };
  dfs(0, Subset(n), Subset(n));

  // Belt-and-braces verification of every candidate.
  for (const Subset& s : out) {
    bool ok = !s.empty();
    s.forEach([&](int x) {
      if (!above(x).subsetOf(s)) ok = false;
      s.forEach([&](int y) {
        if (!s.test(op(x, y))) ok = false;
      });
    });
    if (!ok) throw InternalCheckError(std::string(what) + ": enumeration produced a non-closed set");
  }
  std::sort(out.begin(), out.end(),
            [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });
  return out;
}

}  // namespace

std::vector<Subset> filtersOf(const FiniteLattice& a, const Limits& limits) {
  return enumerateClosedSets(
      a.poset(), [&](int i) -> const Subset& { return a.poset().up(i); },
      [&](int x, int y) { return a.meet(x, y); }, limits, "filtersOf");
}

std::vector<Subset> idealsOf(const FiniteLattice& a, const Limits& limits) {
  return enumerateClosedSets(
      a.poset(), [&](int i) -> const Subset& { return a.poset().down(i); },
      [&](int x, int y) { return a.join(x, y); }, limits, "idealsOf");
}

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].arity < 0)
      throw PreconditionError("Signature: negative arity for " + symbols_[i].name);
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i].name == symbols_[j].name)
        throw PreconditionError("Signature: duplicate symbol " + symbols_[i].name);
  }
}

int Signature::indexOf(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return static_cast<int>(i);
  return -1;
}

std::size_t OpTable::tableSize(int carrierSize, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(carrierSize);
  return s;
}

OpTable::OpTable(int carrierSize, int arity, std::vector<int> values)
    : n_(carrierSize), arity_(arity), values_(std::move(values)) {
  if (arity < 0) throw PreconditionError("OpTable: negative arity");
  if (values_.size() != tableSize(carrierSize, arity))
    throw PreconditionError("OpTable: table size mismatch");
  for (int v : values_)
    if (v < 0 || v >= carrierSize)
      throw PreconditionError("OpTable: value out of carrier range");
}

int OpTable::apply(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw PreconditionError("OpTable: arity mismatch");
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= n_) throw PreconditionError("OpTable: argument out of range");
    idx = idx * n_ + static_cast<std::size_t>(a);
  }
  return values_[idx];
}

OrderedAlgebra::OrderedAlgebra(Preorder carrier, Signature sig,
                               std::vector<OpTable> interp)
    : carrier_(std::move(carrier)), sig_(std::move(sig)), interp_(std::move(interp)) {
  validate();
}

OrderedAlgebra::OrderedAlgebra(FiniteLattice carrier, Signature sig,
                               std::vector<OpTable> interp)
    : carrier_(std::move(carrier)), sig_(std::move(sig)), interp_(std::move(interp)) {
  validate();
}

const FiniteLattice& OrderedAlgebra::lattice() const {
  if (!hasLattice())
    throw PreconditionError("OrderedAlgebra: carrier is not a lattice");
  return std::get<FiniteLattice>(carrier_);
}

const Preorder& OrderedAlgebra::order() const {
  if (hasLattice()) return std::get<FiniteLattice>(carrier_).poset();
  return std::get<Preorder>(carrier_);
}

void OrderedAlgebra::validate() {
  const Preorder& ord = order();
  const int n = ord.size();
  if (static_cast<int>(interp_.size()) != sig_.size())
    throw PreconditionError("OrderedAlgebra: interpretation count mismatch");
  for (int s = 0; s < sig_.size(); ++s) {
    const auto& sym = sig_.symbols()[s];
    const OpTable& t = interp_[s];
    if (t.carrierSize() != n || t.arity() != sym.arity)
      throw PreconditionError("OrderedAlgebra: table shape mismatch for " + sym.name);
    // Monotone in each coordinate.
    const int k = sym.arity;
    std::vector<int> args(k, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (pos == k) {
        for (int c = 0; c < k; ++c) {
          const int a = args[c];
          for (int b = 0; b < n; ++b) {
            if (!ord.leq(a, b)) continue;
            std::vector<int> hi = args;
            hi[c] = b;
            if (!ord.leq(t.apply(args), t.apply(hi)))
              throw PreconditionError(
                  "OrderedAlgebra: " + sym.name + " not order-preserving in coordinate " +
                  std::to_string(c) + " at pair (" + ord.label(a) + "," + ord.label(b) + ")");
          }
        }
        return;
      }
      for (int v = 0; v < n; ++v) {
        args[pos] = v;
        walk(pos + 1);
      }
    };
    walk(0);
  }
}

std::string OperatorReport::describe(const FiniteLattice& target) const {
  if (isOperator) return "operator";
  std::string out = "join not preserved in coordinate " + std::to_string(coordinate) +
                    " at tuple (";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += target.label(tuple[i]);
  }
  out += ") with extra " + target.label(extra);
  return out;
}

OperatorReport isOperator(const std::vector<const FiniteLattice*>& sources,
                          const FiniteLattice& target, const OpTable& f) {
  const int k = f.arity();
  if (static_cast<int>(sources.size()) != k)
    throw PreconditionError("isOperator: source count mismatch");
  std::vector<int> args(k, 0);
  OperatorReport bad;
  std::function<bool(int)> walk = [&](int pos) -> bool {
    if (pos == k) {
      for (int c = 0; c < k; ++c) {
        const FiniteLattice& src = *sources[c];
        for (int b = 0; b < src.size(); ++b) {
          std::vector<int> joined = args, other = args;
          joined[c] = src.join(args[c], b);
          other[c] = b;
          if (f.apply(joined) != target.join(f.apply(args), f.apply(other))) {
            bad = {false, c, args, b};
            return false;
          }
        }
      }
      return true;
    }
    for (int v = 0; v < sources[pos]->size(); ++v) {
      args[pos] = v;
      if (!walk(pos + 1)) return false;
    }
    return true;
  };
  if (!walk(0)) return bad;
  return {};
}

OperatorReport isOperator(const FiniteLattice& carrier, const OpTable& f) {
  std::vector<const FiniteLattice*> srcs(f.arity(), &carrier);
  return isOperator(srcs, carrier, f);
}

OperatorReport isOperator(const OrderedAlgebra& alg, int symIdx) {
  return isOperator(alg.lattice(), alg.interp(symIdx));
}

Term Term::variable(int index) {
  if (index < 0) throw PreconditionError("Term: negative variable index");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

int Term::depth() const {
  if (isVariable() || args_.empty()) return 0;
  int d = 0;
  for (const Term& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

int Term::varCount() const {
  if (isVariable()) return var_ + 1;
  int c = 0;
  for (const Term& a : args_) c = std::max(c, a.varCount());
  return c;
}

std::string Term::text() const {
  if (isVariable()) return "x" + std::to_string(var_);
  if (args_.empty()) return symbol_;
  std::string out = "(" + symbol_;
  for (const Term& a : args_) out += " " + a.text();
  return out + ")";
}

bool Term::operator==(const Term& o) const {
  return var_ == o.var_ && symbol_ == o.symbol_ && args_ == o.args_;
}

int evalTerm(const Term& t, const OrderedAlgebra& alg, std::span<const int> assignment) {
  if (t.isVariable()) {
    if (t.varIndex() >= static_cast<int>(assignment.size()))
      throw PreconditionError("evalTerm: assignment too short for variable x" +
                              std::to_string(t.varIndex()));
    return assignment[t.varIndex()];
  }
  const int s = alg.sig().indexOf(t.symbol());
  if (s < 0) throw PreconditionError("evalTerm: unknown symbol " + t.symbol());
  const auto& sym = alg.sig().symbols()[s];
  if (sym.arity != static_cast<int>(t.args().size()))
    throw PreconditionError("evalTerm: arity mismatch for " + t.symbol());
  std::vector<int> vals;
  vals.reserve(t.args().size());
  for (const Term& a : t.args()) vals.push_back(evalTerm(a, alg, assignment));
  return alg.interp(s).apply(vals);
}

SatisfactionReport satisfiesInequation(const OrderedAlgebra& alg, const Inequation& ineq,
                                       const Limits& limits) {
  const int n = alg.size();
  const int vars = ineq.vars;
  std::uint64_t total = 1;
  for (int i = 0; i < vars; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > limits.maxSteps)
      throw SizeGuardError("satisfiesInequation: assignment space exceeds step budget");
  }
  std::vector<int> assignment(vars, 0);
  for (std::uint64_t it = 0;; ++it) {
    if (!alg.order().leq(evalTerm(ineq.lhs, alg, assignment),
                         evalTerm(ineq.rhs, alg, assignment)))
      return {false, assignment};
    // Odometer with the last variable fastest.
    int pos = vars - 1;
    while (pos >= 0 && assignment[pos] == n - 1) assignment[pos--] = 0;
    if (pos < 0) break;
    ++assignment[pos];
  }
  return {};
}

}  // namespace canext
