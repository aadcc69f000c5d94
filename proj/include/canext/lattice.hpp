#pragma once

#include <array>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "canext/limits.hpp"
#include "canext/order.hpp"

namespace canext {

// Bounded lattice over a finite poset: meet/join tables plus bounds,
// derived by glb/lub search. Tables satisfy the usual laws (checked at
// construction).
class FiniteLattice {
 public:
  FiniteLattice() = default;
  static FiniteLattice fromPoset(const Poset& p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label(int i) const { return poset_.label(i); }
  bool leq(int i, int j) const { return poset_.leq(i, j); }
  int meet(int i, int j) const { return meet_[i * size() + j]; }
  int join(int i, int j) const { return join_[i * size() + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Fold over a subset; empty meet is top, empty join is bottom.
  int meetAll(const Subset& s) const;
  int joinAll(const Subset& s) const;

  bool sameAs(const FiniteLattice& o) const {
    return poset_.sameOrderAs(o.poset_) && meet_ == o.meet_ && join_ == o.join_;
  }

 private:
  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

struct DistributivityReport {
  bool distributive = true;
  std::array<int, 3> witness{-1, -1, -1};  // (x,y,z) with x&(y|z) != (x&y)|(x&z)
};
DistributivityReport isDistributive(const FiniteLattice& a);

// All nonempty up-closed meet-closed subsets (dually down-closed,
// join-closed), sorted by bit pattern. Enumerated and verified, not assumed
// principal.
std::vector<Subset> filtersOf(const FiniteLattice& a, const Limits& limits = {});
std::vector<Subset> idealsOf(const FiniteLattice& a, const Limits& limits = {});

// Operation symbols with arities.
struct Signature {
  struct Symbol {
    std::string name;
    int arity;
  };
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);
  int indexOf(const std::string& name) const;  // -1 when absent
  const std::vector<Symbol>& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }

 private:
  std::vector<Symbol> symbols_;
};

// Interpretation table of one operation symbol: values over carrier^arity,
// row-major with the first argument most significant.
class OpTable {
 public:
  OpTable() = default;
  OpTable(int carrierSize, int arity, std::vector<int> values);

  int carrierSize() const { return n_; }
  int arity() const { return arity_; }
  int apply(std::span<const int> args) const;
  const std::vector<int>& values() const { return values_; }

  static std::size_t tableSize(int carrierSize, int arity);

 private:
  int n_ = 0;
  int arity_ = 0;
  std::vector<int> values_;
};

// Preordered algebra: a carrier (plain preorder or lattice) with an
// order-preserving interpretation per symbol. Monotonicity of every
// interpretation in every coordinate is checked at construction.
class OrderedAlgebra {
 public:
  OrderedAlgebra() = default;
  OrderedAlgebra(Preorder carrier, Signature sig, std::vector<OpTable> interp);
  OrderedAlgebra(FiniteLattice carrier, Signature sig, std::vector<OpTable> interp);

  bool hasLattice() const { return std::holds_alternative<FiniteLattice>(carrier_); }
  const FiniteLattice& lattice() const;
  const Preorder& order() const;
  int size() const { return order().size(); }
  const Signature& sig() const { return sig_; }
  const OpTable& interp(int symIdx) const { return interp_[symIdx]; }
  const std::vector<OpTable>& interps() const { return interp_; }

 private:
  void validate();
  std::variant<Preorder, FiniteLattice> carrier_;
  Signature sig_;
  std::vector<OpTable> interp_;
};

struct OperatorReport {
  bool isOperator = true;
  int coordinate = -1;
  std::vector<int> tuple;  // fixed arguments, full arity
  int extra = -1;          // the b_i joined into the witnessed coordinate
  std::string describe(const FiniteLattice& target) const;
};

// Does f preserve binary joins in every coordinate?
OperatorReport isOperator(const std::vector<const FiniteLattice*>& sources,
                          const FiniteLattice& target, const OpTable& f);
OperatorReport isOperator(const FiniteLattice& carrier, const OpTable& f);
// Convenience: check one symbol of a lattice-carried algebra.
OperatorReport isOperator(const OrderedAlgebra& alg, int symIdx);

// Term over a signature: a variable index or a symbol applied to subterms.
class Term {
 public:
  static Term variable(int index);
  static Term apply(std::string symbol, std::vector<Term> args = {});

  bool isVariable() const { return var_ >= 0; }
  int varIndex() const { return var_; }
  const std::string& symbol() const { return symbol_; }
  const std::vector<Term>& args() const { return args_; }

  int depth() const;     // variables and constants have depth 0
  int varCount() const;  // 1 + max variable index, 0 if ground
  std::string text() const;
  bool operator==(const Term& o) const;

 private:
  int var_ = -1;
  std::string symbol_;
  std::vector<Term> args_;
};

struct Inequation {
  Term lhs;
  Term rhs;
  int vars = 0;
  std::string text() const { return "(leq " + lhs.text() + " " + rhs.text() + ")"; }
};

int evalTerm(const Term& t, const OrderedAlgebra& alg, std::span<const int> assignment);

struct SatisfactionReport {
  bool holds = true;
  std::vector<int> witness;  // first failing assignment in odometer order
};
SatisfactionReport satisfiesInequation(const OrderedAlgebra& alg, const Inequation& ineq,
                                       const Limits& limits = {});

}  // namespace canext
