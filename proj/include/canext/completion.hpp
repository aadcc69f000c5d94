#pragma once

#include <vector>

#include "canext/lattice.hpp"
#include "canext/report.hpp"

namespace canext {

// Co-directed meet completion of a lattice: filters ordered by reverse
// inclusion, with the principal-filter embedding a |-> up(a). Carrier meets
// are generated filters of unions, joins are intersections; both are
// verified against the glb/lub tables at construction.
struct FilterCompletion {
  FiniteLattice base;
  std::vector<Subset> filters;  // sorted by bit pattern
  FiniteLattice carrier;        // order: x <= y iff filters[x] >= filters[y]
  std::vector<int> embed;       // a -> index of up(a)

  int indexOfFilter(const Subset& f) const;
};

// Dual construction: ideals ordered by inclusion, embedding a |-> down(a).
struct IdealCompletion {
  FiniteLattice base;
  std::vector<Subset> ideals;
  FiniteLattice carrier;  // order: inclusion
  std::vector<int> embed;

  int indexOfIdeal(const Subset& f) const;
};

FilterCompletion filterCompletion(const FiniteLattice& a, const Limits& limits = {});
IdealCompletion idealCompletion(const FiniteLattice& a, const Limits& limits = {});

// Smallest filter containing s (up-closure plus binary meets).
Subset filterGeneratedBy(const FiniteLattice& a, Subset s);
Subset idealGeneratedBy(const FiniteLattice& a, Subset s);

// Verifies the four universal axioms of the co-directed meet completion,
// exhaustively over co-directed subsets. Returns a pass/fail item per axiom
// with witnesses.
Report checkCoCompletionAxioms(const FilterCompletion& fc, const Limits& limits = {});

// Unique co-Scott continuous extension of an order-preserving map between
// lattices: fF(x) = meet of { up(f(a)) | x <= up(a) }.
MonotoneMap extendMapF(const FilterCompletion& src, const FilterCompletion& tgt,
                       const MonotoneMap& f);

// Materialized identification F(A1) x ... x F(An) = F(A1 x ... x An),
// maps verified inverse to each other and order-preserving both ways.
struct ProductFilterIdentification {
  FiniteLattice productLattice;
  FilterCompletion productCompletion;
  std::vector<int> tupleToProduct;              // odometer over component filter indices
  std::vector<std::vector<int>> productToTuple;
};
ProductFilterIdentification productIdentification(
    const std::vector<const FilterCompletion*>& components, const Limits& limits = {});

// One symbol of a lattice algebra lifted to the filter completion via the
// product identification. Callers lifting several symbols of the same arity
// may pass a prebuilt identification to reuse it.
OpTable extendOperationToF(const OrderedAlgebra& alg, int symIdx,
                           const FilterCompletion& fc, const Limits& limits = {},
                           const ProductFilterIdentification* prebuilt = nullptr);

// Whole algebra lifted: omega_F := (omega_A)^F per symbol.
OrderedAlgebra liftAlgebraToF(const OrderedAlgebra& alg, const FilterCompletion& fc,
                              const Limits& limits = {});

// If the base algebra satisfies s <= t, the lifted algebra must as well.
Report checkFilterInequationTransfer(const OrderedAlgebra& alg, const Inequation& ineq,
                                     const Limits& limits = {});

// Operators lift to operators. Precondition: the symbol is an operator.
Report checkOperatorPreservation(const OrderedAlgebra& alg, int symIdx,
                                 const Limits& limits = {});

}  // namespace canext
