#pragma once

#include "canext/completion.hpp"
#include "canext/presentation.hpp"

namespace canext {

// Which ideals of A the C_A condition quantifies over. On a finite lattice
// every ideal is principal (asserted at construction), so the principal
// sweep is exact; the full sweep is retained for audits.
enum class IdealQuantification { Principal, All };

// The dcpo presentation Delta(A) over the filter completion F(A): covers are
// given intensionally by the ideal-quantified condition of coverHoldsDelta.
// `plain` is the dcpo reading; `suplattice` additionally carries the join
// structure of F(A), which is sound by the stability of the cover relation.
struct DeltaPresentation {
  FiniteLattice base;
  FilterCompletion fc;
  Presentation plain;
  Presentation suplattice;
};

DeltaPresentation deltaPresentation(const FiniteLattice& a, const Limits& limits = {},
                                    IdealQuantification quant = IdealQuantification::Principal);
DeltaPresentation deltaPresentation(const FiniteLattice& a, const FilterCompletion& fc,
                                    const Limits& limits = {},
                                    IdealQuantification quant = IdealQuantification::Principal);

// Evaluates the C_A condition for x <| U directly. U must be nonempty and
// directed in F(A).
bool coverHoldsDelta(const DeltaPresentation& dp, int x, const Subset& u,
                     IdealQuantification quant = IdealQuantification::Principal);

// The canonical extension A^sigma: carrier built from the C_A-ideals of
// Delta(A) (equivalently the free dcpo; both are computed and compared),
// with e(a) = <up(a)> and etaF(x) = <x>. Construction asserts the
// presentation lemmas: <x> = down(x), etaF preserves joins and all meets,
// directed unions of embedded principals are already C_A-ideals, and every
// carrier element is a lattice ideal of F(A).
struct CanonicalExtension {
  FiniteLattice base;
  FilterCompletion fc;
  DeltaPresentation delta;
  CIdealFamily family;
  FiniteLattice carrier;
  std::vector<int> embed;  // e: A -> carrier
  std::vector<int> etaF;   // F(A) -> carrier
};

CanonicalExtension canonicalExtension(const FiniteLattice& a, const Limits& limits = {});
CanonicalExtension canonicalExtension(const FiniteLattice& a, const FilterCompletion& fc,
                                      const Limits& limits = {});

// Exhaustive density and compactness over all filters and ideals of A.
Report verifyDensityCompactness(const CanonicalExtension& ce, const Limits& limits = {});

// {meet of e[F] | F a filter of A}, asserted equal to the etaF image.
std::vector<int> closedElements(const CanonicalExtension& ce, const Limits& limits = {});

// Two-stage sigma extension of a monotone map between lattices: meets of
// embedded images on closed tuples, then joins over dominated closed tuples.
TupleMap sigmaExtensionDirect(const std::vector<const CanonicalExtension*>& sources,
                              const CanonicalExtension& target, const TupleMap& f,
                              const Limits& limits = {});

// Operator route: extends f to the filter completions, asserts the extension
// is cover-stable for the Delta presentations, lifts it to the carriers, and
// asserts pointwise agreement with the direct sigma extension.
TupleMap sigmaExtensionViaLift(const std::vector<const CanonicalExtension*>& sources,
                               const CanonicalExtension& target, const TupleMap& f,
                               const Limits& limits = {});

// The lifting half of the operator route, starting from an already-extended
// map over the filter completions: asserts cover-stability and lifts to the
// carriers. No comparison against the direct route.
TupleMap sigmaFromFilterExtension(const std::vector<const CanonicalExtension*>& sources,
                                  const CanonicalExtension& target, const TupleMap& fF,
                                  const Limits& limits = {});

// Canonicity of s <= t for algebras whose (used) symbols are all operators:
// runs the filter-completion transfer step, then the cover-stable lifting
// step, and cross-checks through the finite isomorphism e.
Report checkCanonicity(const OrderedAlgebra& alg, const Inequation& ineq,
                       const Limits& limits = {});

// The join-preserving counterpart of etaF out of the ideal completion:
// mu(y) = join of e[y]. Asserts preservation of finite joins, directed
// joins, and binary meets.
std::pair<IdealCompletion, MonotoneMap> muEmbedding(const CanonicalExtension& ce,
                                                    const Limits& limits = {});

}  // namespace canext
