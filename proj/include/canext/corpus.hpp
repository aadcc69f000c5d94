#pragma once

#include <cstdint>

#include "canext/io.hpp"

namespace canext::corpus {

struct NamedLattice {
  std::string name;
  FiniteLattice lattice;
};
struct NamedPresentation {
  std::string name;
  Presentation presentation;
};

// CH2, CH3, B2, B3, N5, M3.
std::vector<NamedLattice> corpusLattices();
// PRES1 (suplattice, t <| {a,b} over a discrete base) and PRES2
// (dcpo, x <| {y} over a discrete base).
std::vector<NamedPresentation> corpusPresentations();
// The diamond with a join-with-a diamond operator; the CLI example algebra.
OrderedAlgebra b2DiamondAlgebra();
// Everything above packaged as a corpus document (plus an inequation entry).
Document corpusDocument();

// Random meet-closed subset of a small Boolean algebra, as a lattice.
FiniteLattice randomLattice(std::uint64_t seed, int maxSize);
// Random dcpo presentation: saturated random pairs plus covers whose right
// sides contain their maxima.
Presentation randomPresentation(std::uint64_t seed, int maxSize);

// All unary operator tables over a small lattice, in odometer order.
std::vector<OpTable> allUnaryOperators(const FiniteLattice& lat);

// Enumerates terms over the signature (variables x0..x(maxVars-1)) in a
// deterministic by-depth order, up to `cap` terms of depth <= maxDepth.
std::vector<Term> enumerateTerms(const Signature& sig, int maxVars, int maxDepth, int cap);

// Runs all acceptance criteria from one invocation. Each report item is one
// criterion; its runtime bound is enforced as part of the pass condition.
Report runAcceptance(std::uint64_t seed, const Limits& limits = {});

}  // namespace canext::corpus
