#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "canext/lattice.hpp"
#include "canext/report.hpp"

namespace canext {

// One cover constraint x <| U.
struct Cover {
  int lhs;
  Subset rhs;
};

// A dcpo or suplattice presentation: a preorder plus covers, either listed
// (extensional) or given by a membership oracle (intensional). Reflexive
// covers x <| U with x below some member of U are admitted implicitly; they
// are sound for any presentation since order-preserving maps already satisfy
// them.
class Presentation {
 public:
  enum class Kind { Dcpo, Suplattice };
  using CoverOracle = std::function<bool(int, const Subset&)>;

  Presentation() = default;
  static Presentation extensional(Preorder base, Kind kind, std::vector<Cover> covers);
  // Intensional oracles must declare monotonicity in U (x <| U and U ⊆ U'
  // directed imply x <| U') before saturation may use them.
  static Presentation intensional(Preorder base, Kind kind, CoverOracle oracle,
                                  bool monotoneInU);

  // Same covers viewed over a join-semilattice base: closure additionally
  // respects binary joins and the bottom. This is the suplattice reading of
  // a stable presentation; the result has suplattice kind.
  Presentation withJoinStructure(FiniteLattice joinBase) const;

  const Preorder& base() const { return base_; }
  Kind kind() const { return kind_; }
  bool isExtensional() const { return !oracle_; }
  const std::vector<Cover>& covers() const { return covers_; }
  bool oracleMonotoneDeclared() const { return oracleMonotone_; }
  bool hasJoinStructure() const { return joinBase_.has_value(); }
  const FiniteLattice& joinBase() const { return *joinBase_; }

  // Membership test for x <| U, including the implicit cover families:
  // order-subsumption, subset-subsumption of listed covers, and join covers
  // when the presentation carries the join structure.
  bool coverHolds(int x, const Subset& u) const;

  // Adds every element forced by one round of covers over `s`. Used by the
  // closure fixpoint and the C-ideal test.
  Subset saturationStep(const Subset& s) const;

 private:
  Preorder base_;
  Kind kind_ = Kind::Dcpo;
  std::vector<Cover> covers_;
  CoverOracle oracle_;
  bool oracleMonotone_ = false;
  std::optional<FiniteLattice> joinBase_;
};

// Least fixpoint of down-closure plus cover saturation.
Subset cIdealClosure(const Presentation& pres, Subset start);
bool isCIdeal(const Presentation& pres, const Subset& s);

// The complete lattice of all C-ideals, generated as the join-closure of the
// principal C-ideals plus <∅>, cross-checked against exhaustive subset
// filtering on small carriers.
struct CIdealFamily {
  Presentation pres;
  std::vector<Subset> ideals;  // sorted by bit pattern
  FiniteLattice carrier;       // inclusion order; meets are intersections
  int indexOf(const Subset& s) const;
};
CIdealFamily allCIdeals(const Presentation& pres, const Limits& limits = {});

// The freely generated dcpo: least family of C-ideals containing the
// principal ones and closed under directed joins. On finite carriers this is
// exactly the principal C-ideals; the fixpoint is run and the collapse
// asserted rather than assumed.
struct FreeDcpo {
  Presentation pres;
  std::vector<Subset> family;
  Poset carrier;  // inclusion order
  std::vector<int> eta;  // x -> index of <x>
};
FreeDcpo freeDcpo(const Presentation& pres, const Limits& limits = {});

struct CoverPreservationReport {
  bool preserves = true;
  int x = -1;
  Subset u;
};
// Does f: P -> D carry every cover x <| U to f(x) <= join of f[U]?
// Precondition: f order-preserving.
CoverPreservationReport isCoverPreserving(const Presentation& pres,
                                          const FiniteLattice& target,
                                          const std::vector<int>& f,
                                          const Limits& limits = {});

// Existence and uniqueness of extensions along eta, by exhaustive
// enumeration of cover-preserving maps and of candidate extensions.
Report universalPropertyOracle(const Presentation& pres, const FiniteLattice& target,
                               const Limits& limits = {});

// n-ary map between carriers of possibly different sizes.
struct TupleMap {
  std::vector<int> dims;
  int targetSize = 0;
  std::vector<int> values;  // row-major, first coordinate most significant

  int apply(std::span<const int> args) const;
  static TupleMap fromTable(const OpTable& t);
  static std::size_t flatSize(const std::vector<int>& dims);
};

struct CoverStabilityReport {
  bool stable = true;
  int coordinate = -1;
  std::vector<int> tuple;
  int x = -1;
  Subset u;
};
// Does f carry covers in each coordinate to covers of image sets in the
// target presentation? Precondition: f order-preserving per coordinate.
CoverStabilityReport isCoverStable(const std::vector<const Presentation*>& sources,
                                   const Presentation& target, const TupleMap& f,
                                   const Limits& limits = {});

// f-bar over the given carrier families: f(X1,..,Xn) = <f[X1 x .. x Xn]>.
// Asserts the principal identity f-bar(<x1>,..,<xn>) = <f(x...)> and that
// every value lands in the target family. Precondition: isCoverStable.
TupleMap liftOperation(const std::vector<const Presentation*>& sources,
                       const std::vector<const std::vector<Subset>*>& sourceFamilies,
                       const Presentation& target, const std::vector<Subset>& targetFamily,
                       const TupleMap& f, const Limits& limits = {});

// P |= s <= t implies the free carrier satisfies it, given cover-stable
// interpretations. The algebra's carrier must be the presentation base.
Report checkInequationLifting(const Presentation& pres, const OrderedAlgebra& alg,
                              const Inequation& ineq, const Limits& limits = {});

}  // namespace canext
