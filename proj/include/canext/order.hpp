#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/limits.hpp"
#include "canext/subset.hpp"

namespace canext {

// Finite preorder: reflexive-transitive boolean order matrix over an
// index-based carrier. Labels only matter at the I/O boundary.
// Immutable after construction.
class Preorder {
 public:
  Preorder() = default;

  // Reflexive-transitive closure of a raw pair relation.
  static Preorder saturate(int n, const std::vector<std::pair<int, int>>& pairs,
                           std::vector<std::string> labels = {});

  // Accepts an already reflexive-transitive matrix (row-major n*n); throws
  // PreconditionError if it is not.
  static Preorder fromMatrix(int n, const std::vector<bool>& leq,
                             std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int i, int j) const { return up_[i].test(j); }
  // {j | i <= j} and {j | j <= i}.
  const Subset& up(int i) const { return up_[i]; }
  const Subset& down(int i) const { return down_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool isAntisymmetric() const;
  bool sameOrderAs(const Preorder& other) const;

 protected:
  Preorder(int n, std::vector<Subset> up, std::vector<Subset> down,
           std::vector<std::string> labels)
      : n_(n), up_(std::move(up)), down_(std::move(down)),
        labels_(std::move(labels)) {}

  int n_ = 0;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::string> labels_;
};

// A preorder that is additionally antisymmetric. The constructor checks.
class Poset : public Preorder {
 public:
  Poset() = default;
  explicit Poset(const Preorder& p);
};

// Order-preserving map between preorders; the constructor rejects
// non-monotone images.
struct MonotoneMap {
  MonotoneMap() = default;
  MonotoneMap(Preorder source, Preorder target, std::vector<int> image);

  int operator()(int i) const { return image[i]; }

  Preorder source;
  Preorder target;
  std::vector<int> image;
};

// Collapses x == y whenever x <= y <= x. The surjection is order-preserving
// and order-reflecting on classes.
std::pair<Poset, MonotoneMap> quotientToPoset(const Preorder& p);

// {y | exists x in s with y <= x} and the dual.
Subset downSet(const Preorder& p, const Subset& s);
Subset upSet(const Preorder& p, const Subset& s);

// Nonempty and every pair has an upper (dually lower) bound inside s.
bool isDirected(const Preorder& p, const Subset& s);
bool isCodirected(const Preorder& p, const Subset& s);

// Greatest member of s, or -1 when s has none. Finite directed subsets
// always have one.
int maximumOf(const Preorder& p, const Subset& s);
int minimumOf(const Preorder& p, const Subset& s);

// Componentwise order on pairs, indexed i*|q|+j with labels "(a,b)".
Poset productOrder(const Poset& p, const Poset& q);

// Same carrier, reversed order.
Poset dualOrder(const Poset& p);

// Covering pairs (i,j): i < j with nothing strictly between.
std::vector<std::pair<int, int>> hasseEdges(const Poset& p);

// Brute-force search for an order isomorphism; returns the image vector or
// nullopt. Intended for small carriers only.
std::optional<std::vector<int>> findOrderIsomorphism(const Preorder& p,
                                                     const Preorder& q);

}  // namespace canext
