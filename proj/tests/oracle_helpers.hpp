// Brute-force oracles used to freeze expected values. These deliberately
// avoid the production code paths they are checked against.
#pragma once

#include <cstdint>
#include <vector>

#include "canext/lattice.hpp"
#include "canext/presentation.hpp"

namespace oracle {

using canext::FiniteLattice;
using canext::Poset;
using canext::Presentation;
using canext::Subset;

// All nonempty up-closed meet-closed subsets by scanning every bit mask.
inline std::vector<Subset> naiveFilters(const FiniteLattice& a) {
  const int n = a.size();
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
    Subset s(n, bits);
    bool ok = true;
    s.forEach([&](int x) {
      for (int y = 0; y < n; ++y)
        if (a.leq(x, y) && !s.test(y)) ok = false;
      s.forEach([&](int y) {
        if (!s.test(a.meet(x, y))) ok = false;
      });
    });
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::vector<Subset> naiveIdeals(const FiniteLattice& a) {
  const int n = a.size();
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
    Subset s(n, bits);
    bool ok = true;
    s.forEach([&](int x) {
      for (int y = 0; y < n; ++y)
        if (a.leq(y, x) && !s.test(y)) ok = false;
      s.forEach([&](int y) {
        if (!s.test(a.join(x, y))) ok = false;
      });
    });
    if (ok) out.push_back(s);
  }
  return out;
}

// Greatest lower bound by scanning all candidates; -1 when absent.
inline int naiveGlb(const Poset& p, int i, int j) {
  int best = -1;
  for (int c = 0; c < p.size(); ++c) {
    if (!p.leq(c, i) || !p.leq(c, j)) continue;
    bool greatest = true;
    for (int d = 0; d < p.size(); ++d)
      if (p.leq(d, i) && p.leq(d, j) && !p.leq(d, c)) greatest = false;
    if (greatest) best = c;
  }
  return best;
}

inline int naiveLub(const Poset& p, int i, int j) {
  int best = -1;
  for (int c = 0; c < p.size(); ++c) {
    if (!p.leq(i, c) || !p.leq(j, c)) continue;
    bool least = true;
    for (int d = 0; d < p.size(); ++d)
      if (p.leq(i, d) && p.leq(j, d) && !p.leq(c, d)) least = false;
    if (least) best = c;
  }
  return best;
}

// All C-ideals by scanning every bit mask with the presentation's own
// membership test.
inline std::vector<Subset> naiveCIdeals(const Presentation& pres) {
  const int n = pres.base().size();
  std::vector<Subset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits) {
    Subset s(n, bits);
    if (canext::isCIdeal(pres, s)) out.push_back(s);
  }
  return out;
}

}  // namespace oracle
