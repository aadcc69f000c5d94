#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "canext/error.hpp"

namespace canext {

inline constexpr int kMaxCarrier = 64;

// Subset of a fixed carrier of at most 64 elements, stored as a bit mask.
// The size is the carrier size, not the number of members.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int size, std::uint64_t bits = 0) : n_(size), bits_(bits) {
    assert(size >= 0 && size <= kMaxCarrier);
    if (size < kMaxCarrier) assert((bits >> size) == 0);
  }

  static Subset full(int size) {
    return Subset(size, size == kMaxCarrier ? ~std::uint64_t(0)
                                            : (std::uint64_t(1) << size) - 1);
  }
  static Subset single(int size, int i) {
    assert(i >= 0 && i < size);
    return Subset(size, std::uint64_t(1) << i);
  }

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool test(int i) const { return (bits_ >> i) & 1; }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }

  Subset& set(int i) { bits_ |= std::uint64_t(1) << i; return *this; }
  Subset& clear(int i) { bits_ &= ~(std::uint64_t(1) << i); return *this; }

  bool subsetOf(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const Subset& other) const { return (bits_ & other.bits_) != 0; }

  Subset operator|(const Subset& o) const { return Subset(n_, bits_ | o.bits_); }
  Subset operator&(const Subset& o) const { return Subset(n_, bits_ & o.bits_); }
  Subset minus(const Subset& o) const { return Subset(n_, bits_ & ~o.bits_); }
  Subset complement() const { return full(n_).minus(*this); }

  Subset& operator|=(const Subset& o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(const Subset& o) { bits_ &= o.bits_; return *this; }

  bool operator==(const Subset& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  // Index of the lowest member, or -1 when empty.
  int min() const { return bits_ ? __builtin_ctzll(bits_) : -1; }

  template <class F>
  void forEach(F f) const {
    std::uint64_t b = bits_;
    while (b) {
      int i = __builtin_ctzll(b);
      b &= b - 1;
      f(i);
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    forEach([&](int i) { out.push_back(i); });
    return out;
  }

  std::string describe(const std::vector<std::string>& labels) const {
    std::string out = "{";
    bool first = true;
    forEach([&](int i) {
      if (!first) out += ",";
      first = false;
      out += labels[i];
    });
    out += "}";
    return out;
  }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline void requireCarrierWidth(int n, const char* what) {
  if (n > kMaxCarrier)
    throw SizeGuardError(std::string(what) + ": carrier has " +
                         std::to_string(n) + " elements, representation cap is " +
                         std::to_string(kMaxCarrier));
}

}  // namespace canext
