#pragma once

#include <cstdint>

namespace canext {

// Resource guards for operations that enumerate subsets or candidate maps.
// Carriers are capped at 64 elements by the bitset representation no matter
// what; maxCarrier is the (configurable) refusal bound below that.
struct Limits {
  int maxCarrier = 20;
  std::uint64_t maxSteps = std::uint64_t(1) << 26;
};

}  // namespace canext
