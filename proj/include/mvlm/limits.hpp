#pragma once

#include <cstdint>

namespace mvlm {

/// Size caps for operations that materialize context tables or walk the
/// state space. Exceeding a cap raises CapacityError instead of eating
/// the machine.
struct Limits {
  std::uint64_t max_contexts = std::uint64_t{1} << 20;  // per component
  std::uint64_t max_states = std::uint64_t{1} << 22;    // whole state space
};

}  // namespace mvlm
