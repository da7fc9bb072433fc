#pragma once

#include <utility>

#include "mvlm/model.hpp"

namespace mvlm {

enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign sign_of(std::int64_t x) {
  return x < 0 ? Sign::Minus : x > 0 ? Sign::Plus : Sign::Zero;
}

/// Transition relation over the full state space in canonical form:
/// transitions sorted by (source, target), no duplicates.
struct TransitionSystem {
  std::vector<Component> dimensions;
  std::vector<std::pair<State, State>> transitions;
  bool operator==(const TransitionSystem&) const = default;
};

/// Next level of component v in state s: one step toward the parameter
/// of the enclosing context, or stay.
Level update(const Model&, std::size_t v, const State& s);

/// Direction of that step.
Sign derivative(const Model&, std::size_t v, const State& s);

/// One transition per (state, component) pair whose level actually moves;
/// no self-loops.
TransitionSystem async_ts(const Model&, const Limits& = {});

/// All components step at once; deterministic, and steady states carry a
/// self-loop.
TransitionSystem sync_ts(const Model&, const Limits& = {});

bool ts_equal(const TransitionSystem&, const TransitionSystem&);

}  // namespace mvlm
