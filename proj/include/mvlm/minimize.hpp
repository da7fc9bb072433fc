#pragma once

#include <optional>

#include "mvlm/model.hpp"

namespace mvlm {

/// First edge, in edge order, that is not observable in the table.
std::optional<Edge> first_invisible_edge(const Model&);

/// Remove the smallest edge that is not observable in the (normalized)
/// table and merge the contexts it used to split. Identity when every
/// edge is observable. ContractError unless the input is normalized.
Model minimize_step(const Model&);

/// Same removal for one chosen edge. DomainError if the edge is absent
/// or its removal would merge contexts with different values.
Model minimize_step_at(const Model&, const Edge&);

/// Normalize, then strip non-observable edges until none remain. The
/// result is the least representative of the model's dynamics: every
/// remaining edge is visible in the transition system.
Model minimize(const Model&, const Limits& = {});

/// Decide dynamical equivalence by comparing minimal forms.
/// DomainError unless both models share the component list.
bool equivalent_by_minimization(const Model&, const Model&,
                                const Limits& = {});

}  // namespace mvlm
