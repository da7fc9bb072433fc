#pragma once

#include <optional>

#include "mvlm/model.hpp"

namespace mvlm {

// A parameter value is canonical for a context whose own-component
// interval is [j, k) when it lies in [j-1, k]. Canonical tables are the
// unique per-graph representatives that make completed models comparable.

bool is_canonical(const Model&);

/// Clamp every parameter into its canonical band. Dynamics preserving.
Model canonize(const Model&);

/// Smallest absent edge under (source, target, threshold) order, if any.
std::optional<Edge> first_missing_edge(const RegulatoryGraph&);

/// Add the smallest absent edge and split the affected contexts, each
/// half inheriting the old value. Identity when the graph is complete.
Model complete_step(const Model&, const Limits& = {});

/// Same refinement for one chosen absent edge.
Model complete_step_at(const Model&, const Edge&, const Limits& = {});

/// Iterate completion to the full graph: every (u, n, v) with
/// 1 <= n <= max_level(u) present.
Model complete(const Model&, const Limits& = {});

/// Decide dynamical equivalence by comparing canonized completions.
/// DomainError unless both models share the component list.
bool equivalent_by_completion(const Model&, const Model&, const Limits& = {});

}  // namespace mvlm
