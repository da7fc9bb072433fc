#pragma once

#include <vector>

#include "mvlm/model.hpp"

namespace mvlm {

/// Does the edge change the target's table anywhere? False iff for every
/// context the values on both sides of the threshold coincide.
/// DomainError if the edge is not in the graph.
bool observable_in_param(const Model&, const Edge&);

/// Maximal target value of component v in context omega: the level the
/// asynchronous dynamics actually drives v toward from inside omega.
/// Computed by walking own-component intervals in the direction of the
/// parameter; the walk never reverses, so it takes at most one step per
/// interval. `depth`, when given, receives the number of steps taken.
Level mtv(const Model&, std::size_t v, const Context& omega,
          unsigned* depth = nullptr);

/// Replace every parameter by its maximal target value. The result has
/// the same dynamics and is a fixed point of this map.
Model normalize(const Model&);

/// Does the edge leave a trace in the transition system? Decided on the
/// normalized table, where parameter observability is exact.
bool observable_in_ts(const Model&, const Edge&);

struct EdgeObservability {
  Edge edge;
  bool in_parametrization = false;
  bool in_transition_system = false;
};

/// Both verdicts for every edge, in canonical edge order.
std::vector<EdgeObservability> observability_report(const Model&);

/// True iff the model equals its own normalization.
bool is_normalized(const Model&);

}  // namespace mvlm
