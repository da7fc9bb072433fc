#pragma once

#include <functional>

#include "mvlm/model.hpp"

// Slow reference implementations used to cross-check the optimized
// operations. They lean only on the core types and on brute enumeration,
// never on the dynamics or normalization shortcuts they are meant to
// check.

namespace mvlm::oracle {

/// Update step evaluated from scratch via a linear context scan.
Level step(const Model&, std::size_t v, const State& s);

/// step(...) - s[v] as -1, 0, +1.
int step_sign(const Model&, std::size_t v, const State& s);

/// Maximal target value found by literally walking the dynamics of v from
/// s while every step keeps pointing the same way.
Level mtv_oracle(const Model&, std::size_t v, const State& s);

/// Edge observability in the transition system by direct enumeration:
/// the edge is invisible iff for every state there is one level the
/// target drifts toward across the whole threshold window.
bool ts_observable_oracle(const Model&, const Edge&, const Limits& = {});

/// Same question with the candidate level fixed to the maximal target
/// value instead of searched for.
bool ts_observable_oracle_mtv(const Model&, const Edge&, const Limits& = {});

/// How many own-component intervals lie between omega and the interval
/// holding the maximal target value (that interval included). Bounds the
/// mtv walk length.
unsigned mtv_distance(const Model&, std::size_t v, const Context& omega);

struct EnumerationBounds {
  std::uint64_t max_models = std::uint64_t{1} << 20;
  bool canonical_only = false;
  Limits limits{};
};

/// Return false to stop the stream early.
using ModelVisitor = std::function<bool(const Model&)>;

/// Every total parametrization of a fixed graph, in a fixed odometer
/// order. CapacityError past bounds.max_models.
void enumerate_parametrizations(const RegulatoryGraph&,
                                const EnumerationBounds&,
                                const ModelVisitor&);

/// Every graph over the given components crossed with every total
/// parametrization, deterministically ordered. An empty component list
/// yields an empty stream.
void enumerate_models(const std::vector<Component>&, const EnumerationBounds&,
                      const ModelVisitor&);

}  // namespace mvlm::oracle
