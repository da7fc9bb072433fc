#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvlm/errors.hpp"
#include "mvlm/limits.hpp"

namespace mvlm {

/// Discrete activity level of a component.
using Level = std::uint32_t;

/// One level per component, in declaration order.
using State = std::vector<Level>;

struct Component {
  std::string name;
  Level max_level = 1;  // levels run over [0, max_level]
  bool operator==(const Component&) const = default;
};

/// Regulation source --threshold--> target, components by index.
/// Member order matters: comparisons go (source, target, threshold), and
/// completion/minimization always pick the smallest candidate edge under
/// this order.
struct Edge {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  Level threshold = 1;
  auto operator<=>(const Edge&) const = default;
};

struct RegulatoryGraph {
  std::vector<Component> components;
  std::vector<Edge> edges;  // sorted, no duplicates

  std::size_t size() const { return components.size(); }
  std::optional<std::size_t> component_index(std::string_view name) const;
  bool has_edge(const Edge& e) const;
  bool is_state(const State& s) const;
  bool operator==(const RegulatoryGraph&) const = default;
};

/// Checked construction: sorts the edges and throws StructuralError on
/// duplicate names, zero max levels, out-of-range thresholds or duplicate
/// edges.
RegulatoryGraph make_graph(std::vector<Component> components,
                           std::vector<Edge> edges);

/// Half-open run [low, high) of a regulator's levels across which its
/// effect on a fixed target cannot change.
struct Interval {
  Level low = 0;
  Level high = 0;
  bool contains(Level x) const { return low <= x && x < high; }
  auto operator<=>(const Interval&) const = default;
};

/// One activity interval per component (declaration order): the slice of
/// the state space on which a target's parameter is constant.
struct Context {
  std::vector<Interval> intervals;
  bool operator==(const Context&) const = default;
};

/// Per-component tables assigning a level to every context of the
/// component, indexed in canonical context order.
struct Parametrization {
  std::vector<std::vector<Level>> tables;
  bool operator==(const Parametrization&) const = default;
};

struct Model {
  RegulatoryGraph graph;
  Parametrization params;
  bool operator==(const Model&) const = default;
};

struct Diagnostic {
  std::string where;
  std::string message;
};

std::string to_string(const Interval&);
std::string to_string(const Context&);
std::string to_string(const State&);
std::string to_string(const Diagnostic&);
std::string to_string(const RegulatoryGraph&, const Edge&);

/// Sorted thresholds of regulator->target edges plus the bounds 0 and
/// max_level(regulator) + 1.
std::vector<Level> extended_thresholds(const RegulatoryGraph&,
                                       std::size_t regulator,
                                       std::size_t target);

/// Consecutive intervals between adjacent extended thresholds. They
/// partition [0, max_level(regulator)]; a non-regulator contributes the
/// single full interval.
std::vector<Interval> activity_intervals(const RegulatoryGraph&,
                                         std::size_t regulator,
                                         std::size_t target);

/// Every regulatory context of `target`, first regulator varying fastest.
std::vector<Context> contexts(const RegulatoryGraph&, std::size_t target,
                              const Limits& = {});

/// The unique context of `target` whose slice contains state `s`.
Context context_of(const RegulatoryGraph&, std::size_t target, const State& s);

/// Structural diagnostics; empty iff graph invariants hold and the
/// parametrization is total and within level bounds.
std::vector<Diagnostic> validate(const Model&);

/// Number of states, saturating.
std::uint64_t state_count(const RegulatoryGraph&);

/// Indexed view of one component's contexts: mixed-radix addressing over
/// the per-regulator interval lists, first regulator fastest.
class ContextSpace {
public:
  ContextSpace(const RegulatoryGraph& g, std::size_t target,
               const Limits& = {});

  std::size_t size() const { return size_; }
  std::size_t dimension() const { return intervals_.size(); }
  const std::vector<Interval>& regulator_intervals(std::size_t u) const {
    return intervals_[u];
  }

  Context context(std::size_t index) const;
  /// Which of u's intervals is active in the context at `index`.
  std::size_t interval_index(std::size_t index, std::size_t u) const;
  /// Index of `ctx`; StructuralError if it is not a context of this space.
  std::size_t index_of(const Context& ctx) const;
  std::size_t index_of_state(const State& s) const;
  /// Same context with u's interval replaced by its `interval`-th one.
  std::size_t with_interval(std::size_t index, std::size_t u,
                            std::size_t interval) const;
  /// Index of u's interval containing `level`.
  std::size_t find_interval(std::size_t u, Level level) const;
  /// Index of u's interval whose low endpoint is `low`, if any.
  std::optional<std::size_t> interval_with_low(std::size_t u, Level low) const;

private:
  std::vector<std::vector<Interval>> intervals_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

}  // namespace mvlm
