#include "mvlm/dynamics.hpp"

#include <algorithm>

namespace mvlm {

namespace {

void check_model(const Model& m) {
  if (m.params.tables.size() != m.graph.size())
    throw StructuralError("parametrization does not match the graph");
}

// Odometer over all states, last component fastest. `body` may not keep
// the reference.
template <typename F>
void for_each_state(const RegulatoryGraph& g, F&& body) {
  State s(g.size(), 0);
  for (;;) {
    body(s);
    std::size_t i = g.size();
    while (i > 0) {
      --i;
      if (s[i] < g.components[i].max_level) {
        ++s[i];
        break;
      }
      s[i] = 0;
      if (i == 0) return;
    }
    if (g.size() == 0) return;
  }
}

void check_state_cap(const RegulatoryGraph& g, const Limits& limits) {
  if (state_count(g) > limits.max_states)
    throw CapacityError("max-states", limits.max_states, "state space");
}

Level step(const std::vector<Level>& table, const ContextSpace& space,
           const State& s, std::size_t v) {
  Level k = table[space.index_of_state(s)];
  if (k > s[v]) return s[v] + 1;
  if (k < s[v]) return s[v] - 1;
  return s[v];
}

}  // namespace

Level update(const Model& m, std::size_t v, const State& s) {
  check_model(m);
  if (!m.graph.is_state(s))
    throw StructuralError("state " + to_string(s) +
                          " outside the model's level bounds");
  ContextSpace space(m.graph, v);
  return step(m.params.tables[v], space, s, v);
}

Sign derivative(const Model& m, std::size_t v, const State& s) {
  return sign_of(static_cast<std::int64_t>(update(m, v, s)) -
                 static_cast<std::int64_t>(s[v]));
}

TransitionSystem async_ts(const Model& m, const Limits& limits) {
  check_model(m);
  check_state_cap(m.graph, limits);
  const auto& g = m.graph;
  std::vector<ContextSpace> spaces;
  spaces.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    spaces.emplace_back(g, v, limits);

  TransitionSystem ts;
  ts.dimensions = g.components;
  for_each_state(g, [&](const State& s) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      Level next = step(m.params.tables[v], spaces[v], s, v);
      if (next == s[v]) continue;
      State t = s;
      t[v] = next;
      ts.transitions.emplace_back(s, std::move(t));
    }
  });
  std::sort(ts.transitions.begin(), ts.transitions.end());
  return ts;
}

TransitionSystem sync_ts(const Model& m, const Limits& limits) {
  check_model(m);
  check_state_cap(m.graph, limits);
  const auto& g = m.graph;
  std::vector<ContextSpace> spaces;
  spaces.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    spaces.emplace_back(g, v, limits);

  TransitionSystem ts;
  ts.dimensions = g.components;
  for_each_state(g, [&](const State& s) {
    State t(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
      t[v] = step(m.params.tables[v], spaces[v], s, v);
    ts.transitions.emplace_back(s, std::move(t));
  });
  std::sort(ts.transitions.begin(), ts.transitions.end());
  return ts;
}

bool ts_equal(const TransitionSystem& a, const TransitionSystem& b) {
  return a == b;
}

}  // namespace mvlm
