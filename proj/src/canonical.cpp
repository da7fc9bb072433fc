#include "mvlm/canonical.hpp"

#include <algorithm>

namespace mvlm {

namespace {

void check_same_components(const Model& a, const Model& b) {
  if (a.graph.components != b.graph.components)
    throw DomainError(
        "models are over different components and cannot be compared");
}

}  // namespace

bool is_canonical(const Model& m) {
  const auto& g = m.graph;
  for (std::size_t v = 0; v < g.size(); ++v) {
    ContextSpace space(g, v);
    const auto& table = m.params.tables[v];
    for (std::size_t i = 0; i < space.size(); ++i) {
      Interval own = space.regulator_intervals(v)[space.interval_index(i, v)];
      Level value = table[i];
      if (value + 1 < own.low || value > own.high) return false;
    }
  }
  return true;
}

Model canonize(const Model& m) {
  Model out = m;
  const auto& g = m.graph;
  for (std::size_t v = 0; v < g.size(); ++v) {
    ContextSpace space(g, v);
    auto& table = out.params.tables[v];
    for (std::size_t i = 0; i < space.size(); ++i) {
      Interval own = space.regulator_intervals(v)[space.interval_index(i, v)];
      if (table[i] + 1 < own.low)
        table[i] = own.low - 1;
      else if (table[i] > own.high)
        table[i] = own.high;
    }
  }
  return out;
}

std::optional<Edge> first_missing_edge(const RegulatoryGraph& g) {
  for (std::uint32_t source = 0; source < g.size(); ++source)
    for (std::uint32_t target = 0; target < g.size(); ++target)
      for (Level n = 1; n <= g.components[source].max_level; ++n)
        if (Edge e{source, target, n}; !g.has_edge(e)) return e;
  return std::nullopt;
}

Model complete_step_at(const Model& m, const Edge& e, const Limits& limits) {
  const auto& g = m.graph;
  if (e.source >= g.size() || e.target >= g.size())
    throw DomainError("edge endpoint out of range");
  if (e.threshold < 1 || e.threshold > g.components[e.source].max_level)
    throw DomainError("edge threshold out of range");
  if (g.has_edge(e))
    throw DomainError("edge " + to_string(g, e) + " is already present");

  Model out = m;
  auto& edges = out.graph.edges;
  edges.insert(std::upper_bound(edges.begin(), edges.end(), e), e);

  // Only the target's table changes. Each refined context lies inside
  // exactly one old context; look it up through a representative state.
  ContextSpace before(g, e.target, limits);
  ContextSpace after(out.graph, e.target, limits);
  std::vector<Level> table(after.size());
  State probe(g.size(), 0);
  for (std::size_t i = 0; i < after.size(); ++i) {
    for (std::size_t u = 0; u < g.size(); ++u)
      probe[u] = after.regulator_intervals(u)[after.interval_index(i, u)].low;
    table[i] = m.params.tables[e.target][before.index_of_state(probe)];
  }
  out.params.tables[e.target] = std::move(table);
  return out;
}

Model complete_step(const Model& m, const Limits& limits) {
  auto missing = first_missing_edge(m.graph);
  if (!missing) return m;
  return complete_step_at(m, *missing, limits);
}

Model complete(const Model& m, const Limits& limits) {
  Model out = m;
  while (auto missing = first_missing_edge(out.graph))
    out = complete_step_at(out, *missing, limits);
  return out;
}

bool equivalent_by_completion(const Model& a, const Model& b,
                              const Limits& limits) {
  check_same_components(a, b);
  return canonize(complete(a, limits)) == canonize(complete(b, limits));
}

}  // namespace mvlm
