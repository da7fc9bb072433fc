#include "mvlm/minimize.hpp"

#include <algorithm>

#include "mvlm/normalize.hpp"

namespace mvlm {

namespace {

void check_same_components(const Model& a, const Model& b) {
  if (a.graph.components != b.graph.components)
    throw DomainError(
        "models are over different components and cannot be compared");
}

// Drop the edge and fold the contexts it split. Values merged into one
// context must agree, which removal of a non-observable edge guarantees.
Model remove_edge(const Model& m, const Edge& e) {
  Model out = m;
  auto& edges = out.graph.edges;
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e))
    throw DomainError("edge is not in the graph");
  edges.erase(it);

  const auto& g = m.graph;
  ContextSpace before(g, e.target);
  ContextSpace after(out.graph, e.target);
  std::vector<Level> table(after.size());
  std::vector<char> assigned(after.size(), 0);
  State probe(g.size(), 0);
  for (std::size_t i = 0; i < before.size(); ++i) {
    for (std::size_t u = 0; u < g.size(); ++u)
      probe[u] = before.regulator_intervals(u)[before.interval_index(i, u)].low;
    std::size_t j = after.index_of_state(probe);
    Level value = m.params.tables[e.target][i];
    if (assigned[j] && table[j] != value)
      throw DomainError("edge " + to_string(g, e) +
                        " is observable; removing it would change the "
                        "dynamics");
    table[j] = value;
    assigned[j] = 1;
  }
  out.params.tables[e.target] = std::move(table);
  return out;
}

}  // namespace

std::optional<Edge> first_invisible_edge(const Model& m) {
  for (const auto& e : m.graph.edges)
    if (!observable_in_param(m, e)) return e;
  return std::nullopt;
}

Model minimize_step_at(const Model& m, const Edge& e) {
  if (!is_normalized(m))
    throw ContractError("minimize_step requires a normalized model");
  return remove_edge(m, e);
}

Model minimize_step(const Model& m) {
  if (!is_normalized(m))
    throw ContractError("minimize_step requires a normalized model");
  auto edge = first_invisible_edge(m);
  if (!edge) return m;
  return remove_edge(m, *edge);
}

Model minimize(const Model& m, const Limits&) {
  Model out = normalize(m);
  while (auto edge = first_invisible_edge(out))
    out = remove_edge(out, *edge);
  return out;
}

bool equivalent_by_minimization(const Model& a, const Model& b,
                                const Limits& limits) {
  check_same_components(a, b);
  return minimize(a, limits) == minimize(b, limits);
}

}  // namespace mvlm
