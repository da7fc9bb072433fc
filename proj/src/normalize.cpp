#include "mvlm/normalize.hpp"

#include <algorithm>

namespace mvlm {

namespace {

void check_edge_present(const Model& m, const Edge& e) {
  if (!m.graph.has_edge(e))
    throw DomainError("edge " +
                      (e.source < m.graph.size() && e.target < m.graph.size()
                           ? to_string(m.graph, e)
                           : std::string("(out of range)")) +
                      " is not in the graph");
}

// The threshold window of edge e in the target's context space: the index
// of the own interval [n, n+) of the regulator; the interval below it is
// [n-, n).
std::size_t upper_interval(const ContextSpace& space, const Edge& e) {
  auto idx = space.interval_with_low(e.source, e.threshold);
  if (!idx || *idx == 0)
    throw DomainError("edge threshold does not split the regulator's range");
  return *idx;
}

bool observable_in(const ContextSpace& space, const std::vector<Level>& table,
                   const Edge& e) {
  std::size_t hi = upper_interval(space, e);
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.interval_index(i, e.source) != hi) continue;
    if (table[i] != table[space.with_interval(i, e.source, hi - 1)])
      return true;
  }
  return false;
}

// Walk own-component intervals toward the parameter until the value falls
// inside the current interval or points back at the border just crossed.
// The direction never flips, so the walk ends within the interval list.
Level mtv_at(const ContextSpace& space, const std::vector<Level>& table,
             std::size_t v, std::size_t index, unsigned* depth) {
  const auto& own = space.regulator_intervals(v);
  std::size_t cur = space.interval_index(index, v);
  Level value = table[index];
  unsigned steps = 0;
  for (;;) {
    const Interval& iv = own[cur];
    if (iv.contains(value)) break;
    if (value < iv.low) {
      std::size_t next = space.with_interval(index, v, cur - 1);
      if (table[next] + 1 >= iv.low) {
        value = iv.low - 1;
        break;
      }
      index = next;
      value = table[next];
      --cur;
    } else {
      std::size_t next = space.with_interval(index, v, cur + 1);
      if (table[next] <= iv.high) {
        value = iv.high;
        break;
      }
      index = next;
      value = table[next];
      ++cur;
    }
    ++steps;
  }
  if (depth) *depth = steps;
  return value;
}

}  // namespace

bool observable_in_param(const Model& m, const Edge& e) {
  check_edge_present(m, e);
  ContextSpace space(m.graph, e.target);
  return observable_in(space, m.params.tables[e.target], e);
}

Level mtv(const Model& m, std::size_t v, const Context& omega,
          unsigned* depth) {
  if (v >= m.graph.size())
    throw StructuralError("component index out of range");
  ContextSpace space(m.graph, v);
  return mtv_at(space, m.params.tables[v], v, space.index_of(omega), depth);
}

Model normalize(const Model& m) {
  Model out = m;
  for (std::size_t v = 0; v < m.graph.size(); ++v) {
    ContextSpace space(m.graph, v);
    const auto& table = m.params.tables[v];
    auto& result = out.params.tables[v];
    for (std::size_t i = 0; i < space.size(); ++i)
      result[i] = mtv_at(space, table, v, i, nullptr);
  }
  return out;
}

bool observable_in_ts(const Model& m, const Edge& e) {
  check_edge_present(m, e);
  return observable_in_param(normalize(m), e);
}

std::vector<EdgeObservability> observability_report(const Model& m) {
  Model normalized = normalize(m);
  std::vector<EdgeObservability> out;
  out.reserve(m.graph.edges.size());
  for (const auto& e : m.graph.edges)
    out.push_back({e, observable_in_param(m, e),
                   observable_in_param(normalized, e)});
  return out;
}

bool is_normalized(const Model& m) {
  return normalize(m) == m;
}

}  // namespace mvlm
