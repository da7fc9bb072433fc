#include "mvlm/oracle.hpp"

#include <algorithm>

namespace mvlm::oracle {

namespace {

// Linear scan over the materialized context list; deliberately naive.
Level parameter_at(const Model& m, std::size_t v, const State& s) {
  auto all = contexts(m.graph, v);
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool inside = true;
    for (std::size_t u = 0; u < s.size(); ++u)
      if (!all[i].intervals[u].contains(s[u])) {
        inside = false;
        break;
      }
    if (inside) return m.params.tables[v][i];
  }
  throw StructuralError("state " + to_string(s) + " matches no context");
}

std::vector<State> all_states(const RegulatoryGraph& g, const Limits& limits) {
  if (state_count(g) > limits.max_states)
    throw CapacityError("max-states", limits.max_states, "state space");
  std::vector<State> out;
  State s(g.size(), 0);
  for (;;) {
    out.push_back(s);
    std::size_t i = g.size();
    while (i > 0) {
      --i;
      if (s[i] < g.components[i].max_level) {
        ++s[i];
        break;
      }
      s[i] = 0;
      if (i == 0) return out;
    }
    if (g.size() == 0) return out;
  }
}

int sign3(std::int64_t x) { return x < 0 ? -1 : x > 0 ? 1 : 0; }

// Thresholds adjacent to e.threshold in the extended threshold list of
// (source, target): the window [below, above) the edge acts on.
std::pair<Level, Level> threshold_window(const RegulatoryGraph& g,
                                         const Edge& e) {
  auto all = extended_thresholds(g, e.source, e.target);
  auto it = std::find(all.begin(), all.end(), e.threshold);
  if (it == all.end() || it == all.begin() || it + 1 == all.end())
    throw DomainError("edge threshold is not an inner threshold");
  return {*(it - 1), *(it + 1)};
}

void check_edge(const Model& m, const Edge& e) {
  if (!m.graph.has_edge(e))
    throw DomainError("edge is not in the graph");
}

}  // namespace

Level step(const Model& m, std::size_t v, const State& s) {
  Level k = parameter_at(m, v, s);
  if (k > s[v]) return s[v] + 1;
  if (k < s[v]) return s[v] - 1;
  return s[v];
}

int step_sign(const Model& m, std::size_t v, const State& s) {
  return sign3(static_cast<std::int64_t>(step(m, v, s)) -
               static_cast<std::int64_t>(s[v]));
}

Level mtv_oracle(const Model& m, std::size_t v, const State& s) {
  if (!m.graph.is_state(s))
    throw StructuralError("state outside the model's level bounds");
  int direction = step_sign(m, v, s);
  if (direction == 0) return s[v];
  State probe = s;
  for (;;) {
    probe[v] = direction > 0 ? probe[v] + 1 : probe[v] - 1;
    if (step_sign(m, v, probe) != direction) return probe[v];
  }
}

bool ts_observable_oracle(const Model& m, const Edge& e,
                          const Limits& limits) {
  check_edge(m, e);
  auto [below, above] = threshold_window(m.graph, e);
  Level rho = m.graph.components[e.target].max_level;
  for (const auto& s : all_states(m.graph, limits)) {
    if (s[e.source] < below || s[e.source] >= above) continue;
    bool some_k_fits = false;
    for (Level k = 0; k <= rho && !some_k_fits; ++k) {
      bool fits = true;
      for (Level j = below; j < above && fits; ++j) {
        State t = s;
        t[e.source] = j;
        if (step_sign(m, e.target, t) !=
            sign3(static_cast<std::int64_t>(k) -
                  static_cast<std::int64_t>(t[e.target])))
          fits = false;
      }
      some_k_fits = fits;
    }
    if (!some_k_fits) return true;
  }
  return false;
}

bool ts_observable_oracle_mtv(const Model& m, const Edge& e,
                              const Limits& limits) {
  check_edge(m, e);
  auto [below, above] = threshold_window(m.graph, e);
  for (const auto& s : all_states(m.graph, limits)) {
    if (s[e.source] < below || s[e.source] >= above) continue;
    Level k = mtv_oracle(m, e.target, s);
    for (Level j = below; j < above; ++j) {
      State t = s;
      t[e.source] = j;
      if (step_sign(m, e.target, t) !=
          sign3(static_cast<std::int64_t>(k) -
                static_cast<std::int64_t>(t[e.target])))
        return true;
    }
  }
  return false;
}

namespace {

// Flattened (component, context) cells with per-cell value ranges; the
// odometer below runs first cell fastest.
struct CellRange {
  std::size_t component;
  Level lo;
  Level hi;
};

std::vector<CellRange> cell_ranges(const RegulatoryGraph& g,
                                   const EnumerationBounds& bounds) {
  std::vector<CellRange> cells;
  for (std::size_t v = 0; v < g.size(); ++v) {
    ContextSpace space(g, v, bounds.limits);
    Level rho = g.components[v].max_level;
    for (std::size_t i = 0; i < space.size(); ++i) {
      CellRange cell{v, 0, rho};
      if (bounds.canonical_only) {
        Interval own =
            space.regulator_intervals(v)[space.interval_index(i, v)];
        if (own.low > 0) cell.lo = own.low - 1;
        cell.hi = std::min(rho, own.high);
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

// Streams every parametrization of g; returns false when the visitor
// stopped early, bumping `count` per model emitted.
bool stream_parametrizations(const RegulatoryGraph& g,
                             const EnumerationBounds& bounds,
                             std::uint64_t& count, const ModelVisitor& fn) {
  auto cells = cell_ranges(g, bounds);

  Model m;
  m.graph = g;
  m.params.tables.resize(g.size());
  std::vector<std::size_t> offset(g.size(), 0);
  for (const auto& cell : cells) {
    m.params.tables[cell.component].push_back(cell.lo);
  }
  {
    std::size_t at = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
      offset[v] = at;
      at += m.params.tables[v].size();
    }
  }
  auto cell_value = [&](std::size_t i) -> Level& {
    return m.params.tables[cells[i].component][i - offset[cells[i].component]];
  };

  for (;;) {
    if (++count > bounds.max_models)
      throw CapacityError("max-models", bounds.max_models,
                          "model enumeration");
    if (!fn(m)) return false;
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      if (cell_value(i) < cells[i].hi) {
        ++cell_value(i);
        break;
      }
      cell_value(i) = cells[i].lo;
    }
    if (i == cells.size()) return true;
  }
}

}  // namespace

void enumerate_parametrizations(const RegulatoryGraph& g,
                                const EnumerationBounds& bounds,
                                const ModelVisitor& fn) {
  std::uint64_t count = 0;
  stream_parametrizations(g, bounds, count, fn);
}

void enumerate_models(const std::vector<Component>& components,
                      const EnumerationBounds& bounds,
                      const ModelVisitor& fn) {
  if (components.empty()) return;

  std::vector<Edge> slots;
  for (std::uint32_t source = 0; source < components.size(); ++source)
    for (std::uint32_t target = 0; target < components.size(); ++target)
      for (Level n = 1; n <= components[source].max_level; ++n)
        slots.push_back(Edge{source, target, n});
  std::sort(slots.begin(), slots.end());
  if (slots.size() >= 63)
    throw CapacityError("max-models", bounds.max_models,
                        "graph enumeration over " +
                            std::to_string(slots.size()) + " edge slots");

  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    RegulatoryGraph g = make_graph(components, std::move(edges));
    if (!stream_parametrizations(g, bounds, count, fn)) return;
  }
}

unsigned mtv_distance(const Model& m, std::size_t v, const Context& omega) {
  ContextSpace space(m.graph, v);
  std::size_t index = space.index_of(omega);
  std::size_t start = space.interval_index(index, v);

  State probe(m.graph.size());
  for (std::size_t u = 0; u < m.graph.size(); ++u)
    probe[u] = omega.intervals[u].low;
  Level target = mtv_oracle(m, v, probe);
  std::size_t end = space.find_interval(v, target);

  return static_cast<unsigned>(end > start ? end - start : start - end);
}

}  // namespace mvlm::oracle
