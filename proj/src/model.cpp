#include "mvlm/model.hpp"

#include <algorithm>
#include <set>

namespace mvlm {

std::optional<std::size_t> RegulatoryGraph::component_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].name == name) return i;
  return std::nullopt;
}

bool RegulatoryGraph::has_edge(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool RegulatoryGraph::is_state(const State& s) const {
  if (s.size() != components.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > components[i].max_level) return false;
  return true;
}

RegulatoryGraph make_graph(std::vector<Component> components,
                           std::vector<Edge> edges) {
  std::set<std::string_view> names;
  for (const auto& c : components) {
    if (c.name.empty())
      throw StructuralError("component with empty name");
    if (!names.insert(c.name).second)
      throw StructuralError("duplicate component name '" + c.name + "'");
    if (c.max_level < 1)
      throw StructuralError("component '" + c.name +
                            "': max level must be at least 1");
  }
  for (const auto& e : edges) {
    if (e.source >= components.size() || e.target >= components.size())
      throw StructuralError("edge endpoint out of range");
    if (e.threshold < 1 || e.threshold > components[e.source].max_level)
      throw StructuralError("edge threshold " + std::to_string(e.threshold) +
                            " out of range for '" +
                            components[e.source].name + "'");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw StructuralError("duplicate edge");
  return RegulatoryGraph{std::move(components), std::move(edges)};
}

std::string to_string(const Interval& iv) {
  return "[" + std::to_string(iv.low) + "," + std::to_string(iv.high) + ")";
}

std::string to_string(const Context& ctx) {
  std::string out = "(";
  for (std::size_t i = 0; i < ctx.intervals.size(); ++i) {
    if (i) out += ",";
    out += to_string(ctx.intervals[i]);
  }
  return out + ")";
}

std::string to_string(const State& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::string to_string(const Diagnostic& d) {
  return d.where + ": " + d.message;
}

std::string to_string(const RegulatoryGraph& g, const Edge& e) {
  return "(" + g.components[e.source].name + "," +
         std::to_string(e.threshold) + "," + g.components[e.target].name + ")";
}

std::vector<Level> extended_thresholds(const RegulatoryGraph& g,
                                       std::size_t regulator,
                                       std::size_t target) {
  if (regulator >= g.size() || target >= g.size())
    throw StructuralError("component index out of range");
  std::vector<Level> out{0, g.components[regulator].max_level + 1};
  for (const auto& e : g.edges)
    if (e.source == regulator && e.target == target)
      out.push_back(e.threshold);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Interval> activity_intervals(const RegulatoryGraph& g,
                                         std::size_t regulator,
                                         std::size_t target) {
  auto thresholds = extended_thresholds(g, regulator, target);
  std::vector<Interval> out;
  out.reserve(thresholds.size() - 1);
  for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
    out.push_back(Interval{thresholds[i], thresholds[i + 1]});
  return out;
}

std::uint64_t state_count(const RegulatoryGraph& g) {
  std::uint64_t n = 1;
  for (const auto& c : g.components) {
    std::uint64_t size = std::uint64_t{c.max_level} + 1;
    if (n > UINT64_MAX / size) return UINT64_MAX;
    n *= size;
  }
  return n;
}

ContextSpace::ContextSpace(const RegulatoryGraph& g, std::size_t target,
                           const Limits& limits) {
  if (target >= g.size())
    throw StructuralError("component index out of range");
  intervals_.reserve(g.size());
  strides_.reserve(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    intervals_.push_back(activity_intervals(g, u, target));
    strides_.push_back(size_);
    std::uint64_t grown =
        std::uint64_t{size_} * intervals_.back().size();
    if (grown > limits.max_contexts)
      throw CapacityError("max-contexts", limits.max_contexts,
                          "context table of component '" +
                              g.components[target].name + "'");
    size_ = static_cast<std::size_t>(grown);
  }
}

Context ContextSpace::context(std::size_t index) const {
  Context ctx;
  ctx.intervals.reserve(dimension());
  for (std::size_t u = 0; u < dimension(); ++u)
    ctx.intervals.push_back(intervals_[u][interval_index(index, u)]);
  return ctx;
}

std::size_t ContextSpace::interval_index(std::size_t index,
                                         std::size_t u) const {
  return index / strides_[u] % intervals_[u].size();
}

std::size_t ContextSpace::index_of(const Context& ctx) const {
  if (ctx.intervals.size() != dimension())
    throw StructuralError("context has wrong dimension");
  std::size_t index = 0;
  for (std::size_t u = 0; u < dimension(); ++u) {
    const auto& list = intervals_[u];
    auto it = std::lower_bound(list.begin(), list.end(), ctx.intervals[u]);
    if (it == list.end() || !(*it == ctx.intervals[u]))
      throw StructuralError("interval " + to_string(ctx.intervals[u]) +
                            " is not an activity interval here");
    index += static_cast<std::size_t>(it - list.begin()) * strides_[u];
  }
  return index;
}

std::size_t ContextSpace::index_of_state(const State& s) const {
  if (s.size() != dimension())
    throw StructuralError("state has wrong dimension");
  std::size_t index = 0;
  for (std::size_t u = 0; u < dimension(); ++u)
    index += find_interval(u, s[u]) * strides_[u];
  return index;
}

std::size_t ContextSpace::with_interval(std::size_t index, std::size_t u,
                                        std::size_t interval) const {
  std::size_t old = interval_index(index, u);
  return index - old * strides_[u] + interval * strides_[u];
}

std::size_t ContextSpace::find_interval(std::size_t u, Level level) const {
  const auto& list = intervals_[u];
  // first interval with low > level sits one past the match
  std::size_t lo = 0, hi = list.size();
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (list[mid].low <= level)
      lo = mid;
    else
      hi = mid;
  }
  if (!list[lo].contains(level))
    throw StructuralError("level " + std::to_string(level) +
                          " outside the regulator's range");
  return lo;
}

std::optional<std::size_t> ContextSpace::interval_with_low(std::size_t u,
                                                           Level low) const {
  const auto& list = intervals_[u];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].low == low) return i;
  return std::nullopt;
}

std::vector<Context> contexts(const RegulatoryGraph& g, std::size_t target,
                              const Limits& limits) {
  ContextSpace space(g, target, limits);
  std::vector<Context> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i)
    out.push_back(space.context(i));
  return out;
}

Context context_of(const RegulatoryGraph& g, std::size_t target,
                   const State& s) {
  if (!g.is_state(s))
    throw StructuralError("state " + to_string(s) +
                          " outside the model's level bounds");
  ContextSpace space(g, target);
  return space.context(space.index_of_state(s));
}

std::vector<Diagnostic> validate(const Model& m) {
  std::vector<Diagnostic> out;
  const auto& g = m.graph;

  std::set<std::string_view> names;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& c = g.components[v];
    if (c.name.empty())
      out.push_back({"component #" + std::to_string(v), "empty name"});
    else if (!names.insert(c.name).second)
      out.push_back({"component " + c.name, "duplicate name"});
    if (c.max_level < 1)
      out.push_back({"component " + c.name, "max level must be at least 1"});
  }

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.source >= g.size() || e.target >= g.size()) {
      out.push_back({"edge #" + std::to_string(i), "endpoint out of range"});
      continue;
    }
    if (e.threshold < 1 || e.threshold > g.components[e.source].max_level)
      out.push_back({"edge " + to_string(g, e), "threshold out of range"});
    if (i > 0 && g.edges[i - 1] == e)
      out.push_back({"edge " + to_string(g, e), "duplicate edge"});
    else if (i > 0 && !(g.edges[i - 1] < e))
      out.push_back({"edge " + to_string(g, e), "edges out of order"});
  }
  if (!out.empty()) return out;  // context structure needs a sane graph

  if (m.params.tables.size() != g.size()) {
    out.push_back({"parametrization",
                   "has " + std::to_string(m.params.tables.size()) +
                       " tables for " + std::to_string(g.size()) +
                       " components"});
    return out;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& name = g.components[v].name;
    ContextSpace space(g, v);
    const auto& table = m.params.tables[v];
    if (table.size() != space.size()) {
      out.push_back({"param " + name,
                     "totality violation: " + std::to_string(table.size()) +
                         " values for " + std::to_string(space.size()) +
                         " contexts"});
      continue;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] > g.components[v].max_level)
        out.push_back({"param " + name + " " + to_string(space.context(i)),
                       "range violation: value " + std::to_string(table[i]) +
                           " exceeds max level " +
                           std::to_string(g.components[v].max_level)});
  }
  return out;
}

}  // namespace mvlm
