#pragma once

#include <random>
#include <string>

#include "mvlm/io.hpp"

// Shared test models.
//
// feedback_*: a two-component loop where u nudges v and v both sustains
// itself at high levels and switches u on. The full variant carries one
// edge that leaves no trace in the dynamics; the reduced variant is what
// stripping it yields.
//
// amplifier_*: v needs u to rise at all, and its self-edge only amplifies
// how far it rises. The plain variant is the normalized table, canonical
// the canonized one, minimal the stripped one.

namespace fixtures {

inline const char* feedback_full_text =
    "component v 2\n"
    "component u 1\n"
    "edge v 2 v\n"
    "edge v 1 u\n"
    "edge u 1 v\n"
    "param v v:0 u:0 = 2\n"
    "param v v:2 u:0 = 1\n"
    "param v v:0 u:1 = 2\n"
    "param v v:2 u:1 = 1\n"
    "param u v:0 = 0\n"
    "param u v:1 = 1\n";

inline const char* feedback_reduced_text =
    "component v 2\n"
    "component u 1\n"
    "edge v 2 v\n"
    "edge v 1 u\n"
    "param v v:0 = 2\n"
    "param v v:2 = 1\n"
    "param u v:0 = 0\n"
    "param u v:1 = 1\n";

inline const char* amplifier_canonical_text =
    "component v 2\n"
    "component u 1\n"
    "edge v 1 v\n"
    "edge u 1 v\n"
    "param v v:0 u:0 = 0\n"
    "param v v:1 u:0 = 0\n"
    "param v v:0 u:1 = 1\n"
    "param v v:1 u:1 = 2\n"
    "param u = 0\n";

inline const char* amplifier_plain_text =
    "component v 2\n"
    "component u 1\n"
    "edge v 1 v\n"
    "edge u 1 v\n"
    "param v v:0 u:0 = 0\n"
    "param v v:1 u:0 = 0\n"
    "param v v:0 u:1 = 2\n"
    "param v v:1 u:1 = 2\n"
    "param u = 0\n";

inline const char* amplifier_minimal_text =
    "component v 2\n"
    "component u 1\n"
    "edge u 1 v\n"
    "param v u:0 = 0\n"
    "param v u:1 = 2\n"
    "param u = 0\n";

inline mvlm::Model feedback_full() {
  return mvlm::parse_model(feedback_full_text);
}
inline mvlm::Model feedback_reduced() {
  return mvlm::parse_model(feedback_reduced_text);
}
inline mvlm::Model amplifier_canonical() {
  return mvlm::parse_model(amplifier_canonical_text);
}
inline mvlm::Model amplifier_plain() {
  return mvlm::parse_model(amplifier_plain_text);
}
inline mvlm::Model amplifier_minimal() {
  return mvlm::parse_model(amplifier_minimal_text);
}

/// Random graph and total parametrization with up to `max_components`
/// components and levels up to `max_level`.
inline mvlm::Model random_model(std::mt19937& rng, int max_components = 4,
                                mvlm::Level max_level = 3) {
  using namespace mvlm;
  std::uniform_int_distribution<int> comp_count(1, max_components);
  std::uniform_int_distribution<Level> level(1, max_level);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  int n = comp_count(rng);
  std::vector<Component> components;
  for (int i = 0; i < n; ++i)
    components.push_back(
        Component{"c" + std::to_string(i), level(rng)});

  double density = coin(rng);  // whole spectrum from sparse to dense
  std::vector<Edge> edges;
  for (std::uint32_t source = 0; source < components.size(); ++source)
    for (std::uint32_t target = 0; target < components.size(); ++target)
      for (Level t = 1; t <= components[source].max_level; ++t)
        if (coin(rng) < density) edges.push_back(Edge{source, target, t});

  RegulatoryGraph graph = make_graph(std::move(components), std::move(edges));
  Parametrization params;
  params.tables.resize(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    ContextSpace space(graph, v);
    std::uniform_int_distribution<Level> value(
        0, graph.components[v].max_level);
    for (std::size_t i = 0; i < space.size(); ++i)
      params.tables[v].push_back(value(rng));
  }
  return mvlm::Model{std::move(graph), std::move(params)};
}

/// Fresh random values over the same graph.
inline mvlm::Model reparametrize(const mvlm::Model& m, std::mt19937& rng) {
  mvlm::Model out = m;
  for (std::size_t v = 0; v < out.graph.size(); ++v) {
    std::uniform_int_distribution<mvlm::Level> value(
        0, out.graph.components[v].max_level);
    for (auto& cell : out.params.tables[v]) cell = value(rng);
  }
  return out;
}

}  // namespace fixtures
