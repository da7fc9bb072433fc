#include "doctest.h"
#include "fixtures.hpp"
#include "mvlm/model.hpp"

using namespace mvlm;

TEST_CASE("extended thresholds bracket the edge thresholds") {
  Model m = fixtures::feedback_full();
  CHECK(extended_thresholds(m.graph, 0, 0) == std::vector<Level>{0, 2, 3});
  CHECK(extended_thresholds(m.graph, 1, 1) == std::vector<Level>{0, 2});
  CHECK(extended_thresholds(m.graph, 1, 0) == std::vector<Level>{0, 1, 2});
  CHECK(extended_thresholds(m.graph, 0, 1) == std::vector<Level>{0, 1, 3});
}

TEST_CASE("activity intervals partition the regulator's level range") {
  Model m = fixtures::feedback_full();
  CHECK(activity_intervals(m.graph, 0, 0) ==
        std::vector<Interval>{{0, 2}, {2, 3}});
  CHECK(activity_intervals(m.graph, 0, 1) ==
        std::vector<Interval>{{0, 1}, {1, 3}});
  // non-regulator contributes the single full interval
  CHECK(activity_intervals(m.graph, 1, 1) == std::vector<Interval>{{0, 2}});

  // generic partition property on random graphs
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Model r = fixtures::random_model(rng);
    for (std::size_t u = 0; u < r.graph.size(); ++u)
      for (std::size_t v = 0; v < r.graph.size(); ++v) {
        auto list = activity_intervals(r.graph, u, v);
        CHECK(list.front().low == 0);
        CHECK(list.back().high == r.graph.components[u].max_level + 1);
        for (std::size_t k = 0; k + 1 < list.size(); ++k) {
          CHECK(list[k].low < list[k].high);
          CHECK(list[k].high == list[k + 1].low);
        }
      }
  }
}

TEST_CASE("contexts enumerate the interval product, first regulator fastest") {
  Model m = fixtures::feedback_full();
  auto v_contexts = contexts(m.graph, 0);
  REQUIRE(v_contexts.size() == 4);
  CHECK(v_contexts[0] == Context{{{0, 2}, {0, 1}}});
  CHECK(v_contexts[1] == Context{{{2, 3}, {0, 1}}});
  CHECK(v_contexts[2] == Context{{{0, 2}, {1, 2}}});
  CHECK(v_contexts[3] == Context{{{2, 3}, {1, 2}}});

  auto u_contexts = contexts(m.graph, 1);
  REQUIRE(u_contexts.size() == 2);
  CHECK(u_contexts[0] == Context{{{0, 1}, {0, 2}}});
  CHECK(u_contexts[1] == Context{{{1, 3}, {0, 2}}});

  RegulatoryGraph lone =
      make_graph({Component{"w", 1}}, {});
  CHECK(contexts(lone, 0) == std::vector<Context>{Context{{{0, 2}}}});
}

TEST_CASE("context count is the product of interval counts") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Model r = fixtures::random_model(rng);
    for (std::size_t v = 0; v < r.graph.size(); ++v) {
      std::size_t expected = 1;
      for (std::size_t u = 0; u < r.graph.size(); ++u)
        expected *= activity_intervals(r.graph, u, v).size();
      CHECK(contexts(r.graph, v).size() == expected);
    }
  }
}

TEST_CASE("context_of finds the enclosing slice") {
  Model m = fixtures::feedback_full();
  CHECK(context_of(m.graph, 1, State{1, 1}) == Context{{{1, 3}, {0, 2}}});
  CHECK(context_of(m.graph, 0, State{2, 0}) == Context{{{2, 3}, {0, 1}}});

  // every state lands in exactly one context
  std::mt19937 rng(13);
  for (int i = 0; i < 25; ++i) {
    Model r = fixtures::random_model(rng, 3, 3);
    for (std::size_t v = 0; v < r.graph.size(); ++v) {
      auto all = contexts(r.graph, v);
      State s(r.graph.size(), 0);
      for (;;) {
        Context home = context_of(r.graph, v, s);
        int hits = 0;
        for (const auto& ctx : all) {
          bool inside = true;
          for (std::size_t u = 0; u < s.size(); ++u)
            if (!ctx.intervals[u].contains(s[u])) inside = false;
          if (inside) {
            ++hits;
            CHECK(ctx == home);
          }
        }
        CHECK(hits == 1);
        std::size_t d = s.size();
        while (d-- > 0) {
          if (s[d] < r.graph.components[d].max_level) {
            ++s[d];
            break;
          }
          s[d] = 0;
          if (d == 0) goto next_component;
        }
        continue;
      next_component:
        break;
      }
    }
  }
}

TEST_CASE("context space addressing round-trips") {
  std::mt19937 rng(17);
  for (int i = 0; i < 25; ++i) {
    Model r = fixtures::random_model(rng);
    for (std::size_t v = 0; v < r.graph.size(); ++v) {
      ContextSpace space(r.graph, v);
      for (std::size_t idx = 0; idx < space.size(); ++idx)
        CHECK(space.index_of(space.context(idx)) == idx);
    }
  }
}

TEST_CASE("foreign contexts are rejected") {
  Model m = fixtures::feedback_full();
  ContextSpace space(m.graph, 0);
  CHECK_THROWS_AS(space.index_of(Context{{{0, 1}, {0, 1}}}), StructuralError);
  CHECK_THROWS_AS(space.index_of(Context{{{0, 2}}}), StructuralError);
}

TEST_CASE("validate accepts the bundled models") {
  CHECK(validate(fixtures::feedback_full()).empty());
  CHECK(validate(fixtures::feedback_reduced()).empty());
  CHECK(validate(fixtures::amplifier_canonical()).empty());
  CHECK(validate(fixtures::amplifier_plain()).empty());
  CHECK(validate(fixtures::amplifier_minimal()).empty());
}

TEST_CASE("validate reports range and totality violations") {
  Model m = fixtures::feedback_full();
  m.params.tables[0][0] = 3;  // above max level 2
  auto diags = validate(m);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].where.find("param v") == 0);
  CHECK(diags[0].message.find("range violation") == 0);

  Model t = fixtures::feedback_full();
  t.params.tables[1].pop_back();
  diags = validate(t);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].where.find("param u") == 0);
  CHECK(diags[0].message.find("totality violation") == 0);
}

TEST_CASE("validate reports graph violations") {
  Model m = fixtures::feedback_full();
  m.graph.edges.push_back(Edge{0, 0, 7});  // threshold beyond max level
  auto diags = validate(m);
  CHECK(!diags.empty());

  Model d = fixtures::feedback_full();
  d.graph.components[1].name = "v";
  CHECK(!validate(d).empty());
}

TEST_CASE("make_graph rejects structural violations") {
  CHECK_THROWS_AS(make_graph({Component{"a", 0}}, {}), StructuralError);
  CHECK_THROWS_AS(
      make_graph({Component{"a", 1}, Component{"a", 1}}, {}),
      StructuralError);
  CHECK_THROWS_AS(make_graph({Component{"a", 1}}, {Edge{0, 0, 2}}),
                  StructuralError);
  CHECK_THROWS_AS(
      make_graph({Component{"a", 1}}, {Edge{0, 0, 1}, Edge{0, 0, 1}}),
      StructuralError);
}

TEST_CASE("context cap guards table blow-up") {
  // twenty boolean self-regulators each regulating component 0
  std::vector<Component> comps;
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < 24; ++i) {
    comps.push_back(Component{"c" + std::to_string(i), 1});
    edges.push_back(Edge{i, 0, 1});
  }
  RegulatoryGraph g = make_graph(comps, edges);
  Limits tight;
  tight.max_contexts = 1 << 10;
  CHECK_THROWS_AS(ContextSpace(g, 0, tight), CapacityError);
  CHECK_NOTHROW(ContextSpace(g, 1, tight));
}
