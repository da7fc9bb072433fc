#include "doctest.h"
#include "fixtures.hpp"
#include "mvlm/canonical.hpp"
#include "mvlm/dynamics.hpp"

using namespace mvlm;

TEST_CASE("canonical band membership") {
  CHECK(is_canonical(fixtures::feedback_full()));
  CHECK(is_canonical(fixtures::feedback_reduced()));
  CHECK(is_canonical(fixtures::amplifier_canonical()));
  CHECK(is_canonical(fixtures::amplifier_minimal()));
  CHECK_FALSE(is_canonical(fixtures::amplifier_plain()));
}

TEST_CASE("canonize clamps into the band") {
  Model plain = fixtures::amplifier_plain();
  Model expected = fixtures::amplifier_canonical();
  CHECK(canonize(plain) == expected);

  // clamping from below: value far under the own interval
  Model m = fixtures::feedback_full();
  m.params.tables[0][1] = 0;  // own interval [2,3), band is [1,3]
  CHECK(canonize(m).params.tables[0][1] == 1);
}

TEST_CASE("canonize is idempotent and dynamics preserving") {
  std::mt19937 rng(47);
  for (int i = 0; i < 150; ++i) {
    Model m = fixtures::random_model(rng);
    Model c = canonize(m);
    CHECK(is_canonical(c));
    CHECK(canonize(c) == c);
    CHECK(ts_equal(async_ts(m), async_ts(c)));
  }
}

TEST_CASE("first missing edge follows (source, target, threshold) order") {
  Model r = fixtures::feedback_reduced();
  auto missing = first_missing_edge(r.graph);
  REQUIRE(missing.has_value());
  CHECK(*missing == Edge{0, 0, 1});

  Model m = fixtures::amplifier_minimal();
  missing = first_missing_edge(m.graph);
  REQUIRE(missing.has_value());
  CHECK(*missing == Edge{0, 0, 1});
}

TEST_CASE("complete_step splits contexts and copies values") {
  Model r = fixtures::feedback_reduced();
  Model stepped = complete_step(r);
  CHECK(stepped.graph.edges ==
        std::vector<Edge>{{0, 0, 1}, {0, 0, 2}, {0, 1, 1}});
  // the old own interval [0,2) split into [0,1) and [1,2), both keeping 2
  CHECK(stepped.params.tables[0] == std::vector<Level>{2, 2, 1});
  CHECK(stepped.params.tables[1] == r.params.tables[1]);
  CHECK(ts_equal(async_ts(r), async_ts(stepped)));

  // completion on a complete graph is the identity
  Model full = complete(r);
  CHECK(complete_step(full) == full);
}

TEST_CASE("complete reaches the full edge set in missing-count steps") {
  std::mt19937 rng(53);
  for (int i = 0; i < 60; ++i) {
    Model m = fixtures::random_model(rng, 3, 2);
    std::size_t total = 0;
    for (const auto& c : m.graph.components)
      total += c.max_level * m.graph.size();
    std::size_t missing = total - m.graph.edges.size();

    Model cur = m;
    std::size_t steps = 0;
    while (first_missing_edge(cur.graph)) {
      cur = complete_step(cur);
      ++steps;
    }
    CHECK(steps == missing);
    CHECK(cur.graph.edges.size() == total);
    CHECK(cur == complete(m));
    CHECK(ts_equal(async_ts(m), async_ts(cur)));
  }
}

TEST_CASE("complete_step_at rejects present or invalid edges") {
  Model m = fixtures::feedback_full();
  CHECK_THROWS_AS(complete_step_at(m, Edge{0, 0, 2}), DomainError);
  CHECK_THROWS_AS(complete_step_at(m, Edge{0, 0, 9}), DomainError);
  CHECK_THROWS_AS(complete_step_at(m, Edge{7, 0, 1}), DomainError);
}

TEST_CASE("completion equivalence matches the shared canonical form") {
  CHECK(equivalent_by_completion(fixtures::feedback_full(),
                                 fixtures::feedback_reduced()));
  CHECK(canonize(complete(fixtures::feedback_full())) ==
        canonize(complete(fixtures::feedback_reduced())));
  CHECK_FALSE(equivalent_by_completion(fixtures::feedback_full(),
                                       fixtures::amplifier_plain()));

  // a single flipped parameter changes the dynamics
  Model tweaked = fixtures::amplifier_plain();
  tweaked.params.tables[0][3] = 0;
  CHECK_FALSE(
      equivalent_by_completion(fixtures::amplifier_plain(), tweaked));
  CHECK_FALSE(ts_equal(async_ts(fixtures::amplifier_plain()),
                       async_ts(tweaked)));
}

TEST_CASE("completion equivalence needs matching components") {
  Model other = parse_model(
      "component a 1\n"
      "param a = 0\n");
  CHECK_THROWS_AS(
      equivalent_by_completion(fixtures::feedback_full(), other),
      DomainError);
}

TEST_CASE("canonical values of a complete graph read off the update") {
  // on a complete graph every context is one state, and the canonical
  // parameter equals that state's successor level
  Model full = canonize(complete(fixtures::feedback_full()));
  ContextSpace space(full.graph, 0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    State s(2);
    for (std::size_t u = 0; u < 2; ++u)
      s[u] = space.regulator_intervals(u)[space.interval_index(i, u)].low;
    CHECK(full.params.tables[0][i] == update(full, 0, s));
  }
}
