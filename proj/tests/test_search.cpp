#include "oracles.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/indices.hpp"
#include "sigidx/search.hpp"

#include <doctest.h>

#include <set>

using namespace sigidx;

TEST_CASE("free-tree counts match the Prüfer oracle") {
  for (std::size_t n = 1; n <= 10; ++n) {
    INFO("n = " << n);
    CHECK(count_free_trees(n) == oracle::free_tree_count(n));
  }
}

TEST_CASE("enumerated trees are valid and pairwise non-isomorphic") {
  for (std::size_t n = 1; n <= 11; ++n) {
    std::set<std::string> keys;
    std::size_t count = 0;
    enumerate_free_trees(n, [&](const LevelSequence& levels) {
      const Graph t = tree_from_levels(levels);
      CHECK(t.is_tree());
      CHECK(t.vertex_count() == n);
      keys.insert(oracle::ahu_key(t));
      ++count;
    });
    CHECK(keys.size() == count);
  }
}

TEST_CASE("larger counts") {
  CHECK(count_free_trees(12) == 551);
  CHECK(count_free_trees(16) == 19320);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(count_free_trees(19), ResourceError);
  CHECK_NOTHROW(count_free_trees(5, 5));
  CHECK_THROWS_AS(count_free_trees(6, 5), ResourceError);
  CHECK_THROWS_AS(count_free_trees(0), DomainError);
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph t = random_tree(3 + seed % 12, seed);
    CHECK(canonical_form(t) == canonical_form(oracle::relabel(t, seed + 1)));
  }
  // Equal forms exactly when the oracle keys agree.
  std::vector<Graph> trees;
  for (std::uint64_t seed = 0; seed < 120; ++seed) trees.push_back(random_tree(7, seed));
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      CHECK((canonical_form(trees[i]) == canonical_form(trees[j])) ==
            (oracle::ahu_key(trees[i]) == oracle::ahu_key(trees[j])));
  CHECK_THROWS_AS(canonical_form(cycle_graph(4)), DomainError);
}

TEST_CASE("level sequences decode to the right parent structure") {
  const Graph t = tree_from_levels({0, 1, 2, 1});
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(1, 2));
  CHECK(t.has_edge(0, 3));
  CHECK_THROWS_AS(tree_from_levels({0, 2}), DomainError);
  CHECK_THROWS_AS(tree_from_levels({1}), DomainError);
}

TEST_CASE("extremal sigma over all trees") {
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto hi = extremal(TreeClass::all(n), Objective::sigma, Direction::max);
    const auto lo = extremal(TreeClass::all(n), Objective::sigma, Direction::min);
    const auto nn = static_cast<std::int64_t>(n);
    CHECK(hi.optimum == (nn - 1) * (nn - 2) * (nn - 2));
    CHECK(canonical_form(hi.witness_graph) == canonical_form(star_graph(n)));
    CHECK(lo.optimum == 2);
    CHECK(canonical_form(lo.witness_graph) == canonical_form(path_graph(n)));
    CHECK(hi.trees_examined == count_free_trees(n));
  }
}

TEST_CASE("restricted classes") {
  const auto ds = extremal(TreeClass::with_degree_multiset({3, 4, 1, 1, 1, 1, 1}), Objective::sigma,
                           Direction::max);
  CHECK(ds.optimum == sigma(double_star_graph(3, 4)));
  CHECK(ds.trees_examined == 1);

  const auto md = extremal(TreeClass::with_max_degree(8, 3), Objective::albertson, Direction::max);
  CHECK(degree_profile(md.witness_graph).max_degree == 3);
  CHECK_THROWS_AS(extremal(TreeClass::with_max_degree(5, 9), Objective::sigma, Direction::max),
                  DomainError);
  CHECK_THROWS_AS(TreeClass::with_degree_multiset({2, 2, 2}), DomainError);
}

TEST_CASE("falsification of the average bound") {
  const auto found = falsify("B8", FalsifyMode::exhaustive(6), {});
  const auto p6 = canonical_form(path_graph(6));
  bool has_path = false;
  for (const auto& c : found) {
    CHECK(c.report.hypotheses_met);
    CHECK(c.report.verdict == Verdict::fails);
    CHECK(replay(c));
    if (c.encoding == p6) {
      has_path = true;
      CHECK(c.report.lhs->lo == 2);
      CHECK(c.report.rhs->lo == Rational(336, 5));
    }
  }
  CHECK(has_path);
  // Deterministic across runs.
  const auto again = falsify("B8", FalsifyMode::exhaustive(6), {});
  REQUIRE(again.size() == found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    CHECK(to_json(again[i]).dump() == to_json(found[i]).dump());
}

TEST_CASE("random falsification is seeded and deduplicated") {
  const auto a = falsify("B8", FalsifyMode::random(9, 60, 5), {});
  const auto b = falsify("B8", FalsifyMode::random(9, 60, 5), {});
  REQUIRE(a.size() == b.size());
  std::set<LevelSequence> seen;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].encoding == b[i].encoding);
    CHECK(seen.insert(a[i].encoding).second);
  }
  CHECK_THROWS_AS(falsify("B99", FalsifyMode::exhaustive(4), {}), InputError);
  CHECK_THROWS_AS(falsify("B8", FalsifyMode::exhaustive(40), {}), ResourceError);
}

TEST_CASE("Albertson class bounds use the class extremes") {
  const auto reports = evaluate_albertson_class_bounds(8, {});
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].bound_id == "B1a");
  CHECK(reports[0].lhs.has_value());
}
