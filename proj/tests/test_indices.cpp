#include "oracles.hpp"

#include "sigidx/indices.hpp"
#include "sigidx/search.hpp"
#include "sigidx/sequences.hpp"

#include <doctest.h>

using namespace sigidx;

TEST_CASE("indices agree with the adjacency-matrix oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = oracle::random_graph(1 + seed % 14, 0.1 + 0.05 * (seed % 15), seed);
    CHECK(albertson(g) == oracle::irr(g));
    CHECK(sigma(g) == oracle::sigma(g));
    CHECK(sigma_total(g) == oracle::sigma_total(g));
    CHECK(zagreb_m1(g) == oracle::zagreb_m1(g));
  }
}

TEST_CASE("small worked values") {
  const Graph p5 = path_graph(5);
  CHECK(albertson(p5) == 2);
  CHECK(sigma(p5) == 2);
  CHECK(sigma_total(p5) == 6);
  CHECK(zagreb_m1(p5) == 14);
  CHECK(sigma(star_graph(5)) == 36);
  CHECK(albertson(star_graph(5)) == 12);
  CHECK(compute_index(IndexKind::sigma_t, p5) == 6);
  CHECK(sigma(Graph(1)) == 0);
}

TEST_CASE("paths and cycles") {
  for (std::size_t n = 3; n <= 50; ++n) {
    CHECK(sigma(path_graph(n)) == 2);
    CHECK(sigma(cycle_graph(n)) == 0);
  }
}

TEST_CASE("monogenic closed form against the constructed graph") {
  for (std::int64_t n = 3; n <= 60; ++n)
    CHECK(albertson_monogenic(n) == oracle::irr(monogenic_semigroup_graph(static_cast<std::size_t>(n))));
}

TEST_CASE("double star closed form") {
  for (std::int64_t r = 2; r <= 30; ++r)
    for (std::int64_t k = 2; k <= 30; ++k)
      CHECK(sigma_double_star(r, k) ==
            oracle::sigma(double_star_graph(static_cast<std::size_t>(r), static_cast<std::size_t>(k))));
}

TEST_CASE("tree closed form against a term-by-term evaluation") {
  const auto by_terms = [](const std::vector<std::int64_t>& d, std::int64_t n) {
    const std::size_t k = d.size();
    std::int64_t s = 0;
    for (std::size_t i : {std::size_t{0}, k - 1}) s += (d[i] + 1) * (d[i] - 1) * (d[i] - 1);
    for (std::size_t i = 1; i + 1 < k; ++i) {
      s += (d[i] + 2) * (d[i] - 1) * (d[i] - 1);
      s += (d[i] - d[i + 1]) * (d[i] - d[i + 1]);
    }
    return s + 2 * n - 2;
  };
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> deg(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> d(2 + trial % 8);
    for (auto& x : d) x = deg(rng);
    const DegreeSequenceView standard(d);
    const DegreeSequenceView table(d, Convention::paper_table);
    CHECK(sigma_closed_form(standard) == by_terms(d, standard.order()));
    CHECK(sigma_closed_form(table) == by_terms(d, table.order()));
  }
}

TEST_CASE("published complete bipartite form disagrees on K_{2,3}") {
  const auto c = check_complete_bipartite(2, 3);
  CHECK(c.actual == 6);
  CHECK(c.actual == oracle::sigma(complete_bipartite_graph(2, 3)));
  CHECK(c.claimed == sigma_complete_bipartite_claimed(2, 3));
  CHECK_FALSE(c.agree);
  // The symmetric form nm(n-m)^2 is what the graph gives.
  for (std::size_t a = 1; a <= 6; ++a)
    for (std::size_t b = 1; b <= 6; ++b) {
      const auto d = static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
      CHECK(oracle::sigma(complete_bipartite_graph(a, b)) == static_cast<std::int64_t>(a * b) * d * d);
    }
}

TEST_CASE("published product form disagrees on P_3 x K_2; the swapped form holds") {
  const auto checks = check_product(path_graph(3), "P_3", path_graph(2), "K_2");
  REQUIRE(checks.size() == 2);
  CHECK_FALSE(checks[0].agree);
  CHECK(checks[1].agree);
  CHECK(checks[0].actual == oracle::sigma(cartesian_product(path_graph(3), path_graph(2))));
}

TEST_CASE("four-entry Albertson form") {
  // d_1^2 + d_4^2 + Σ_{i=1..3}|d_i - d_{i+1}| + Σ_{i=2..3}(d_i+2)(d_i-1) - 2
  const std::vector<std::int64_t> e{1, 2, 2, 1};
  CHECK(albertson_closed_form_4(e) == 1 + 1 + (1 + 0 + 1) + (4 + 4) - 2);
}

TEST_CASE("known-form battery is complete and self-consistent") {
  const auto checks = compare_known_forms();
  CHECK(checks.size() >= 6);
  for (const auto& c : checks) CHECK(c.agree == (c.claimed == c.actual));
}
