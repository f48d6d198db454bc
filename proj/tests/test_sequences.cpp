#include "oracles.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/sequences.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace sigidx;

TEST_CASE("paper-table reading of a printed row") {
  const DegreeSequenceView v({3, 5, 7, 5, 6, 8, 10}, Convention::paper_table);
  CHECK(v.order() == 44);
  CHECK(v.edge_count() == 43);
  CHECK(v.max_degree() == 10);
  CHECK(v.mean() == Rational(44, 7));
  CHECK(v.size() == 7);
}

TEST_CASE("paper-table Δ is the last entry even when it is not the largest") {
  const DegreeSequenceView v({15, 14, 16, 23, 24, 26, 25}, Convention::paper_table);
  CHECK(v.max_degree() == 25);
}

TEST_CASE("standard reading") {
  const DegreeSequenceView v({3, 1, 1, 1});
  CHECK(v.order() == 4);
  CHECK(v.edge_count() == 3);
  CHECK(v.max_degree() == 3);
  CHECK(v.min_degree() == 1);
  CHECK(DegreeSequenceView({2, 2, 2}, Convention::standard, 3).edge_count() == 3);
  CHECK(std::ranges::equal(v.sorted().entries(), std::vector<std::int64_t>{1, 1, 1, 3}));
  CHECK_THROWS_AS(DegreeSequenceView({}), DomainError);
  CHECK_THROWS(DegreeSequenceView({2, 0, 1}));
}

TEST_CASE("derived sequences") {
  const DegreeSequenceView v({1, 3, 2, 2});
  const auto d = derive(v);
  CHECK(d.half_differences == std::vector<Rational>{1, Rational(-1, 2), 0});
  CHECK(d.half_sums == std::vector<Rational>{2, Rational(5, 2), 2});
  CHECK(d.max_half_difference == 1);
  CHECK(d.max_half_sum == Rational(5, 2));
  CHECK(d.mean_half_difference == Rational(1, 6));
  CHECK(d.mean_half_sum == Rational(13, 6));
  CHECK(reconstruct(d) == std::vector<std::int64_t>{1, 3, 2, 2});
  CHECK_THROWS_AS(derive(DegreeSequenceView({4})), DomainError);
}

TEST_CASE("derive then reconstruct is the identity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> deg(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> e(2 + trial % 9);
    for (auto& x : e) x = deg(rng);
    CHECK(reconstruct(derive(DegreeSequenceView(e))) == e);
  }
}

namespace {

// All non-increasing sequences with entries in [0, max_part] summing to `total`.
void partitions(std::int64_t total, std::int64_t max_part, std::vector<std::int64_t>& cur,
                const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (total == 0) {
    visit(cur);
    return;
  }
  for (std::int64_t p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("Erdős–Gallai agrees with Havel–Hakimi on all even sums up to 24") {
  std::size_t checked = 0;
  for (std::int64_t total = 0; total <= 24; total += 2) {
    std::vector<std::int64_t> cur;
    partitions(total, total, cur, [&](const std::vector<std::int64_t>& parts) {
      // Pad with zeros so a vertex count of up to 13 is explored.
      for (std::size_t zeros = 0; zeros <= 2; ++zeros) {
        auto seq = parts;
        seq.insert(seq.end(), zeros, 0);
        if (seq.empty()) continue;
        bool hh = true;
        try {
          const Graph g = realize_graph_hakimi(seq);
          std::vector<std::int64_t> got = oracle::degrees(g);
          CHECK(got == seq);
        } catch (const DomainError&) {
          hh = false;
        }
        CHECK(is_graphical(seq) == hh);
        ++checked;
      }
    });
  }
  CHECK(checked > 1000);
}

TEST_CASE("tree sequences and caterpillar realization") {
  CHECK(is_tree_sequence(std::vector<std::int64_t>{3, 1, 1, 1}));
  CHECK_FALSE(is_tree_sequence(std::vector<std::int64_t>{2, 2, 2}));
  CHECK_FALSE(is_tree_sequence(std::vector<std::int64_t>{2, 0, 1, 1}));
  CHECK_FALSE(is_tree_sequence(std::vector<std::int64_t>{0}));

  const std::vector<std::int64_t> seq{1, 3, 1, 2, 1, 4, 1, 1};
  REQUIRE(is_tree_sequence(seq));
  const Graph t = realize_tree(seq);
  CHECK(t.is_tree());
  auto want = seq;
  auto got = oracle::degrees(t);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  CHECK(got == want);
  CHECK_THROWS_AS(realize_tree(std::vector<std::int64_t>{2, 2, 2}), DomainError);
}

TEST_CASE("Prüfer decoding agrees with the textbook decoder") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 12;
    std::uniform_int_distribution<VertexId> letter(0, static_cast<VertexId>(n - 1));
    std::vector<VertexId> word(n - 2);
    for (auto& x : word) x = letter(rng);
    CHECK(tree_from_pruefer(word, n) == oracle::decode_pruefer(word, n));
  }
}

TEST_CASE("random trees are seeded and valid") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph a = random_tree(12, seed);
    CHECK(a.is_tree());
    CHECK(a == random_tree(12, seed));
  }
  CHECK_FALSE(random_tree(12, 1) == random_tree(12, 2));
}

TEST_CASE("sequence literals") {
  CHECK(parse_sequence_literal("3,5,7") == std::vector<std::int64_t>{3, 5, 7});
  CHECK(parse_sequence_literal(" 1, 2 ,3 ") == std::vector<std::int64_t>{1, 2, 3});
  CHECK_THROWS_AS(parse_sequence_literal(""), InputError);
  CHECK_THROWS_AS(parse_sequence_literal("1,,2"), InputError);
  CHECK_THROWS_AS(parse_sequence_literal("1,x"), InputError);
  CHECK(parse_convention("paper-table") == Convention::paper_table);
  CHECK_THROWS_AS(parse_convention("weird"), InputError);
}
