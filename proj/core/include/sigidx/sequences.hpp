#pragma once

#include "sigidx/graph.hpp"
#include "sigidx/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sigidx {

/// How a degree sequence's entries relate to the tree they describe.
///
/// standard:    the entries are the full degree multiset; n = k (entry count),
///              m = supplied edge count, else n - 1; Δ = largest entry.
/// paper_table: the reading used by the published tables; n = sum of entries,
///              m = n - 1, Δ = last entry d_k (the nominal maximum of a
///              non-decreasing sequence, even when the printed order is not).
enum class Convention { standard, paper_table };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view text);

/// Degree sequence D = (d_1..d_k) in the order given. Order is never changed
/// implicitly; use sorted() for the non-decreasing view.
class DegreeSequenceView {
 public:
  explicit DegreeSequenceView(std::vector<std::int64_t> entries,
                              Convention convention = Convention::standard,
                              std::optional<std::int64_t> edge_count = std::nullopt);

  /// Non-decreasing degrees of `g`, standard convention, m = g.edge_count().
  /// Throws DomainError when `g` has an isolated vertex.
  static DegreeSequenceView of_graph(const Graph& g);

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  Convention convention() const noexcept { return convention_; }

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t edge_count() const noexcept { return edge_count_; }
  std::int64_t max_degree() const noexcept { return max_degree_; }
  std::int64_t min_degree() const noexcept { return min_degree_; }
  std::int64_t entry_sum() const noexcept { return sum_; }
  std::int64_t cube_sum() const noexcept { return cube_sum_; }
  /// λ_D = (sum of entries) / k, exact.
  Rational mean() const { return Rational(BigInt(sum_), BigInt(entries_.size())); }

  DegreeSequenceView sorted() const;

 private:
  std::vector<std::int64_t> entries_;
  Convention convention_;
  std::int64_t order_ = 0;
  std::int64_t edge_count_ = 0;
  std::int64_t max_degree_ = 0;
  std::int64_t min_degree_ = 0;
  std::int64_t sum_ = 0;
  std::int64_t cube_sum_ = 0;
};

/// R (half differences t_i) and A (half sums a_i) of consecutive entries.
/// a_i + t_i = d_{i+1} and a_i - t_i = d_i.
struct DerivedSequences {
  std::vector<Rational> half_differences;
  std::vector<Rational> half_sums;
  Rational max_half_difference;  // Δ_R
  Rational max_half_sum;         // Δ_A
  Rational mean_half_difference; // λ_R
  Rational mean_half_sum;        // λ_A

  const Rational& t_first() const { return half_differences.front(); }
  const Rational& t_last() const { return half_differences.back(); }
  const Rational& a_first() const { return half_sums.front(); }
  const Rational& a_last() const { return half_sums.back(); }
};

/// Requires at least two entries.
DerivedSequences derive(const DegreeSequenceView& seq);

/// Inverse of derive(): rebuilds d_1..d_k from R and A.
std::vector<std::int64_t> reconstruct(const DerivedSequences& derived);

/// Erdős–Gallai test. Zero entries are allowed here.
bool is_graphical(std::span<const std::int64_t> entries);

/// All entries >= 1 and sum == 2(k - 1).
bool is_tree_sequence(std::span<const std::int64_t> entries);

/// Caterpillar realization: entries > 1 form a spine in ascending order
/// (ids 0..s-1), leaves follow greedily along the spine.
Graph realize_tree(std::span<const std::int64_t> entries);

/// Havel–Hakimi greedy realization. Vertex i receives degree entries[i].
Graph realize_graph_hakimi(std::span<const std::int64_t> entries);

/// Uniform labelled tree on n vertices from a seeded random Prüfer word.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Decodes a Prüfer word over 0..n-1 (length n - 2) into a labelled tree.
Graph tree_from_pruefer(std::span<const VertexId> word, std::size_t n);

/// Parses a comma-separated integer literal such as "3,5,7,5,6,8,10".
std::vector<std::int64_t> parse_sequence_literal(std::string_view text);

}  // namespace sigidx
