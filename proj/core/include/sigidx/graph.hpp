#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sigidx {

using VertexId = std::uint32_t;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built;
/// connectivity is a predicate, not an invariant.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `vertex_count` vertices.
  explicit Graph(std::size_t vertex_count);

  /// Validates and normalizes `edges`: rejects self-loops, duplicates and
  /// out-of-range endpoints with a DomainError.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted edge list.
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Sorted neighbour list of `v`.
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }

  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  bool has_edge(VertexId a, VertexId b) const;
  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Degree summary of a graph; the handshake sum(degrees) == 2*edge_count holds.
struct VertexDegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::size_t edge_count = 0;
};

VertexDegreeProfile degree_profile(const Graph& g);

// ---------------------------------------------------------------------------
// Families. Vertex ids are deterministic: spine/centres first, then leaves in
// increasing order.

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,n-1}: centre 0, leaves 1..n-1.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Two adjacent centres of degrees r (id 0) and k (id 1); r-1 leaves on 0,
/// then k-1 leaves on 1.
Graph double_star_graph(std::size_t r, std::size_t k);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Vertex i-1 carries label i in 1..n; labels i != j are adjacent iff
/// i + j >= n + 1.
Graph monogenic_semigroup_graph(std::size_t n);

enum class Family { path, cycle, star, complete, double_star, complete_bipartite, monogenic };

struct FamilySpec {
  Family family;
  std::vector<std::size_t> args;
};

/// Parses "path:5", "double_star:3,4", "complete_bipartite:2,3", ...
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Transformations.

Graph complement(const Graph& g);

/// Cartesian product; vertex (u, v) gets id u * h.vertex_count() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

// ---------------------------------------------------------------------------
// Edge-list text format: optional "# n=<int>" header, then one "u v" pair per
// line (0-based ids). Blank lines and other '#' comment lines are ignored.

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace sigidx
