#pragma once

#include "sigidx/bounds.hpp"
#include "sigidx/graph.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sigidx {

/// Level sequence of a rooted tree in preorder (root at level 0).
using LevelSequence = std::vector<std::uint32_t>;

/// Default cap on enumeration order; overridable per call or through the
/// SIGIDX_ENUM_CAP environment variable.
inline constexpr std::size_t kDefaultEnumerationCap = 18;
std::size_t enumeration_cap_from_env();

/// Tree whose vertex i is the i-th entry of `levels`; parent of i is the last
/// j < i with levels[j] == levels[i] - 1.
Graph tree_from_levels(const LevelSequence& levels);

/// Emits one representative per isomorphism class of free trees on n vertices,
/// in a deterministic order, by the level-sequence successor method over
/// centre-rooted canonical forms. Throws ResourceError when n > cap.
void enumerate_free_trees(std::size_t n, const std::function<void(const LevelSequence&)>& visit,
                          std::size_t cap = kDefaultEnumerationCap);

std::size_t count_free_trees(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// Centre-rooted canonical level sequence: equal iff the trees are isomorphic.
/// Bicentral trees take the larger of the two centre-rooted forms.
LevelSequence canonical_form(const Graph& tree);

std::string to_string(const LevelSequence& levels);

struct TreeClass {
  enum class Kind { all_trees, degree_multiset, max_degree };
  Kind kind = Kind::all_trees;
  std::size_t n = 0;
  std::vector<std::int64_t> multiset;  // degree_multiset only
  std::size_t max_degree = 0;          // max_degree only

  static TreeClass all(std::size_t n);
  static TreeClass with_degree_multiset(std::vector<std::int64_t> entries);
  static TreeClass with_max_degree(std::size_t n, std::size_t delta);

  bool contains(const Graph& tree) const;
  std::string describe() const;
};

enum class Objective { sigma, albertson };
enum class Direction { max, min };

std::string_view to_string(Objective o);
std::string_view to_string(Direction d);

struct SearchResult {
  std::string class_description;
  Objective objective;
  Direction direction;
  std::int64_t optimum;
  LevelSequence witness;
  Graph witness_graph;
  std::uint64_t trees_examined;
  std::chrono::nanoseconds duration;
};

/// Exact optimum over the class; ties go to the first witness in enumeration
/// order. The witness is re-verified before returning.
SearchResult extremal(const TreeClass& cls, Objective objective, Direction direction,
                      std::size_t cap = kDefaultEnumerationCap);

struct Counterexample {
  std::string bound_id;
  LevelSequence encoding;
  Graph tree;
  BoundParams params;
  BoundReport report;
};

struct FalsifyMode {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  std::size_t n_max = 0;       // exhaustive: orders 1..n_max
  std::size_t n = 0;           // random: order
  std::size_t samples = 0;     // random
  std::uint64_t seed = 0;      // random

  static FalsifyMode exhaustive(std::size_t n_max);
  static FalsifyMode random(std::size_t n, std::size_t samples, std::uint64_t seed);
};

/// Evaluates `bound_id` on standard-convention trees and returns every input
/// with hypotheses met and holds == false, sorted by (order, encoding).
/// Random mode draws labelled trees from seeds seed, seed+1, ...; duplicates
/// up to isomorphism are reported once.
std::vector<Counterexample> falsify(const std::string& bound_id, const FalsifyMode& mode,
                                    const BoundParams& params,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Re-evaluates the stored tree; true when the stored verdict is reproduced.
bool replay(const Counterexample& c);

nlohmann::json to_json(const Counterexample& c);
nlohmann::json to_json(const SearchResult& r);

/// Class mode for the Albertson ratio/piecewise claims: the extremal irr over
/// all trees of order n is substituted for the instance irr (min for B1a/B1b,
/// max for B2a/B2b) and evaluated with the extremal tree's own parameters.
std::vector<BoundReport> evaluate_albertson_class_bounds(std::size_t n, const BoundParams& params,
                                                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace sigidx
