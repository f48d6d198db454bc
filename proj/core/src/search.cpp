#include "sigidx/search.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/indices.hpp"
#include "sigidx/sequences.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace sigidx {

std::size_t enumeration_cap_from_env() {
  if (const char* raw = std::getenv("SIGIDX_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultEnumerationCap;
}

Graph tree_from_levels(const LevelSequence& levels) {
  if (levels.empty()) throw DomainError("empty level sequence");
  std::vector<Edge> edges;
  std::vector<VertexId> last_at_level;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto level = levels[i];
    if (i == 0 ? level != 0 : (level == 0 || level > last_at_level.size()))
      throw DomainError("invalid level sequence at position " + std::to_string(i));
    last_at_level.resize(level);
    if (level > 0) edges.push_back({last_at_level[level - 1], static_cast<VertexId>(i)});
    last_at_level.push_back(static_cast<VertexId>(i));
  }
  return Graph(levels.size(), edges);
}

namespace {

// Successor in the reverse-lexicographic order of rooted level sequences.
// `p` is the position to advance; by default the last entry above level 1.
std::optional<LevelSequence> next_rooted(const LevelSequence& seq,
                                         std::optional<std::size_t> p = std::nullopt) {
  std::size_t pos = p.value_or(seq.size() - 1);
  if (!p)
    while (seq[pos] == 1) --pos;
  if (pos == 0) return std::nullopt;
  std::size_t q = pos - 1;
  while (seq[q] != seq[pos] - 1) --q;
  LevelSequence out = seq;
  for (std::size_t i = pos; i < out.size(); ++i) out[i] = out[i - pos + q];
  return out;
}

// Splits a centre-rooted sequence into its first root subtree (re-rooted) and
// the remainder (root plus the other subtrees).
std::pair<LevelSequence, LevelSequence> split_first_subtree(const LevelSequence& seq) {
  std::size_t second_child = seq.size();
  bool first_seen = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != 1) continue;
    if (first_seen) {
      second_child = i;
      break;
    }
    first_seen = true;
  }
  LevelSequence left;
  for (std::size_t i = 1; i < second_child; ++i) left.push_back(seq[i] - 1);
  LevelSequence rest{0};
  rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(second_child), seq.end());
  return {std::move(left), std::move(rest)};
}

// Moves `candidate` forward to the next sequence that is the canonical
// centre-rooted form of a free tree: the first subtree must not be taller
// than the rest, and on equal height must not be larger.
LevelSequence next_free(const LevelSequence& candidate) {
  const auto [left, rest] = split_first_subtree(candidate);
  const auto left_height = *std::max_element(left.begin(), left.end());
  const auto rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  LevelSequence next = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    const auto new_left = split_first_subtree(next).first;
    const auto height = *std::max_element(new_left.begin(), new_left.end());
    const std::size_t tail = height + 1;
    for (std::size_t i = 0; i < tail; ++i) next[next.size() - tail + i] = static_cast<std::uint32_t>(i + 1);
  }
  return next;
}

}  // namespace

void enumerate_free_trees(std::size_t n, const std::function<void(const LevelSequence&)>& visit,
                          std::size_t cap) {
  if (n == 0) throw DomainError("tree order must be >= 1");
  if (n > cap)
    throw ResourceError("enumeration order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap) + "; raise it with --cap or SIGIDX_ENUM_CAP");
  if (n == 1) {
    visit(LevelSequence{0});
    return;
  }
  // Start from the path rooted at its centre.
  LevelSequence layout;
  for (std::size_t i = 0; i <= n / 2; ++i) layout.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = 1; i < (n + 1) / 2; ++i) layout.push_back(static_cast<std::uint32_t>(i));

  std::optional<LevelSequence> current = std::move(layout);
  while (current) {
    current = next_free(*current);
    visit(*current);
    current = next_rooted(*current);
  }
}

std::size_t count_free_trees(std::size_t n, std::size_t cap) {
  std::size_t count = 0;
  enumerate_free_trees(n, [&](const LevelSequence&) { ++count; }, cap);
  return count;
}

namespace {

std::vector<VertexId> tree_centres(const Graph& tree) {
  const std::size_t n = tree.vertex_count();
  if (n <= 2) {
    std::vector<VertexId> all;
    for (std::size_t v = 0; v < n; ++v) all.push_back(static_cast<VertexId>(v));
    return all;
  }
  std::vector<std::size_t> degree = tree.degrees();
  std::vector<VertexId> layer;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) layer.push_back(static_cast<VertexId>(v));
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<VertexId> next;
    for (VertexId leaf : layer)
      for (VertexId w : tree.neighbors(leaf))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

void rooted_form(const Graph& tree, VertexId v, VertexId parent, std::uint32_t level,
                 LevelSequence& out) {
  std::vector<LevelSequence> children;
  for (VertexId w : tree.neighbors(v)) {
    if (w == parent) continue;
    children.emplace_back();
    rooted_form(tree, w, v, level + 1, children.back());
  }
  std::sort(children.begin(), children.end(), std::greater<>());
  out.push_back(level);
  for (const auto& c : children) out.insert(out.end(), c.begin(), c.end());
}

}  // namespace

LevelSequence canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw DomainError("canonical_form requires a tree");
  LevelSequence best;
  constexpr auto kNoParent = static_cast<VertexId>(-1);
  for (VertexId c : tree_centres(tree)) {
    LevelSequence form;
    rooted_form(tree, c, kNoParent, 0, form);
    if (best.empty() || form > best) best = std::move(form);
  }
  return best;
}

std::string to_string(const LevelSequence& levels) {
  std::string out;
  for (auto l : levels) out += (out.empty() ? "" : " ") + std::to_string(l);
  return out;
}

TreeClass TreeClass::all(std::size_t n) {
  if (n == 0) throw DomainError("tree class order must be >= 1");
  return TreeClass{Kind::all_trees, n, {}, 0};
}

TreeClass TreeClass::with_degree_multiset(std::vector<std::int64_t> entries) {
  if (!is_tree_sequence(entries)) throw DomainError("degree multiset is not a tree sequence");
  std::sort(entries.begin(), entries.end());
  const std::size_t n = entries.size();
  return TreeClass{Kind::degree_multiset, n, std::move(entries), 0};
}

TreeClass TreeClass::with_max_degree(std::size_t n, std::size_t delta) {
  if (n == 0) throw DomainError("tree class order must be >= 1");
  return TreeClass{Kind::max_degree, n, {}, delta};
}

bool TreeClass::contains(const Graph& tree) const {
  if (!tree.is_tree() || tree.vertex_count() != n) return false;
  switch (kind) {
    case Kind::all_trees: return true;
    case Kind::degree_multiset: {
      const auto view = DegreeSequenceView::of_graph(tree);
      return std::equal(view.entries().begin(), view.entries().end(), multiset.begin(),
                        multiset.end());
    }
    case Kind::max_degree: return degree_profile(tree).max_degree == max_degree;
  }
  return false;
}

std::string TreeClass::describe() const {
  switch (kind) {
    case Kind::all_trees: return "all_trees(" + std::to_string(n) + ")";
    case Kind::degree_multiset: {
      std::string s;
      for (auto d : multiset) s += (s.empty() ? "" : ",") + std::to_string(d);
      return "trees_with_degree_multiset(" + s + ")";
    }
    case Kind::max_degree:
      return "trees_with_max_degree(" + std::to_string(n) + "," + std::to_string(max_degree) + ")";
  }
  return "?";
}

std::string_view to_string(Objective o) { return o == Objective::sigma ? "sigma" : "albertson"; }
std::string_view to_string(Direction d) { return d == Direction::max ? "max" : "min"; }

namespace {

std::int64_t objective_value(Objective o, const Graph& g) {
  return o == Objective::sigma ? sigma(g) : albertson(g);
}

}  // namespace

SearchResult extremal(const TreeClass& cls, Objective objective, Direction direction,
                      std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::int64_t> best;
  std::optional<Graph> best_graph;
  std::uint64_t examined = 0;

  enumerate_free_trees(
      cls.n,
      [&](const LevelSequence& levels) {
        Graph g = tree_from_levels(levels);
        if (!cls.contains(g)) return;
        ++examined;
        const auto value = objective_value(objective, g);
        const bool better = !best || (direction == Direction::max ? value > *best : value < *best);
        if (better) {
          best = value;
          best_graph = std::move(g);
        }
      },
      cap);

  if (!best) throw DomainError("tree class " + cls.describe() + " is empty");
  if (!cls.contains(*best_graph) || objective_value(objective, *best_graph) != *best)
    throw std::logic_error("extremal witness failed re-verification");

  return SearchResult{cls.describe(),
                      objective,
                      direction,
                      *best,
                      canonical_form(*best_graph),
                      *best_graph,
                      examined,
                      std::chrono::duration_cast<std::chrono::nanoseconds>(
                          std::chrono::steady_clock::now() - start)};
}

FalsifyMode FalsifyMode::exhaustive(std::size_t n_max) {
  FalsifyMode m;
  m.kind = Kind::exhaustive;
  m.n_max = n_max;
  return m;
}

FalsifyMode FalsifyMode::random(std::size_t n, std::size_t samples, std::uint64_t seed) {
  FalsifyMode m;
  m.kind = Kind::random;
  m.n = n;
  m.samples = samples;
  m.seed = seed;
  return m;
}

namespace {

std::optional<Counterexample> probe(const std::string& bound_id, const Graph& tree,
                                    const BoundParams& params) {
  const LevelSequence encoding = canonical_form(tree);
  BoundInput input = BoundInput::from_graph(tree, params, to_string(encoding));
  BoundReport report = evaluate_bound(bound_id, input);
  if (!report.hypotheses_met || report.verdict != Verdict::fails) return std::nullopt;
  return Counterexample{bound_id, encoding, tree, params, std::move(report)};
}

}  // namespace

std::vector<Counterexample> falsify(const std::string& bound_id, const FalsifyMode& mode,
                                    const BoundParams& params, std::size_t cap) {
  find_bound(bound_id);
  params.validate();
  std::vector<Counterexample> found;

  if (mode.kind == FalsifyMode::Kind::exhaustive) {
    if (mode.n_max > cap)
      throw ResourceError("--nmax " + std::to_string(mode.n_max) + " exceeds cap " +
                          std::to_string(cap) + "; raise it with --cap or SIGIDX_ENUM_CAP");
    for (std::size_t n = 2; n <= mode.n_max; ++n)
      enumerate_free_trees(
          n,
          [&](const LevelSequence& levels) {
            if (auto c = probe(bound_id, tree_from_levels(levels), params))
              found.push_back(std::move(*c));
          },
          cap);
  } else {
    if (mode.n < 2) throw DomainError("random falsification needs n >= 2");
    std::set<LevelSequence> seen;
    for (std::size_t i = 0; i < mode.samples; ++i) {
      const Graph tree = random_tree(mode.n, mode.seed + i);
      if (!seen.insert(canonical_form(tree)).second) continue;
      if (auto c = probe(bound_id, tree, params)) found.push_back(std::move(*c));
    }
  }

  std::sort(found.begin(), found.end(), [](const Counterexample& a, const Counterexample& b) {
    if (a.tree.vertex_count() != b.tree.vertex_count())
      return a.tree.vertex_count() < b.tree.vertex_count();
    return a.encoding < b.encoding;
  });
  return found;
}

bool replay(const Counterexample& c) {
  const BoundReport again =
      evaluate_bound(c.bound_id, BoundInput::from_graph(c.tree, c.params, c.report.input_label));
  return again.verdict == c.report.verdict && again.hypotheses_met == c.report.hypotheses_met &&
         again.lhs == c.report.lhs && again.rhs == c.report.rhs;
}

nlohmann::json to_json(const Counterexample& c) {
  nlohmann::json j;
  j["bound_id"] = c.bound_id;
  j["n"] = c.tree.vertex_count();
  j["encoding"] = to_string(c.encoding);
  j["edge_list"] = to_edge_list(c.tree);
  j["params"] = to_json(c.params);
  j["report"] = to_json(c.report);
  return j;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j;
  j["class"] = r.class_description;
  j["objective"] = std::string(to_string(r.objective));
  j["direction"] = std::string(to_string(r.direction));
  j["optimum"] = r.optimum;
  j["witness"] = to_string(r.witness);
  j["witness_edge_list"] = to_edge_list(r.witness_graph);
  j["trees_examined"] = r.trees_examined;
  return j;
}

std::vector<BoundReport> evaluate_albertson_class_bounds(std::size_t n, const BoundParams& params,
                                                         std::size_t cap) {
  const SearchResult lo = extremal(TreeClass::all(n), Objective::albertson, Direction::min, cap);
  const SearchResult hi = extremal(TreeClass::all(n), Objective::albertson, Direction::max, cap);
  std::vector<BoundReport> out;
  const auto run = [&](const char* id, const SearchResult& witness, const char* mode) {
    BoundReport r = evaluate_bound(
        id, BoundInput::from_graph(witness.witness_graph, params, to_string(witness.witness)));
    for (auto& [k, v] : r.params)
      if (k == "irr_mode") v = std::string("class(") + mode + " over all_trees(" + std::to_string(n) + "))";
    out.push_back(std::move(r));
  };
  run("B1a", lo, "min");
  run("B1b", lo, "min");
  run("B2a", hi, "max");
  run("B2b", hi, "max");
  return out;
}

}  // namespace sigidx
