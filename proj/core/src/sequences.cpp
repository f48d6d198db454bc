#include "sigidx/sequences.hpp"

#include "sigidx/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

namespace sigidx {

std::string_view to_string(Convention c) {
  return c == Convention::standard ? "standard" : "paper-table";
}

Convention parse_convention(std::string_view text) {
  if (text == "standard") return Convention::standard;
  if (text == "paper-table" || text == "paper_table") return Convention::paper_table;
  throw InputError("unknown convention '" + std::string(text) +
                   "' (expected standard or paper-table)");
}

DegreeSequenceView::DegreeSequenceView(std::vector<std::int64_t> entries, Convention convention,
                                       std::optional<std::int64_t> edge_count)
    : entries_(std::move(entries)), convention_(convention) {
  if (entries_.empty()) throw DomainError("degree sequence must be non-empty");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 1)
      throw DomainError("degree sequence entry " + std::to_string(i + 1) + " is " +
                        std::to_string(entries_[i]) + "; entries must be >= 1");

  const auto [lo, hi] = std::minmax_element(entries_.begin(), entries_.end());
  min_degree_ = *lo;
  for (auto d : entries_) {
    sum_ += d;
    cube_sum_ += d * d * d;
  }
  if (convention_ == Convention::standard) {
    order_ = static_cast<std::int64_t>(entries_.size());
    edge_count_ = edge_count.value_or(order_ - 1);
    max_degree_ = *hi;
  } else {
    order_ = sum_;
    edge_count_ = order_ - 1;
    max_degree_ = entries_.back();
  }
}

DegreeSequenceView DegreeSequenceView::of_graph(const Graph& g) {
  std::vector<std::int64_t> d;
  for (auto deg : g.degrees()) d.push_back(static_cast<std::int64_t>(deg));
  std::sort(d.begin(), d.end());
  if (!d.empty() && d.front() == 0)
    throw DomainError("graph has isolated vertices; degree sequence entries must be >= 1");
  return DegreeSequenceView(std::move(d), Convention::standard,
                            static_cast<std::int64_t>(g.edge_count()));
}

DegreeSequenceView DegreeSequenceView::sorted() const {
  std::vector<std::int64_t> d = entries_;
  std::sort(d.begin(), d.end());
  return DegreeSequenceView(std::move(d), convention_,
                            convention_ == Convention::standard
                                ? std::optional<std::int64_t>(edge_count_)
                                : std::nullopt);
}

DerivedSequences derive(const DegreeSequenceView& seq) {
  const auto d = seq.entries();
  if (d.size() < 2)
    throw DomainError("derived sequences need at least two entries, got " +
                      std::to_string(d.size()));
  DerivedSequences out;
  Rational sum_t = 0, sum_a = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    Rational t(BigInt(d[i + 1] - d[i]), BigInt(2));
    Rational a(BigInt(d[i + 1] + d[i]), BigInt(2));
    sum_t += t;
    sum_a += a;
    out.half_differences.push_back(t);
    out.half_sums.push_back(a);
  }
  const auto count = static_cast<std::int64_t>(d.size() - 1);
  out.max_half_difference =
      *std::max_element(out.half_differences.begin(), out.half_differences.end());
  out.max_half_sum = *std::max_element(out.half_sums.begin(), out.half_sums.end());
  out.mean_half_difference = sum_t / count;
  out.mean_half_sum = sum_a / count;
  return out;
}

std::vector<std::int64_t> reconstruct(const DerivedSequences& derived) {
  const auto& t = derived.half_differences;
  const auto& a = derived.half_sums;
  if (t.size() != a.size() || t.empty())
    throw DomainError("R and A must be non-empty and of equal length");
  std::vector<std::int64_t> d;
  const auto as_int = [](const Rational& r) {
    if (boost::multiprecision::denominator(r) != 1)
      throw DomainError("R/A pair does not reconstruct to integer degrees");
    return boost::multiprecision::numerator(r).convert_to<std::int64_t>();
  };
  d.push_back(as_int(a.front() - t.front()));
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(as_int(a[i] + t[i]));
  return d;
}

bool is_graphical(std::span<const std::int64_t> entries) {
  if (entries.empty()) return false;
  std::vector<std::int64_t> d(entries.begin(), entries.end());
  if (std::any_of(d.begin(), d.end(), [](auto x) { return x < 0; })) return false;
  std::sort(d.begin(), d.end(), std::greater<>());
  const auto n = static_cast<std::int64_t>(d.size());
  if (d.front() > n - 1) return false;
  if (std::accumulate(d.begin(), d.end(), std::int64_t{0}) % 2 != 0) return false;

  // sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
  std::int64_t prefix = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    prefix += d[static_cast<std::size_t>(k - 1)];
    std::int64_t tail = 0;
    for (std::int64_t i = k; i < n; ++i) tail += std::min(d[static_cast<std::size_t>(i)], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

bool is_tree_sequence(std::span<const std::int64_t> entries) {
  if (entries.size() < 2) return false;
  std::int64_t sum = 0;
  for (auto d : entries) {
    if (d < 1) return false;
    sum += d;
  }
  return sum == 2 * (static_cast<std::int64_t>(entries.size()) - 1);
}

Graph realize_tree(std::span<const std::int64_t> entries) {
  if (!is_tree_sequence(entries)) {
    std::int64_t sum = 0;
    for (auto d : entries) sum += d;
    if (entries.size() < 2) throw DomainError("a tree sequence needs at least two entries");
    if (std::any_of(entries.begin(), entries.end(), [](auto d) { return d < 1; }))
      throw DomainError("tree sequences need every entry >= 1");
    throw DomainError("not a tree sequence: sum is " + std::to_string(sum) + ", expected 2(k-1) = " +
                      std::to_string(2 * (static_cast<std::int64_t>(entries.size()) - 1)));
  }
  std::vector<std::int64_t> spine;
  for (auto d : entries)
    if (d > 1) spine.push_back(d);
  std::sort(spine.begin(), spine.end());

  const std::size_t k = entries.size();
  const std::size_t s = spine.size();
  std::vector<Edge> edges;
  if (s == 0) {
    edges.push_back({0, 1});  // (1,1)
    return Graph(k, edges);
  }
  for (std::size_t i = 0; i + 1 < s; ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  VertexId next_leaf = static_cast<VertexId>(s);
  for (std::size_t i = 0; i < s; ++i) {
    const std::int64_t spine_links = s == 1 ? 0 : (i == 0 || i + 1 == s ? 1 : 2);
    for (std::int64_t j = 0; j < spine[i] - spine_links; ++j)
      edges.push_back({static_cast<VertexId>(i), next_leaf++});
  }
  return Graph(k, edges);
}

Graph realize_graph_hakimi(std::span<const std::int64_t> entries) {
  if (!is_graphical(entries)) throw DomainError("sequence is not graphical (Erdős–Gallai fails)");
  const std::size_t n = entries.size();
  std::vector<std::int64_t> residual(entries.begin(), entries.end());
  std::vector<VertexId> order(n);
  std::vector<Edge> edges;
  while (true) {
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return residual[a] > residual[b]; });
    const VertexId head = order.front();
    const std::int64_t need = residual[head];
    if (need == 0) break;
    residual[head] = 0;
    for (std::int64_t j = 1; j <= need; ++j) {
      const VertexId w = order[static_cast<std::size_t>(j)];
      if (residual[w] == 0) throw DomainError("Havel–Hakimi stalled; sequence not graphical");
      --residual[w];
      edges.push_back({std::min(head, w), std::max(head, w)});
    }
  }
  return Graph(n, edges);
}

Graph tree_from_pruefer(std::span<const VertexId> word, std::size_t n) {
  if (n == 0) throw DomainError("tree order must be >= 1");
  if (n == 1) return Graph(1);
  if (word.size() + 2 != n) throw DomainError("Prüfer word must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (auto v : word) {
    if (v >= n) throw DomainError("Prüfer word letter out of range");
    ++degree[v];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(static_cast<VertexId>(v));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (auto v : word) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, v), std::max(leaf, v)});
    if (--degree[v] == 1) leaves.push(v);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("random_tree requires n >= 1");
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> letter(0, static_cast<VertexId>(n - 1));
  std::vector<VertexId> word(n - 2);
  for (auto& w : word) w = letter(rng);
  return tree_from_pruefer(word, n);
}

std::vector<std::int64_t> parse_sequence_literal(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("malformed sequence literal '" + std::string(text) +
                       "': expected comma-separated integers such as 3,5,7,5,6,8,10");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace sigidx
