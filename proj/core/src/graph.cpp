#include "sigidx/graph.hpp"

#include "sigidx/errors.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace sigidx {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()), adjacency_(vertex_count) {
  for (auto& e : edges_) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") references a vertex outside 0.." +
                        std::to_string(vertex_count == 0 ? 0 : vertex_count - 1));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw DomainError("duplicate edge (" + std::to_string(dup->u) + "," +
                      std::to_string(dup->v) + ")");
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = adjacency_[v].size();
  return out;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (VertexId w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

bool Graph::is_tree() const {
  return vertex_count() >= 1 && edge_count() + 1 == vertex_count() && is_connected();
}

VertexDegreeProfile degree_profile(const Graph& g) {
  VertexDegreeProfile p;
  p.degrees = g.degrees();
  p.edge_count = g.edge_count();
  if (!p.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

Edge make_edge(std::size_t a, std::size_t b) {
  return {static_cast<VertexId>(a), static_cast<VertexId>(b)};
}

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(make_edge(i, i + 1));
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 1, "star requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back(make_edge(0, i));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(make_edge(i, j));
  return Graph(n, edges);
}

Graph double_star_graph(std::size_t r, std::size_t k) {
  require(r >= 1 && k >= 1, "double_star requires r >= 1 and k >= 1");
  const std::size_t n = r + k;
  std::vector<Edge> edges{make_edge(0, 1)};
  std::size_t next = 2;
  for (std::size_t i = 1; i < r; ++i) edges.push_back(make_edge(0, next++));
  for (std::size_t i = 1; i < k; ++i) edges.push_back(make_edge(1, next++));
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete_bipartite requires a >= 1 and b >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) edges.push_back(make_edge(i, a + j));
  return Graph(a + b, edges);
}

Graph monogenic_semigroup_graph(std::size_t n) {
  require(n >= 1, "monogenic requires n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i + j >= n + 1) edges.push_back(make_edge(i - 1, j - 1));
  return Graph(n, edges);
}

namespace {

struct FamilyName {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr FamilyName kFamilies[] = {
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::star, "star", 1},
    {Family::complete, "complete", 1},
    {Family::double_star, "double_star", 2},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::monogenic, "monogenic", 1},
};

const FamilyName& lookup(Family f) {
  for (const auto& entry : kFamilies)
    if (entry.family == f) return entry;
  throw InputError("unknown family");
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const FamilyName* found = nullptr;
  for (const auto& entry : kFamilies)
    if (entry.name == name) found = &entry;
  if (found == nullptr)
    throw InputError("unknown family '" + std::string(name) +
                     "' (expected path, cycle, star, complete, double_star, "
                     "complete_bipartite, monogenic)");

  FamilySpec spec{found->family, {}};
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw InputError("malformed family argument '" + std::string(tok) + "' in '" +
                         std::string(text) + "'");
      spec.args.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (spec.args.size() != found->arity)
    throw InputError("family '" + std::string(name) + "' takes " +
                     std::to_string(found->arity) + " argument(s), e.g. " +
                     (found->arity == 1 ? std::string(name) + ":5"
                                        : std::string(name) + ":3,4"));
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(lookup(spec.family).name);
  for (std::size_t i = 0; i < spec.args.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(spec.args[i]);
  return out;
}

Graph build_family(const FamilySpec& spec) {
  if (spec.args.size() != lookup(spec.family).arity)
    throw InputError("wrong number of arguments for family " + to_string(spec));
  const auto& a = spec.args;
  switch (spec.family) {
    case Family::path: return path_graph(a[0]);
    case Family::cycle: return cycle_graph(a[0]);
    case Family::star: return star_graph(a[0]);
    case Family::complete: return complete_graph(a[0]);
    case Family::double_star: return double_star_graph(a[0], a[1]);
    case Family::complete_bipartite: return complete_bipartite_graph(a[0], a[1]);
    case Family::monogenic: return monogenic_semigroup_graph(a[0]);
  }
  throw InputError("unknown family");
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j)))
        edges.push_back(make_edge(i, j));
  return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  const auto id = [nh](std::size_t u, std::size_t v) { return u * nh + v; };
  std::vector<Edge> edges;
  edges.reserve(ng * h.edge_count() + nh * g.edge_count());
  for (std::size_t u = 0; u < ng; ++u)
    for (const auto& e : h.edges()) edges.push_back(make_edge(id(u, e.u), id(u, e.v)));
  for (std::size_t v = 0; v < nh; ++v)
    for (const auto& e : g.edges()) edges.push_back(make_edge(id(e.u, v), id(e.v, v)));
  return Graph(ng * nh, edges);
}

}  // namespace sigidx
