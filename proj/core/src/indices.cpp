#include "sigidx/indices.hpp"

#include "sigidx/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace sigidx {

namespace {

std::int64_t deg(const Graph& g, VertexId v) { return static_cast<std::int64_t>(g.degree(v)); }

}  // namespace

std::int64_t albertson(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& e : g.edges()) total += std::llabs(deg(g, e.u) - deg(g, e.v));
  return total;
}

std::int64_t sigma(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& e : g.edges()) {
    const std::int64_t diff = deg(g, e.u) - deg(g, e.v);
    total += diff * diff;
  }
  return total;
}

std::int64_t sigma_total(const Graph& g) {
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::int64_t total = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const std::int64_t diff = deg(g, u) - deg(g, v);
      total += diff * diff;
    }
  return total;
}

std::int64_t zagreb_m1(const Graph& g) {
  std::int64_t total = 0;
  for (auto d : g.degrees()) total += static_cast<std::int64_t>(d * d);
  return total;
}

std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::albertson: return "albertson";
    case IndexKind::sigma: return "sigma";
    case IndexKind::sigma_t: return "sigma_t";
    case IndexKind::zagreb_m1: return "zagreb_m1";
  }
  return "?";
}

std::int64_t compute_index(IndexKind kind, const Graph& g) {
  switch (kind) {
    case IndexKind::albertson: return albertson(g);
    case IndexKind::sigma: return sigma(g);
    case IndexKind::sigma_t: return sigma_total(g);
    case IndexKind::zagreb_m1: return zagreb_m1(g);
  }
  throw InputError("unknown index kind");
}

std::int64_t sigma_closed_form(const DegreeSequenceView& seq) {
  const auto d = seq.entries();
  const std::size_t k = d.size();
  if (k < 2) throw DomainError("sigma closed form needs at least two entries");
  const auto sq = [](std::int64_t x) { return x * x; };

  std::int64_t total = 0;
  for (std::size_t i : {std::size_t{0}, k - 1}) total += (d[i] + 1) * sq(d[i] - 1);
  for (std::size_t i = 1; i + 1 < k; ++i) total += (d[i] + 2) * sq(d[i] - 1);
  for (std::size_t i = 1; i + 1 < k; ++i) total += sq(d[i] - d[i + 1]);
  return total + 2 * seq.order() - 2;
}

std::int64_t albertson_closed_form_4(std::span<const std::int64_t> d) {
  if (d.size() != 4)
    throw DomainError("four-entry Albertson form needs exactly 4 entries, got " +
                      std::to_string(d.size()));
  std::int64_t total = d[0] * d[0] + d[3] * d[3] - 2;
  for (std::size_t i = 0; i < 3; ++i) total += std::llabs(d[i] - d[i + 1]);
  for (std::size_t i = 1; i <= 2; ++i) total += (d[i] + 2) * (d[i] - 1);
  return total;
}

std::int64_t albertson_monogenic(std::int64_t n) {
  if (n < 3) throw DomainError("monogenic Albertson form requires n >= 3");
  const std::int64_t cube = n * n * n;
  return n % 2 == 0 ? (cube - 4 * n) / 12 : (cube - n) / 12;
}

std::int64_t sigma_double_star(std::int64_t r, std::int64_t k) {
  if (r < 1 || k < 1) throw DomainError("double star requires r >= 1 and k >= 1");
  return (k - 1) * (k - 1) * (k - 1) + (r - 1) * (r - 1) * (r - 1) + (k - r) * (k - r);
}

std::int64_t sigma_complete_bipartite_claimed(std::int64_t n, std::int64_t m) {
  return m * (m - n) * (m - n);
}

std::int64_t sigma_product_claimed(const Graph& g, const Graph& h) {
  return static_cast<std::int64_t>(g.vertex_count()) * sigma(g) +
         static_cast<std::int64_t>(h.vertex_count()) * sigma(h);
}

std::int64_t sigma_product_swapped(const Graph& g, const Graph& h) {
  return static_cast<std::int64_t>(h.vertex_count()) * sigma(g) +
         static_cast<std::int64_t>(g.vertex_count()) * sigma(h);
}

std::int64_t complement_identity_rhs(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  return n * zagreb_m1(g) - 4 * m * m;
}

FormCheck check_complete_bipartite(std::size_t a, std::size_t b) {
  const Graph g = complete_bipartite_graph(a, b);
  const auto claimed =
      sigma_complete_bipartite_claimed(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
  const auto actual = sigma(g);
  return {"sigma_complete_bipartite", "K_{" + std::to_string(a) + "," + std::to_string(b) + "}",
          claimed, actual, claimed == actual, "claimed m(m-n)^2; direct value is nm(n-m)^2"};
}

std::vector<FormCheck> check_product(const Graph& g, const std::string& g_name, const Graph& h,
                                     const std::string& h_name) {
  const auto actual = sigma(cartesian_product(g, h));
  const std::string subject = g_name + " x " + h_name;
  const auto printed = sigma_product_claimed(g, h);
  const auto swapped = sigma_product_swapped(g, h);
  return {
      {"sigma_product", subject, printed, actual, printed == actual, "claimed n_G s(G) + n_H s(H)"},
      {"sigma_product_swapped", subject, swapped, actual, swapped == actual,
       "n_H s(G) + n_G s(H)"},
  };
}

FormCheck check_complement_identity(const Graph& g, const std::string& name) {
  const auto actual = sigma(g) + sigma(complement(g));
  const auto claimed = complement_identity_rhs(g);
  return {"complement_identity", name, claimed, actual, claimed == actual,
          "s(G) + s(complement G) vs n M1 - 4m^2"};
}

FormCheck check_monogenic(std::size_t n) {
  const auto claimed = albertson_monogenic(static_cast<std::int64_t>(n));
  const auto actual = albertson(monogenic_semigroup_graph(n));
  return {"albertson_monogenic", "monogenic:" + std::to_string(n), claimed, actual,
          claimed == actual, "graph realized by the threshold rule i + j >= n + 1"};
}

FormCheck check_double_star(std::size_t r, std::size_t k) {
  const auto claimed =
      sigma_double_star(static_cast<std::int64_t>(r), static_cast<std::int64_t>(k));
  const auto actual = sigma(double_star_graph(r, k));
  return {"sigma_double_star", "double_star:" + std::to_string(r) + "," + std::to_string(k),
          claimed, actual, claimed == actual, ""};
}

FormCheck check_tree_sigma(const Graph& tree, const std::string& name) {
  if (!tree.is_tree()) throw DomainError(name + " is not a tree");
  const auto claimed = sigma_closed_form(DegreeSequenceView::of_graph(tree));
  const auto actual = sigma(tree);
  return {"sigma_closed_form", name, claimed, actual, claimed == actual,
          "standard convention, non-decreasing order"};
}

FormCheck check_albertson_4(const Graph& tree, const std::string& name) {
  if (!tree.is_tree() || tree.vertex_count() != 4)
    throw DomainError(name + " is not a tree on four vertices");
  const auto view = DegreeSequenceView::of_graph(tree);
  const auto claimed = albertson_closed_form_4(view.entries());
  const auto actual = albertson(tree);
  return {"albertson_closed_form_4", name, claimed, actual, claimed == actual,
          "difference sum read as i=1..3 (printed upper limit 4 has no d_5)"};
}

std::vector<FormCheck> compare_known_forms() {
  std::vector<FormCheck> out;
  out.push_back(check_complete_bipartite(2, 3));
  for (auto& c : check_product(path_graph(3), "P_3", path_graph(2), "K_2"))
    out.push_back(std::move(c));
  out.push_back(check_complement_identity(path_graph(4), "P_4"));
  out.push_back(check_monogenic(6));
  out.push_back(check_double_star(3, 4));
  out.push_back(check_tree_sigma(star_graph(4), "K_{1,3}"));
  out.push_back(check_albertson_4(star_graph(4), "K_{1,3}"));
  return out;
}

}  // namespace sigidx
