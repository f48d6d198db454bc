#pragma once

#include "sigidx/graph.hpp"
#include "sigidx/sequences.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sigidx {

// Direct definitions. All exact integer arithmetic.

/// irr(G): sum over edges of |deg u - deg v|.
std::int64_t albertson(const Graph& g);
/// σ(G): sum over edges of (deg u - deg v)^2.
std::int64_t sigma(const Graph& g);
/// σ_t(G): sum over unordered vertex pairs of (deg u - deg v)^2.
std::int64_t sigma_total(const Graph& g);
/// M1(G): sum of squared degrees.
std::int64_t zagreb_m1(const Graph& g);

enum class IndexKind { albertson, sigma, sigma_t, zagreb_m1 };

struct IndexValue {
  IndexKind kind;
  std::int64_t value;
};

std::string_view to_string(IndexKind kind);
std::int64_t compute_index(IndexKind kind, const Graph& g);

// Closed forms stated for trees and special families.

/// Tree sigma from a degree sequence in the order given:
///   sum_{i in {1,k}} (d_i+1)(d_i-1)^2 + sum_{i=2}^{k-1} (d_i+2)(d_i-1)^2
///   + sum_{i=2}^{k-1} (d_i - d_{i+1})^2 + 2n - 2,
/// with n taken from the view's convention.
std::int64_t sigma_closed_form(const DegreeSequenceView& seq);

/// Four-entry Albertson form
///   d_1^2 + d_4^2 + sum_{i=1}^{3} |d_i - d_{i+1}| + sum_{i=2}^{3} (d_i+2)(d_i-1) - 2.
/// The printed upper limit of the difference sum is 4, which indexes past
/// the sequence; the sum stops at i = 3.
std::int64_t albertson_closed_form_4(std::span<const std::int64_t> entries);

/// (n^3 - 4n)/12 for even n, (n^3 - n)/12 for odd n; n >= 3.
std::int64_t albertson_monogenic(std::int64_t n);

/// (k-1)^3 + (r-1)^3 + (k-r)^2.
std::int64_t sigma_double_star(std::int64_t r, std::int64_t k);

/// Published closed form for complete bipartite graphs: m(m - n)^2 for
/// K_{n,m}. Kept as a claim; the true value is nm(n - m)^2.
std::int64_t sigma_complete_bipartite_claimed(std::int64_t n, std::int64_t m);

/// Published product form n_G σ(G) + n_H σ(H).
std::int64_t sigma_product_claimed(const Graph& g, const Graph& h);
/// n_H σ(G) + n_G σ(H), which is what the edge count of G □ H gives.
std::int64_t sigma_product_swapped(const Graph& g, const Graph& h);

/// n M1(G) - 4 m^2, the claimed value of σ(G) + σ(complement G).
std::int64_t complement_identity_rhs(const Graph& g);

/// One catalogued closed form evaluated against ground truth computed on the
/// constructed graph. Claimed values are never used as oracles.
struct FormCheck {
  std::string form;     // e.g. "sigma_complete_bipartite"
  std::string subject;  // e.g. "K_{2,3}"
  std::int64_t claimed;
  std::int64_t actual;
  bool agree;
  std::string note;
};

FormCheck check_complete_bipartite(std::size_t a, std::size_t b);
/// Returns the as-printed check followed by the swapped-form check.
std::vector<FormCheck> check_product(const Graph& g, const std::string& g_name, const Graph& h,
                                     const std::string& h_name);
FormCheck check_complement_identity(const Graph& g, const std::string& name);
FormCheck check_monogenic(std::size_t n);
FormCheck check_double_star(std::size_t r, std::size_t k);
/// Tree closed form (standard convention, non-decreasing order) vs direct σ.
FormCheck check_tree_sigma(const Graph& tree, const std::string& name);
/// Four-vertex tree Albertson form vs direct irr.
FormCheck check_albertson_4(const Graph& tree, const std::string& name);

/// Runs the standard battery: K_{2,3}, P_3 □ K_2, complement identity on P_4,
/// monogenic n=6, double star (3,4), and the tree forms on the star K_{1,3}.
std::vector<FormCheck> compare_known_forms();

}  // namespace sigidx
