#pragma once

// Catalogue of published inequality/identity claims about the Albertson and
// Sigma indices, each evaluated faithfully (never assumed) against an input.

#include "sigidx/graph.hpp"
#include "sigidx/rational.hpp"
#include "sigidx/sequences.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigidx {

enum class Relation { le, lt, ge, gt, eq };

std::string_view to_string(Relation r);

/// Outcome of comparing lhs against rhs.
///   indeterminate: root intervals still overlap at the highest precision.
///   not_evaluated: a term is undefined (division by zero) for this input.
enum class Verdict { holds, fails, indeterminate, not_evaluated };

std::string_view to_string(Verdict v);

/// Free parameters the claims leave open. Unset optionals take documented
/// defaults derived from the input; every report records the values used.
struct BoundParams {
  /// Exponents of the two piecewise Albertson branches. The claims never
  /// define them; the default ceil(log2(Δ + 1)) is arbitrary.
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  /// Prime multiplier exponent of the 2^p(irr + 2m) bound.
  std::int64_t p = 2;
  /// Default ceil(2nΔ/m).
  std::optional<std::int64_t> eta;
  /// Must lie in (2, 4]. Default: 2^n/(n-η)! clamped into [2.01, 4].
  std::optional<Rational> eta1;
  /// Proof multiplier t > 2; recorded only.
  std::int64_t t = 3;
  /// Gate the σ_max bound with the proof's 4 <= Δ-3 <= n/4 as well as Δ >= 4.
  bool strict_sigma_max = false;

  /// Throws InputError when p is not prime, η₁ is outside (2, 4], α/β are
  /// negative or t <= 2.
  void validate() const;
};

bool is_prime(std::int64_t p);

/// Everything a catalogue entry may reference.
struct BoundInput {
  DegreeSequenceView seq;
  std::optional<std::int64_t> irr;
  std::optional<std::int64_t> sigma;
  /// Needed by the complement identity only.
  std::optional<Graph> graph;
  BoundParams params;
  std::string label;
  /// Vertices of degree 0 left out of `seq` (graph inputs only).
  std::size_t isolated_vertices = 0;

  /// Standard convention from a concrete graph; irr and σ computed directly.
  /// Isolated vertices are left out of the degree sequence, so n there counts
  /// only vertices with an edge. Throws DomainError for an edgeless graph.
  static BoundInput from_graph(const Graph& g, BoundParams params = {}, std::string label = {});

  /// Sequence-only input. σ defaults to the tree closed form under the
  /// sequence's convention; irr must be supplied (it has no closed form).
  static BoundInput from_sequence(DegreeSequenceView seq, std::optional<std::int64_t> irr,
                                  BoundParams params = {}, std::string label = {});
};

struct BoundReport {
  std::string bound_id;
  std::string input_label;
  Relation relation = Relation::le;
  bool hypotheses_met = true;
  std::vector<std::string> failed_hypotheses;
  std::optional<Interval> lhs;
  std::optional<Interval> rhs;
  /// rhs - lhs for <=, <, =; lhs - rhs for >=, >.
  std::optional<Interval> margin;
  Verdict verdict = Verdict::not_evaluated;
  /// Fractional bits used for root enclosures; 0 when no roots are involved.
  unsigned precision_bits = 0;
  /// Parameter values and interpretation notes, in insertion order.
  std::vector<std::pair<std::string, std::string>> params;

  bool holds() const { return verdict == Verdict::holds; }
  /// Hypotheses met and verdict decided.
  bool probative() const {
    return hypotheses_met && (verdict == Verdict::holds || verdict == Verdict::fails);
  }
};

enum class BoundInputField { irr, sigma, graph };

struct BoundSpec {
  std::string_view id;
  std::string_view name;
  Relation relation;
  std::string_view statement;
  std::string_view source;
  std::vector<BoundInputField> requires_fields;
};

/// Static registry in bound-id order: B1a B1b B2a B2b B3 ... B14 B15a B15b.
std::span<const BoundSpec> bound_catalog();
const BoundSpec& find_bound(std::string_view id);

/// Throws InputError for an unknown id or a missing required input field.
BoundReport evaluate_bound(std::string_view id, const BoundInput& input);

/// One report per catalogue entry whose required inputs are present.
std::vector<BoundReport> evaluate_all(const BoundInput& input);

/// Verdict of `relation` over two enclosures.
Verdict decide(Relation relation, const Interval& lhs, const Interval& rhs);

// Serialization: CSV columns
//   bound_id,hypotheses_met,lhs,rhs,relation,holds,margin,params
// Exact values print as num/den, enclosures as 12-significant-digit decimals
// of their midpoint.
std::string report_csv_header();
std::string to_csv_row(const BoundReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const BoundParams& p);
std::string render_value(const std::optional<Interval>& v);

}  // namespace sigidx
