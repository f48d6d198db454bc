#include "sigidx/bounds.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/indices.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sigidx {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::eq: return "=";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    case Verdict::indeterminate: return "indeterminate_at_precision";
    case Verdict::not_evaluated: return "not_evaluated";
  }
  return "?";
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void BoundParams::validate() const {
  if (!is_prime(p)) throw InputError("--p must be prime, got " + std::to_string(p));
  if (alpha && *alpha < 0) throw InputError("--alpha must be >= 0");
  if (beta && *beta < 0) throw InputError("--beta must be >= 0");
  if (eta1 && (*eta1 <= 2 || *eta1 > 4))
    throw InputError("--eta1 must lie in (2, 4], got " + to_fraction_string(*eta1));
  if (t <= 2) throw InputError("--t must be an integer > 2");
  constexpr std::int64_t kMaxExponent = 1'000'000;
  if (p > kMaxExponent || (eta && (*eta > kMaxExponent || *eta < -kMaxExponent)))
    throw InputError("power-of-two exponent too large (limit 1000000)");
}

BoundInput BoundInput::from_graph(const Graph& g, BoundParams params, std::string label) {
  std::vector<std::int64_t> degrees;
  std::size_t isolated = 0;
  for (auto d : g.degrees()) {
    if (d == 0)
      ++isolated;
    else
      degrees.push_back(static_cast<std::int64_t>(d));
  }
  if (degrees.empty()) throw DomainError("graph has no edges, so its degree sequence is empty");
  std::sort(degrees.begin(), degrees.end());
  DegreeSequenceView seq(std::move(degrees), Convention::standard,
                         static_cast<std::int64_t>(g.edge_count()));
  return BoundInput{std::move(seq),      sigidx::albertson(g), sigidx::sigma(g), g,
                    std::move(params), std::move(label),     isolated};
}

BoundInput BoundInput::from_sequence(DegreeSequenceView seq, std::optional<std::int64_t> irr,
                                     BoundParams params, std::string label) {
  std::optional<std::int64_t> s;
  if (seq.size() >= 2) s = sigma_closed_form(seq);
  return BoundInput{std::move(seq), irr, s, std::nullopt, std::move(params), std::move(label)};
}

namespace {

using Field = BoundInputField;

const std::vector<BoundSpec>& catalog_storage() {
  static const std::vector<BoundSpec> catalog = {
      {"B1a", "irr_min_ratio_positive", Relation::gt, "2 irr / (Δ(Δ-1)^2) > 0",
       "minimum Albertson ratio, left inequality", {Field::irr}},
      {"B1b", "irr_min_ratio_below_one", Relation::lt, "2 irr / (Δ(Δ-1)^2) < 1",
       "minimum Albertson ratio, right inequality", {Field::irr}},
      {"B2a", "irr_max_lower_branch", Relation::gt,
       "irr > floor(2m/n) + ceil(2n/m) + 2^alpha  if d_n <= 20",
       "maximum Albertson piecewise bound, first branch", {Field::irr}},
      {"B2b", "irr_max_upper_branch", Relation::lt, "irr < ceil(2n/m) + 2^beta  if d_n > 3",
       "maximum Albertson piecewise bound, second branch", {Field::irr}},
      {"B3", "sigma_lower_maxdeg", Relation::ge,
       "sigma >= irr + floor((n-2)/(a_r - t_m)) + Δ(Δ_A - Δ_R)^2",
       "Sigma lower bound via maxima of A and R", {Field::irr, Field::sigma}},
      {"B4", "sigma_upper_cubes", Relation::le,
       "sigma <= sum d^3 + irr + floor((n-2)/(a_r - t_m)) + Δ(Δ_A - Δ_R)^2",
       "Sigma upper bound via degree cubes", {Field::irr, Field::sigma}},
      {"B5", "sigma_lower_conditional", Relation::ge,
       "sigma >= irr + (floor(2n/(a_r - a_1)) + ceil(2m/n))/n + 4nΔ  if n <= Δ_A(a_r - a_1) + "
       "Δ_R(t_m - t_1) < irr",
       "conditional Sigma lower bound", {Field::irr, Field::sigma}},
      {"B6", "sigma_lower_sqrt", Relation::ge,
       "sigma >= sqrt(λ_D sum d^3) - (floor(2n/λ_A) + ceil(2m/λ_R)) + (n - Δ)^2",
       "Sigma lower bound via averages", {Field::sigma}},
      {"B7", "sigma_lower_T2", Relation::ge,
       "sigma >= (1/3) λ_D^2 T1 - sum d^3 + irr,  T1 = floor((3n+1)/2) + ceil((3m+1)/2) + "
       "floor((3Δ+2n)/4)",
       "Sigma lower bound via T1", {Field::irr, Field::sigma}},
      {"B8", "sigma_lower_avg", Relation::gt, "sigma > (n^3 + n + Δ(Δ-1)^2) / (2 λ_D)",
       "Sigma lower bound via the degree average", {Field::sigma}},
      {"B9", "sigma_upper_prime", Relation::le, "sigma <= 2^p (irr + 2m) + Δ(Δ-1)^2",
       "Sigma upper bound with prime p", {Field::irr, Field::sigma}},
      {"B10", "sigma_max_upper", Relation::le,
       "sigma_max <= floor(3n^2/4) ceil(n^2/4) / (2(Δ - 3))", "upper bound of maximum Sigma",
       {Field::sigma}},
      {"B11", "sigma_upper_eta", Relation::le,
       "sigma <= floor(2n^2/(3 λ_D)) + 2^eta (m - Δ)^2 / (5(n-1)^3)", "Sigma upper bound via eta",
       {Field::sigma}},
      {"B12", "sigma_lower_eta", Relation::gt,
       "sigma > 4n - 2 eta λ_D - (n-eta) floor(n/(n-eta))^2 + (n-eta) floor(n/(n-λ_D))",
       "Sigma lower bound via eta", {Field::sigma}},
      {"B13", "sigma_upper_eta1", Relation::le,
       "sigma <= eta1 floor(n/(n-eta)) + eta1 ceil(n/(eta-λ_D)) + sum d^3",
       "Sigma upper bound via eta1", {Field::sigma}},
      {"B14", "complement_identity", Relation::eq, "sigma(G) + sigma(complement G) = n M1 - 4m^2",
       "complement identity", {Field::graph}},
      {"B15a", "sequence_product_inequality", Relation::ge,
       "(sum a)(a_1 + a_n) >= sum a^2 + n a_1 a_n", "sequence inequality, first part", {}},
      {"B15b", "sequence_root_inequality", Relation::le,
       "n sum a - (sum sqrt a)^2 <= n(n-1)(mean a - geomean a)",
       "sequence inequality, second part", {}},
  };
  return catalog;
}

// Symbols shared by the catalogue entries.
struct Symbols {
  const BoundInput& in;
  Rational n, m, delta, lambda, cubes, d_last;
  std::optional<DerivedSequences> derived;
  std::optional<Rational> irr, sigma;
  bool is_tree = true;
  bool non_decreasing = true;

  explicit Symbols(const BoundInput& input) : in(input) {
    const auto& s = input.seq;
    n = Rational(s.order());
    m = Rational(s.edge_count());
    delta = Rational(s.max_degree());
    lambda = s.mean();
    cubes = Rational(s.cube_sum());
    d_last = Rational(s.entries().back());
    if (s.size() >= 2) derived = derive(s);
    if (input.irr) irr = Rational(*input.irr);
    if (input.sigma) sigma = Rational(*input.sigma);
    if (input.graph)
      is_tree = input.graph->is_tree();
    else if (s.convention() == Convention::standard)
      is_tree = is_tree_sequence(s.entries());
    non_decreasing = std::is_sorted(s.entries().begin(), s.entries().end());
  }
};

struct Evaluation {
  std::vector<std::string> failed;
  bool undefined = false;
  bool uses_roots = false;
  Interval lhs, rhs;
  std::vector<std::pair<std::string, std::string>> params;

  void hypothesis(bool ok, std::string what) {
    if (!ok) failed.push_back(std::move(what));
  }
  /// a / b, or marks the evaluation undefined when b == 0.
  Rational div(const Rational& a, const Rational& b, const std::string& what) {
    if (b == 0) {
      failed.push_back(what + " != 0");
      undefined = true;
      return 0;
    }
    return a / b;
  }
  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
};

Rational fl(const Rational& x) { return Rational(floor_of(x)); }
Rational cl(const Rational& x) { return Rational(ceil_of(x)); }

Rational pow2r(std::int64_t e) {
  if (e >= 0) return Rational(pow2(static_cast<unsigned>(e)));
  return Rational(BigInt(1), pow2(static_cast<unsigned>(-e)));
}

std::int64_t default_log_exponent(std::int64_t delta) {
  std::int64_t a = 0;
  while ((std::int64_t{1} << a) < delta + 1) ++a;
  return a;
}

bool need_derived(const Symbols& s, Evaluation& e) {
  if (!s.derived) {
    e.failed.emplace_back("at least two sequence entries");
    e.undefined = true;
    return false;
  }
  return true;
}

void tree_hypothesis(const Symbols& s, Evaluation& e) { e.hypothesis(s.is_tree, "input is a tree"); }

void order_hypothesis(const Symbols& s, Evaluation& e) {
  e.hypothesis(s.non_decreasing, "degree sequence is non-decreasing");
}

std::int64_t eta_value(const Symbols& s, Evaluation& e) {
  if (s.in.params.eta) {
    e.param("eta", std::to_string(*s.in.params.eta) + " (override)");
    return *s.in.params.eta;
  }
  if (s.m == 0) {
    e.failed.emplace_back("m != 0 (eta = ceil(2nΔ/m) undefined)");
    e.undefined = true;
    return 0;
  }
  const auto eta = ceil_of(2 * s.n * s.delta / s.m).convert_to<std::int64_t>();
  e.param("eta", std::to_string(eta) + " (ceil(2nΔ/m))");
  return eta;
}

Rational eta1_value(const Symbols& s, std::int64_t eta, Evaluation& e) {
  if (s.in.params.eta1) {
    e.param("eta1", to_fraction_string(*s.in.params.eta1) + " (override)");
    return *s.in.params.eta1;
  }
  const Rational lo(201, 100);
  const Rational hi(4);
  const BigInt n = floor_of(s.n);
  const BigInt gap = n - eta;
  if (gap < 0) {
    e.param("eta1", "201/100 (fallback: n-eta < 0, factorial undefined)");
    return lo;
  }
  if (n > 100000 || gap > 100000) {
    e.param("eta1", "201/100 (fallback: 2^n/(n-eta)! too large to form)");
    return lo;
  }
  const Rational raw(pow2(n.convert_to<unsigned>()), factorial(gap.convert_to<unsigned>()));
  Rational v = raw;
  std::string how = "2^n/(n-eta)!";
  if (v < lo) {
    v = lo;
    how += " clamped up from " + to_decimal_string(raw);
  } else if (v > hi) {
    v = hi;
    how += " clamped down from " + to_decimal_string(raw);
  }
  e.param("eta1", to_fraction_string(v) + " (" + how + ")");
  return v;
}

// A_max/R_max shared by B3 and B4.
Rational maxdeg_tail(const Symbols& s, Evaluation& e) {
  const auto& d = *s.derived;
  const Rational spread = d.max_half_sum - d.max_half_difference;
  return fl(e.div(s.n - 2, d.a_last() - d.t_last(), "a_r - t_m")) + s.delta * spread * spread;
}

using Evaluator = std::function<void(const Symbols&, Evaluation&, unsigned)>;

Evaluator evaluator_for(std::string_view id) {
  if (id == "B1a" || id == "B1b") {
    return [upper = id == "B1b"](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      const Rational ratio = e.div(2 * *s.irr, s.delta * (s.delta - 1) * (s.delta - 1),
                                   "Δ(Δ-1)^2");
      e.lhs = Interval::point(ratio);
      e.rhs = Interval::point(upper ? Rational(1) : Rational(0));
      e.param("irr_mode", "instance");
    };
  }
  if (id == "B2a" || id == "B2b") {
    return [first = id == "B2a"](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      const auto delta = s.in.seq.max_degree();
      const auto& prm = s.in.params;
      const std::int64_t alpha = prm.alpha.value_or(default_log_exponent(delta));
      const std::int64_t beta = prm.beta.value_or(default_log_exponent(delta));
      e.param("alpha", std::to_string(alpha) + (prm.alpha ? "" : " (default ceil(log2(Δ+1)))"));
      e.param("beta", std::to_string(beta) + (prm.beta ? "" : " (default ceil(log2(Δ+1)))"));
      e.param("irr_mode", "instance");
      const Rational two_n_over_m = cl(e.div(2 * s.n, s.m, "m"));
      e.lhs = Interval::point(*s.irr);
      if (first) {
        e.hypothesis(s.d_last <= 20, "d_n <= 20");
        e.rhs = Interval::point(fl(e.div(2 * s.m, s.n, "n")) + two_n_over_m + pow2r(alpha));
      } else {
        e.hypothesis(s.d_last > 3, "d_n > 3");
        e.rhs = Interval::point(two_n_over_m + pow2r(beta));
      }
    };
  }
  if (id == "B3" || id == "B4") {
    return [with_cubes = id == "B4"](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      if (!need_derived(s, e)) return;
      Rational rhs = *s.irr + maxdeg_tail(s, e);
      if (with_cubes) rhs += s.cubes;
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(rhs);
    };
  }
  if (id == "B5") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      if (!need_derived(s, e)) return;
      const auto& d = *s.derived;
      const Rational a_spread = d.a_last() - d.a_first();
      const Rational gate = d.max_half_sum * a_spread + d.max_half_difference * (d.t_last() - d.t_first());
      e.hypothesis(s.n <= gate, "n <= Δ_A(a_r - a_1) + Δ_R(t_m - t_1)");
      e.hypothesis(gate < *s.irr, "Δ_A(a_r - a_1) + Δ_R(t_m - t_1) < irr");
      const Rational inner = fl(e.div(2 * s.n, a_spread, "a_r - a_1")) + cl(e.div(2 * s.m, s.n, "n"));
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(*s.irr + e.div(inner, s.n, "n") + 4 * s.n * s.delta);
      e.param("gate_value", to_fraction_string(gate));
    };
  }
  if (id == "B6") {
    return [](const Symbols& s, Evaluation& e, unsigned bits) {
      tree_hypothesis(s, e);
      if (!need_derived(s, e)) return;
      const auto& d = *s.derived;
      const Rational penalty = fl(e.div(2 * s.n, d.mean_half_sum, "λ_A")) +
                               cl(e.div(2 * s.m, d.mean_half_difference, "λ_R"));
      if (e.undefined) return;
      const Rational gap = s.n - s.delta;
      e.uses_roots = true;
      e.lhs = Interval::point(*s.sigma);
      e.rhs = sqrt_interval(s.lambda * s.cubes, bits) + Interval::point(gap * gap - penalty);
    };
  }
  if (id == "B7") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      const Rational t1 = fl((3 * s.n + 1) / 2) + cl((3 * s.m + 1) / 2) + fl((3 * s.delta + 2 * s.n) / 4);
      e.param("T1", to_fraction_string(t1));
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(s.lambda * s.lambda * t1 / 3 - s.cubes + *s.irr);
    };
  }
  if (id == "B8") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      order_hypothesis(s, e);
      e.param("lambda", "lambda_D (bare lambda in the claim)");
      const Rational top = s.n * s.n * s.n + s.n + s.delta * (s.delta - 1) * (s.delta - 1);
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(e.div(top, 2 * s.lambda, "λ_D"));
    };
  }
  if (id == "B9") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      const auto p = s.in.params.p;
      e.hypothesis(is_prime(p), "p is prime");
      e.param("p", std::to_string(p));
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(pow2r(p) * (*s.irr + 2 * s.m) + s.delta * (s.delta - 1) * (s.delta - 1));
    };
  }
  if (id == "B10") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      order_hypothesis(s, e);
      const bool strict = s.in.params.strict_sigma_max;
      e.param("mode", strict ? "strict (4 <= Δ-3 <= n/4)" : "statement (Δ >= 4)");
      e.param("sigma_max_mode", "instance");
      e.hypothesis(s.delta >= 4, "Δ >= 4");
      if (strict) {
        e.hypothesis(s.delta - 3 >= 4, "Δ - 3 >= 4");
        e.hypothesis(s.delta - 3 <= s.n / 4, "Δ - 3 <= n/4");
      }
      const Rational nn = s.n * s.n;
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(e.div(fl(3 * nn / 4) * cl(nn / 4), 2 * (s.delta - 3), "Δ - 3"));
    };
  }
  if (id == "B11") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      order_hypothesis(s, e);
      const auto eta = eta_value(s, e);
      if (e.undefined) return;
      const Rational gap = s.m - s.delta;
      const Rational n1 = s.n - 1;
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(fl(e.div(2 * s.n * s.n, 3 * s.lambda, "λ_D")) +
                              e.div(pow2r(eta) * gap * gap, 5 * n1 * n1 * n1, "n - 1"));
    };
  }
  if (id == "B12") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      order_hypothesis(s, e);
      const auto eta = eta_value(s, e);
      if (e.undefined) return;
      const Rational gap = s.n - eta;
      const Rational q1 = fl(e.div(s.n, gap, "n - eta"));
      const Rational q2 = fl(e.div(s.n, s.n - s.lambda, "n - λ_D"));
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(4 * s.n - 2 * Rational(eta) * s.lambda - gap * q1 * q1 + gap * q2);
    };
  }
  if (id == "B13") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      tree_hypothesis(s, e);
      order_hypothesis(s, e);
      const auto eta = eta_value(s, e);
      if (e.undefined) return;
      const Rational eta1 = eta1_value(s, eta, e);
      e.hypothesis(eta1 > 2 && eta1 <= 4, "2 < eta1 <= 4");
      const Rational q1 = fl(e.div(s.n, s.n - eta, "n - eta"));
      const Rational q2 = cl(e.div(s.n, Rational(eta) - s.lambda, "eta - λ_D"));
      e.lhs = Interval::point(*s.sigma);
      e.rhs = Interval::point(eta1 * q1 + eta1 * q2 + s.cubes);
    };
  }
  if (id == "B14") {
    return [](const Symbols& s, Evaluation& e, unsigned) {
      const Graph& g = *s.in.graph;
      e.lhs = Interval::point(Rational(sigma(g) + sigma(complement(g))));
      e.rhs = Interval::point(Rational(complement_identity_rhs(g)));
    };
  }
  if (id == "B15a" || id == "B15b") {
    return [first = id == "B15a"](const Symbols& s, Evaluation& e, unsigned bits) {
      std::vector<std::int64_t> a(s.in.seq.entries().begin(), s.in.seq.entries().end());
      std::sort(a.begin(), a.end(), std::greater<>());
      e.param("sequence", "entries of D sorted non-increasing");
      const Rational k(static_cast<std::int64_t>(a.size()));
      Rational sum = 0;
      for (auto x : a) sum += x;
      if (first) {
        Rational squares = 0;
        for (auto x : a) squares += Rational(x) * x;
        e.lhs = Interval::point(sum * (a.front() + a.back()));
        e.rhs = Interval::point(squares + k * a.front() * a.back());
        return;
      }
      e.uses_roots = true;
      Interval root_sum = Interval::point(0);
      BigInt product = 1;
      for (auto x : a) {
        root_sum = root_sum + sqrt_interval(Rational(x), bits);
        product *= x;
      }
      const Interval geo = root_interval(product, static_cast<unsigned>(a.size()), bits);
      e.lhs = Interval::point(k * sum) - root_sum * root_sum;
      e.rhs = Interval::point(k * (k - 1)) * (Interval::point(sum / k) - geo);
    };
  }
  throw InputError("unknown bound id '" + std::string(id) + "'");
}

void require_fields(const BoundSpec& spec, const BoundInput& input) {
  for (auto f : spec.requires_fields) {
    if (f == Field::irr && !input.irr)
      throw InputError(std::string(spec.id) +
                       " needs irr: supply a tree/graph or an irr value (sequence inputs have no "
                       "closed form for irr)");
    if (f == Field::sigma && !input.sigma)
      throw InputError(std::string(spec.id) + " needs sigma: supply a tree or at least two entries");
    if (f == Field::graph && !input.graph)
      throw InputError(std::string(spec.id) + " needs graph: supply a graph or family");
  }
}

bool has_fields(const BoundSpec& spec, const BoundInput& input) {
  try {
    require_fields(spec, input);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Interval margin_of(Relation r, const Interval& lhs, const Interval& rhs) {
  return (r == Relation::ge || r == Relation::gt) ? lhs - rhs : rhs - lhs;
}

}  // namespace

std::span<const BoundSpec> bound_catalog() { return catalog_storage(); }

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& spec : catalog_storage())
    if (spec.id == id) return spec;
  std::string known;
  for (const auto& spec : catalog_storage()) known += (known.empty() ? "" : ", ") + std::string(spec.id);
  throw InputError("unknown bound id '" + std::string(id) + "' (known: " + known + ")");
}

Verdict decide(Relation relation, const Interval& lhs, const Interval& rhs) {
  switch (relation) {
    case Relation::le:
      if (lhs.hi <= rhs.lo) return Verdict::holds;
      if (lhs.lo > rhs.hi) return Verdict::fails;
      break;
    case Relation::lt:
      if (lhs.hi < rhs.lo) return Verdict::holds;
      if (lhs.lo >= rhs.hi) return Verdict::fails;
      break;
    case Relation::ge:
      if (lhs.lo >= rhs.hi) return Verdict::holds;
      if (lhs.hi < rhs.lo) return Verdict::fails;
      break;
    case Relation::gt:
      if (lhs.lo > rhs.hi) return Verdict::holds;
      if (lhs.hi <= rhs.lo) return Verdict::fails;
      break;
    case Relation::eq:
      if (lhs.exact() && rhs.exact() && lhs.lo == rhs.lo) return Verdict::holds;
      if (lhs.hi < rhs.lo || rhs.hi < lhs.lo) return Verdict::fails;
      break;
  }
  return Verdict::indeterminate;
}

BoundReport evaluate_bound(std::string_view id, const BoundInput& input) {
  const BoundSpec& spec = find_bound(id);
  require_fields(spec, input);
  input.params.validate();
  const Evaluator eval = evaluator_for(spec.id);
  const Symbols symbols(input);

  constexpr unsigned kBaseBits = 64;
  constexpr unsigned kEscalatedBits = 128;

  BoundReport report;
  report.bound_id = std::string(spec.id);
  report.input_label = input.label;
  report.relation = spec.relation;

  for (unsigned bits : {kBaseBits, kEscalatedBits}) {
    Evaluation e;
    e.param("convention", std::string(to_string(input.seq.convention())));
    if (input.isolated_vertices > 0)
      e.param("isolated_vertices", std::to_string(input.isolated_vertices) + " (left out of D)");
    eval(symbols, e, bits);

    report.failed_hypotheses = e.failed;
    report.hypotheses_met = e.failed.empty();
    report.params = e.params;
    if (e.undefined) {
      report.lhs.reset();
      report.rhs.reset();
      report.margin.reset();
      report.verdict = Verdict::not_evaluated;
      report.precision_bits = 0;
      break;
    }
    report.lhs = e.lhs;
    report.rhs = e.rhs;
    report.margin = margin_of(spec.relation, e.lhs, e.rhs);
    report.verdict = decide(spec.relation, e.lhs, e.rhs);
    report.precision_bits = e.uses_roots ? bits : 0;
    if (report.verdict != Verdict::indeterminate || !e.uses_roots) break;
  }
  return report;
}

std::vector<BoundReport> evaluate_all(const BoundInput& input) {
  std::vector<BoundReport> out;
  for (const auto& spec : catalog_storage())
    if (has_fields(spec, input)) out.push_back(evaluate_bound(spec.id, input));
  return out;
}

std::string render_value(const std::optional<Interval>& v) {
  if (!v) return "";
  if (v->exact()) return to_fraction_string(v->lo);
  return to_decimal_string(v->midpoint(), 12);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined_params(const BoundReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) out += (out.empty() ? "" : ";") + k + "=" + v;
  if (!r.failed_hypotheses.empty()) {
    std::string failed;
    for (const auto& f : r.failed_hypotheses) failed += (failed.empty() ? "" : "|") + f;
    out += (out.empty() ? "" : ";") + std::string("failed=") + failed;
  }
  if (r.precision_bits != 0) out += ";precision_bits=" + std::to_string(r.precision_bits);
  return out;
}

nlohmann::json interval_json(const std::optional<Interval>& v) {
  if (!v) return nullptr;
  nlohmann::json j;
  j["exact"] = v->exact();
  j["value"] = render_value(v);
  if (!v->exact()) {
    j["lo"] = to_decimal_string(v->lo, 12);
    j["hi"] = to_decimal_string(v->hi, 12);
  }
  return j;
}

}  // namespace

std::string report_csv_header() { return "bound_id,hypotheses_met,lhs,rhs,relation,holds,margin,params"; }

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.bound_id << ',' << (r.hypotheses_met ? "true" : "false") << ','
     << csv_field(render_value(r.lhs)) << ',' << csv_field(render_value(r.rhs)) << ','
     << to_string(r.relation) << ',' << to_string(r.verdict) << ','
     << csv_field(render_value(r.margin)) << ',' << csv_field(joined_params(r));
  return os.str();
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["bound_id"] = r.bound_id;
  j["input"] = r.input_label;
  j["hypotheses_met"] = r.hypotheses_met;
  j["failed_hypotheses"] = r.failed_hypotheses;
  j["lhs"] = interval_json(r.lhs);
  j["rhs"] = interval_json(r.rhs);
  j["margin"] = interval_json(r.margin);
  j["relation"] = std::string(to_string(r.relation));
  j["holds"] = std::string(to_string(r.verdict));
  j["probative"] = r.probative();
  j["precision_bits"] = r.precision_bits;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  return j;
}

}  // namespace sigidx

namespace sigidx {

nlohmann::json to_json(const BoundParams& p) {
  nlohmann::json j;
  j["alpha"] = p.alpha ? nlohmann::json(*p.alpha) : nlohmann::json("default");
  j["beta"] = p.beta ? nlohmann::json(*p.beta) : nlohmann::json("default");
  j["p"] = p.p;
  j["eta"] = p.eta ? nlohmann::json(*p.eta) : nlohmann::json("default");
  j["eta1"] = p.eta1 ? nlohmann::json(to_fraction_string(*p.eta1)) : nlohmann::json("default");
  j["t"] = p.t;
  j["strict_sigma_max"] = p.strict_sigma_max;
  return j;
}

}  // namespace sigidx
