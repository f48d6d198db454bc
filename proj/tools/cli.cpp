#include "cli.hpp"

#include "sigidx/bounds.hpp"
#include "sigidx/errors.hpp"
#include "sigidx/graph.hpp"
#include "sigidx/indices.hpp"
#include "sigidx/search.hpp"
#include "sigidx/sequences.hpp"
#include "sigidx/stats.hpp"
#include "sigidx/tables.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace sigidx::cli {

namespace {

using nlohmann::json;

enum class Format { human, csv, json };

// Fixed-width text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(header_.size());
    const auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);
    std::ostringstream out;
    const auto line = [&](const std::vector<std::string>& row) {
      std::string s;
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += row[i];
        if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << s << '\n';
    };
    line(header_);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows_) line(r);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
  return s + "\n";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

struct InputOptions {
  std::optional<std::string> family;
  std::optional<std::string> sequence;
  std::optional<std::string> graph_file;
  std::optional<std::string> table_row;
  std::optional<std::size_t> all_trees;
  std::string convention = "standard";
  std::optional<std::int64_t> edges;
  std::optional<std::int64_t> irr;
};

void add_input_options(CLI::App* sub, InputOptions& in, bool with_all_trees) {
  sub->add_option("--family", in.family, "family spec, e.g. path:5, double_star:3,4");
  sub->add_option("--sequence", in.sequence, "degree sequence literal, e.g. 3,1,1,1");
  sub->add_option("--graph", in.graph_file, "edge-list file");
  sub->add_option("--table-row", in.table_row, "embedded table row, e.g. 1:1 (table:row)");
  if (with_all_trees)
    sub->add_option("--all-trees", in.all_trees,
                    "class of all trees of this order (Albertson class bounds)");
  sub->add_option("--convention", in.convention, "standard | paper-table")
      ->check(CLI::IsMember({"standard", "paper-table"}));
  sub->add_option("--edges", in.edges, "edge count m for a standard-convention sequence");
  sub->add_option("--irr", in.irr, "Albertson index accompanying a sequence input");
}

void require_one_source(const InputOptions& in) {
  const int sources = in.family.has_value() + in.sequence.has_value() +
                      in.graph_file.has_value() + in.table_row.has_value() +
                      in.all_trees.has_value();
  if (sources != 1)
    throw InputError(
        "give exactly one input source: --family, --sequence, --graph or --table-row");
}

struct TableRowRef {
  int table;
  std::size_t row;
  std::vector<std::int64_t> entries;
  std::int64_t irr;
};

TableRowRef parse_table_row(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("--table-row expects <table>:<row>, e.g. 1:3");
  int table = 0;
  std::size_t row = 0;
  try {
    table = std::stoi(text.substr(0, colon));
    row = static_cast<std::size_t>(std::stoul(text.substr(colon + 1)));
  } catch (const std::exception&) {
    throw InputError("--table-row expects <table>:<row>, e.g. 1:3");
  }
  if (table == 1 && row >= 1 && row <= table1().size()) {
    const auto& r = table1()[row - 1];
    return {1, row, {r.entries.begin(), r.entries.end()}, r.irr};
  }
  if (table == 2 && row >= 1 && row <= table2().size()) {
    const auto& r = table2()[row - 1];
    return {2, row, {r.entries.begin(), r.entries.end()}, r.irr};
  }
  throw InputError("no such table row: " + text);
}

std::string input_label(const InputOptions& in) {
  if (in.family) return *in.family;
  if (in.sequence) return "(" + *in.sequence + ")";
  if (in.graph_file) return *in.graph_file;
  if (in.table_row) return "table" + *in.table_row;
  return "all_trees(" + std::to_string(*in.all_trees) + ")";
}

Graph graph_from_sequence(const std::vector<std::int64_t>& entries) {
  if (is_tree_sequence(entries)) return realize_tree(entries);
  if (is_graphical(entries)) return realize_graph_hakimi(entries);
  throw DomainError("sequence is not graphical, so no graph realizes it");
}

Graph resolve_graph(const InputOptions& in) {
  require_one_source(in);
  if (in.family) return build_family(parse_family(*in.family));
  if (in.graph_file) return read_edge_list_file(*in.graph_file);
  if (in.sequence) {
    if (parse_convention(in.convention) != Convention::standard)
      throw InputError("a paper-table sequence describes no concrete graph; use --convention standard");
    return graph_from_sequence(parse_sequence_literal(*in.sequence));
  }
  throw InputError("this command needs a concrete graph: --family, --sequence or --graph");
}

struct SequenceInput {
  DegreeSequenceView view;
  std::optional<std::int64_t> irr;
  std::optional<Graph> graph;
};

SequenceInput resolve_sequence(const InputOptions& in) {
  require_one_source(in);
  if (in.sequence) {
    DegreeSequenceView view(parse_sequence_literal(*in.sequence), parse_convention(in.convention),
                            in.edges);
    return {std::move(view), in.irr, std::nullopt};
  }
  if (in.table_row) {
    const auto ref = parse_table_row(*in.table_row);
    return {DegreeSequenceView(ref.entries, Convention::paper_table), in.irr.value_or(ref.irr),
            std::nullopt};
  }
  if (in.all_trees) throw InputError("--all-trees is only accepted by bounds check");
  Graph g = in.family ? build_family(parse_family(*in.family)) : read_edge_list_file(*in.graph_file);
  return {DegreeSequenceView::of_graph(g), albertson(g), std::move(g)};
}

struct ParamOptions {
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> beta;
  std::int64_t p = 2;
  std::optional<std::int64_t> eta;
  std::optional<std::string> eta1;
  std::int64_t t = 3;
  bool strict_sigma_max = false;
};

void add_param_options(CLI::App* sub, ParamOptions& p) {
  sub->add_option("--alpha", p.alpha, "exponent of the first Albertson branch");
  sub->add_option("--beta", p.beta, "exponent of the second Albertson branch");
  sub->add_option("--p", p.p, "prime exponent (default 2)");
  sub->add_option("--eta", p.eta, "eta (default ceil(2n*Delta/m))");
  sub->add_option("--eta1", p.eta1, "eta1 in (2,4], e.g. 5/2");
  sub->add_option("--t", p.t, "proof multiplier t > 2 (default 3)");
  sub->add_flag("--strict-sigma-max", p.strict_sigma_max, "also gate on 4 <= Delta-3 <= n/4");
}

BoundParams to_params(const ParamOptions& o) {
  BoundParams p;
  p.alpha = o.alpha;
  p.beta = o.beta;
  p.p = o.p;
  p.eta = o.eta;
  if (o.eta1) p.eta1 = parse_rational(*o.eta1);
  p.t = o.t;
  p.strict_sigma_max = o.strict_sigma_max;
  p.validate();
  return p;
}

// ---------------------------------------------------------------------------
// Commands. Each returns the rendered body; exit status travels separately.

struct Output {
  std::string body;
  int status = kOk;
};

Output cmd_indices(const InputOptions& in, Format format) {
  const Graph g = resolve_graph(in);
  const std::string label = input_label(in);
  const IndexKind kinds[] = {IndexKind::albertson, IndexKind::sigma, IndexKind::sigma_t,
                             IndexKind::zagreb_m1};
  json j{{"input", label}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  for (auto k : kinds) j[std::string(to_string(k))] = compute_index(k, g);

  if (format == Format::json) return {dump(j)};
  if (format == Format::csv) {
    std::string s = csv_line({"input", "n", "m", "albertson", "sigma", "sigma_t", "zagreb_m1"});
    std::vector<std::string> row{label, std::to_string(g.vertex_count()), std::to_string(g.edge_count())};
    for (auto k : kinds) row.push_back(std::to_string(compute_index(k, g)));
    return {s + csv_line(row)};
  }
  TextTable t({"index", "value"});
  t.add({"n", std::to_string(g.vertex_count())});
  t.add({"m", std::to_string(g.edge_count())});
  for (auto k : kinds) t.add({std::string(to_string(k)), std::to_string(compute_index(k, g))});
  return {"input: " + label + "\n" + t.render()};
}

std::vector<std::string> fractions(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

Output cmd_sequence_analyze(const InputOptions& in, Format format) {
  if (in.all_trees) throw InputError("--all-trees is only accepted by bounds check");
  const auto input = resolve_sequence(in);
  const auto& v = input.view;
  std::vector<std::pair<std::string, json>> fields;
  fields.emplace_back("entries", std::vector<std::int64_t>(v.entries().begin(), v.entries().end()));
  fields.emplace_back("convention", std::string(to_string(v.convention())));
  fields.emplace_back("k", v.size());
  fields.emplace_back("n", v.order());
  fields.emplace_back("m", v.edge_count());
  fields.emplace_back("max_degree", v.max_degree());
  fields.emplace_back("min_degree", v.min_degree());
  fields.emplace_back("lambda_D", to_fraction_string(v.mean()));
  fields.emplace_back("graphical", is_graphical(v.entries()));
  fields.emplace_back("tree_sequence", is_tree_sequence(v.entries()));
  if (v.size() >= 2) {
    const auto d = derive(v);
    fields.emplace_back("half_differences", fractions(d.half_differences));
    fields.emplace_back("half_sums", fractions(d.half_sums));
    fields.emplace_back("max_half_difference", to_fraction_string(d.max_half_difference));
    fields.emplace_back("max_half_sum", to_fraction_string(d.max_half_sum));
    fields.emplace_back("mean_half_difference", to_fraction_string(d.mean_half_difference));
    fields.emplace_back("mean_half_sum", to_fraction_string(d.mean_half_sum));
    fields.emplace_back("sigma_closed_form", sigma_closed_form(v));
  }

  json j = json::object();
  for (const auto& [k, val] : fields) j[k] = val;
  if (format == Format::json) return {dump(j)};

  const auto flat = [](const json& val) {
    if (val.is_string()) return val.get<std::string>();
    if (val.is_array()) {
      std::vector<std::string> parts;
      for (const auto& x : val) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
      return join(parts, " ");
    }
    return val.dump();
  };
  if (format == Format::csv) {
    std::string s = csv_line({"field", "value"});
    for (const auto& [k, val] : fields) s += csv_line({k, flat(val)});
    return {s};
  }
  TextTable t({"field", "value"});
  for (const auto& [k, val] : fields) t.add({k, flat(val)});
  return {t.render()};
}

std::string verdict_cell(const BoundReport& r) {
  if (!r.hypotheses_met) return "n/a (" + join(r.failed_hypotheses, "; ") + ")";
  return std::string(to_string(r.verdict));
}

std::string render_reports(const std::string& label, const std::vector<BoundReport>& reports,
                           Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return dump(json{{"input", label}, {"reports", arr}});
  }
  if (format == Format::csv) {
    std::string s = report_csv_header() + "\n";
    for (const auto& r : reports) s += to_csv_row(r) + "\n";
    return s;
  }
  TextTable t({"bound", "lhs", "rel", "rhs", "verdict"});
  for (const auto& r : reports)
    t.add({r.bound_id, render_value(r.lhs), std::string(to_string(r.relation)), render_value(r.rhs),
           verdict_cell(r)});
  return "input: " + label + "\n" + t.render();
}

Output cmd_bounds_check(const InputOptions& in, const ParamOptions& po, const std::string& bound,
                        bool expect_hold, Format format, std::size_t cap) {
  const BoundParams params = to_params(po);
  const std::string label = input_label(in);
  std::vector<BoundReport> reports;

  if (in.all_trees) {
    require_one_source(in);
    for (auto& r : evaluate_albertson_class_bounds(*in.all_trees, params, cap))
      if (bound == "all" || r.bound_id == bound) reports.push_back(std::move(r));
    if (reports.empty())
      throw InputError("--all-trees supports the Albertson class bounds B1a, B1b, B2a, B2b");
  } else {
    BoundInput bi = [&] {
      if (in.family || in.graph_file) return BoundInput::from_graph(resolve_graph(in), params, label);
      auto input = resolve_sequence(in);
      return BoundInput::from_sequence(input.view, input.irr, params, label);
    }();
    if (bound == "all")
      reports = evaluate_all(bi);
    else
      reports.push_back(evaluate_bound(bound, bi));
  }

  Output out{render_reports(label, reports, format)};
  if (expect_hold &&
      std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) {
        return r.probative() && !r.holds();
      }))
    out.status = kBoundFailed;
  return out;
}

Output cmd_bounds_falsify(const std::string& bound, std::optional<std::size_t> nmax,
                          std::optional<std::size_t> n, std::optional<std::size_t> samples,
                          std::uint64_t seed, const ParamOptions& po, Format format,
                          std::size_t cap) {
  const BoundParams params = to_params(po);
  FalsifyMode mode;
  json mode_json;
  if (nmax && !n && !samples) {
    mode = FalsifyMode::exhaustive(*nmax);
    mode_json = {{"kind", "exhaustive"}, {"nmax", *nmax}};
  } else if (n && samples && !nmax) {
    mode = FalsifyMode::random(*n, *samples, seed);
    mode_json = {{"kind", "random"}, {"n", *n}, {"samples", *samples}, {"seed", seed}};
  } else {
    throw InputError("use either --nmax K, or --n N --samples S [--seed X]");
  }
  const auto found = falsify(bound, mode, params, cap);

  if (format == Format::json) {
    json arr = json::array();
    for (const auto& c : found) arr.push_back(to_json(c));
    return {dump(json{{"bound_id", bound},
                      {"mode", mode_json},
                      {"count", found.size()},
                      {"counterexamples", arr}})};
  }
  if (format == Format::csv) {
    std::string s = csv_line({"bound_id", "n", "encoding", "lhs", "rhs", "margin"});
    for (const auto& c : found)
      s += csv_line({c.bound_id, std::to_string(c.tree.vertex_count()), to_string(c.encoding),
                     render_value(c.report.lhs), render_value(c.report.rhs),
                     render_value(c.report.margin)});
    return {s};
  }
  TextTable t({"n", "level sequence", "lhs", "rhs", "margin"});
  for (const auto& c : found)
    t.add({std::to_string(c.tree.vertex_count()), to_string(c.encoding), render_value(c.report.lhs),
           render_value(c.report.rhs), render_value(c.report.margin)});
  return {bound + ": " + std::to_string(found.size()) + " counterexample(s)\n" + t.render()};
}

Output cmd_enumerate(std::size_t n, bool count_only, Format format, std::size_t cap) {
  std::vector<std::string> trees;
  std::size_t count = 0;
  enumerate_free_trees(
      n,
      [&](const LevelSequence& levels) {
        ++count;
        if (!count_only) trees.push_back(to_string(levels));
      },
      cap);

  if (format == Format::json) {
    json j{{"n", n}, {"count", count}};
    if (!count_only) j["trees"] = trees;
    return {dump(j)};
  }
  if (format == Format::csv) {
    if (count_only) return {csv_line({"n", "count"}) + csv_line({std::to_string(n), std::to_string(count)})};
    std::string s = csv_line({"index", "level_sequence"});
    for (std::size_t i = 0; i < trees.size(); ++i) s += csv_line({std::to_string(i + 1), trees[i]});
    return {s};
  }
  std::string s = "free trees on " + std::to_string(n) + " vertices: " + std::to_string(count) + "\n";
  for (const auto& t : trees) s += t + "\n";
  return {s};
}

Output cmd_extremal(std::optional<std::size_t> n, const std::string& objective,
                    const std::string& direction, std::optional<std::string> degrees,
                    std::optional<std::size_t> max_degree, Format format, std::size_t cap) {
  TreeClass cls;
  if (degrees) {
    if (max_degree) throw InputError("--degrees and --max-degree are mutually exclusive");
    cls = TreeClass::with_degree_multiset(parse_sequence_literal(*degrees));
    if (n && *n != cls.n) throw InputError("--n does not match the length of --degrees");
  } else if (!n) {
    throw InputError("extremal needs --n (or --degrees)");
  } else if (max_degree) {
    cls = TreeClass::with_max_degree(*n, *max_degree);
  } else {
    cls = TreeClass::all(*n);
  }
  const auto result = extremal(cls, objective == "sigma" ? Objective::sigma : Objective::albertson,
                               direction == "max" ? Direction::max : Direction::min, cap);

  if (format == Format::json) return {dump(to_json(result))};
  const std::vector<std::pair<std::string, std::string>> rows{
      {"class", result.class_description},
      {"objective", std::string(to_string(result.objective))},
      {"direction", std::string(to_string(result.direction))},
      {"optimum", std::to_string(result.optimum)},
      {"witness", to_string(result.witness)},
      {"trees_examined", std::to_string(result.trees_examined)}};
  if (format == Format::csv) {
    std::string s = csv_line({"field", "value"});
    for (const auto& [k, v] : rows) s += csv_line({k, v});
    return {s};
  }
  TextTable t({"field", "value"});
  for (const auto& [k, v] : rows) t.add({k, v});
  return {t.render()};
}

Output cmd_tables_reproduce(int table, Format format) {
  const auto report = reproduce_table(table);
  if (format == Format::json) return {dump(to_json(report))};
  if (format == Format::csv) return {to_csv(report)};
  TextTable t({"row", "column", "printed", "recomputed", "status", "note"});
  for (const auto& c : report.cells)
    t.add({std::to_string(c.row), c.column, c.printed, c.recomputed.value_or("-"),
           std::string(to_string(c.status)), c.note});
  return {"table " + std::to_string(table) + "\n" + t.render()};
}

Output cmd_tables_show(int table, Format format) {
  const std::string csv = table_csv(table);
  if (format != Format::json) return {csv};
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  json rows = json::array();
  while (std::getline(lines, line)) rows.push_back(line);
  return {dump(json{{"table", table}, {"csv_rows", rows}})};
}

std::string decimal(const std::optional<double>& v) {
  return v ? format_decimal(*v) : std::string("undefined");
}

Output cmd_stats_correlate(int table, double tolerance, Format format) {
  const auto m = correlation_matrix(correlation_columns(table));
  const auto& printed = printed_correlation(table);
  const auto deviations = compare_matrix(m, printed, tolerance);
  const auto within = static_cast<std::size_t>(std::count_if(
      deviations.begin(), deviations.end(), [](const MatrixDeviation& d) { return d.within_tolerance; }));

  if (format == Format::json) {
    json devs = json::array();
    for (const auto& d : deviations) devs.push_back(to_json(d));
    return {dump(json{{"table", table},
                      {"computed", to_json(m)},
                      {"printed", printed},
                      {"tolerance", tolerance},
                      {"comparisons", devs},
                      {"entries_compared", deviations.size()},
                      {"entries_within_tolerance", within}})};
  }
  if (format == Format::csv) {
    std::string s = csv_line({"var_row", "var_col", "computed", "printed", "abs_diff", "within_tolerance"});
    for (const auto& d : deviations)
      s += csv_line({m.names[d.row], m.names[d.col], decimal(d.computed), format_decimal(d.printed),
                     format_decimal(d.abs_diff), d.within_tolerance ? "true" : "false"});
    return {s};
  }
  std::vector<std::string> header{""};
  header.insert(header.end(), m.names.begin(), m.names.end());
  TextTable t(header);
  for (std::size_t i = 0; i < m.names.size(); ++i) {
    std::vector<std::string> row{m.names[i]};
    for (std::size_t j = 0; j < m.names.size(); ++j) row.push_back(decimal(m.at(i, j)));
    t.add(row);
  }
  TextTable dev({"pair", "computed", "printed", "abs_diff"});
  for (const auto& d : deviations)
    if (!d.within_tolerance)
      dev.add({m.names[d.row] + "/" + m.names[d.col], decimal(d.computed), format_decimal(d.printed),
               format_decimal(d.abs_diff)});
  return {t.render() + "\n" + std::to_string(within) + "/" + std::to_string(deviations.size()) +
          " entries within " + format_decimal(tolerance) + " of the printed matrix\n" +
          (within == deviations.size() ? std::string() : dev.render())};
}

Output cmd_stats_regress(int table, std::optional<std::string> predict_at, Format format) {
  const auto& printed = printed_regression(table);
  const auto attempts = regression_attempts(table);
  std::optional<std::vector<long double>> point;
  if (predict_at) {
    point.emplace();
    for (const auto& x : parse_sequence_literal(*predict_at)) point->push_back(static_cast<long double>(x));
  }
  const auto printed_at = [&](const std::vector<long double>& p) {
    if (p.size() != printed.coefficients.size())
      throw InputError("--predict needs " + std::to_string(printed.coefficients.size()) + " values");
    long double s = to_double(parse_rational(printed.intercept));
    for (std::size_t i = 0; i < p.size(); ++i) s += to_double(parse_rational(printed.coefficients[i])) * p[i];
    return s;
  };

  if (format == Format::json) {
    json arr = json::array();
    for (const auto& a : attempts) {
      json aj = to_json(a);
      if (point) aj["prediction_at_point"] = std::stod(format_decimal(predict(a.fit, *point)));
      arr.push_back(aj);
    }
    json j{{"table", table}, {"printed", to_json(printed)}, {"attempts", arr}};
    if (point) {
      std::vector<std::int64_t> raw;
      for (auto x : *point) raw.push_back(static_cast<std::int64_t>(x));
      j["point"] = raw;
      j["printed_prediction_at_point"] = std::stod(format_decimal(printed_at(*point)));
    }
    return {dump(j)};
  }
  if (format == Format::csv) {
    std::string s = csv_line({"model", "coefficients", "intercept", "r_squared", "rank",
                              "condition_number", "prediction", "point_prediction"});
    s += csv_line({"printed", join(printed.coefficients, " "), printed.intercept, printed.r_squared,
                   "", "", to_decimal_string(printed.recomputed_prediction(), 12),
                   point ? format_decimal(printed_at(*point)) : ""});
    for (const auto& a : attempts) {
      std::vector<std::string> coefs;
      for (auto c : a.fit.coefficients) coefs.push_back(format_decimal(c));
      s += csv_line({a.label, join(coefs, " "), format_decimal(a.fit.intercept),
                     format_decimal(a.fit.r_squared), std::to_string(a.fit.rank),
                     format_decimal(a.fit.condition_number), format_decimal(a.prediction),
                     point ? format_decimal(predict(a.fit, *point)) : ""});
    }
    return {s};
  }
  std::ostringstream s;
  s << "printed: coefficients [" << join(printed.coefficients, ", ") << "], intercept "
    << printed.intercept << ", R^2 " << printed.r_squared << "\n";
  s << "printed prediction at (" << join(printed.query, ", ") << "): " << printed.prediction
    << "; recomputed from printed coefficients: "
    << to_decimal_string(printed.recomputed_prediction(), 12) << "\n";
  if (point) s << "printed coefficients at --predict point: " << format_decimal(printed_at(*point)) << "\n";
  TextTable t({"model", "coefficients", "intercept", "R^2", "rank", "cond", "R^2 match"});
  for (const auto& a : attempts) {
    std::vector<std::string> coefs;
    for (auto c : a.fit.coefficients) coefs.push_back(format_decimal(c));
    t.add({a.label, join(coefs, ", "), format_decimal(a.fit.intercept), format_decimal(a.fit.r_squared),
           std::to_string(a.fit.rank), format_decimal(a.fit.condition_number),
           a.r_squared_matches ? "yes" : "no"});
  }
  s << t.render();
  if (point)
    for (const auto& a : attempts)
      s << a.label << " at --predict point: " << format_decimal(predict(a.fit, *point)) << "\n";
  return {s.str()};
}

// Plot series: wide CSV, first column is the x axis.
Output cmd_plots_emit(int figure, std::size_t nmax, Format format) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (figure == 1) {
    if (nmax < 4) throw InputError("--nmax must be at least 4 for figure 1");
    const std::vector<std::string> families{"path", "star", "cycle", "complete", "complete_bipartite"};
    header.push_back("n");
    for (const auto& f : families) {
      header.push_back("irr_" + f);
      header.push_back("sigma_" + f);
    }
    for (std::size_t n = 4; n <= nmax; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (const auto& f : families) {
        const std::string spec =
            f == "complete_bipartite" ? f + ":" + std::to_string(n / 2) + "," + std::to_string(n - n / 2)
                                      : f + ":" + std::to_string(n);
        const Graph g = build_family(parse_family(spec));
        row.push_back(std::to_string(albertson(g)));
        row.push_back(std::to_string(sigma(g)));
      }
      rows.push_back(row);
    }
  } else if (figure == 2) {
    header = {"row", "n", "T1", "T2", "irr", "sigma"};
    std::size_t i = 0;
    for (const auto& r : table1()) {
      const DegreeSequenceView v({r.entries.begin(), r.entries.end()}, Convention::paper_table);
      rows.push_back({std::to_string(++i), std::to_string(v.order()), std::to_string(r.t1),
                      std::to_string(r.t2), std::to_string(r.irr), std::to_string(r.sigma)});
    }
  } else if (figure == 3) {
    header = {"row", "n", "irr", "sigma", "lambda", "eta_printed", "eta_computed", "eta1_printed"};
    std::size_t i = 0;
    for (const auto& r : table2()) {
      const DegreeSequenceView v({r.entries.begin(), r.entries.end()}, Convention::paper_table);
      rows.push_back({std::to_string(++i), std::to_string(r.n), std::to_string(r.irr),
                      std::to_string(r.sigma), to_decimal_string(v.mean(), 8), std::to_string(r.eta),
                      std::to_string(table_eta(r.entries)), r.eta1});
    }
  } else {
    throw InputError("--figure must be 1, 2 or 3");
  }

  if (format == Format::json) {
    json series = json::object();
    for (std::size_t c = 0; c < header.size(); ++c) {
      json col = json::array();
      for (const auto& r : rows) col.push_back(r[c]);
      series[header[c]] = col;
    }
    return {dump(json{{"figure", figure}, {"x", header.front()}, {"series", series}})};
  }
  std::string s = csv_line(header);
  for (const auto& r : rows) s += csv_line(r);
  return {s};
}

Output cmd_forms(Format format) {
  const auto checks = compare_known_forms();
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"form", c.form}, {"subject", c.subject}, {"claimed", c.claimed},
                     {"actual", c.actual}, {"agree", c.agree}, {"note", c.note}});
    return {dump(json{{"checks", arr}})};
  }
  if (format == Format::csv) {
    std::string s = csv_line({"form", "subject", "claimed", "actual", "agree", "note"});
    for (const auto& c : checks)
      s += csv_line({c.form, c.subject, std::to_string(c.claimed), std::to_string(c.actual),
                     c.agree ? "true" : "false", c.note});
    return {s};
  }
  TextTable t({"form", "subject", "claimed", "actual", "agree", "note"});
  for (const auto& c : checks)
    t.add({c.form, c.subject, std::to_string(c.claimed), std::to_string(c.actual),
           c.agree ? "yes" : "no", c.note});
  return {t.render()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sigma and Albertson irregularity toolkit", "sigidx"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "human";
  std::optional<std::string> out_path;
  std::optional<std::size_t> cap_flag;
  app.add_option("--format", format_name, "human | csv | json")
      ->check(CLI::IsMember({"human", "csv", "json"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--cap", cap_flag, "enumeration order cap (default from SIGIDX_ENUM_CAP or 18)");

  InputOptions input;
  ParamOptions params;

  auto* indices = app.add_subcommand("indices", "irr, sigma, sigma_t and M1 of a graph");
  add_input_options(indices, input, false);

  auto* sequence = app.add_subcommand("sequence", "degree-sequence tools");
  sequence->require_subcommand(1);
  auto* analyze = sequence->add_subcommand("analyze", "D, R, A, means and realizability");
  add_input_options(analyze, input, false);

  auto* bounds = app.add_subcommand("bounds", "bound catalogue");
  bounds->require_subcommand(1);
  auto* check = bounds->add_subcommand("check", "evaluate catalogue entries on an input");
  std::string bound_id = "all";
  bool expect_hold = false;
  add_input_options(check, input, true);
  add_param_options(check, params);
  check->add_option("--bound", bound_id, "bound id or 'all'");
  check->add_flag("--expect-hold", expect_hold, "exit 2 if any probative report fails");

  auto* falsify_cmd = bounds->add_subcommand("falsify", "search trees for counterexamples");
  std::string falsify_bound;
  std::optional<std::size_t> nmax;
  std::optional<std::size_t> falsify_n;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  falsify_cmd->add_option("--bound", falsify_bound, "bound id")->required();
  falsify_cmd->add_option("--nmax", nmax, "exhaustive over all trees with 2..K vertices");
  falsify_cmd->add_option("--n", falsify_n, "order of random trees");
  falsify_cmd->add_option("--samples", samples, "number of random trees");
  falsify_cmd->add_option("--seed", seed, "random seed (default 0)");
  add_param_options(falsify_cmd, params);

  auto* enumerate = app.add_subcommand("enumerate", "free trees up to isomorphism");
  std::size_t enum_n = 0;
  bool count_only = false;
  enumerate->add_option("--n", enum_n, "order")->required();
  enumerate->add_flag("--count-only", count_only, "print only the count");

  auto* extremal_cmd = app.add_subcommand("extremal", "exact optimum over a tree class");
  std::optional<std::size_t> ext_n;
  std::string objective = "sigma";
  std::string direction = "max";
  std::optional<std::string> degrees;
  std::optional<std::size_t> max_degree;
  extremal_cmd->add_option("--n", ext_n, "order");
  extremal_cmd->add_option("--objective", objective, "sigma | albertson")
      ->check(CLI::IsMember({"sigma", "albertson"}));
  extremal_cmd->add_option("--direction", direction, "max | min")->check(CLI::IsMember({"max", "min"}));
  extremal_cmd->add_option("--degrees", degrees, "restrict to trees with this degree multiset");
  extremal_cmd->add_option("--max-degree", max_degree, "restrict to trees with this maximum degree");

  auto* tables = app.add_subcommand("tables", "embedded data tables");
  tables->require_subcommand(1);
  int table_id = 1;
  auto* reproduce = tables->add_subcommand("reproduce", "recompute every derivable cell");
  reproduce->add_option("--table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  auto* show = tables->add_subcommand("show", "the table exactly as printed (CSV)");
  show->add_option("--table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));

  auto* stats = app.add_subcommand("stats", "correlation and regression on the tables");
  stats->require_subcommand(1);
  double tolerance = 5e-3;
  std::optional<std::string> predict_at;
  auto* correlate = stats->add_subcommand("correlate", "Pearson matrix vs the printed one");
  correlate->add_option("--table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  correlate->add_option("--tolerance", tolerance, "per-entry tolerance (default 0.005)");
  auto* regress = stats->add_subcommand("regress", "least-squares fits vs the printed ones");
  regress->add_option("--table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  regress->add_option("--predict", predict_at, "query point, e.g. 350,50");

  auto* plots = app.add_subcommand("plots", "plot series as CSV");
  plots->require_subcommand(1);
  auto* emit = plots->add_subcommand("emit", "series for one figure");
  int figure = 1;
  std::size_t plot_nmax = 20;
  emit->add_option("--figure", figure, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  emit->add_option("--nmax", plot_nmax, "largest n for figure 1 (default 20)");

  auto* forms = app.add_subcommand("forms", "closed forms vs direct computation");

  std::vector<const char*> argv{"sigidx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const Format format = format_name == "json"  ? Format::json
                        : format_name == "csv" ? Format::csv
                                               : Format::human;
  const std::size_t cap = cap_flag.value_or(enumeration_cap_from_env());

  try {
    Output result;
    if (indices->parsed())
      result = cmd_indices(input, format);
    else if (analyze->parsed())
      result = cmd_sequence_analyze(input, format);
    else if (check->parsed())
      result = cmd_bounds_check(input, params, bound_id, expect_hold, format, cap);
    else if (falsify_cmd->parsed())
      result = cmd_bounds_falsify(falsify_bound, nmax, falsify_n, samples, seed, params, format, cap);
    else if (enumerate->parsed())
      result = cmd_enumerate(enum_n, count_only, format, cap);
    else if (extremal_cmd->parsed())
      result = cmd_extremal(ext_n, objective, direction, degrees, max_degree, format, cap);
    else if (reproduce->parsed())
      result = cmd_tables_reproduce(table_id, format);
    else if (show->parsed())
      result = cmd_tables_show(table_id, format);
    else if (correlate->parsed())
      result = cmd_stats_correlate(table_id, tolerance, format);
    else if (regress->parsed())
      result = cmd_stats_regress(table_id, predict_at, format);
    else if (emit->parsed())
      result = cmd_plots_emit(figure, plot_nmax, format);
    else if (forms->parsed())
      result = cmd_forms(format);

    if (out_path) {
      std::ofstream file(*out_path, std::ios::binary);
      if (!file) throw InputError("cannot write " + *out_path);
      file << result.body;
    } else {
      out << result.body;
    }
    return result.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace sigidx::cli
