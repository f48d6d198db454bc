#include "sigidx/tables.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/indices.hpp"
#include "sigidx/sequences.hpp"

#include <algorithm>
#include <sstream>

namespace sigidx {

namespace {

constexpr Table1Row kTable1[] = {
    {{3, 5, 7, 5, 6, 8, 10}, 160, 2107, 260, 2248},
    {{7, 8, 10, 11, 12, 14, 15}, 280, 11293, 810, 10747},
    {{11, 11, 13, 17, 18, 20, 20}, 399, 32842, 1694, 31070},
    {{15, 14, 16, 23, 24, 26, 25}, 519, 72197, 2912, 68563},
    {{19, 17, 19, 29, 30, 32, 30}, 637, 134229, 4464, 128572},
    {{23, 20, 22, 35, 36, 38, 35}, 757, 224942, 6350, 216443},
    {{27, 23, 25, 41, 42, 44, 40}, 876, 348993, 8570, 337522},
    {{31, 26, 28, 47, 48, 50, 45}, 996, 512397, 11124, 497155},
};

constexpr Table2Row kTable2[] = {
    {{3, 6, 8, 10, 14, 16, 20}, 77, 980, 16209, "11", 21, "2.12"},
    {{7, 9, 12, 14, 20, 24, 27}, 113, 2050, 46312, "16.14", 31, "2.18"},
    {{11, 12, 16, 23, 26, 32, 34}, 154, 3732, 107753, "22", 41, "1"},
    {{15, 15, 20, 32, 32, 40, 45}, 199, 6296, 233350, "28.42", 51, "3.1"},
};

const std::vector<std::vector<double>> kMatrix1 = {
    {1.000000, 0.929672, 0.974594, 0.999999, 0.894803},
    {0.929672, 1.000000, 0.987695, 0.929695, 0.993202},
    {0.974594, 0.987695, 1.000000, 0.974594, 0.966635},
    {0.999999, 0.929695, 0.974594, 1.000000, 0.894845},
    {0.894803, 0.993202, 0.966635, 0.894845, 1.000000},
};

const std::vector<std::vector<double>> kMatrix2 = {
    {1.00000, 0.998777, 0.314881, 0.969896, 0.990360},
    {0.998777, 1.00000, 0.282990, 0.957017, 0.982405},
    {0.314881, 0.282990, 1.00000, 0.497029, 0.415811},
    {0.969896, 0.957017, 0.497029, 1.00000, 0.994206},
    {0.990360, 0.982405, 0.415811, 0.994206, 1.00000},
};

const PrintedRegression kRegression1{1,
                                     {"n", "lambda"},
                                     {"-94764.10761811", "27387.84112146"},
                                     "-506577.67445476603",
                                     "0.864810869832136",
                                     {"350", "50"},
                                     "-32304623.284719232"};

const PrintedRegression kRegression2{2,
                                     {"n", "irr"},
                                     {"-1402.91893491", "72.8168638"},
                                     "53643.804983904585",
                                     "0.9997469414194662",
                                     {"400", "200"},
                                     "-492960.5317043649"};

constexpr double kLambdaTolerance = 0.005;

void check_table_id(int table_id) {
  if (table_id != 1 && table_id != 2)
    throw InputError("unknown table " + std::to_string(table_id) + "; expected 1 or 2");
}

DegreeSequenceView view_of(std::span<const std::int64_t> entries) {
  return DegreeSequenceView({entries.begin(), entries.end()}, Convention::paper_table);
}

std::string sequence_label(std::span<const std::int64_t> entries) {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i)
    s += (i ? "," : "") + std::to_string(entries[i]);
  return s + ")";
}

Cell integer_cell(std::size_t row, std::string column, std::int64_t printed,
                  std::int64_t recomputed, std::string rule) {
  return Cell{row,
              std::move(column),
              std::to_string(printed),
              std::to_string(recomputed),
              printed == recomputed ? CellStatus::match : CellStatus::mismatch,
              std::move(rule),
              {}};
}

Cell opaque_cell(std::size_t row, std::string column, std::string printed) {
  return Cell{row, std::move(column), std::move(printed), std::nullopt, CellStatus::not_derivable,
              "no generating rule", {}};
}

const char* const kT1Rule = "floor((3n+1)/2)+ceil((3m+1)/2)+floor((3Δ+2n)/4); n=Σd, m=n-1, Δ=d_k";
const char* const kT2Rule = "floor(λ²·T1/3)";
const char* const kSigmaRule = "tree closed form, table reading";

}  // namespace

std::span<const Table1Row> table1() { return kTable1; }
std::span<const Table2Row> table2() { return kTable2; }

std::string_view to_string(CellStatus s) {
  switch (s) {
    case CellStatus::match: return "match";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::not_derivable: return "not_derivable";
  }
  return "?";
}

std::size_t ReproductionReport::count(std::string_view column, CellStatus status) const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const Cell& c) {
    return c.column == column && c.status == status;
  }));
}

std::vector<const Cell*> ReproductionReport::column(std::string_view name) const {
  std::vector<const Cell*> out;
  for (const auto& c : cells)
    if (c.column == name) out.push_back(&c);
  return out;
}

std::int64_t table_t1(std::span<const std::int64_t> entries) {
  const auto v = view_of(entries);
  const std::int64_t n = v.order();
  const std::int64_t m = v.edge_count();
  const std::int64_t delta = v.max_degree();
  const auto fl = [](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(floor_of(make_rational(a, b))); };
  const auto cl = [](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(ceil_of(make_rational(a, b))); };
  return fl(3 * n + 1, 2) + cl(3 * m + 1, 2) + fl(3 * delta + 2 * n, 4);
}

std::int64_t table_t2(std::span<const std::int64_t> entries) {
  const auto v = view_of(entries);
  const Rational lambda = v.mean();
  return static_cast<std::int64_t>(floor_of(lambda * lambda * table_t1(entries) / 3));
}

std::int64_t table_eta(std::span<const std::int64_t> entries) {
  const auto v = view_of(entries);
  return static_cast<std::int64_t>(
      ceil_of(make_rational(2 * v.order() * v.max_degree(), v.edge_count())));
}

Rational round_decimal(const Rational& x, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  return Rational(floor_of(x * scale + Rational(1, 2)), scale);
}

ReproductionReport reproduce_table(int table_id) {
  check_table_id(table_id);
  ReproductionReport report{table_id, {}};
  auto& cells = report.cells;

  if (table_id == 1) {
    std::size_t row = 0;
    for (const auto& r : kTable1) {
      ++row;
      const std::span<const std::int64_t> e(r.entries);
      cells.push_back(integer_cell(row, "T1", r.t1, table_t1(e), kT1Rule));
      cells.push_back(integer_cell(row, "T2", r.t2, table_t2(e), kT2Rule));
      cells.push_back(opaque_cell(row, "irr", std::to_string(r.irr)));
      cells.push_back(integer_cell(row, "sigma", r.sigma, sigma_closed_form(view_of(e)), kSigmaRule));
    }
    return report;
  }

  std::size_t row = 0;
  for (const auto& r : kTable2) {
    ++row;
    const std::span<const std::int64_t> e(r.entries);
    const auto v = view_of(e);
    cells.push_back(integer_cell(row, "n", r.n, v.order(), "Σd"));
    cells.push_back(opaque_cell(row, "irr", std::to_string(r.irr)));
    cells.push_back(integer_cell(row, "sigma", r.sigma, sigma_closed_form(v), kSigmaRule));

    const Rational printed = parse_rational(r.lambda);
    const Rational exact = v.mean();
    const Rational diff = exact > printed ? exact - printed : printed - exact;
    Cell lambda{row,
                "lambda",
                r.lambda,
                to_decimal_string(exact, 8),
                to_double(diff) <= kLambdaTolerance ? CellStatus::match : CellStatus::mismatch,
                "Σd/k, tolerance 0.005",
                {}};
    if (lambda.status == CellStatus::mismatch && round_decimal(exact, 2) != printed &&
        floor_of(exact * 100) == floor_of(printed * 100))
      lambda.note = "printed value is the truncation of " + to_fraction_string(exact) + ", not its rounding";
    cells.push_back(std::move(lambda));

    Cell eta = integer_cell(row, "eta", r.eta, table_eta(e), "ceil(2nΔ/m)");
    if (eta.status == CellStatus::mismatch)
      eta.note = "printed value has no derivation from the stated definition";
    cells.push_back(std::move(eta));

    Cell eta1 = opaque_cell(row, "eta1", r.eta1);
    const Rational p = parse_rational(r.eta1);
    if (p <= 2 || p > 4) eta1.note = "printed value lies outside the required range (2, 4]";
    cells.push_back(std::move(eta1));
  }
  return report;
}

std::vector<NamedColumn> correlation_columns(int table_id) {
  check_table_id(table_id);
  const auto integer = [](std::int64_t v) { return Rational(v); };
  if (table_id == 1) {
    std::vector<NamedColumn> cols{{"n", {}}, {"sigma", {}}, {"irr", {}}, {"T1", {}}, {"T2", {}}};
    for (const auto& r : kTable1) {
      cols[0].values.push_back(integer(view_of(r.entries).order()));
      cols[1].values.push_back(integer(r.sigma));
      cols[2].values.push_back(integer(r.irr));
      cols[3].values.push_back(integer(r.t1));
      cols[4].values.push_back(integer(r.t2));
    }
    return cols;
  }
  std::vector<NamedColumn> cols{{"n", {}}, {"eta", {}}, {"eta1", {}}, {"sigma", {}}, {"irr", {}}};
  for (const auto& r : kTable2) {
    cols[0].values.push_back(integer(r.n));
    cols[1].values.push_back(integer(r.eta));
    cols[2].values.push_back(parse_rational(r.eta1));
    cols[3].values.push_back(integer(r.sigma));
    cols[4].values.push_back(integer(r.irr));
  }
  return cols;
}

const std::vector<std::vector<double>>& printed_correlation(int table_id) {
  check_table_id(table_id);
  return table_id == 1 ? kMatrix1 : kMatrix2;
}

Rational PrintedRegression::recomputed_prediction() const {
  Rational total = parse_rational(intercept);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    total += parse_rational(coefficients[i]) * parse_rational(query[i]);
  return total;
}

const PrintedRegression& printed_regression(int table_id) {
  check_table_id(table_id);
  return table_id == 1 ? kRegression1 : kRegression2;
}

std::vector<RegressionAttempt> regression_attempts(int table_id) {
  check_table_id(table_id);
  const PrintedRegression& printed = printed_regression(table_id);
  const long double target_r2 = to_double(parse_rational(printed.r_squared));
  std::vector<long double> query;
  for (const auto& q : printed.query) query.push_back(to_double(parse_rational(q)));

  std::vector<RegressionAttempt> out;
  const auto attempt = [&](std::string label, const std::vector<NamedColumn>& features,
                           const NamedColumn& target) {
    OlsResult fit = ols_fit(features, target);
    const long double prediction = predict(fit, query);
    const bool matches = std::fabs(fit.r_squared - target_r2) <= 0.02L;
    out.push_back({std::move(label), std::move(fit), prediction, matches});
  };

  if (table_id == 1) {
    NamedColumn n{"n", {}}, lambda{"lambda", {}}, rounded{"lambda_2dp", {}}, sigma{"sigma", {}};
    for (const auto& r : kTable1) {
      const auto v = view_of(r.entries);
      n.values.push_back(Rational(v.order()));
      lambda.values.push_back(v.mean());
      rounded.values.push_back(round_decimal(v.mean(), 2));
      sigma.values.push_back(Rational(r.sigma));
    }
    attempt("sigma ~ n + lambda (minimum norm)", {n, lambda}, sigma);
    attempt("sigma ~ n + lambda rounded to 2 places", {n, rounded}, sigma);
    return out;
  }

  NamedColumn n{"n", {}}, irr{"irr", {}}, sigma{"sigma", {}};
  for (const auto& r : kTable2) {
    n.values.push_back(Rational(r.n));
    irr.values.push_back(Rational(r.irr));
    sigma.values.push_back(Rational(r.sigma));
  }
  attempt("sigma ~ n + irr", {n, irr}, sigma);
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string table_csv(int table_id) {
  check_table_id(table_id);
  std::ostringstream out;
  if (table_id == 1) {
    out << "sequence,T1,T2,irr,sigma\n";
    for (const auto& r : kTable1)
      out << csv_field(sequence_label(r.entries)) << ',' << r.t1 << ',' << r.t2 << ',' << r.irr
          << ',' << r.sigma << '\n';
  } else {
    out << "sequence,n,irr,sigma,lambda,eta,eta1\n";
    for (const auto& r : kTable2)
      out << csv_field(sequence_label(r.entries)) << ',' << r.n << ',' << r.irr << ',' << r.sigma
          << ',' << r.lambda << ',' << r.eta << ',' << r.eta1 << '\n';
  }
  return out.str();
}

std::string to_csv(const ReproductionReport& r) {
  std::ostringstream out;
  out << "table,row,column,printed,recomputed,status,rule,note\n";
  for (const auto& c : r.cells)
    out << r.table_id << ',' << c.row << ',' << csv_field(c.column) << ',' << csv_field(c.printed)
        << ',' << csv_field(c.recomputed.value_or("")) << ',' << to_string(c.status) << ','
        << csv_field(c.rule) << ',' << csv_field(c.note) << '\n';
  return out.str();
}

nlohmann::json to_json(const ReproductionReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"row", c.row},
                     {"column", c.column},
                     {"printed", c.printed},
                     {"recomputed", c.recomputed ? nlohmann::json(*c.recomputed) : nlohmann::json()},
                     {"status", std::string(to_string(c.status))},
                     {"rule", c.rule},
                     {"note", c.note}});
  return {{"table", r.table_id}, {"cells", cells}};
}

nlohmann::json to_json(const RegressionAttempt& a) {
  return {{"label", a.label},
          {"fit", to_json(a.fit)},
          {"prediction", std::stod(format_decimal(a.prediction))},
          {"r_squared_matches_printed", a.r_squared_matches}};
}

nlohmann::json to_json(const PrintedRegression& p) {
  return {{"table", p.table_id},
          {"features", p.features},
          {"coefficients", p.coefficients},
          {"intercept", p.intercept},
          {"r_squared", p.r_squared},
          {"query", p.query},
          {"prediction", p.prediction},
          {"recomputed_prediction", to_decimal_string(p.recomputed_prediction(), 12)}};
}

}  // namespace sigidx
