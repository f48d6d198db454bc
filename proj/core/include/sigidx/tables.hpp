#pragma once

// The two published data tables, embedded as printed, with recomputation of
// every column that has a generating rule.

#include "sigidx/rational.hpp"
#include "sigidx/stats.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigidx {

struct Table1Row {
  std::array<std::int64_t, 7> entries;
  std::int64_t t1;
  std::int64_t t2;
  std::int64_t irr;
  std::int64_t sigma;
};

struct Table2Row {
  std::array<std::int64_t, 7> entries;
  std::int64_t n;
  std::int64_t irr;
  std::int64_t sigma;
  const char* lambda;  // as printed
  std::int64_t eta;
  const char* eta1;    // as printed
};

std::span<const Table1Row> table1();
std::span<const Table2Row> table2();

enum class CellStatus { match, mismatch, not_derivable };
std::string_view to_string(CellStatus s);

struct Cell {
  std::size_t row;  // 1-based
  std::string column;
  std::string printed;
  std::optional<std::string> recomputed;
  CellStatus status;
  std::string rule;
  std::string note;
};

struct ReproductionReport {
  int table_id;
  std::vector<Cell> cells;

  std::size_t count(std::string_view column, CellStatus status) const;
  std::vector<const Cell*> column(std::string_view name) const;
};

/// Throws InputError unless table_id is 1 or 2.
ReproductionReport reproduce_table(int table_id);

/// Lemma quantities under the table reading (n = sum, m = n - 1, Δ = d_k).
std::int64_t table_t1(std::span<const std::int64_t> entries);
std::int64_t table_t2(std::span<const std::int64_t> entries);
std::int64_t table_eta(std::span<const std::int64_t> entries);

/// Columns used by the printed correlation matrices:
///   table 1: n, sigma, irr, T1, T2
///   table 2: n, eta, eta1, sigma, irr
std::vector<NamedColumn> correlation_columns(int table_id);
const std::vector<std::vector<double>>& printed_correlation(int table_id);

struct PrintedRegression {
  int table_id;
  std::vector<std::string> features;
  std::vector<std::string> coefficients;
  std::string intercept;
  std::string r_squared;
  std::vector<std::string> query;
  std::string prediction;

  /// Exact dot product of the printed coefficients with the query plus the
  /// printed intercept.
  Rational recomputed_prediction() const;
};

const PrintedRegression& printed_regression(int table_id);

struct RegressionAttempt {
  std::string label;
  OlsResult fit;
  long double prediction;  // at the printed query point
  bool r_squared_matches;  // within 0.02 of the printed R²
};

/// Own fits aimed at the printed regression.
///   table 1: sigma ~ (n, λ) minimum-norm, and sigma ~ (n, λ rounded to 2 places)
///   table 2: sigma ~ (n, irr)
std::vector<RegressionAttempt> regression_attempts(int table_id);

/// x rounded half-up to `places` decimals.
Rational round_decimal(const Rational& x, int places);

std::string table_csv(int table_id);
std::string to_csv(const ReproductionReport& r);
nlohmann::json to_json(const ReproductionReport& r);
nlohmann::json to_json(const RegressionAttempt& a);
nlohmann::json to_json(const PrintedRegression& p);

}  // namespace sigidx
