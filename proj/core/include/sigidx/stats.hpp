#pragma once

// Pearson correlation and ordinary least squares, sized for the handful of
// rows in the published tables.

#include "sigidx/rational.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sigidx {

struct NamedColumn {
  std::string name;
  std::vector<Rational> values;
};

/// Symmetric with an exact unit diagonal. An entry is empty when either
/// column has zero variance.
struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<double>>> values;

  const std::optional<double>& at(std::size_t i, std::size_t j) const { return values[i][j]; }
};

/// Sums are exact; the only rounding is the final square root per entry.
/// Requires >= 2 columns of equal length >= 3.
CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns);

struct MatrixDeviation {
  std::size_t row;
  std::size_t col;
  double printed;
  std::optional<double> computed;
  double abs_diff;  // infinity when computed is undefined
  bool within_tolerance;
};

/// Upper-triangle comparison (diagonal included) against a printed matrix.
std::vector<MatrixDeviation> compare_matrix(const CorrelationMatrix& computed,
                                            const std::vector<std::vector<double>>& printed,
                                            double tolerance);

struct OlsResult {
  std::vector<std::string> feature_names;
  std::vector<long double> coefficients;
  long double intercept = 0;
  long double r_squared = 0;
  std::size_t rank = 0;
  bool rank_deficient = false;
  /// Ratio of extreme singular values of the centred design; infinite when
  /// rank deficient.
  long double condition_number = 0;
  std::size_t observations = 0;
};

/// Fits target ~ features (one vector per feature) with column centring.
/// Rank-deficient designs get the minimum-norm solution and are flagged.
OlsResult ols_fit(const std::vector<NamedColumn>& features, const NamedColumn& target);

long double predict(const OlsResult& fit, const std::vector<long double>& point);

/// 12 significant digits.
std::string format_decimal(long double x);

nlohmann::json to_json(const CorrelationMatrix& m);
nlohmann::json to_json(const OlsResult& r);
nlohmann::json to_json(const MatrixDeviation& d);

}  // namespace sigidx
