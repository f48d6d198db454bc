#include "sigidx/stats.hpp"

#include "sigidx/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <limits>

namespace sigidx {

namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0;
  long double carry_ = 0;
};

long double to_long_double(const Rational& x) {
  return static_cast<long double>(numerator(x)) / static_cast<long double>(denominator(x));
}

long double mean_of(const std::vector<long double>& v) {
  CompensatedSum s;
  for (auto x : v) s.add(x);
  return s.value() / static_cast<long double>(v.size());
}

}  // namespace

CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns) {
  if (columns.size() < 2) throw DomainError("correlation needs at least 2 columns");
  const std::size_t rows = columns.front().values.size();
  for (const auto& c : columns)
    if (c.values.size() != rows)
      throw DomainError("column '" + c.name + "' has a different length");
  if (rows < 3) throw DomainError("correlation needs at least 3 rows");

  const std::size_t k = columns.size();
  // Centred cross-products, exact: S_xy = Σxy - ΣxΣy/N.
  std::vector<Rational> sums(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& v : columns[i].values) sums[i] += v;
  const Rational count(static_cast<long long>(rows));
  const auto cross = [&](std::size_t i, std::size_t j) {
    Rational s;
    for (std::size_t r = 0; r < rows; ++r) s += columns[i].values[r] * columns[j].values[r];
    return s - sums[i] * sums[j] / count;
  };
  std::vector<Rational> var(k);
  for (std::size_t i = 0; i < k; ++i) var[i] = cross(i, i);

  CorrelationMatrix m;
  for (const auto& c : columns) m.names.push_back(c.name);
  m.values.assign(k, std::vector<std::optional<double>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (var[i] != 0) m.values[i][i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (var[i] == 0 || var[j] == 0) continue;
      const Rational c = cross(i, j);
      const Rational r2 = c * c / (var[i] * var[j]);
      const long double r = std::sqrt(to_long_double(r2));
      const double value = static_cast<double>(c < 0 ? -r : r);
      m.values[i][j] = value;
      m.values[j][i] = value;
    }
  }
  return m;
}

std::vector<MatrixDeviation> compare_matrix(const CorrelationMatrix& computed,
                                            const std::vector<std::vector<double>>& printed,
                                            double tolerance) {
  const std::size_t k = computed.names.size();
  if (printed.size() != k) throw InputError("printed matrix has the wrong size");
  std::vector<MatrixDeviation> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (printed[i].size() != k) throw InputError("printed matrix has the wrong size");
    for (std::size_t j = i; j < k; ++j) {
      const auto& c = computed.values[i][j];
      const double diff = c ? std::fabs(*c - printed[i][j]) : std::numeric_limits<double>::infinity();
      out.push_back({i, j, printed[i][j], c, diff, diff <= tolerance});
    }
  }
  return out;
}

OlsResult ols_fit(const std::vector<NamedColumn>& features, const NamedColumn& target) {
  using Matrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  if (features.empty() || target.values.empty()) throw DomainError("regression input is empty");
  const std::size_t rows = target.values.size();
  const std::size_t cols = features.size();
  for (const auto& f : features)
    if (f.values.size() != rows)
      throw DomainError("feature '" + f.name + "' has a different length than the target");
  if (rows < cols + 1) throw DomainError("regression needs at least features + 1 rows");

  std::vector<long double> y(rows);
  for (std::size_t r = 0; r < rows; ++r) y[r] = to_long_double(target.values[r]);
  const long double y_mean = mean_of(y);

  Matrix x(rows, cols);
  std::vector<long double> x_mean(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<long double> col(rows);
    for (std::size_t r = 0; r < rows; ++r) col[r] = to_long_double(features[c].values[r]);
    x_mean[c] = mean_of(col);
    for (std::size_t r = 0; r < rows; ++r) x(r, c) = col[r] - x_mean[c];
  }
  Vector yc(rows);
  for (std::size_t r = 0; r < rows; ++r) yc(r) = y[r] - y_mean;

  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector beta = svd.solve(yc);

  OlsResult out;
  for (const auto& f : features) out.feature_names.push_back(f.name);
  out.observations = rows;
  out.rank = static_cast<std::size_t>(svd.rank());
  out.rank_deficient = out.rank < cols;
  const auto& sv = svd.singularValues();
  const long double smin = sv(sv.size() - 1);
  out.condition_number = (out.rank_deficient || smin == 0)
                             ? std::numeric_limits<long double>::infinity()
                             : sv(0) / smin;

  CompensatedSum shift;
  for (std::size_t c = 0; c < cols; ++c) {
    out.coefficients.push_back(beta(static_cast<Eigen::Index>(c)));
    shift.add(beta(static_cast<Eigen::Index>(c)) * x_mean[c]);
  }
  out.intercept = y_mean - shift.value();

  CompensatedSum sse;
  CompensatedSum sst;
  const Vector fitted = x * beta;
  for (std::size_t r = 0; r < rows; ++r) {
    const long double e = yc(r) - fitted(r);
    sse.add(e * e);
    sst.add(yc(r) * yc(r));
  }
  if (sst.value() == 0)
    out.r_squared = sse.value() == 0 ? 1 : -std::numeric_limits<long double>::infinity();
  else
    out.r_squared = 1 - sse.value() / sst.value();
  return out;
}

long double predict(const OlsResult& fit, const std::vector<long double>& point) {
  if (point.size() != fit.coefficients.size())
    throw InputError("prediction point has " + std::to_string(point.size()) + " values, expected " +
                     std::to_string(fit.coefficients.size()));
  CompensatedSum s;
  s.add(fit.intercept);
  for (std::size_t i = 0; i < point.size(); ++i) s.add(fit.coefficients[i] * point[i]);
  return s.value();
}

std::string format_decimal(long double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

namespace {

nlohmann::json number(long double x) {
  if (!std::isfinite(x)) return format_decimal(x);
  return std::stod(format_decimal(x));
}

}  // namespace

nlohmann::json to_json(const CorrelationMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.values) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v ? number(*v) : nlohmann::json("undefined"));
    rows.push_back(r);
  }
  return {{"variables", m.names}, {"matrix", rows}};
}

nlohmann::json to_json(const OlsResult& r) {
  nlohmann::json coefs = nlohmann::json::array();
  for (auto c : r.coefficients) coefs.push_back(number(c));
  return {{"features", r.feature_names},
          {"coefficients", coefs},
          {"intercept", number(r.intercept)},
          {"r_squared", number(r.r_squared)},
          {"rank", r.rank},
          {"rank_deficient", r.rank_deficient},
          {"condition_number", number(r.condition_number)},
          {"observations", r.observations}};
}

nlohmann::json to_json(const MatrixDeviation& d) {
  return {{"row", d.row},
          {"col", d.col},
          {"printed", d.printed},
          {"computed", d.computed ? number(*d.computed) : nlohmann::json("undefined")},
          {"abs_diff", number(d.abs_diff)},
          {"within_tolerance", d.within_tolerance}};
}

}  // namespace sigidx
