#include "sigidx/errors.hpp"
#include "sigidx/stats.hpp"
#include "sigidx/tables.hpp"

#include <doctest.h>

#include <cmath>

using namespace sigidx;

namespace {

NamedColumn column(std::string name, std::vector<std::int64_t> v) {
  NamedColumn c{std::move(name), {}};
  for (auto x : v) c.values.emplace_back(x);
  return c;
}

}  // namespace

TEST_CASE("embedded tables are stored as printed") {
  REQUIRE(table1().size() == 8);
  REQUIRE(table2().size() == 4);
  CHECK(table1()[0].t2 == 2107);
  CHECK(table1()[7].sigma == 497155);
  CHECK(std::string(table2()[3].lambda) == "28.42");
  CHECK(std::string(table2()[2].eta1) == "1");
  CHECK(table_csv(1).rfind("sequence,T1,T2,irr,sigma\n\"(3,5,7,5,6,8,10)\",160,2107,260,2248\n", 0) == 0);
}

TEST_CASE("first table reproduces") {
  const auto r = reproduce_table(1);
  CHECK(r.count("T1", CellStatus::match) == 8);
  CHECK(r.count("T2", CellStatus::match) == 8);
  CHECK(r.count("sigma", CellStatus::match) == 8);
  CHECK(r.count("irr", CellStatus::not_derivable) == 8);
  CHECK(table_t1(std::vector<std::int64_t>{3, 5, 7, 5, 6, 8, 10}) == 160);
}

TEST_CASE("second table reproduces with the eta deviation reported") {
  const auto r = reproduce_table(2);
  CHECK(r.count("sigma", CellStatus::match) == 4);
  CHECK(r.count("n", CellStatus::match) == 4);
  CHECK(r.count("eta", CellStatus::mismatch) == 4);
  std::vector<std::string> eta;
  for (const auto* c : r.column("eta")) eta.push_back(*c->recomputed);
  CHECK(eta == std::vector<std::string>{"41", "55", "69", "91"});
  const auto lambda = r.column("lambda");
  REQUIRE(lambda.size() == 4);
  CHECK(lambda[0]->status == CellStatus::match);
  CHECK(lambda[1]->status == CellStatus::match);
  CHECK(lambda[2]->status == CellStatus::match);
  // 199/7 = 28.4285..., printed 28.42: off by more than 0.005.
  CHECK(lambda[3]->status == CellStatus::mismatch);
  CHECK(lambda[3]->note.find("truncation") != std::string::npos);
  CHECK(r.column("eta1")[2]->note.find("outside") != std::string::npos);
  CHECK_THROWS_AS(reproduce_table(3), InputError);
}

TEST_CASE("report exports") {
  const auto r = reproduce_table(1);
  const std::string csv = to_csv(r);
  CHECK(csv.rfind("table,row,column,printed,recomputed,status,rule,note\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 32);
  const auto j = to_json(r);
  CHECK(j["cells"].size() == 32);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("correlation basics") {
  const auto m = correlation_matrix({column("x", {1, 2, 3, 4}), column("y", {2, 4, 6, 8}),
                                     column("z", {4, 3, 2, 1}), column("c", {5, 5, 5, 5})});
  CHECK(*m.at(0, 0) == 1.0);
  CHECK(*m.at(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(*m.at(0, 2) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_FALSE(m.at(0, 3).has_value());
  CHECK_FALSE(m.at(3, 3).has_value());
  CHECK_THROWS_AS(correlation_matrix({column("x", {1, 2, 3})}), DomainError);
  CHECK_THROWS_AS(correlation_matrix({column("x", {1, 2}), column("y", {1, 2})}), DomainError);
  CHECK_THROWS_AS(correlation_matrix({column("x", {1, 2, 3}), column("y", {1, 2})}), DomainError);
}

TEST_CASE("correlation matrices of the tables are symmetric with unit diagonal") {
  for (int t : {1, 2}) {
    const auto m = correlation_matrix(correlation_columns(t));
    for (std::size_t i = 0; i < m.names.size(); ++i) {
      CHECK(*m.at(i, i) == 1.0);
      for (std::size_t j = 0; j < m.names.size(); ++j)
        CHECK(std::fabs(*m.at(i, j) - *m.at(j, i)) <= 1e-12);
    }
    const auto dev = compare_matrix(m, printed_correlation(t), 5e-3);
    CHECK(dev.size() == 15);
  }
  const auto m1 = correlation_matrix(correlation_columns(1));
  CHECK(*m1.at(0, 3) >= 0.99999);
}

TEST_CASE("least squares on an exact line") {
  const auto fit = ols_fit({column("x", {1, 2, 3, 4, 5})}, column("y", {3, 5, 7, 9, 11}));
  CHECK(static_cast<double>(fit.coefficients[0]) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(static_cast<double>(fit.intercept) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(static_cast<double>(fit.r_squared) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(fit.rank_deficient);
  CHECK(static_cast<double>(predict(fit, {10})) == doctest::Approx(21.0).epsilon(1e-12));
  CHECK_THROWS_AS(predict(fit, {1, 2}), InputError);
  CHECK_THROWS_AS(ols_fit({}, column("y", {1, 2, 3})), DomainError);
  CHECK_THROWS_AS(ols_fit({column("x", {1})}, column("y", {1})), DomainError);
}

TEST_CASE("two-feature exact plane is recovered") {
  const std::vector<std::int64_t> a{1, 2, 3, 4, 5, 6}, b{3, 1, 4, 1, 5, 9};
  std::vector<std::int64_t> y;
  for (std::size_t i = 0; i < a.size(); ++i) y.push_back(7 * a[i] - 3 * b[i] + 11);
  const auto fit = ols_fit({column("a", a), column("b", b)}, column("y", y));
  CHECK(static_cast<double>(fit.coefficients[0]) == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(static_cast<double>(fit.coefficients[1]) == doctest::Approx(-3.0).epsilon(1e-9));
  CHECK(static_cast<double>(predict(fit, {100, 50})) == doctest::Approx(700 - 150 + 11).epsilon(1e-9));
}

TEST_CASE("collinear designs are flagged") {
  const auto fit = ols_fit({column("x", {1, 2, 3, 4}), column("2x", {2, 4, 6, 8})},
                           column("y", {1, 3, 2, 5}));
  CHECK(fit.rank == 1);
  CHECK(fit.rank_deficient);
  CHECK(std::isinf(fit.condition_number));
  // Minimum-norm: coefficients proportional to (1, 2).
  CHECK(static_cast<double>(fit.coefficients[1]) ==
        doctest::Approx(2 * static_cast<double>(fit.coefficients[0])).epsilon(1e-9));
}

TEST_CASE("printed regression predictions") {
  CHECK(std::fabs(to_double(printed_regression(1).recomputed_prediction()) + 32304623.28) <= 0.01);
  CHECK(std::fabs(to_double(printed_regression(2).recomputed_prediction()) + 492960.53) <= 1.0);
}

TEST_CASE("regression attempts report fit quality") {
  const auto t1 = regression_attempts(1);
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].fit.rank_deficient);
  CHECK_FALSE(t1[1].fit.rank_deficient);
  CHECK(std::isfinite(static_cast<double>(t1[1].fit.condition_number)));
  for (const auto& a : t1) CHECK(a.fit.r_squared <= 1);

  const auto t2 = regression_attempts(2);
  REQUIRE(t2.size() == 1);
  CHECK(static_cast<double>(t2[0].fit.intercept) == doctest::Approx(53643.804983904585).epsilon(1e-9));
  CHECK(static_cast<double>(t2[0].fit.r_squared) == doctest::Approx(0.9997469414194662).epsilon(1e-12));
  CHECK(static_cast<double>(t2[0].fit.coefficients[0]) == doctest::Approx(-1402.91893491).epsilon(1e-9));
  CHECK(t2[0].r_squared_matches);
}

TEST_CASE("decimal rounding helper") {
  CHECK(round_decimal(Rational(199, 7), 2) == Rational(2843, 100));
  CHECK(round_decimal(Rational(1, 8), 2) == Rational(13, 100));
  CHECK(format_decimal(1.0L / 3) == "0.333333333333");
}
