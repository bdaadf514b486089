#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "corenet/forecast.hpp"

using namespace corenet;

namespace {

std::vector<double> ar1_series(double alpha, double sigma, int n, std::uint64_t seed,
                               double c = 0.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<double> y{0.5};
  for (int t = 1; t < n; ++t) y.push_back(c + alpha * y.back() + noise(rng));
  return y;
}

}  // namespace

TEST_CASE("fit_arima on a constant series") {
  std::vector<double> y(20, 0.5);
  auto m = fit_arima(y, 2, 0, 0);
  CHECK_THAT(predict_next(m, y), Catch::Matchers::WithinAbs(0.5, 1e-9));
  for (double a : m.ar) CHECK_THAT(a, Catch::Matchers::WithinAbs(0.0, 1e-9));
}

TEST_CASE("fit_arima recovers an AR(1) coefficient") {
  auto y = ar1_series(0.7, 0.01, 200, 42, 0.15);
  auto m = fit_arima(y, 1, 0, 0);
  REQUIRE(m.ar.size() == 1);
  CHECK_THAT(m.ar[0], Catch::Matchers::WithinAbs(0.7, 0.1));
}

TEST_CASE("fit_arima AR(p) coefficient recovery within 0.1") {
  // y_t = 0.5 y_{t-1} + 0.3 y_{t-2} + eps
  std::mt19937_64 rng(7);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<double> y{0.5, 0.5};
  for (int t = 2; t < 500; ++t)
    y.push_back(0.1 + 0.5 * y[t - 1] + 0.3 * y[t - 2] + noise(rng));
  auto m = fit_arima(y, 2, 0, 0);
  CHECK_THAT(m.ar[0], Catch::Matchers::WithinAbs(0.5, 0.1));
  CHECK_THAT(m.ar[1], Catch::Matchers::WithinAbs(0.3, 0.1));
}

TEST_CASE("differenced ramp forecasts the next ramp value") {
  std::vector<double> y;
  for (int i = 0; i < 16; ++i) y.push_back(0.05 * i);
  auto m = fit_arima(y, 0, 1, 0);
  CHECK_THAT(predict_next(m, y), Catch::Matchers::WithinAbs(0.8, 1e-6));
}

TEST_CASE("predict_next substitution and clamping") {
  ForecastModel intercept_only;
  intercept_only.intercept = 0.8;
  CHECK(predict_next(intercept_only, {0.1, 0.2}) == 0.8);

  ForecastModel ar1;
  ar1.p = 1;
  ar1.ar = {0.5};
  CHECK_THAT(predict_next(ar1, {0.2, 0.6}), Catch::Matchers::WithinAbs(0.3, 1e-12));

  ForecastModel big;
  big.intercept = 1.3;
  CHECK(predict_next(big, {0.5}) == 1.0);
  big.intercept = -0.4;
  CHECK(predict_next(big, {0.5}) == 0.0);
}

TEST_CASE("select_model") {
  SECTION("white noise forecasts near the sample mean") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.45, 0.55);
    std::vector<double> y;
    for (int i = 0; i < 60; ++i) y.push_back(u(rng));
    double mean = 0;
    for (double x : y) mean += x;
    mean /= y.size();
    auto m = select_model(y);
    CHECK(std::abs(predict_next(m, y) - mean) < 0.05);
  }
  SECTION("AR(1) fixture selects an autoregressive model") {
    auto y = ar1_series(0.7, 0.01, 200, 42, 0.15);
    auto m = select_model(y);
    CHECK(m.p >= 1);
    CHECK(m.d == 0);
  }
  SECTION("constant series forecasts the constant exactly") {
    std::vector<double> y(30, 0.42);
    auto m = select_model(y);
    CHECK_THAT(predict_next(m, y), Catch::Matchers::WithinAbs(0.42, 1e-9));
  }
  SECTION("too-short window is an error") {
    CHECK_THROWS_AS(select_model({0.1, 0.2, 0.3}), std::invalid_argument);
  }
}

TEST_CASE("model class restrictions reuse the same estimator") {
  auto y = ar1_series(0.6, 0.02, 120, 9, 0.2);
  auto ar = select_model(y, ModelClass::ar);
  CHECK(ar.q == 0);
  CHECK(ar.d == 0);
  CHECK(ar.p >= 1);
  auto ma = select_model(y, ModelClass::ma);
  CHECK(ma.p == 0);
  CHECK(ma.q >= 1);
  auto arma = select_model(y, ModelClass::arma);
  CHECK(arma.d == 0);
  // AR(p) == ARIMA(p,0,0) under the same estimator
  auto direct = fit_arima(y, ar.p, 0, 0);
  REQUIRE(direct.ar.size() == ar.ar.size());
  for (std::size_t i = 0; i < ar.ar.size(); ++i)
    CHECK_THAT(ar.ar[i], Catch::Matchers::WithinAbs(direct.ar[i], 1e-12));
}

TEST_CASE("rolling_evaluate") {
  SECTION("constant series has zero error") {
    std::vector<double> y(30, 0.6);
    auto rep = rolling_evaluate(y, 20, false);
    CHECK(rep.mean_error == 0.0);
    CHECK(rep.std_error == 0.0);
    CHECK(rep.skipped_zero == 0);
    CHECK(rep.rows.size() == 10);
  }
  SECTION("zero observations are skipped and counted") {
    std::vector<double> y(30, 0.6);
    y[25] = 0.0;
    auto rep = rolling_evaluate(y, 20, false);
    CHECK(rep.skipped_zero == 1);
  }
  SECTION("series shorter than history is an error") {
    std::vector<double> y(10, 0.5);
    CHECK_THROWS_AS(rolling_evaluate(y, 20, false), std::invalid_argument);
  }
  SECTION("recursive forecasting does not beat non-recursive on AR(1) overlaps") {
    auto y = ar1_series(0.8, 0.03, 60, 21, 0.15);
    for (auto& x : y) x = std::clamp(x, 0.0, 1.0);
    auto plain = rolling_evaluate(y, 20, false);
    auto rec = rolling_evaluate(y, 20, true);
    CHECK(plain.mean_error <= rec.mean_error);
  }
  SECTION("repeat runs are bit-identical") {
    auto y = ar1_series(0.7, 0.02, 45, 5, 0.2);
    auto a = rolling_evaluate(y, 20, false);
    auto b = rolling_evaluate(y, 20, false);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
      CHECK(a.rows[i].predicted == b.rows[i].predicted);
  }
  SECTION("fixed-order evaluation") {
    auto y = ar1_series(0.7, 0.02, 45, 5, 0.2);
    auto rep = rolling_evaluate(y, 20, false, ModelClass::arima,
                                std::array<int, 3>{1, 0, 0});
    CHECK(rep.rows.size() == 25);
  }
}

TEST_CASE("forecasts always stay in [0,1]") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> y;
    for (int i = 0; i < 25; ++i) y.push_back(u(rng));
    auto m = select_model(y);
    double f = predict_next(m, y);
    REQUIRE(f >= 0.0);
    REQUIRE(f <= 1.0);
  }
}
