#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "plcsec/special_math.hpp"

using namespace plcsec;

TEST(QFunction, KnownValues) {
  EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
  EXPECT_NEAR(q_function(1.0), 0.15865525393145705, 1e-15);
  const double tail = q_function(40.0);
  EXPECT_GE(tail, 0.0);
  EXPECT_LT(tail, 1e-300);
}

TEST(QFunction, ComplementAndMonotone) {
  double prev = 2.0;
  for (double t = -8.0; t <= 8.0; t += 0.05) {
    EXPECT_NEAR(q_function(t) + q_function(-t), 1.0, 1e-14) << t;
    EXPECT_LT(q_function(t), prev);
    prev = q_function(t);
  }
}

TEST(QFunction, TailKeepsRelativePrecision) {
  // Mills ratio bound: phi(t)/t * (1 - 1/t^2) < Q(t) < phi(t)/t
  for (double t : {10.0, 20.0, 30.0}) {
    const double upper = normal_pdf(t) / t;
    EXPECT_LT(q_function(t), upper);
    EXPECT_GT(q_function(t), upper * (1 - 1 / (t * t)));
  }
}

TEST(QFunction, RejectsNonFinite) {
  EXPECT_THROW(q_function(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(q_function(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(LogOneMinusQ, MatchesDirectEvaluationAndTail) {
  for (double t = -30.0; t <= 8.0; t += 0.25)
    EXPECT_NEAR(log_one_minus_q(t), std::log(q_function(-t)), 1e-12 * std::max(1.0, std::abs(std::log(q_function(-t)))))
        << t;
  EXPECT_NEAR(log_one_minus_q(10.0), -q_function(10.0), 1e-30);
  // Far tail: log Phi(t) ~ -t^2/2 - log(-t sqrt(2 pi))
  const double t = -60.0;
  EXPECT_NEAR(log_one_minus_q(t), -0.5 * t * t - std::log(-t * std::sqrt(2 * std::numbers::pi)), 1e-3);
  EXPECT_TRUE(std::isfinite(log_one_minus_q(-1e3)));
}

TEST(QApprox, PaperConstants) {
  const QApproxParams k;
  EXPECT_DOUBLE_EQ(q_approx(0.0, k), std::exp(-0.6964));
  EXPECT_DOUBLE_EQ(q_approx(1.0, QApproxParams{0, 0, 0}), 1.0);
  EXPECT_LT(std::abs(q_approx(2.0, k) - q_function(2.0)) / q_function(2.0), 0.05);
  EXPECT_THROW(q_approx(-0.1, k), DomainError);
}

TEST(QApprox, EnvelopeOnGrid) {
  // The fit is tight near the origin and drifts in the tail; the envelope is
  // recorded rather than asserted beyond t = 2.5.
  const QApproxParams k;
  double worst = 0.0, worst_core = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double t = i * 0.01;
    const double q = q_function(t);
    const double a = q_approx(t, k);
    EXPECT_GT(a, 0.0);
    EXPECT_LE(a, 1.0);
    worst = std::max(worst, std::abs(a - q) / q);
    if (t <= 2.5) worst_core = std::max(worst_core, std::abs(a - q) / q);
  }
  RecordProperty("max_relative_error_0_5", std::to_string(worst));
  RecordProperty("max_relative_error_0_2.5", std::to_string(worst_core));
  EXPECT_LT(worst_core, 0.10);
  EXPECT_LT(worst, 1.6);
}

TEST(QApprox, ValidateRejectsBadConstants) {
  EXPECT_THROW((QApproxParams{0.0, 0.7640, 0.6964}.validate()), ConfigError);
  EXPECT_THROW((QApproxParams{0.3842, 0.7640, -0.1}.validate()), ConfigError);
  EXPECT_NO_THROW(QApproxParams{}.validate());
}

TEST(GaussHermite, SmallOrders) {
  const auto one = gauss_hermite_rule(1);
  ASSERT_EQ(one.order(), 1);
  EXPECT_DOUBLE_EQ(one.nodes()[0], 0.0);
  EXPECT_DOUBLE_EQ(one.weights()[0], 1.0);

  const auto five = gauss_hermite_rule(5);
  EXPECT_NEAR(expect_standard_normal([](double t) { return t * t; }, five), 1.0, 1e-12);

  const auto twenty = gauss_hermite_rule(20);
  EXPECT_NEAR(expect_standard_normal([](double t) { return std::pow(t, 8); }, twenty), 105.0, 1e-9);
}

TEST(GaussHermite, RangeChecked) {
  EXPECT_THROW(gauss_hermite_rule(0), ConfigError);
  EXPECT_THROW(gauss_hermite_rule(201), ConfigError);
  EXPECT_NO_THROW(gauss_hermite_rule(200));
}

class GaussHermiteOrder : public ::testing::TestWithParam<int> {};

TEST_P(GaussHermiteOrder, NormalizedSymmetricPositive) {
  const auto rule = gauss_hermite_rule(GetParam());
  double sum = 0.0;
  const int n = rule.order();
  for (int i = 0; i < n; ++i) {
    sum += rule.weights()[i];
    EXPECT_GT(rule.weights()[i], 0.0);
    EXPECT_NEAR(rule.nodes()[i], -rule.nodes()[n - 1 - i], 1e-12);
    EXPECT_NEAR(rule.weights()[i], rule.weights()[n - 1 - i], 1e-12 * rule.weights()[i] + 1e-300);
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST_P(GaussHermiteOrder, ExactForEvenMonomials) {
  const int order = GetParam();
  const auto rule = gauss_hermite_rule(order);
  // Beyond k ~ 60 the moments exceed double range for the tolerance check.
  for (int k = 0; k <= std::min(2 * order - 1, 60); k += 2) {
    const double exact = oracle::normal_moment(k);
    const double got = expect_standard_normal([k](double t) { return std::pow(t, k); }, rule);
    EXPECT_NEAR(got, exact, 1e-9 * exact) << "order " << order << " k " << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, GaussHermiteOrder, ::testing::Values(1, 2, 3, 8, 20, 40, 64, 128, 200));

TEST(ExpectStandardNormal, Identities) {
  const QuadratureRule rule;
  EXPECT_EQ(rule.order(), 64);
  EXPECT_NEAR(expect_standard_normal([](double) { return 1.0; }, rule), 1.0, 1e-13);
  const auto l40 = gauss_hermite_rule(40);
  for (double s : {0.5, 1.0, 2.0})
    for (double m : {-3.0, 0.0, 1.0})
      EXPECT_NEAR(expect_standard_normal([&](double t) { return std::exp(s * t + m); }, l40),
                  std::exp(m + s * s / 2), 1e-8 * std::exp(m + s * s / 2));
  const double oracle = oracle::normal_expectation([](double t) { return std::pow(q_function(-t), 2); });
  EXPECT_NEAR(oracle, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(expect_standard_normal([](double t) { return std::pow(q_function(-t), 2); }, rule), 1.0 / 3.0, 1e-6);
}

TEST(ExpectStandardNormal, NonFiniteNodeReported) {
  const auto rule = gauss_hermite_rule(3);
  try {
    expect_standard_normal([](double t) { return t > 0.5 ? std::numeric_limits<double>::infinity() : t; }, rule);
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("node"), std::string::npos);
  }
}

TEST(SegmentIntegrals, HalfNormal) {
  const auto s = gaussian_segment_integrals(1.0, 0.0);
  EXPECT_DOUBLE_EQ(s.negative, 0.5);
  EXPECT_DOUBLE_EQ(s.positive, 0.5);
  EXPECT_NEAR(s.positive_t, 1 / std::sqrt(2 * std::numbers::pi), 1e-15);
  EXPECT_THROW(gaussian_segment_integrals(0.0, 1.0), DomainError);
  EXPECT_THROW(gaussian_segment_integrals(-1.0, 1.0), DomainError);
}

TEST(SegmentIntegrals, MatchAdaptiveQuadrature) {
  const double inf = std::numeric_limits<double>::infinity();
  for (double a : {0.3, 1.0, 2.0, 5.0})
    for (double b : {-4.0, -1.0, 0.0, 1.0, 3.0}) {
      const auto s = gaussian_segment_integrals(a, b);
      auto g = [&](double t) { return std::exp(-0.5 * (a * t - b) * (a * t - b)) / std::sqrt(2 * std::numbers::pi); };
      EXPECT_NEAR(s.negative, oracle::integrate(g, -inf, 0.0), 1e-10);
      EXPECT_NEAR(s.positive, oracle::integrate(g, 0.0, inf), 1e-10);
      EXPECT_NEAR(s.negative_t, oracle::integrate([&](double t) { return t * g(t); }, -inf, 0.0), 1e-10);
      EXPECT_NEAR(s.positive_t, oracle::integrate([&](double t) { return t * g(t); }, 0.0, inf), 1e-10);
      EXPECT_NEAR(s.negative + s.positive, 1 / a, 1e-12);
      EXPECT_NEAR(s.negative_t + s.positive_t, b / (a * a), 1e-12);
    }
}
