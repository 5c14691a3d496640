#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "plcsec/errors.hpp"

namespace plcsec {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

/// Standard normal density.
inline double normal_pdf(double t) { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

/// Gaussian Q-function (upper tail of the standard normal), evaluated through
/// erfc so that both tails keep full relative precision.
double q_function(double t);

/// ln(1 - Q(t)) = ln Phi(t) without cancellation or underflow, valid for any
/// finite t. Used for (1 - Q)^N factors at large N.
double log_one_minus_q(double t);

/// Fitting constants of Q(t) ~ exp(-(k1 t^2 + k2 t + k3)), t >= 0.
struct QApproxParams {
  double k1 = 0.3842;
  double k2 = 0.7640;
  double k3 = 0.6964;

  /// Throws ConfigError unless k1 > 0 and the exponent is nonnegative on t >= 0.
  void validate() const;

  friend bool operator==(const QApproxParams&, const QApproxParams&) = default;
};

/// Exponential-quadratic approximation of Q(t); t must be >= 0.
double q_approx(double t, const QApproxParams& params);

/// Gauss-Hermite rule normalized to the standard normal density: sum of
/// weights is 1 and sum w_l f(x_l) approximates E[f(Z)].
class QuadratureRule {
 public:
  static constexpr int kMaxOrder = 200;
  static constexpr int kDefaultOrder = 64;

  QuadratureRule() : QuadratureRule(kDefaultOrder) {}
  explicit QuadratureRule(int order);

  int order() const noexcept { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }

  friend bool operator==(const QuadratureRule& a, const QuadratureRule& b) {
    return a.nodes_ == b.nodes_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Builds the probabilists' Gauss-Hermite rule of the given order (1..200).
QuadratureRule gauss_hermite_rule(int order);

namespace detail {
[[noreturn]] void throw_non_finite_node(double node, double value);
}

/// E[f(Z)] for Z ~ N(0,1) via the rule. Throws EvaluationError naming the
/// node if f is not finite there.
template <class F>
double expect_standard_normal(F&& f, const QuadratureRule& rule) {
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  double sum = 0.0;
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    const double v = f(nodes[l]);
    if (!std::isfinite(v)) detail::throw_non_finite_node(nodes[l], v);
    sum += weights[l] * v;
  }
  return sum;
}

/// Closed-form half-line integrals of exp(-(a t - b)^2 / 2) / sqrt(2 pi):
///   negative   = int_{-inf}^0          = Q(b) / a
///   negative_t = int_{-inf}^0 t (...)  = -phi(b) / a^2 + b Q(b) / a^2
///   positive   = int_0^inf             = (1 - Q(b)) / a
///   positive_t = int_0^inf t (...)     =  phi(b) / a^2 + b (1 - Q(b)) / a^2
struct SegmentIntegrals {
  double negative;
  double negative_t;
  double positive;
  double positive_t;
};

SegmentIntegrals gaussian_segment_integrals(double a, double b);

}  // namespace plcsec
