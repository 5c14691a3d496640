#include "plcsec/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace plcsec {

double q_function(double t) {
  if (!std::isfinite(t)) throw DomainError("q_function: argument must be finite");
  return 0.5 * std::erfc(t / std::numbers::sqrt2);
}

double log_one_minus_q(double t) {
  if (!std::isfinite(t)) throw DomainError("log_one_minus_q: argument must be finite");
  if (t > -1.0) return std::log1p(-q_function(t));
  if (t > -37.0) return std::log(q_function(-t));
  // Mills-ratio expansion once Q(-t) underflows.
  const double inv2 = 1.0 / (t * t);
  const double series = 1.0 - inv2 * (1.0 - 3.0 * inv2 * (1.0 - 5.0 * inv2));
  return -0.5 * t * t - std::log(-t) + std::log(kInvSqrt2Pi) + std::log(series);
}

void QApproxParams::validate() const {
  if (!(std::isfinite(k1) && std::isfinite(k2) && std::isfinite(k3)))
    throw ConfigError("constants must be finite", "q_approx");
  if (!(k1 > 0.0)) throw ConfigError("k1 must be positive", "q_approx.k1");
  // k1 t^2 + k2 t + k3 >= 0 on t >= 0 keeps the approximation inside (0, 1].
  if (k3 < 0.0) throw ConfigError("k3 must be nonnegative", "q_approx.k3");
  if (k2 < 0.0 && k2 * k2 > 4.0 * k1 * k3)
    throw ConfigError("exponent becomes negative for some t >= 0", "q_approx.k2");
}

double q_approx(double t, const QApproxParams& params) {
  if (!(t >= 0.0)) throw DomainError("q_approx: defined for t >= 0 only");
  return std::exp(-(params.k1 * t * t + params.k2 * t + params.k3));
}

namespace {

struct OrthonormalHermite {
  double value;       // p_L(x)
  double previous;    // p_{L-1}(x)
  double sum_square;  // sum_{k<L} p_k(x)^2
};

// Orthonormal probabilists' Hermite polynomials p_k = He_k / sqrt(k!).
OrthonormalHermite evaluate_hermite(int order, double x) {
  double prev = 0.0;
  double cur = 1.0;
  double sum_sq = 0.0;
  for (int k = 0; k < order; ++k) {
    sum_sq += cur * cur;
    const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) /
                        std::sqrt(static_cast<double>(k + 1));
    prev = cur;
    cur = next;
  }
  return {cur, prev, sum_sq};
}

}  // namespace

QuadratureRule::QuadratureRule(int order) {
  if (order < 1 || order > kMaxOrder)
    throw ConfigError("Gauss-Hermite order must lie in [1, 200], got " + std::to_string(order),
                      "quad_order");

  // Golub-Welsch: the nodes are the eigenvalues of the Jacobi matrix of the
  // orthonormal recurrence (zero diagonal, off-diagonal sqrt(k)).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 1; k < order; ++k) sub[k - 1] = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& guess = solver.eigenvalues();

  nodes_.assign(order, 0.0);
  weights_.assign(order, 0.0);
  const double sqrt_order = std::sqrt(static_cast<double>(order));

  // Polish the nonnegative half with Newton and mirror, so the rule is
  // exactly symmetric; weights come from the Christoffel function, which
  // keeps full relative accuracy in the tails.
  const int half = order / 2;
  for (int i = 0; i < (order + 1) / 2; ++i) {
    const int idx = order - 1 - i;
    double x = (order % 2 == 1 && i == half) ? 0.0 : guess[idx];
    if (x != 0.0) {
      for (int iter = 0; iter < 50; ++iter) {
        const auto h = evaluate_hermite(order, x);
        const double step = h.value / (sqrt_order * h.previous);
        x -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
      }
    }
    const double w = 1.0 / evaluate_hermite(order, x).sum_square;
    nodes_[idx] = x;
    weights_[idx] = w;
    nodes_[order - 1 - idx] = -x;
    weights_[order - 1 - idx] = w;
  }
}

QuadratureRule gauss_hermite_rule(int order) { return QuadratureRule(order); }

namespace detail {
void throw_non_finite_node(double node, double value) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrand is not finite (" << value << ") at quadrature node " << node;
  throw EvaluationError(msg.str());
}
}  // namespace detail

SegmentIntegrals gaussian_segment_integrals(double a, double b) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("gaussian_segment_integrals: a must be > 0");
  if (!std::isfinite(b)) throw DomainError("gaussian_segment_integrals: b must be finite");
  const double q = q_function(b);
  const double p = q_function(-b);  // 1 - Q(b) without cancellation
  const double dens = normal_pdf(b);
  const double a2 = a * a;
  return {q / a, (-dens + b * q) / a2, p / a, (dens + b * p) / a2};
}

}  // namespace plcsec
