#include "wallbc/lgl.hpp"

#include <cmath>
#include <numbers>

#include "wallbc/errors.hpp"

namespace wallbc::dg {

void legendre_and_derivative(int N, double x, double& value, double& derivative) {
  if (N == 0) {
    value = 1.0;
    derivative = 0.0;
    return;
  }
  double p_prev = 1.0, p = x;
  double dp_prev = 0.0, dp = 1.0;
  for (int k = 2; k <= N; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    const double dp_next = dp_prev + (2.0 * k - 1.0) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  value = p;
  derivative = dp;
}

LglRule lgl_nodes_weights(int N) {
  if (N < 1) throw Error(ErrorCode::InvalidConfig, "LGL rule needs polynomial degree N >= 1");
  LglRule rule;
  rule.nodes.assign(N + 1, 0.0);
  rule.weights.assign(N + 1, 0.0);
  rule.nodes[0] = -1.0;
  rule.nodes[N] = 1.0;

  // Interior nodes are the roots of P_N'; Newton from Chebyshev-Lobatto guesses.
  // (1 - x^2) P_N'' = 2 x P_N' - N (N + 1) P_N supplies the second derivative.
  // For even N the middle node stays at exactly 0.
  for (int j = 1; j < N - j; ++j) {
    double x = -std::cos(std::numbers::pi * j / N);
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre_and_derivative(N, x, p, dp);
      const double ddp = (2.0 * x * dp - N * (N + 1.0) * p) / (1.0 - x * x);
      const double step = dp / ddp;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[j] = x;
    rule.nodes[N - j] = -x;
  }
  for (int j = 0; j <= N; ++j) {
    double p, dp;
    legendre_and_derivative(N, rule.nodes[j], p, dp);
    rule.weights[j] = 2.0 / (N * (N + 1.0) * p * p);
  }
  return rule;
}

Eigen::MatrixXd derivative_matrix(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> bary(n, 1.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k != j) bary[j] *= x[j] - x[k];
    }
    bary[j] = 1.0 / bary[j];
  }
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      D(i, j) = bary[j] / bary[i] / (x[i] - x[j]);
      diag -= D(i, j);
    }
    D(i, i) = diag;  // rows annihilate constants exactly
  }
  return D;
}

Eigen::MatrixXd derivative_matrix(int N) {
  return derivative_matrix(lgl_nodes_weights(N).nodes);
}

double sbp_residual(int N) {
  const LglRule rule = lgl_nodes_weights(N);
  const Eigen::MatrixXd D = derivative_matrix(rule.nodes);
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), N + 1);
  const Eigen::MatrixXd Q = w.asDiagonal() * D;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N + 1, N + 1);
  B(0, 0) = -1.0;
  B(N, N) = 1.0;
  return (Q + Q.transpose() - B).cwiseAbs().maxCoeff();
}

}  // namespace wallbc::dg
