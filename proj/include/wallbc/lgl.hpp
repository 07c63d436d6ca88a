#pragma once

// Legendre-Gauss-Lobatto nodes, weights and the collocation derivative
// matrix on [-1, 1]. With M = diag(weights) the pair satisfies the
// summation-by-parts property M D + (M D)^T = diag(-1, 0, ..., 0, 1).

#include <vector>

#include <Eigen/Core>

namespace wallbc::dg {

struct LglRule {
  std::vector<double> nodes;    ///< ascending, nodes[0] = -1, nodes[N] = 1
  std::vector<double> weights;
};

/// Legendre polynomial P_N and its derivative at x.
void legendre_and_derivative(int N, double x, double& value, double& derivative);

/// N + 1 LGL points for polynomial degree N >= 1.
LglRule lgl_nodes_weights(int N);

/// D(i, j) = l_j'(x_i) for the Lagrange basis on the LGL nodes.
Eigen::MatrixXd derivative_matrix(int N);
Eigen::MatrixXd derivative_matrix(const std::vector<double>& nodes);

/// max |M D + D^T M - B|.
double sbp_residual(int N);

}  // namespace wallbc::dg
