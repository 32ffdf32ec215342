#pragma once

#include <Eigen/Dense>
#include <utility>

namespace sbpins {

/// Gauss-Lobatto collocation data for the Lagrange basis of degree k on the
/// reference interval [-1, 1]. Nodes include both endpoints; collocating the
/// basis at the quadrature points makes the mass matrix diagonal.
struct ReferenceElement {
  int degree = 0;
  Eigen::VectorXd nodes;        ///< k+1 nodes, strictly increasing, nodes(0) = -1, nodes(k) = +1
  Eigen::VectorXd weights;      ///< k+1 positive quadrature weights, sum = 2
  Eigen::MatrixXd diff_matrix;  ///< (i,j) = dL_j/dxi evaluated at node i

  static ReferenceElement create(int degree);
};

inline constexpr int kMinDegree = 1;
inline constexpr int kMaxDegree = 8;

/// Gauss-Lobatto nodes and weights for degree k (k+1 points on [-1, 1]).
/// Interior nodes are the roots of P_k', located by Newton iteration;
/// weights come from the closed form 2 / (k (k+1) P_k(x)^2).
/// Throws std::invalid_argument outside 1 <= k <= 8.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gl_nodes_weights(int degree);

/// Differentiation matrix of the Lagrange basis on the given nodes, built from
/// barycentric weights. Diagonal uses the negative-sum trick so rows sum to
/// zero exactly. Throws on non-increasing nodes.
Eigen::MatrixXd lagrange_diff_matrix(const Eigen::VectorXd& nodes);

/// L_j(xi) with the cardinal property L_j(x_i) = delta_ij. xi must lie in
/// [-1, 1]; no extrapolation.
double lagrange_eval(const Eigen::VectorXd& nodes, int j, double xi);

/// All basis values at xi as a vector (row of the interpolation operator).
Eigen::VectorXd lagrange_eval_all(const Eigen::VectorXd& nodes, double xi);

}  // namespace sbpins
