#include "sbpins/reference_element.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sbpins {

namespace {

// P_k(x) and P_k'(x) by the three-term recurrence.
std::pair<double, double> legendre(int k, double x) {
  if (k == 0) return {1.0, 0.0};
  double pm = 1.0, p = x;
  for (int n = 1; n < k; ++n) {
    const double pn = ((2.0 * n + 1.0) * x * p - n * pm) / (n + 1.0);
    pm = p;
    p = pn;
  }
  const double denom = x * x - 1.0;
  const double dp = (std::abs(denom) > 1e-300) ? k * (x * p - pm) / denom : 0.0;
  return {p, dp};
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gl_nodes_weights(int degree) {
  if (degree < kMinDegree || degree > kMaxDegree) {
    throw std::invalid_argument("gl_nodes_weights: degree " + std::to_string(degree) +
                                " outside supported range [" + std::to_string(kMinDegree) +
                                ", " + std::to_string(kMaxDegree) + "]");
  }
  const int k = degree;
  const int n = k + 1;
  Eigen::VectorXd nodes(n);
  nodes(0) = -1.0;
  nodes(k) = 1.0;

  // Interior nodes: roots of P_k', Newton iteration from Chebyshev-Lobatto
  // guesses. P_k'' from (1 - x^2) P_k'' = 2 x P_k' - k (k+1) P_k.
  for (int i = 1; i < k; ++i) {
    double x = std::cos(M_PI * static_cast<double>(k - i) / k);
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pk, dpk] = legendre(k, x);
      const double ddpk = (2.0 * x * dpk - k * (k + 1.0) * pk) / (1.0 - x * x);
      const double dx = -dpk / ddpk;
      x += dx;
      if (std::abs(dx) < 1e-14) break;
    }
    nodes(i) = x;
  }
  // Enforce exact symmetry about the origin.
  for (int i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (nodes(i) - nodes(n - 1 - i));
    nodes(i) = a;
    nodes(n - 1 - i) = -a;
  }
  if (n % 2 == 1) nodes(n / 2) = 0.0;

  Eigen::VectorXd weights(n);
  for (int i = 0; i < n; ++i) {
    const auto [pk, dpk] = legendre(k, nodes(i));
    weights(i) = 2.0 / (k * (k + 1.0) * pk * pk);
  }
  return {nodes, weights};
}

Eigen::MatrixXd lagrange_diff_matrix(const Eigen::VectorXd& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n < 2) throw std::invalid_argument("lagrange_diff_matrix: need at least 2 nodes");
  for (int i = 0; i + 1 < n; ++i) {
    if (!(nodes(i) < nodes(i + 1))) {
      throw std::invalid_argument("lagrange_diff_matrix: nodes must be strictly increasing");
    }
  }
  Eigen::VectorXd bw = Eigen::VectorXd::Ones(n);  // barycentric weights
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m < n; ++m) {
      if (m != j) bw(j) /= (nodes(j) - nodes(m));
    }
  }
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      D(i, j) = (bw(j) / bw(i)) / (nodes(i) - nodes(j));
      rowsum += D(i, j);
    }
    D(i, i) = -rowsum;  // rows annihilate constants exactly
  }
  return D;
}

double lagrange_eval(const Eigen::VectorXd& nodes, int j, double xi) {
  const int n = static_cast<int>(nodes.size());
  if (j < 0 || j >= n) throw std::invalid_argument("lagrange_eval: basis index out of range");
  if (xi < -1.0 - 1e-12 || xi > 1.0 + 1e-12) {
    throw std::invalid_argument("lagrange_eval: xi outside [-1, 1], no extrapolation");
  }
  double value = 1.0;
  for (int m = 0; m < n; ++m) {
    if (m != j) value *= (xi - nodes(m)) / (nodes(j) - nodes(m));
  }
  return value;
}

Eigen::VectorXd lagrange_eval_all(const Eigen::VectorXd& nodes, double xi) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd values(n);
  for (int j = 0; j < n; ++j) values(j) = lagrange_eval(nodes, j, xi);
  return values;
}

ReferenceElement ReferenceElement::create(int degree) {
  ReferenceElement elem;
  elem.degree = degree;
  std::tie(elem.nodes, elem.weights) = gl_nodes_weights(degree);
  elem.diff_matrix = lagrange_diff_matrix(elem.nodes);
  return elem;
}

}  // namespace sbpins
