#pragma once

#include <Eigen/Dense>

namespace sbpins {

/// Stacked nodal fields (u, v, p) over all global nodes, in the block order
/// matching the I3 (x) . structure of the discrete system.
struct StateVector {
  Eigen::Index n_nodes = 0;
  Eigen::VectorXd data;  ///< length 3 * n_nodes

  StateVector() = default;
  explicit StateVector(Eigen::Index n) : n_nodes(n), data(Eigen::VectorXd::Zero(3 * n)) {}
  StateVector(Eigen::Index n, Eigen::VectorXd values) : n_nodes(n), data(std::move(values)) {}

  auto u() { return data.segment(0, n_nodes); }
  auto v() { return data.segment(n_nodes, n_nodes); }
  auto p() { return data.segment(2 * n_nodes, n_nodes); }
  auto u() const { return data.segment(0, n_nodes); }
  auto v() const { return data.segment(n_nodes, n_nodes); }
  auto p() const { return data.segment(2 * n_nodes, n_nodes); }

  bool all_finite() const { return data.allFinite(); }
};

}  // namespace sbpins
