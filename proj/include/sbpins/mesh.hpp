#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sbpins/reference_element.hpp"

namespace sbpins {

/// Tensor-product mesh with globally continuous GL nodes. Interior nodes of
/// each element are the affinely mapped reference GL points; interface nodes
/// are shared between neighbours.
struct Mesh2D {
  int degree = 0;
  std::vector<double> x_edges, y_edges;
  Eigen::VectorXd x_nodes, y_nodes;  ///< sizes M = M_el*k + 1, N = N_el*k + 1

  Eigen::Index n_x() const { return x_nodes.size(); }
  Eigen::Index n_y() const { return y_nodes.size(); }
  double x_min() const { return x_edges.front(); }
  double x_max() const { return x_edges.back(); }
  double y_min() const { return y_edges.front(); }
  double y_max() const { return y_edges.back(); }
};

/// n_el + 1 equispaced edges spanning [a, b].
std::vector<double> uniform_edges(int n_el, double a, double b);

/// edges[i] = (1 - cos(pi i / (n-1))) / 2 on [0, 1]; clusters points near both
/// ends. n_points counts edge points (elements + 1).
std::vector<double> cosine_stretched_edges(int n_points);

/// Global node coordinates from edges and the reference element; x_local =
/// (x_R - x_L)/2 xi + (x_R + x_L)/2 per element, shared interface nodes stored
/// once.
Eigen::VectorXd map_nodes(const std::vector<double>& edges, const ReferenceElement& ref);

Mesh2D build_mesh(const std::vector<double>& x_edges, const std::vector<double>& y_edges,
                  const ReferenceElement& ref);

}  // namespace sbpins
