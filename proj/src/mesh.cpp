#include "sbpins/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace sbpins {

std::vector<double> uniform_edges(int n_el, double a, double b) {
  if (n_el < 1) throw std::invalid_argument("uniform_edges: need at least one element");
  if (!(b > a)) throw std::invalid_argument("uniform_edges: interval end must exceed start");
  std::vector<double> edges(static_cast<size_t>(n_el) + 1);
  for (int i = 0; i <= n_el; ++i) {
    edges[static_cast<size_t>(i)] = a + (b - a) * static_cast<double>(i) / n_el;
  }
  edges.front() = a;
  edges.back() = b;
  return edges;
}

std::vector<double> cosine_stretched_edges(int n_points) {
  if (n_points < 2) throw std::invalid_argument("cosine_stretched_edges: need at least 2 points");
  std::vector<double> edges(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    edges[static_cast<size_t>(i)] = (1.0 - std::cos(M_PI * i / (n_points - 1))) / 2.0;
  }
  edges.front() = 0.0;
  edges.back() = 1.0;
  return edges;
}

Eigen::VectorXd map_nodes(const std::vector<double>& edges, const ReferenceElement& ref) {
  if (edges.size() < 2) throw std::invalid_argument("map_nodes: need at least two edges");
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1])) {
      throw std::invalid_argument("map_nodes: edges must be strictly increasing");
    }
  }
  const int k = ref.degree;
  const Eigen::Index n_el = static_cast<Eigen::Index>(edges.size()) - 1;
  Eigen::VectorXd nodes(n_el * k + 1);
  for (Eigen::Index e = 0; e < n_el; ++e) {
    const double xl = edges[static_cast<size_t>(e)];
    const double xr = edges[static_cast<size_t>(e) + 1];
    for (int j = 0; j <= k; ++j) {
      nodes(e * k + j) = 0.5 * (xr - xl) * ref.nodes(j) + 0.5 * (xr + xl);
    }
  }
  // Interface nodes were written twice with identical values; pin endpoints.
  nodes(0) = edges.front();
  nodes(n_el * k) = edges.back();
  return nodes;
}

Mesh2D build_mesh(const std::vector<double>& x_edges, const std::vector<double>& y_edges,
                  const ReferenceElement& ref) {
  Mesh2D mesh;
  mesh.degree = ref.degree;
  mesh.x_edges = x_edges;
  mesh.y_edges = y_edges;
  mesh.x_nodes = map_nodes(x_edges, ref);
  mesh.y_nodes = map_nodes(y_edges, ref);
  return mesh;
}

}  // namespace sbpins
