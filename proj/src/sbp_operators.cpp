#include "sbpins/sbp_operators.hpp"

#include <stdexcept>
#include <vector>

namespace sbpins {

Eigen::VectorXd GlobalOperators1D::btilde() const {
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n_nodes);
  b(0) = -1.0;
  b(n_nodes - 1) = 1.0;
  return b;
}

ElementOperators build_element_operators(const ReferenceElement& ref, double element_length) {
  if (!(element_length > 0.0)) {
    throw std::invalid_argument("build_element_operators: element length must be positive");
  }
  ElementOperators ops;
  ops.jacobian = element_length / 2.0;
  ops.mass = ref.weights * ops.jacobian;
  // Q^e(i,j) = w_i * D(i,j): GL quadrature of L_i dL_j/dx, exact at degree 2k-1.
  ops.qx = ref.weights.asDiagonal() * ref.diff_matrix;
  return ops;
}

GlobalOperators1D assemble_global(const std::vector<ElementOperators>& element_ops, int degree) {
  if (element_ops.empty()) {
    throw std::invalid_argument("assemble_global: need at least one element");
  }
  const int k = degree;
  const Eigen::Index n_el = static_cast<Eigen::Index>(element_ops.size());
  const Eigen::Index m = n_el * k + 1;

  GlobalOperators1D g;
  g.degree = k;
  g.n_nodes = m;
  g.mass = Eigen::VectorXd::Zero(m);

  std::vector<Eigen::Triplet<double>> qx_trip;
  qx_trip.reserve(static_cast<size_t>(n_el) * (k + 1) * (k + 1));
  for (Eigen::Index e = 0; e < n_el; ++e) {
    const auto& ops = element_ops[static_cast<size_t>(e)];
    const Eigen::Index base = e * k;
    for (int i = 0; i <= k; ++i) {
      g.mass(base + i) += ops.mass(i);
      for (int j = 0; j <= k; ++j) {
        qx_trip.emplace_back(base + i, base + j, ops.qx(i, j));
      }
    }
  }
  g.qx = SparseMat(m, m);
  g.qx.setFromTriplets(qx_trip.begin(), qx_trip.end());

  // Dx = P^{-1} Qx (P diagonal, entrywise reciprocal).
  const Eigen::VectorXd inv_mass = g.mass.cwiseInverse();
  g.dx = inv_mass.asDiagonal() * g.qx;

  // Qxx = Btilde Dx - Dx^T P Dx, using the global operators directly.
  // Btilde Dx has two nonzero rows: -row 0 of Dx and +row m-1 of Dx.
  SparseMat dxt_p_dx = SparseMat(g.dx.transpose()) * SparseMat(g.mass.asDiagonal() * g.dx);
  const Eigen::RowVectorXd dx_first = Eigen::RowVectorXd(g.dx.row(0));
  const Eigen::RowVectorXd dx_last = Eigen::RowVectorXd(g.dx.row(m - 1));
  std::vector<Eigen::Triplet<double>> qxx_trip;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (dx_first(j) != 0.0) qxx_trip.emplace_back(0, j, -dx_first(j));
    if (dx_last(j) != 0.0) qxx_trip.emplace_back(m - 1, j, dx_last(j));
  }
  SparseMat bt_dx(m, m);
  bt_dx.setFromTriplets(qxx_trip.begin(), qxx_trip.end());
  g.qxx = bt_dx - dxt_p_dx;
  g.qxx.prune(0.0);
  g.dxx = inv_mass.asDiagonal() * g.qxx;
  return g;
}

GlobalOperators1D build_global_operators(const ReferenceElement& ref,
                                         const std::vector<double>& edges) {
  if (edges.size() < 2) {
    throw std::invalid_argument("build_global_operators: need at least two edges");
  }
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1])) {
      throw std::invalid_argument("build_global_operators: edges must be strictly increasing");
    }
  }
  std::vector<ElementOperators> element_ops;
  element_ops.reserve(edges.size() - 1);
  for (size_t e = 0; e + 1 < edges.size(); ++e) {
    element_ops.push_back(build_element_operators(ref, edges[e + 1] - edges[e]));
  }
  return assemble_global(element_ops, ref.degree);
}

SparseMat kron_sparse(const SparseMat& a, const SparseMat& b) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (Eigen::Index ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMat::InnerIterator ia(a, ka); ia; ++ia) {
      for (Eigen::Index kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMat::InnerIterator ib(b, kb); ib; ++ib) {
          trip.emplace_back(ia.row() * b.rows() + ib.row(),
                            ia.col() * b.cols() + ib.col(),
                            ia.value() * ib.value());
        }
      }
    }
  }
  SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

SparseMat sparse_identity(Eigen::Index n) {
  SparseMat id(n, n);
  id.setIdentity();
  return id;
}

Operators2D build_operators_2d(const GlobalOperators1D& gx, const GlobalOperators1D& gy) {
  Operators2D ops;
  ops.m = gx.n_nodes;
  ops.n = gy.n_nodes;
  ops.x_ops = gx;
  ops.y_ops = gy;

  const SparseMat im = sparse_identity(ops.m);
  const SparseMat in = sparse_identity(ops.n);
  ops.dx = kron_sparse(gx.dx, in);
  ops.dy = kron_sparse(im, gy.dx);
  ops.dxx = kron_sparse(gx.dxx, in);
  ops.dyy = kron_sparse(im, gy.dxx);

  ops.mass.resize(ops.m * ops.n);
  for (Eigen::Index ix = 0; ix < ops.m; ++ix) {
    for (Eigen::Index iy = 0; iy < ops.n; ++iy) {
      ops.mass(ix * ops.n + iy) = gx.mass(ix) * gy.mass(iy);
    }
  }
  return ops;
}

double sbp_identity_error(const GlobalOperators1D& g) {
  Eigen::MatrixXd lhs = Eigen::MatrixXd(g.qx) + Eigen::MatrixXd(SparseMat(g.qx.transpose()));
  lhs -= Eigen::MatrixXd(g.btilde().asDiagonal());
  return lhs.cwiseAbs().maxCoeff();
}

double qxx_identity_error(const GlobalOperators1D& g) {
  const Eigen::MatrixXd dx = Eigen::MatrixXd(g.dx);
  Eigen::MatrixXd rhs = g.btilde().asDiagonal() * dx - dx.transpose() * g.mass.asDiagonal() * dx;
  const Eigen::MatrixXd lhs = Eigen::MatrixXd(g.qxx);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace sbpins
