#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "sbpins/reference_element.hpp"

namespace sbpins {

using SparseMat = Eigen::SparseMatrix<double>;

/// Element mass matrix and weak first derivative on one element of physical
/// length 2|J|. The mass is diagonal (GL collocation); Q_x is independent of
/// the element length because the Jacobian factors in d/dx and dx cancel.
struct ElementOperators {
  Eigen::VectorXd mass;  ///< diagonal of P^e = |J| diag(w)
  Eigen::MatrixXd qx;    ///< Q^e, satisfies Q + Q^T = diag(-1, 0, ..., 0, 1)
  double jacobian = 0.0; ///< |J| = element length / 2
};

/// Assembled 1D operators over all elements of one direction. Interface nodes
/// are shared, so n_nodes = n_elements * degree + 1.
struct GlobalOperators1D {
  int degree = 0;
  Eigen::Index n_nodes = 0;
  Eigen::VectorXd mass;  ///< diagonal of P
  SparseMat qx;          ///< weak first derivative, Qx + Qx^T = Btilde
  SparseMat dx;          ///< strong form, P^{-1} Qx
  SparseMat qxx;         ///< Btilde Dx - Dx^T P Dx
  SparseMat dxx;         ///< P^{-1} Qxx

  /// Btilde as a diagonal vector: -1 at the first node, +1 at the last.
  Eigen::VectorXd btilde() const;
};

/// Tensor-product 2D operators on M x N nodes. The flattened node index is
/// x-major: g = ix * N + iy, matching the Kronecker convention P = Px (x) Py.
/// All downstream block operators assume this ordering.
struct Operators2D {
  Eigen::Index m = 0;  ///< nodes in x
  Eigen::Index n = 0;  ///< nodes in y
  Eigen::VectorXd mass;  ///< diagonal of P = Px (x) Py, length m*n
  SparseMat dx, dy;      ///< strong first derivatives
  SparseMat dxx, dyy;    ///< strong second derivatives
  GlobalOperators1D x_ops, y_ops;

  Eigen::Index n_nodes() const { return m * n; }
  Eigen::Index node_index(Eigen::Index ix, Eigen::Index iy) const { return ix * n + iy; }
};

ElementOperators build_element_operators(const ReferenceElement& ref, double element_length);

/// Assemble global P and Qx from per-element operators (interface entries
/// summed), then derive Dx, Qxx, Dxx. Requires at least one element.
GlobalOperators1D assemble_global(const std::vector<ElementOperators>& element_ops, int degree);

/// Element build + assembly over the given physical edges. Non-uniform edges
/// enter only through the per-element |J| in the mass matrix, which is the
/// affine-map construction used on stretched grids.
GlobalOperators1D build_global_operators(const ReferenceElement& ref,
                                         const std::vector<double>& edges);

Operators2D build_operators_2d(const GlobalOperators1D& gx, const GlobalOperators1D& gy);

/// Kronecker product of sparse matrices, row index = i_a * B.rows() + i_b.
SparseMat kron_sparse(const SparseMat& a, const SparseMat& b);
SparseMat sparse_identity(Eigen::Index n);

/// max-norm of Qx + Qx^T - Btilde; zero (to roundoff) for a valid SBP operator.
double sbp_identity_error(const GlobalOperators1D& g);

/// max-norm of Qxx - (Btilde Dx - Dx^T P Dx).
double qxx_identity_error(const GlobalOperators1D& g);

}  // namespace sbpins
