#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sbpins/boundary.hpp"
#include "sbpins/mesh.hpp"
#include "sbpins/sbp_operators.hpp"
#include "sbpins/state_vector.hpp"

namespace sbpins {

/// Volume forcing (f_u, f_v) at a point; the continuity row is never forced.
using ForcingFunc = std::function<std::array<double, 2>(double x, double y, double t)>;

/// Assembled per-segment boundary machinery: restricted boundary mass, the
/// constant outward normal, the normal-derivative operator and its lifted
/// transpose. On a tensor-product rectangle every segment has a constant unit
/// normal, so the rotation to (normal, tangential) components uses plain
/// scalars.
struct BoundarySegmentSpec {
  Segment segment = Segment::north;
  BoundaryKind kind = BoundaryKind::dirichlet_velocity;
  double nx = 0.0, ny = 0.0;
  Eigen::VectorXd restriction;            ///< diag of P^l, zero off-segment
  std::vector<Eigen::Index> nodes;        ///< global indices on the segment
  SparseMat dn;                           ///< nx Dx + ny Dy
  SparseMat dnt_pb;                       ///< Dn^T diag(P^l), the lifted viscous penalty
  SparseMat pb_dn;                        ///< diag(P^l) Dn, used by the outflow condition
  VelocityData data;
};

/// The semi-discrete three-field operator: skew-symmetric advection, viscous
/// terms, SAT boundary penalties, residual, exact Jacobian and energy
/// diagnostics. Immutable after construction; residual/jacobian are pure in
/// (W, t).
class InsSystem {
 public:
  InsSystem(Operators2D ops, Mesh2D mesh, double epsilon,
            std::array<BoundaryCondition, 4> conditions, ForcingFunc forcing = nullptr);

  Eigen::Index n_nodes() const { return ops_.n_nodes(); }
  double epsilon() const { return epsilon_; }
  const Operators2D& ops() const { return ops_; }
  const Mesh2D& mesh() const { return mesh_; }
  const BoundarySegmentSpec& segment(Segment s) const {
    return segments_[static_cast<size_t>(s)];
  }
  /// True when no segment couples pressure into the boundary condition
  /// (all-Dirichlet). The residual then carries a single-node gauge term that
  /// removes the constant-pressure invariance; see pressure_gauge_node().
  bool pressure_gauge_active() const { return gauge_active_; }
  Eigen::Index pressure_gauge_node() const { return 0; }

  /// D(W) W: split-form advection + pressure coupling + viscous Laplacian;
  /// no SAT, no forcing, no gauge.
  StateVector apply_spatial_operator(const StateVector& w) const;

  /// SAT contribution of one segment (the term added to the right-hand side,
  /// before the residual's minus sign).
  StateVector sat_contribution(Segment s, const StateVector& w, double t) const;

  /// D(W)W - SAT(W, t) - F(t), plus the pressure gauge term when active.
  StateVector residual(const StateVector& w, double t) const;

  /// Exact Jacobian of bdf_scale * Itilde W + residual(W, t).
  SparseMat jacobian(const StateVector& w, double t, double bdf_scale) const;

  /// ||W||^2 in the Itilde P norm (pressure block excluded).
  double discrete_energy(const StateVector& w) const;

  /// 2 eps (||Dx W||^2 + ||Dy W||^2) in the Itilde P norm; always >= 0.
  double dissipation(const StateVector& w) const;

  /// P-weighted norm over all three blocks, the paper's stopping metric.
  double p_norm(const Eigen::VectorXd& w3) const;

  /// Freeze the advective coefficients at the given state (Oseen
  /// linearization). The residual becomes affine in W and Newton converges in
  /// one iteration. Pass nullopt to restore the full nonlinear operator.
  void set_frozen_advection(std::optional<StateVector> state);
  bool advection_frozen() const { return frozen_.has_value(); }

 private:
  struct SatWork;
  void sat_accumulate(const BoundarySegmentSpec& seg, const StateVector& w, double t,
                      Eigen::VectorXd& ru, Eigen::VectorXd& rv, Eigen::VectorXd& rp,
                      double sign) const;
  void boundary_data(const BoundarySegmentSpec& seg, double t, Eigen::VectorXd& gn,
                     Eigen::VectorXd& gt) const;

  Operators2D ops_;
  Mesh2D mesh_;
  double epsilon_;
  std::array<BoundarySegmentSpec, 4> segments_;
  ForcingFunc forcing_;
  SparseMat lap_;            ///< Dxx + Dyy
  Eigen::VectorXd inv_mass_;
  bool gauge_active_ = false;
  std::optional<StateVector> frozen_;
};

/// Energy series entry recorded during time marching.
struct EnergyRecord {
  double time = 0.0;
  double energy = 0.0;
  double dissipation = 0.0;
};

struct EnergyRateRow {
  double time = 0.0;
  double energy = 0.0;
  double rate = 0.0;  ///< finite-difference dE/dt
  double dissipation = 0.0;
};

/// Finite-difference energy rate along a stored trajectory. Needs at least
/// two snapshots.
std::vector<EnergyRateRow> energy_rate_report(const InsSystem& sys,
                                              const std::vector<double>& times,
                                              const std::vector<StateVector>& states);

}  // namespace sbpins
