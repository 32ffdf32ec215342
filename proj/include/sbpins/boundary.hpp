#pragma once

#include <array>
#include <functional>
#include <string>

namespace sbpins {

enum class Segment { north = 0, south = 1, east = 2, west = 3 };

inline constexpr std::array<Segment, 4> kAllSegments = {Segment::north, Segment::south,
                                                        Segment::east, Segment::west};

std::string segment_name(Segment s);

enum class BoundaryKind {
  dirichlet_velocity,  ///< (u_n, u_t) prescribed through the penalty of Proposition 4
  outflow_natural,     ///< p - eps d_n u_n -> 0 and eps d_n u_t -> 0, weakly
};

/// Physical velocity data (u, v) at a boundary point; converted internally to
/// the segment's (normal, tangential) components so that sign conventions of
/// the rotation never leak into case definitions.
using VelocityData = std::function<std::array<double, 2>(double x, double y, double t)>;

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::dirichlet_velocity;
  VelocityData data;  ///< null means homogeneous; ignored for outflow
};

}  // namespace sbpins
