#pragma once

// Trihedron and tetrahedron angle bookkeeping.
//
// A trihedron is described by three dihedral angles theta_i or, equivalently,
// by its three planar (face) angles a_i, where a_i is the face angle opposite
// the edge carrying theta_i. The two sets are the angles and sides of the
// same spherical triangle.

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <vector>

namespace tpsi {

using Angle3 = std::array<double, 3>;
using Vec3 = std::array<double, 3>;
using Vec2 = std::array<double, 2>;

/// a -> cos a_i = (cos t_i + cos t_j cos t_k) / (sin t_j sin t_k).
/// Throws degenerate-trihedron if the triple is not realizable.
Angle3 planar_from_dihedral(const Angle3& theta);

/// Dual relation cos t_i = (cos a_i - cos a_j cos a_k) / (sin a_j sin a_k).
/// Planar-limit inputs land exactly on 0 or pi and are clamped there.
Angle3 dihedral_from_planar(const Angle3& a);

/// beta_0 = pi - (a1+a2+a3)/2, beta_i = (a_j + a_k - a_i)/2. Sums to pi.
std::array<double, 4> excesses(const Angle3& a);

struct Trihedron {
  Angle3 theta{};
  Angle3 a{};
  std::array<double, 4> beta{};

  static Trihedron from_dihedral(const Angle3& theta);
  static Trihedron from_planar(const Angle3& a);

  /// All beta_i > 0 and every a_i in (0, pi).
  bool nondegenerate() const;
};

/// theta_1 + theta_2 + theta_3 == pi within tol.
bool is_static_limit(const Trihedron& t, double tol = 1e-12);
/// a_2 == a_1 + a_3 within tol.
bool is_planar_limit(const Trihedron& t, double tol = 1e-12);

/// Orientation flips: bit k replaces theta_{k+1} by pi - theta_{k+1} before
/// the tetrahedron angles are distributed over the four weights.
using FlipMask = std::bitset<6>;

/// Raw edge dihedral angles enter the weight assignment with theta_4 and
/// theta_5 replaced by their supplements. This is the only one of the 64
/// flip patterns for which the vertex tetrahedron equation closes (see
/// convention_search).
inline const FlipMask kTetrahedronOrientation{0b011000};

/// Six dihedral angles with edge map
///   theta1 (A,B)  theta2 (A,C)  theta3 (A,D)  theta4 (B,C)  theta5 (B,D)  theta6 (C,D).
struct TetrahedronAngles {
  std::array<double, 6> theta{};
  std::optional<std::array<Vec3, 4>> vertices;
};

/// Dihedral angles of the tetrahedron on four points. Throws
/// degenerate-trihedron if the points are (nearly) coplanar.
TetrahedronAngles tetrahedron_from_vertices(const std::array<Vec3, 4>& vertices);

/// Random tetrahedron from four uniform points in [-1,1]^3, resampled until
/// volume, edge lengths and every weight's excesses clear the degeneracy
/// thresholds. Deterministic in the seed; throws sampling-failure after 100
/// rejected draws.
TetrahedronAngles sample_tetrahedron(std::uint64_t seed);

/// The four trihedra
///   (t1, t2, t3), (t1, t4, t5), (pi - t2, t4, t6), (t3, pi - t5, t6)
/// of the weights R, R', R'', R''' after applying `flips` to the angles.
std::array<Trihedron, 4> te_weight_angles(const TetrahedronAngles& t,
                                          FlipMask flips = kTetrahedronOrientation);

/// Trihedra of psi_1, psi_2, psi_3: the last three of te_weight_angles.
std::array<Trihedron, 3> psi_weight_angles(const TetrahedronAngles& t,
                                           FlipMask flips = kTetrahedronOrientation);

/// (a1, a2, a3) -> (a2, pi - a3, pi - a1).
Angle3 psi_arg_swap(const Angle3& a);

// Planar limit: a flattened tetrahedron, i.e. four coplanar points forming a
// convex quadrilateral A, B, C, D (in that cyclic order). Dihedral angles
// degenerate to 0 or pi there, so the weights are built from planar angles.

/// Planar angles of the four oriented trihedra of a convex quadrilateral.
/// Each satisfies a2 = a1 + a3. Throws degenerate-angles if the points are
/// not a strictly convex quadrilateral in the order given.
std::array<Trihedron, 4> planar_weight_angles(const std::array<Vec2, 4>& quad);

/// Perturbed unit square, resampled until every planar angle and every
/// nonzero excess clears the degeneracy threshold. Deterministic in the seed.
std::array<Vec2, 4> sample_planar_quad(std::uint64_t seed);

/// Degeneracy threshold used by both samplers (radians and volume ratio).
inline constexpr double kDegeneracyThreshold = 1e-3;

}  // namespace tpsi

namespace tpsi {

/// Determinant of the Gram matrix G_ij = -cos(angle between faces i, j)
/// (unit diagonal). Vanishes for the dihedral angles of any Euclidean
/// tetrahedron; the six angles have one constraint among them.
double gram_determinant(const TetrahedronAngles& t);

}  // namespace tpsi
