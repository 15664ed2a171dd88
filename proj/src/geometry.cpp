#include "tpsi/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tpsi/error.hpp"
#include "tpsi/random.hpp"

namespace tpsi {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 sub(const Vec3& p, const Vec3& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2]}; }
double dot(const Vec3& p, const Vec3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; }
double norm(const Vec3& p) { return std::sqrt(dot(p, p)); }
Vec3 cross(const Vec3& p, const Vec3& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

// Interior dihedral angle along edge (p, q) of the tetrahedron whose other
// two vertices are r and s.
double edge_dihedral(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s) {
  Vec3 u = sub(q, p);
  const double len = norm(u);
  for (auto& c : u) c /= len;
  auto project = [&](const Vec3& v) {
    Vec3 w = sub(v, p);
    const double along = dot(w, u);
    for (int i = 0; i < 3; ++i) w[i] -= along * u[i];
    return w;
  };
  const Vec3 wr = project(r), ws = project(s);
  return std::acos(std::clamp(dot(wr, ws) / (norm(wr) * norm(ws)), -1.0, 1.0));
}

double corner_angle(const Vec2& v, const Vec2& p, const Vec2& q) {
  const double ux = p[0] - v[0], uy = p[1] - v[1];
  const double wx = q[0] - v[0], wy = q[1] - v[1];
  return std::atan2(std::abs(ux * wy - uy * wx), ux * wx + uy * wy);
}

bool excesses_clear(const Trihedron& t, double threshold, bool allow_zero_beta2) {
  for (int i = 0; i < 4; ++i) {
    if (allow_zero_beta2 && i == 2) continue;
    if (!(t.beta[i] >= threshold)) return false;
  }
  return true;
}

}  // namespace

Angle3 planar_from_dihedral(const Angle3& theta) {
  Angle3 a{};
  for (int i = 0; i < 3; ++i) {
    if (!(theta[i] > 0.0 && theta[i] < kPi)) {
      throw Error(ErrorCode::degenerate_trihedron, "dihedral angle outside (0, pi)");
    }
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double c = (std::cos(theta[i]) + std::cos(theta[j]) * std::cos(theta[k])) /
                     (std::sin(theta[j]) * std::sin(theta[k]));
    if (!(std::abs(c) < 1.0)) {
      throw Error(ErrorCode::degenerate_trihedron,
                  "dihedral triple is not realizable (cos a_" + std::to_string(i + 1) + " = " +
                      std::to_string(c) + ")");
    }
    a[i] = std::acos(c);
  }
  return a;
}

Angle3 dihedral_from_planar(const Angle3& a) {
  Angle3 theta{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double den = std::sin(a[j]) * std::sin(a[k]);
    if (!(den > 0.0)) throw Error(ErrorCode::degenerate_trihedron, "planar angle outside (0, pi)");
    const double c = (std::cos(a[i]) - std::cos(a[j]) * std::cos(a[k])) / den;
    if (std::abs(c) > 1.0 + 1e-9) {
      throw Error(ErrorCode::degenerate_trihedron, "planar triple violates the triangle inequality");
    }
    theta[i] = std::acos(std::clamp(c, -1.0, 1.0));
  }
  return theta;
}

std::array<double, 4> excesses(const Angle3& a) {
  return {kPi - (a[0] + a[1] + a[2]) / 2, (a[1] + a[2] - a[0]) / 2, (a[0] + a[2] - a[1]) / 2,
          (a[0] + a[1] - a[2]) / 2};
}

Trihedron Trihedron::from_dihedral(const Angle3& theta) {
  Trihedron t;
  t.theta = theta;
  t.a = planar_from_dihedral(theta);
  t.beta = excesses(t.a);
  return t;
}

Trihedron Trihedron::from_planar(const Angle3& a) {
  Trihedron t;
  t.a = a;
  t.theta = dihedral_from_planar(a);
  t.beta = excesses(a);
  return t;
}

bool Trihedron::nondegenerate() const {
  for (double x : a)
    if (!(x > 0.0 && x < kPi)) return false;
  for (double b : beta)
    if (!(b > 0.0)) return false;
  return true;
}

bool is_static_limit(const Trihedron& t, double tol) {
  return std::abs(t.theta[0] + t.theta[1] + t.theta[2] - kPi) <= tol;
}

bool is_planar_limit(const Trihedron& t, double tol) {
  return std::abs(t.a[1] - t.a[0] - t.a[2]) <= tol;
}

TetrahedronAngles tetrahedron_from_vertices(const std::array<Vec3, 4>& v) {
  const auto& [A, B, C, D] = v;
  double diameter = 0.0, shortest = INFINITY;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double d = norm(sub(v[i], v[j]));
      diameter = std::max(diameter, d);
      shortest = std::min(shortest, d);
    }
  const double volume = std::abs(dot(sub(B, A), cross(sub(C, A), sub(D, A)))) / 6.0;
  if (!(diameter > 0.0) || shortest < kDegeneracyThreshold * diameter ||
      volume < kDegeneracyThreshold * diameter * diameter * diameter) {
    throw Error(ErrorCode::degenerate_trihedron, "tetrahedron vertices are (nearly) coplanar");
  }
  TetrahedronAngles t;
  t.theta = {edge_dihedral(A, B, C, D), edge_dihedral(A, C, B, D), edge_dihedral(A, D, B, C),
             edge_dihedral(B, C, A, D), edge_dihedral(B, D, A, C), edge_dihedral(C, D, A, B)};
  t.vertices = v;
  return t;
}

TetrahedronAngles sample_tetrahedron(std::uint64_t seed) {
  const CounterRng rng(seed);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::array<Vec3, 4> v{};
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 3; ++c) v[i][c] = rng.uniform(attempt, 3 * i + c, -1.0, 1.0);
    try {
      TetrahedronAngles t = tetrahedron_from_vertices(v);
      const auto weights = te_weight_angles(t);
      if (std::all_of(weights.begin(), weights.end(), [](const Trihedron& w) {
            return excesses_clear(w, kDegeneracyThreshold, false);
          })) {
        return t;
      }
    } catch (const Error&) {
      // resample
    }
  }
  throw Error(ErrorCode::sampling_failure, "no nondegenerate tetrahedron after 100 draws");
}

std::array<Trihedron, 4> te_weight_angles(const TetrahedronAngles& t, FlipMask flips) {
  std::array<double, 6> th = t.theta;
  for (int k = 0; k < 6; ++k)
    if (flips.test(k)) th[k] = kPi - th[k];
  return {Trihedron::from_dihedral({th[0], th[1], th[2]}),
          Trihedron::from_dihedral({th[0], th[3], th[4]}),
          Trihedron::from_dihedral({kPi - th[1], th[3], th[5]}),
          Trihedron::from_dihedral({th[2], kPi - th[4], th[5]})};
}

std::array<Trihedron, 3> psi_weight_angles(const TetrahedronAngles& t, FlipMask flips) {
  const auto all = te_weight_angles(t, flips);
  return {all[1], all[2], all[3]};
}

Angle3 psi_arg_swap(const Angle3& a) { return {a[1], kPi - a[2], kPi - a[0]}; }

std::array<Trihedron, 4> planar_weight_angles(const std::array<Vec2, 4>& q) {
  enum { A, B, C, D };
  auto ang = [&](int v, int p, int r) { return corner_angle(q[v], q[p], q[r]); };
  const std::array<Angle3, 4> planar{{
      {ang(A, C, D), ang(A, B, D), ang(A, B, C)},
      {ang(B, C, D), kPi - ang(B, A, D), kPi - ang(B, A, C)},
      {kPi - ang(C, B, D), kPi - ang(C, A, D), ang(C, A, B)},
      {ang(D, B, C), ang(D, A, C), ang(D, A, B)},
  }};
  std::array<Trihedron, 4> out;
  for (int w = 0; w < 4; ++w) {
    const Angle3& a = planar[w];
    for (double x : a)
      if (!(x > 0.0 && x < kPi)) throw Error(ErrorCode::degenerate_angles, "planar angle outside (0, pi)");
    if (std::abs(a[1] - a[0] - a[2]) > 1e-9) {
      throw Error(ErrorCode::degenerate_angles, "points are not a convex quadrilateral in cyclic order");
    }
    // Pin the planar-limit relation exactly; it is what makes beta_2 vanish.
    Trihedron t;
    t.a = {a[0], a[0] + a[2], a[2]};
    t.beta = excesses(t.a);
    t.beta[2] = 0.0;
    t.theta = {0.0, kPi, 0.0};
    out[w] = t;
  }
  return out;
}

std::array<Vec2, 4> sample_planar_quad(std::uint64_t seed) {
  const CounterRng rng(seed ^ 0x51a7a9d0f00dULL);
  constexpr std::array<Vec2, 4> square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::array<Vec2, 4> q = square;
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 2; ++c) q[i][c] += rng.uniform(attempt, 2 * i + c, -0.3, 0.3);
    try {
      const auto weights = planar_weight_angles(q);
      const bool ok = std::all_of(weights.begin(), weights.end(), [](const Trihedron& w) {
        return excesses_clear(w, kDegeneracyThreshold, true) &&
               std::all_of(w.a.begin(), w.a.end(), [](double x) {
                 return x > kDegeneracyThreshold && x < kPi - kDegeneracyThreshold;
               });
      });
      if (ok) return q;
    } catch (const Error&) {
      // resample
    }
  }
  throw Error(ErrorCode::sampling_failure, "no convex quadrilateral after 100 draws");
}

}  // namespace tpsi

namespace tpsi {

double gram_determinant(const TetrahedronAngles& t) {
  // Faces are named by the opposite vertex A..D; edge (P,Q) lies between
  // the two faces opposite the remaining vertices.
  enum { A, B, C, D };
  std::array<std::array<double, 4>, 4> g{};
  for (int i = 0; i < 4; ++i) g[i][i] = 1.0;
  auto set = [&](int f1, int f2, double theta) { g[f1][f2] = g[f2][f1] = -std::cos(theta); };
  set(C, D, t.theta[0]);
  set(B, D, t.theta[1]);
  set(B, C, t.theta[2]);
  set(A, D, t.theta[3]);
  set(A, C, t.theta[4]);
  set(A, B, t.theta[5]);
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(g[r][col]) > std::abs(g[pivot][col])) pivot = r;
    if (g[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(g[pivot], g[col]);
      det = -det;
    }
    det *= g[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const double factor = g[r][col] / g[col][col];
      for (int c = col; c < 4; ++c) g[r][c] -= factor * g[col][c];
    }
  }
  return det;
}

}  // namespace tpsi
