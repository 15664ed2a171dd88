#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tpsi/error.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/random.hpp"

namespace tpsi {
namespace {

constexpr double kPi = std::numbers::pi;

double angle_at(const Vec3& v, const Vec3& p, const Vec3& q) {
  double dot = 0, np = 0, nq = 0;
  for (int i = 0; i < 3; ++i) {
    dot += (p[i] - v[i]) * (q[i] - v[i]);
    np += (p[i] - v[i]) * (p[i] - v[i]);
    nq += (q[i] - v[i]) * (q[i] - v[i]);
  }
  return std::acos(dot / std::sqrt(np * nq));
}

TEST(PlanarFromDihedral, RegularVertex) {
  const double t = std::acos(1.0 / 3.0);
  for (double a : planar_from_dihedral({t, t, t})) EXPECT_NEAR(a, kPi / 3, 1e-12);
}

TEST(PlanarFromDihedral, RejectsOutOfRange) {
  EXPECT_THROW(planar_from_dihedral({0.0, 1.0, 1.0}), Error);
  EXPECT_THROW(planar_from_dihedral({1.0, kPi, 1.0}), Error);
  // Dihedral angles of a spherical triangle must sum above pi.
  EXPECT_THROW(planar_from_dihedral({0.5, 0.5, 0.5}), Error);
}

TEST(PlanarFromDihedral, RoundTripOnRandomVertexFigures) {
  const CounterRng rng(3);
  int checked = 0;
  for (std::uint64_t k = 0; checked < 200; ++k) {
    const Angle3 theta{rng.uniform(k, 0, 0.1, 3.0), rng.uniform(k, 1, 0.1, 3.0), rng.uniform(k, 2, 0.1, 3.0)};
    Angle3 a;
    try {
      a = planar_from_dihedral(theta);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    const Angle3 back = dihedral_from_planar(a);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], theta[i], 1e-10);
    const Trihedron t = Trihedron::from_dihedral(theta);
    EXPECT_NEAR(t.beta[0] + t.beta[1] + t.beta[2] + t.beta[3], kPi, 1e-12);
    EXPECT_TRUE(t.nondegenerate());
  }
}

TEST(Excesses, SumToPi) {
  const auto b = excesses({1.0, 1.3, 0.9});
  EXPECT_NEAR(b[0], kPi - 1.6, 1e-15);
  EXPECT_NEAR(b[1], 0.6, 1e-15);
  EXPECT_NEAR(b[2], 0.3, 1e-15);
  EXPECT_NEAR(b[3], 0.7, 1e-15);
}

TEST(Limits, StaticAndPlanar) {
  const Trihedron planar = Trihedron::from_planar({0.5, 1.2, 0.7});
  EXPECT_TRUE(is_planar_limit(planar));
  EXPECT_FALSE(planar.nondegenerate());
  const Trihedron generic = Trihedron::from_dihedral({1.1, 1.3, 1.7});
  EXPECT_FALSE(is_planar_limit(generic));
  EXPECT_FALSE(is_static_limit(generic));
}

TEST(Tetrahedron, RegularHasArccosThird) {
  const std::array<Vec3, 4> v{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  const TetrahedronAngles t = tetrahedron_from_vertices(v);
  for (double th : t.theta) EXPECT_NEAR(th, std::acos(1.0 / 3.0), 1e-10);
  ASSERT_TRUE(t.vertices.has_value());
}

TEST(Tetrahedron, CoplanarThrows) {
  const std::array<Vec3, 4> v{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
  EXPECT_THROW(tetrahedron_from_vertices(v), Error);
}

TEST(Tetrahedron, FaceAnglesMatchCoordinates) {
  // Trihedron at vertex A has edges AB, AC, AD with dihedral angles theta1..3;
  // its planar angles are the face angles at A.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const TetrahedronAngles t = sample_tetrahedron(seed);
    const auto& [A, B, C, D] = *t.vertices;
    const Trihedron at_a = Trihedron::from_dihedral({t.theta[0], t.theta[1], t.theta[2]});
    EXPECT_NEAR(at_a.a[0], angle_at(A, C, D), 1e-10);
    EXPECT_NEAR(at_a.a[1], angle_at(A, B, D), 1e-10);
    EXPECT_NEAR(at_a.a[2], angle_at(A, B, C), 1e-10);
    const Trihedron at_d = Trihedron::from_dihedral({t.theta[2], t.theta[4], t.theta[5]});
    EXPECT_NEAR(at_d.a[0], angle_at(D, B, C), 1e-10);
    EXPECT_NEAR(at_d.a[2], angle_at(D, A, B), 1e-10);
  }
}

TEST(Tetrahedron, GramDeterminantVanishesOnRealTetrahedra) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    EXPECT_NEAR(gram_determinant(sample_tetrahedron(seed)), 0.0, 1e-10);
  TetrahedronAngles bogus;
  bogus.theta = {1.0, 1.1, 1.2, 1.3, 1.4, 1.5};
  EXPECT_GT(std::abs(gram_determinant(bogus)), 1e-3);
}

TEST(Sampler, DeterministicAndRealizable) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TetrahedronAngles a = sample_tetrahedron(seed), b = sample_tetrahedron(seed);
    EXPECT_EQ(a.theta, b.theta);
    for (const Trihedron& t : te_weight_angles(a)) {
      EXPECT_TRUE(t.nondegenerate());
      for (double beta : t.beta) EXPECT_GE(beta, kDegeneracyThreshold);
      EXPECT_NEAR(t.beta[0] + t.beta[1] + t.beta[2] + t.beta[3], kPi, 1e-12);
    }
  }
  EXPECT_NE(sample_tetrahedron(1).theta, sample_tetrahedron(2).theta);
}

TEST(WeightAngles, VerbatimTriplesWithoutFlips) {
  const TetrahedronAngles t = sample_tetrahedron(5);
  const auto& th = t.theta;
  FlipMask none;
  // Unflipped triples may be non-realizable; only compare the ones that are.
  const std::array<Angle3, 4> expected{{{th[0], th[1], th[2]},
                                        {th[0], th[3], th[4]},
                                        {kPi - th[1], th[3], th[5]},
                                        {th[2], kPi - th[4], th[5]}}};
  const auto oriented = te_weight_angles(t);
  EXPECT_EQ(oriented[0].theta, expected[0]);
  EXPECT_NEAR(oriented[1].theta[1], kPi - th[3], 1e-15);
  EXPECT_NEAR(oriented[3].theta[1], th[4], 1e-15);
  try {
    const auto raw = te_weight_angles(t, none);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(raw[k].theta, expected[k]);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_trihedron);
  }
}

TEST(WeightAngles, PsiTriplesAreTheLastThree) {
  const TetrahedronAngles t = sample_tetrahedron(9);
  const auto all = te_weight_angles(t);
  const auto psi = psi_weight_angles(t);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(psi[k].theta, all[k + 1].theta);
}

TEST(PsiArgSwap, Definition) {
  const Angle3 s = psi_arg_swap({0.4, 1.1, 0.8});
  EXPECT_DOUBLE_EQ(s[0], 1.1);
  EXPECT_DOUBLE_EQ(s[1], kPi - 0.8);
  EXPECT_DOUBLE_EQ(s[2], kPi - 0.4);
}

TEST(PlanarWeightAngles, AdditiveAndPositive) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto quad = sample_planar_quad(seed);
    for (const Trihedron& t : planar_weight_angles(quad)) {
      EXPECT_DOUBLE_EQ(t.a[1], t.a[0] + t.a[2]);
      EXPECT_GT(t.a[0], 0.0);
      EXPECT_GT(t.a[2], 0.0);
      EXPECT_LT(t.a[1], kPi);
    }
  }
}

TEST(PlanarWeightAngles, NonConvexQuadThrows) {
  const std::array<Vec2, 4> quad{{{0, 0}, {1, 0}, {0.2, 0.2}, {0, 1}}};
  EXPECT_THROW(planar_weight_angles(quad), Error);
}

}  // namespace
}  // namespace tpsi
