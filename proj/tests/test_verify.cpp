#include <gtest/gtest.h>

#include <cmath>

#include "tpsi/verify.hpp"

namespace tpsi {
namespace {

SweepOptions full() { return {}; }

SweepOptions sampled(std::size_t samples, std::uint64_t seed, unsigned threads = 1) {
  SweepOptions o;
  o.mode = SweepMode::sampled;
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  return o;
}

bool same(const ResidualReport& a, const ResidualReport& b) {
  return a.max_abs_diff == b.max_abs_diff && a.rel_diff == b.rel_diff && a.ratio_mean == b.ratio_mean &&
         a.ratio_spread == b.ratio_spread && a.entries_checked == b.entries_checked;
}

TEST(Compare, Metrics) {
  const std::vector<complex> lhs{2.0, complex(0, 4), 0.0}, rhs{1.0, complex(0, 2), 0.0};
  const ResidualReport r = compare(lhs, rhs, SweepMode::full);
  EXPECT_DOUBLE_EQ(r.max_abs_diff, 2.0);
  EXPECT_DOUBLE_EQ(r.rel_diff, 0.5);
  EXPECT_EQ(r.ratio_entries, 2u);
  EXPECT_EQ(r.ratio_mean, complex(2.0));
  EXPECT_DOUBLE_EQ(r.ratio_spread, 0.0);
  EXPECT_EQ(r.entries_checked, 3u);
}

TEST(VertexTe, IdentityWeightsSatisfyBothSides) {
  // R = delta_{i,j} on every axis pair: both sides reduce to delta products.
  const Modulus n(2);
  auto identity = [&] {
    WeightTensor t(n, kVertexLabels);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) t.at({a, b, c, a, b, c}) = 1.0;
    return t;
  };
  const VertexWeights w{identity(), identity(), identity(), identity()};
  EXPECT_EQ(te_vertex_residual(w, full()).rel_diff, 0.0);
}

TEST(VertexTe, HoldsOnSampledTetrahedra) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TetrahedronAngles t = sample_tetrahedron(seed);
    const ResidualReport r = te_vertex_residual(t, Modulus(2), full());
    EXPECT_LT(r.rel_diff, 1e-10) << seed;
    EXPECT_LT(r.ratio_spread, 1e-10);
    EXPECT_EQ(r.entries_checked, 4096u);
  }
  const ResidualReport r3 = te_vertex_residual(sample_tetrahedron(3), Modulus(3), sampled(500, 1));
  EXPECT_LT(r3.rel_diff, 1e-10);
  EXPECT_EQ(r3.mode, SweepMode::sampled);
}

TEST(VertexTe, SampledAgreesWithFullSweep) {
  const auto tri = te_weight_angles(sample_tetrahedron(4));
  const auto w = bbm_vertex_weights(tri, Modulus(2));
  const WeightTensor lhs = te_vertex_side(w, Side::lhs);
  EXPECT_EQ(lhs.labels(), te_external_labels());
  EXPECT_LT(te_vertex_residual(tri, Modulus(2), sampled(300, 9)).rel_diff, 1e-10);
}

TEST(VertexTe, ControlsAreDetected) {
  const auto tri = te_weight_angles(sample_tetrahedron(2));
  EXPECT_GT(te_vertex_control(tri, Modulus(2), full(), 1).rel_diff, 1e-2);
}

TEST(ConventionSearch, OnlyOrientationPatternPasses) {
  for (std::uint64_t seed : {1u, 7u}) {
    const auto candidates = convention_search(sample_tetrahedron(seed), Modulus(2));
    ASSERT_EQ(candidates.size(), 64u);
    EXPECT_TRUE(candidates.front().realizable);
    EXPECT_EQ(candidates.front().flips, kTetrahedronOrientation);
    EXPECT_LT(candidates.front().report.rel_diff, 1e-10);
    for (std::size_t k = 1; k < candidates.size(); ++k)
      if (candidates[k].realizable) EXPECT_GT(candidates[k].report.rel_diff, 1e-3) << candidates[k].index;
  }
}

TEST(IrcTe, HoldsAndSwappedReadingFails) {
  const auto tri = te_weight_angles(sample_tetrahedron(6));
  const ResidualReport r = te_irc_residual(tri, Modulus(2), full());
  EXPECT_LT(r.rel_diff, 1e-10);
  EXPECT_EQ(r.entries_checked, 8192u);
  EXPECT_GT(te_irc_control(tri, Modulus(2), full()).rel_diff, 1e-2);
  EXPECT_LT(te_irc_residual(tri, Modulus(3), sampled(300, 2)).rel_diff, 1e-10);
}

TEST(PsiEquations, BothModels) {
  const auto tri = te_weight_angles(sample_tetrahedron(8));
  const auto planar = planar_weight_angles(sample_planar_quad(8));
  for (int N : {2, 3}) {
    const SweepOptions o = N == 2 ? full() : sampled(500, 4);
    EXPECT_LT(psi_eq_residual(tri, Modulus(N), Model::bbm, o).rel_diff, 1e-10);
    EXPECT_LT(psibar_eq_residual(tri, Modulus(N), Model::bbm, o).rel_diff, 1e-10);
    EXPECT_LT(psi_eq_residual(planar, Modulus(N), Model::planar, o).rel_diff, 1e-10);
    EXPECT_LT(psibar_eq_residual(planar, Modulus(N), Model::planar, o).rel_diff, 1e-10);
    EXPECT_GT(psi_eq_control(tri, Modulus(N), Model::bbm, o).rel_diff, 1e-2);
    EXPECT_GT(psibar_eq_control(tri, Modulus(N), Model::bbm, o).rel_diff, 1e-2);
  }
}

TEST(Determinism, IndependentOfThreadCount) {
  const auto tri = te_weight_angles(sample_tetrahedron(3));
  const Modulus n(3);
  const ResidualReport one = te_vertex_residual(tri, n, sampled(400, 5, 1));
  const ResidualReport four = te_vertex_residual(tri, n, sampled(400, 5, 4));
  EXPECT_TRUE(same(one, four));
  EXPECT_TRUE(same(te_irc_residual(tri, n, sampled(400, 5, 1)), te_irc_residual(tri, n, sampled(400, 5, 3))));
  EXPECT_TRUE(same(psi_eq_residual(tri, n, Model::bbm, sampled(400, 5, 1)),
                   psi_eq_residual(tri, n, Model::bbm, sampled(400, 5, 7))));
  SweepOptions f = full();
  f.threads = 4;
  EXPECT_TRUE(same(te_irc_residual(tri, Modulus(2), full()), te_irc_residual(tri, Modulus(2), f)));
}

TEST(Determinism, SeedSelectsSamples) {
  const auto tri = te_weight_angles(sample_tetrahedron(3));
  const ResidualReport a = te_irc_residual(tri, Modulus(4), sampled(50, 1));
  const ResidualReport b = te_irc_residual(tri, Modulus(4), sampled(50, 2));
  EXPECT_NE(a.max_abs_diff, b.max_abs_diff);
}

}  // namespace
}  // namespace tpsi
