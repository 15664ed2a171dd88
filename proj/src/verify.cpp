#include "tpsi/verify.hpp"

#include <algorithm>
#include <utility>

#include "tpsi/random.hpp"

namespace tpsi {

VertexWeights bbm_vertex_weights(const std::array<Trihedron, 4>& tri, Modulus n) {
  return {r_vertex(tri[0], n), r_vertex(tri[1], n), r_vertex(tri[2], n), r_vertex(tri[3], n)};
}

IrcWeights bbm_irc_weights(const std::array<Trihedron, 4>& tri, Modulus n) {
  return {w_irc(tri[0], n), w_irc(tri[1], n), w_irc(tri[2], n), w_irc(tri[3], n)};
}

const std::vector<std::string>& te_external_labels() {
  static const std::vector<std::string> labels{"j1", "j2", "j3", "j4", "j5", "j6",
                                               "i1", "i2", "i3", "i4", "i5", "i6"};
  return labels;
}

std::array<std::vector<std::string>, 4> te_vertex_network(Side side) {
  if (side == Side::lhs) {
    return {{{"k1", "k2", "k3", "i1", "i2", "i3"},
             {"j1", "k4", "k5", "k1", "i4", "i5"},
             {"j2", "j4", "k6", "k2", "k4", "i6"},
             {"j3", "j5", "j6", "k3", "k5", "k6"}}};
  }
  return {{{"k3", "k5", "k6", "i3", "i5", "i6"},
           {"k2", "k4", "j6", "i2", "i4", "k6"},
           {"k1", "j4", "j5", "i1", "k4", "k5"},
           {"j1", "j2", "j3", "k1", "k2", "k3"}}};
}

const ContractionPlan& te_vertex_plan() {
  static const ContractionPlan plan{{0, 1}, {2, 0}, {1, 0}};
  return plan;
}

namespace {

// Factors of one side in contraction order: R..R''' on the left, reversed on the right.
std::vector<WeightTensor> side_operands(const VertexWeights& w, Side side) {
  const auto labels = te_vertex_network(side);
  std::vector<WeightTensor> ops;
  for (int f = 0; f < 4; ++f) {
    const int weight = side == Side::lhs ? f : 3 - f;
    ops.push_back(w[weight].relabeled(labels[f]));
  }
  return ops;
}

// Sliced evaluation of one side at a single external assignment.
class SlicedSide {
 public:
  SlicedSide(const VertexWeights& w, Side side) : ops_(side_operands(w, side)) {
    const auto& ext = te_external_labels();
    for (const auto& op : ops_) {
      std::vector<std::pair<std::string, std::size_t>> fixed;
      for (const auto& l : op.labels()) {
        const auto it = std::find(ext.begin(), ext.end(), l);
        if (it != ext.end()) fixed.emplace_back(l, static_cast<std::size_t>(it - ext.begin()));
      }
      externals_.push_back(std::move(fixed));
    }
  }

  complex operator()(std::span<const int> spins) const {
    std::vector<WeightTensor> sliced;
    sliced.reserve(ops_.size());
    for (std::size_t f = 0; f < ops_.size(); ++f) {
      std::vector<std::pair<std::string, int>> assignment;
      for (const auto& [label, pos] : externals_[f]) assignment.emplace_back(label, spins[pos]);
      sliced.push_back(ops_[f].fixed(assignment));
    }
    return contract(std::move(sliced), te_vertex_plan()).scalar();
  }

 private:
  std::vector<WeightTensor> ops_;
  std::vector<std::vector<std::pair<std::string, std::size_t>>> externals_;
};

}  // namespace

WeightTensor te_vertex_side(const VertexWeights& w, Side side) {
  return contract(side_operands(w, side), te_vertex_plan(), te_external_labels());
}

ResidualReport te_vertex_residual(const VertexWeights& w, const SweepOptions& options) {
  if (options.mode == SweepMode::full) {
    const WeightTensor lhs = te_vertex_side(w, Side::lhs);
    const WeightTensor rhs = te_vertex_side(w, Side::rhs);
    return compare(lhs.data(), rhs.data(), SweepMode::full);
  }
  const SlicedSide lhs(w, Side::lhs), rhs(w, Side::rhs);
  return sweep(options, w[0].modulus(), 12, [&](std::span<const int> s) { return std::pair{lhs(s), rhs(s)}; });
}

ResidualReport te_vertex_residual(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options) {
  return te_vertex_residual(bbm_vertex_weights(tri, n), options);
}

ResidualReport te_vertex_residual(const TetrahedronAngles& t, Modulus n, const SweepOptions& options,
                                  FlipMask flips) {
  return te_vertex_residual(te_weight_angles(t, flips), n, options);
}

ResidualReport te_irc_residual(const IrcWeights& w, const SweepOptions& options, IrcWiring wiring) {
  const auto& [W, W1, W2, W3] = w;
  const int N = W.modulus();
  const bool full = options.mode == SweepMode::full;
  return sweep(options, N, full ? 13 : 14, [&](std::span<const int> s) {
    const std::size_t o = full ? 0 : 1;
    const int a1 = full ? 0 : s[0];
    const int a2 = s[o], a3 = s[o + 1], a4 = s[o + 2];
    const int b1 = s[o + 3], b2 = s[o + 4], b3 = s[o + 5], b4 = s[o + 6];
    const int c12 = s[o + 7], c13 = s[o + 8], c14 = s[o + 9], c23 = s[o + 10], c24 = s[o + 11], c34 = s[o + 12];
    const int x1 = wiring == IrcWiring::standard ? a2 : a1;
    const int x2 = wiring == IrcWiring::standard ? a1 : a2;
    complex lhs = 0.0, rhs = 0.0;
    for (int d = 0; d < N; ++d) {
      lhs += W(a1, c12, c13, c14, b2, b3, b4, d) * W1(c12, a2, b4, b3, d, c24, c23, b1) *
             W2(b4, c23, c13, d, b2, b1, a3, c34) * W3(d, b1, b2, b3, c14, c24, c34, a4);
      rhs += W3(b4, c23, c13, c12, a1, a2, a3, d) * W2(c12, x1, x2, b3, c14, c24, d, a4) *
             W1(a1, d, c13, c14, b2, a4, a3, c34) * W(d, a2, a3, a4, c34, c24, c23, b1);
    }
    return std::pair{lhs, rhs};
  });
}

ResidualReport te_irc_residual(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options) {
  return te_irc_residual(bbm_irc_weights(tri, n), options);
}

ResidualReport te_irc_residual(const TetrahedronAngles& t, Modulus n, const SweepOptions& options, FlipMask flips) {
  return te_irc_residual(te_weight_angles(t, flips), n, options);
}

PsiFamily make_psi_family(const BbmPsi& psi) {
  return {[psi](int s, int x1, int x2, int x3, int x4) { return psi.psi(s, x1, x2, x3, x4); },
          [psi](int s, int x1, int x2, int x3, int x4) { return psi.psibar(s, x1, x2, x3, x4); }};
}

PsiFamily make_psi_family(const PlanarPsi& psi) {
  return {[psi](int s, int x1, int x2, int x3, int x4) { return psi.psi(s, x1, x2, x3, x4); },
          [psi](int s, int x1, int x2, int x3, int x4) { return psi.psibar(s, x1, x2, x3, x4); }};
}

PsiEquationData psi_equation_data(const std::array<Trihedron, 4>& tri, Modulus n, Model model) {
  if (model == Model::bbm) {
    return {r_vertex(tri[0], n),
            w_irc(tri[0], n),
            {make_psi_family(BbmPsi(tri[1], n)), make_psi_family(BbmPsi(tri[2], n)),
             make_psi_family(BbmPsi(tri[3], n))}};
  }
  return {r_planar_vertex(tri[0], n),
          w_planar_irc(tri[0], n),
          {make_psi_family(PlanarPsi(tri[1], n)), make_psi_family(PlanarPsi(tri[2], n)),
           make_psi_family(PlanarPsi(tri[3], n))}};
}

ResidualReport psi_eq_residual(const PsiEquationData& data, const SweepOptions& options) {
  const WeightTensor& R = data.r;
  const IrcWeightFn& W = data.w;
  const auto& [p1, p2, p3] = data.psi;
  const int N = R.modulus();
  const bool full = options.mode == SweepMode::full;
  return sweep(options, N, full ? 9 : 10, [&](std::span<const int> s) {
    const int i1 = s[0], i2 = s[1], i3 = s[2];
    const int b = s[3], c = s[4], d = s[5], e = s[6], f = s[7], g = s[8];
    const int h = full ? 0 : s[9];
    std::vector<complex> v1(N), v2(N), v3(N);
    for (int k = 0; k < N; ++k) {
      v1[k] = p1.psi(k, e, h, c, d);
      v2[k] = p2.psi(k, d, b, h, f);
      v3[k] = p3.psi(k, h, g, c, b);
    }
    complex lhs = 0.0, rhs = 0.0;
    for (int k1 = 0; k1 < N; ++k1)
      for (int k2 = 0; k2 < N; ++k2)
        for (int k3 = 0; k3 < N; ++k3) {
          const complex r = R.at({k1, k2, k3, i1, i2, i3});
          if (r != 0.0) lhs += r * v1[k1] * v2[k2] * v3[k3];
        }
    for (int a = 0; a < N; ++a)
      rhs += p1.psi(i1, a, b, g, f) * p2.psi(i2, e, g, c, a) * p3.psi(i3, d, a, e, f) * W(a, e, f, g, b, c, d, h);
    return std::pair{lhs, rhs};
  });
}

ResidualReport psibar_eq_residual(const PsiEquationData& data, const SweepOptions& options) {
  const WeightTensor& R = data.r;
  const IrcWeightFn& W = data.w;
  const auto& [p1, p2, p3] = data.psi;
  const int N = R.modulus();
  const bool full = options.mode == SweepMode::full;
  return sweep(options, N, full ? 9 : 10, [&](std::span<const int> s) {
    const int j1 = s[0], j2 = s[1], j3 = s[2];
    const int b = s[3], c = s[4], d = s[5], e = s[6], f = s[7], g = s[8];
    const int a = full ? 0 : s[9];
    std::vector<complex> v1(N), v2(N), v3(N);
    for (int k = 0; k < N; ++k) {
      v1[k] = p1.psibar(k, a, b, g, f);
      v2[k] = p2.psibar(k, e, g, c, a);
      v3[k] = p3.psibar(k, d, a, e, f);
    }
    complex lhs = 0.0, rhs = 0.0;
    for (int h = 0; h < N; ++h)
      lhs += W(a, e, f, g, b, c, d, h) * p1.psibar(j1, e, h, c, d) * p2.psibar(j2, d, b, h, f) *
             p3.psibar(j3, h, g, c, b);
    for (int k1 = 0; k1 < N; ++k1)
      for (int k2 = 0; k2 < N; ++k2)
        for (int k3 = 0; k3 < N; ++k3) {
          const complex r = R.at({j1, j2, j3, k1, k2, k3});
          if (r != 0.0) rhs += v1[k1] * v2[k2] * v3[k3] * r;
        }
    return std::pair{lhs, rhs};
  });
}

ResidualReport psi_eq_residual(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                               const SweepOptions& options) {
  return psi_eq_residual(psi_equation_data(tri, n, model), options);
}

ResidualReport psibar_eq_residual(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                                  const SweepOptions& options) {
  return psibar_eq_residual(psi_equation_data(tri, n, model), options);
}

WeightTensor random_tensor(Modulus n, const std::vector<std::string>& labels, std::uint64_t seed) {
  WeightTensor t(n, labels);
  const CounterRng rng(seed);
  auto data = t.data();
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = {rng.uniform(k, 0, -1, 1), rng.uniform(k, 1, -1, 1)};
  return t;
}

ResidualReport te_vertex_control(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options,
                                 std::uint64_t seed) {
  VertexWeights w = bbm_vertex_weights(tri, n);
  w[1] = random_tensor(n, kVertexLabels, seed);
  return te_vertex_residual(w, options);
}

ResidualReport te_irc_control(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options) {
  return te_irc_residual(bbm_irc_weights(tri, n), options, IrcWiring::swapped);
}

namespace {

PsiEquationData wrong_angle_data(const std::array<Trihedron, 4>& tri, Modulus n, Model model) {
  PsiEquationData data = psi_equation_data(tri, n, model);
  data.psi[0] = model == Model::bbm ? make_psi_family(BbmPsi(tri[0], n)) : make_psi_family(PlanarPsi(tri[0], n));
  return data;
}

}  // namespace

ResidualReport psi_eq_control(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                              const SweepOptions& options) {
  return psi_eq_residual(wrong_angle_data(tri, n, model), options);
}

ResidualReport psibar_eq_control(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                                 const SweepOptions& options) {
  return psibar_eq_residual(wrong_angle_data(tri, n, model), options);
}

std::vector<ConventionCandidate> convention_search(const TetrahedronAngles& t, Modulus n, unsigned threads) {
  std::vector<ConventionCandidate> out(64);
  parallel_for(out.size(), threads, [&](std::size_t mask) {
    ConventionCandidate& c = out[mask];
    c.index = mask;
    c.flips = FlipMask(mask);
    try {
      c.report = te_vertex_residual(t, n, SweepOptions{}, c.flips);
      c.realizable = true;
    } catch (const Error&) {
      c.realizable = false;
    }
  });
  std::stable_sort(out.begin(), out.end(), [](const ConventionCandidate& x, const ConventionCandidate& y) {
    if (x.realizable != y.realizable) return x.realizable;
    if (x.realizable && x.report.rel_diff != y.report.rel_diff) return x.report.rel_diff < y.report.rel_diff;
    return x.index < y.index;
  });
  return out;
}

}  // namespace tpsi
