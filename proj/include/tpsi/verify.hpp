#pragma once

// Residuals of the vertex and IRC tetrahedron equations and of the
// psi-vector intertwining equations.
//
// Vertex form, summed over k1..k6:
//   R^{k1 k2 k3}_{i1 i2 i3} R'^{j1 k4 k5}_{k1 i4 i5} R''^{j2 j4 k6}_{k2 k4 i6} R'''^{j3 j5 j6}_{k3 k5 k6}
//   = R'''^{k3 k5 k6}_{i3 i5 i6} R''^{k2 k4 j6}_{i2 i4 k6} R'^{k1 j4 j5}_{i1 k4 k5} R^{j1 j2 j3}_{k1 k2 k3}

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpsi/bbm.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/irc.hpp"
#include "tpsi/planar.hpp"
#include "tpsi/residual.hpp"
#include "tpsi/tensor.hpp"

namespace tpsi {

enum class Model { bbm, planar };
enum class Side { lhs, rhs };

/// Weights R, R', R'', R''' (axes kVertexLabels).
using VertexWeights = std::array<WeightTensor, 4>;
using IrcWeights = std::array<IrcWeightFn, 4>;

VertexWeights bbm_vertex_weights(const std::array<Trihedron, 4>& tri, Modulus n);
IrcWeights bbm_irc_weights(const std::array<Trihedron, 4>& tri, Modulus n);

/// External axis order of both sides: j1..j6 then i1..i6.
const std::vector<std::string>& te_external_labels();

/// Axis labels of the four factors of one side, in the order the factors
/// are passed to the contraction (R, R', R'', R''' for the left side,
/// R''', R'', R', R for the right side).
std::array<std::vector<std::string>, 4> te_vertex_network(Side side);

/// Fold the first two factors, then the third, then the fourth.
const ContractionPlan& te_vertex_plan();

/// One side of the vertex equation as a rank-12 tensor over te_external_labels().
WeightTensor te_vertex_side(const VertexWeights& w, Side side);

/// Full mode materializes both rank-12 sides; sampled mode contracts the
/// sliced network at options.samples random external assignments.
ResidualReport te_vertex_residual(const VertexWeights& w, const SweepOptions& options);
ResidualReport te_vertex_residual(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options);
ResidualReport te_vertex_residual(const TetrahedronAngles& t, Modulus n, const SweepOptions& options,
                                  FlipMask flips = kTetrahedronOrientation);

/// Reading of the W'' factor on the right side of the IRC equation. The
/// standard reading is W''(c12|a2,a1,b3|c14,c24,d|a4); the alternative
/// swaps a1 and a2 and serves as a wiring control.
enum class IrcWiring { standard, swapped };

/// Outer spins (a1..a4, b1..b4, c12, c13, c14, c23, c24, c34). Full mode
/// fixes a1 = 0 and sweeps the other 13; sampled mode draws all 14.
ResidualReport te_irc_residual(const IrcWeights& w, const SweepOptions& options,
                               IrcWiring wiring = IrcWiring::standard);
ResidualReport te_irc_residual(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options);
ResidualReport te_irc_residual(const TetrahedronAngles& t, Modulus n, const SweepOptions& options,
                               FlipMask flips = kTetrahedronOrientation);

/// A psi-vector family with four positional face spins.
struct PsiFamily {
  std::function<complex(int, int, int, int, int)> psi;
  std::function<complex(int, int, int, int, int)> psibar;
};

PsiFamily make_psi_family(const BbmPsi& psi);
PsiFamily make_psi_family(const PlanarPsi& psi);

/// Vertex weight, IRC weight and psi families of one psi-equation instance.
struct PsiEquationData {
  WeightTensor r;
  IrcWeightFn w;
  std::array<PsiFamily, 3> psi;
};

/// R and W from the first trihedron, psi_k from trihedra 2..4.
PsiEquationData psi_equation_data(const std::array<Trihedron, 4>& tri, Modulus n, Model model);

/// sum_k R psi1(k1|e,h,c,d) psi2(k2|d,b,h,f) psi3(k3|h,g,c,b)
///   = sum_a psi1(i1|a,b,g,f) psi2(i2|e,g,c,a) psi3(i3|d,a,e,f) W(a|e,f,g|b,c,d|h).
/// Free spins (i1, i2, i3, b, c, d, e, f, g, h); full mode fixes h = 0.
ResidualReport psi_eq_residual(const PsiEquationData& data, const SweepOptions& options);

/// sum_h W psibar1(j1|e,h,c,d) psibar2(j2|d,b,h,f) psibar3(j3|h,g,c,b)
///   = sum_k psibar1(k1|a,b,g,f) psibar2(k2|e,g,c,a) psibar3(k3|d,a,e,f) R^{j}_{k}.
/// Free spins (j1, j2, j3, a, b, c, d, e, f, g); full mode fixes a = 0.
ResidualReport psibar_eq_residual(const PsiEquationData& data, const SweepOptions& options);

ResidualReport psi_eq_residual(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                               const SweepOptions& options);
ResidualReport psibar_eq_residual(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                                  const SweepOptions& options);

// Negative controls: each breaks one ingredient of an identity that holds.

/// Vertex equation with R' replaced by a tensor of uniform random entries.
ResidualReport te_vertex_control(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options,
                                 std::uint64_t seed);
/// IRC equation with the swapped W'' wiring.
ResidualReport te_irc_control(const std::array<Trihedron, 4>& tri, Modulus n, const SweepOptions& options);
/// psi-equation with psi_1 built on the trihedron of R instead of R'.
ResidualReport psi_eq_control(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                              const SweepOptions& options);
ResidualReport psibar_eq_control(const std::array<Trihedron, 4>& tri, Modulus n, Model model,
                                 const SweepOptions& options);

/// Real and imaginary parts uniform in [-1, 1], keyed by seed.
WeightTensor random_tensor(Modulus n, const std::vector<std::string>& labels, std::uint64_t seed);

struct ConventionCandidate {
  std::size_t index = 0;  // the flip mask as an integer; 0 is the unflipped assignment
  FlipMask flips;
  bool realizable = false;
  ResidualReport report;
};

/// Vertex-equation residual (full sweep) for each of the 64 flip patterns,
/// sorted by relative residual; non-realizable patterns go last.
std::vector<ConventionCandidate> convention_search(const TetrahedronAngles& t, Modulus n, unsigned threads = 1);

}  // namespace tpsi
