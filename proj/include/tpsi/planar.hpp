#pragma once

// The Planar model: the planar limit a2 = a1 + a3 (beta_2 = 0) of the
// vertex and IRC weights, where both coincide under a spin-difference map.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tpsi/bbm.hpp"
#include "tpsi/fermat.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/irc.hpp"
#include "tpsi/residual.hpp"
#include "tpsi/tensor.hpp"

namespace tpsi {

/// r_i = (exp(-i beta_i/N), omega^{1/4} (2 sin beta_i)^{1/N}, exp(i beta_i/N)).
/// With beta_2 = 0 the point r_2 degenerates to (1, 0, 1); it is not used
/// by any weight.
std::array<FermatPoint, 4> r_points(const Trihedron& tri, Modulus n);

/// Points v, u of the psi-vectors, with a2 = a1 + a3. Throws
/// degenerate-angles unless a1, a3 and a1 + a3 lie in (0, pi).
std::pair<FermatPoint, FermatPoint> vu_points(double a1, double a3, Modulus n);

/// R^{j1 j2 j3}_{i1 i2 i3} = delta_{j2, i1+i3} delta_{i2, j1+j3} omega^{j1(i3-j3)}
///   w(r1|i3-j3) w(r3|i1-j1) / w(O r0|j2-i2).
WeightTensor r_planar_vertex(const Trihedron& tri, Modulus n,
                             const std::vector<std::string>& labels = kVertexLabels);

/// W(a|e,f,g|b,c,d|h) = omega^{(h-e)(a-d-g+h)} w(r1|a-d-g+h) w(r3|b-a-h+e)
///   / w(O r0|b-d-g+e). Independent of f and c.
IrcWeightFn w_planar_irc(const Trihedron& tri, Modulus n);

/// R^{h-e, b-d, g-h}_{b-a, g-e, a-d} against W(a|e,f,g|b,c,d|h) over every
/// spin assignment with a = 0.
ResidualReport self_duality_check(const Trihedron& tri, Modulus n, unsigned threads = 1);

/// Which of the two gauge phases phi, phibar multiplies the psi-vectors.
enum class PhaseChoice { first, second };

class PlanarPsi {
 public:
  /// Points v(a1, a3), u(a1, a3).
  PlanarPsi(double a1, double a3, Modulus n, PhaseChoice phase = PhaseChoice::second);
  /// Uses the trihedron's own (a1, a3).
  PlanarPsi(const Trihedron& tri, Modulus n, PhaseChoice phase = PhaseChoice::second)
      : PlanarPsi(tri.a[0], tri.a[2], n, phase) {}

  /// psi(s|a,b,c,d) = w(v|s+a-b) omega^{s(d-b)} phi(a,b,c,d)
  complex psi(int sigma, int a, int b, int c, int d) const;
  /// psibar(s|a,b,c,d) = omega^{s(c-a)} / w(u|s+a-b) phibar(a,b,c,d)
  complex psibar(int sigma, int a, int b, int c, int d) const;

  /// phi = omega^{(a-b)(a-c)} (first) or omega^{(a-b)(d-b)} (second).
  complex phi(int a, int b, int c, int d) const;
  /// phibar = omega^{(a-b)(b-d)} (first) or omega^{(a-b)(c-a)} (second).
  complex phibar(int a, int b, int c, int d) const;

  const WTable& v() const noexcept { return v_; }
  const WTable& u() const noexcept { return u_; }
  Modulus modulus() const noexcept { return n_; }
  PhaseChoice phase_choice() const noexcept { return phase_; }

 private:
  PlanarPsi(const std::pair<FermatPoint, FermatPoint>& vu, PhaseChoice phase);

  Modulus n_;
  WTable v_, u_;
  PhaseChoice phase_;
};

/// n_k = 1 / (sqrt(N) exp(i pi (N^2-1)/12N) (2 sin a_i sin a_j / sin a_k)^{(N-1)/2N})
/// with {i, j} = {1, 2, 3} \ {k}.
complex n_factor(int k, const Angle3& a, Modulus n);

/// n_1 sum_s psi_v(s|e,h,c,d) psibar_u(s|a,b,g,f) against
/// W(a|e,f,g|b,c,d|h) omega^{-(a-b)(d-h)-(a-g)(h-e)}, with v, u built from
/// the weight's own (a1, a3). Full mode sweeps the seven spins other than a.
ResidualReport decompose_check(const Trihedron& tri, Modulus n, PhaseChoice phase,
                               const SweepOptions& options = {});

/// L^{j1 j2 j3}_{i1 i2 i3} = delta_{j1, j3-i2} delta_{j1, i3-j2} w(v|i1-j1) omega^{j2(i1-j1)}.
complex l_planar(int i1, int i2, int i3, int j1, int j2, int j3, const PlanarPsi& psi);

}  // namespace tpsi
