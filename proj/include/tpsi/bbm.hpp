#pragma once

// BBM model: vertex weight R, IRC weight W and the psi-vectors
// that intertwine them.

#include <array>
#include <string>
#include <vector>

#include "tpsi/fermat.hpp"
#include "tpsi/geometry.hpp"
#include "tpsi/irc.hpp"
#include "tpsi/tensor.hpp"

namespace tpsi {

/// Axis names of a vertex weight R^{j1 j2 j3}_{i1 i2 i3}: upper indices first.
inline const std::vector<std::string> kVertexLabels{"j1", "j2", "j3", "i1", "i2", "i3"};

/// The four points p_1..p_4 (z = 1) of a trihedron. All Nth roots are real
/// positive roots of positive ratios of sines. Throws degenerate-trihedron
/// unless every excess and a3 lie in (0, pi).
std::array<FermatPoint, 4> p_points(const Trihedron& tri, Modulus n);

/// q_i(a1, a2, a3) = O p_i(a1, a3, a2).
std::array<FermatPoint, 4> q_points(const Trihedron& tri, Modulus n);

/// (1/n) * base^{(n-1)/n}; n = 1 gives 1 for every base.
double normalization_power(double base, int n);

/// rho_k = (1/N) (sin a_k / (2 prod_i cos(beta_i/2)))^{(N-1)/N}, k in 1..3.
double rho(int k, const Trihedron& tri, Modulus n);

/// R^{j1 j2 j3}_{i1 i2 i3} = delta_{j2+j3, i2+i3} omega^{j3(j1-i1)} rho_3
///   w(p1|i1-i2) w(p2|j1-j2) / (w(p3|i1-j2) w(p4|j1-i2)).
/// Only delta-consistent entries are visited.
WeightTensor r_vertex(const Trihedron& tri, Modulus n,
                      const std::vector<std::string>& labels = kVertexLabels);

/// W(a|e,f,g|b,c,d|h) = rho_2 sum_s w(q4|f-a+s) w(q3|h-c+s)
///   / (w(q1|d-e+s) w(q2|b-g+s)) omega^{s(e+g-a-c)}.
IrcWeightFn w_irc(const Trihedron& tri, Modulus n);

/// psi-vector points (s, t, s', t') = (q4, q1, q3, q2) evaluated at the
/// trihedron (a2, pi - a3, pi - a1).
std::array<FermatPoint, 4> psi_points(const Trihedron& tri, Modulus n);

/// psi and psi-bar vectors of one trihedron.
class BbmPsi {
 public:
  BbmPsi(const Trihedron& tri, Modulus n);

  /// psi(s|e,h,c,d) = w(s|s+e-c) / w(t|s+d-h) omega^{s(h-c)}
  complex psi(int sigma, int e, int h, int c, int d) const;
  /// psibar(s|a,b,g,f) = w(s'|s+f-b) / w(t'|s+a-g) omega^{s(g-b)}
  complex psibar(int sigma, int a, int b, int g, int f) const;

  double rho1() const noexcept { return rho1_; }
  Modulus modulus() const noexcept { return n_; }

 private:
  BbmPsi(const std::array<FermatPoint, 4>& pts, double rho1);

  Modulus n_;
  WTable s_, t_, sp_, tp_;
  double rho1_;
};

/// IRC L-operator rho_1 sum_s psi(s|e,h,c,d) psibar(s|a,b,g,f).
complex l_irc(const IrcSpins& spins, const BbmPsi& psi);

/// Vertex L-operator entry L^{j, h-d, c-h}_{i, c-e, e-d} = rho_1 psi(i|e,h,c,d) psibar(j|e,h,c,d).
complex l_vertex(int i, int j, int e, int h, int c, int d, const BbmPsi& psi);

}  // namespace tpsi
