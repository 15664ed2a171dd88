#include "tpsi/bbm.hpp"

#include <cmath>
#include <numbers>

namespace tpsi {

namespace {

constexpr double kPi = std::numbers::pi;

double nth_root(double ratio, int n) { return std::pow(ratio, 1.0 / n); }

complex phase(double angle, int n) { return std::polar(1.0, angle / n); }

void require_nondegenerate(const Trihedron& tri) {
  for (double b : tri.beta)
    if (!(b > 0.0 && b < kPi)) throw Error(ErrorCode::degenerate_trihedron, "excess outside (0, pi)");
  if (!(tri.a[2] > 0.0 && tri.a[2] < kPi)) throw Error(ErrorCode::degenerate_trihedron, "a3 outside (0, pi)");
}

Trihedron swap_a2_a3(const Trihedron& tri) {
  return Trihedron{{tri.theta[0], tri.theta[2], tri.theta[1]},
                   {tri.a[0], tri.a[2], tri.a[1]},
                   excesses({tri.a[0], tri.a[2], tri.a[1]})};
}

}  // namespace

std::array<FermatPoint, 4> p_points(const Trihedron& tri, Modulus n) {
  require_nondegenerate(tri);
  const int N = n.value();
  const auto& b = tri.beta;
  const double a3 = tri.a[2];
  const double s0 = std::sin(b[0]), s1 = std::sin(b[1]), s2 = std::sin(b[2]), s3 = std::sin(b[3]);
  const double sa3 = std::sin(a3);
  const complex half_inv = std::conj(primitive_root(n));
  const complex full_inv = std::conj(omega_pow(1, n));
  const complex lead = phase(a3, N);
  return {{
      {half_inv * lead * nth_root(s1 / s2, N), phase(b[1], N) * nth_root(sa3 / s2, N), 1.0, n},
      {half_inv * lead * nth_root(s2 / s1, N), phase(b[2], N) * nth_root(sa3 / s1, N), 1.0, n},
      {full_inv * lead * nth_root(s3 / s0, N), phase(-b[3], N) * nth_root(sa3 / s0, N), 1.0, n},
      {full_inv * lead * nth_root(s0 / s3, N), phase(-b[0], N) * nth_root(sa3 / s3, N), 1.0, n},
  }};
}

std::array<FermatPoint, 4> q_points(const Trihedron& tri, Modulus n) {
  const auto p = p_points(swap_a2_a3(tri), n);
  return {apply_O(p[0]), apply_O(p[1]), apply_O(p[2]), apply_O(p[3])};
}

double normalization_power(double base, int n) {
  return std::pow(base, static_cast<double>(n - 1) / n) / n;
}

double rho(int k, const Trihedron& tri, Modulus n) {
  if (k < 1 || k > 3) throw Error(ErrorCode::degenerate_trihedron, "rho index must be 1, 2 or 3");
  double den = 2.0;
  for (double b : tri.beta) den *= std::cos(b / 2);
  const double num = std::sin(tri.a[k - 1]);
  if (!(den > 0.0) || !(num > 0.0)) throw Error(ErrorCode::degenerate_trihedron, "rho base is not positive");
  return normalization_power(num / den, n.value());
}

WeightTensor r_vertex(const Trihedron& tri, Modulus n, const std::vector<std::string>& labels) {
  const auto p = p_points(tri, n);
  const WTable w1(p[0]), w2(p[1]), w3(p[2]), w4(p[3]);
  const double r3 = rho(3, tri, n);
  const int N = n.value();
  WeightTensor R(n, labels);
  for (int j1 = 0; j1 < N; ++j1)
    for (int j3 = 0; j3 < N; ++j3)
      for (int i1 = 0; i1 < N; ++i1)
        for (int i2 = 0; i2 < N; ++i2)
          for (int i3 = 0; i3 < N; ++i3) {
            const int j2 = n.reduce(i2 + i3 - j3);
            R.at({j1, j2, j3, i1, i2, i3}) = omega_pow(static_cast<long long>(j3) * (j1 - i1), n) * r3 *
                                             w1(i1 - i2) * w2(j1 - j2) / (w3(i1 - j2) * w4(j1 - i2));
          }
  return R;
}

IrcWeightFn w_irc(const Trihedron& tri, Modulus n) {
  const auto q = q_points(tri, n);
  const double r2 = rho(2, tri, n);
  return IrcWeightFn(n, tri, [n, r2, q1 = WTable(q[0]), q2 = WTable(q[1]), q3 = WTable(q[2]),
                              q4 = WTable(q[3])](const IrcSpins& s) {
    const auto [a, e, f, g, b, c, d, h] = s;
    complex sum = 0.0;
    for (int sigma = 0; sigma < n.value(); ++sigma) {
      sum += q4(f - a + sigma) * q3(h - c + sigma) / (q1(d - e + sigma) * q2(b - g + sigma)) *
             omega_pow(static_cast<long long>(sigma) * (e + g - a - c), n);
    }
    return r2 * sum;
  });
}

std::array<FermatPoint, 4> psi_points(const Trihedron& tri, Modulus n) {
  const Angle3 moved = psi_arg_swap(tri.a);
  const Trihedron arg{dihedral_from_planar(moved), moved, excesses(moved)};
  const auto q = q_points(arg, n);
  return {q[3], q[0], q[2], q[1]};
}

BbmPsi::BbmPsi(const Trihedron& tri, Modulus n) : BbmPsi(psi_points(tri, n), rho(1, tri, n)) {}

BbmPsi::BbmPsi(const std::array<FermatPoint, 4>& pts, double rho1)
    : n_(pts[0].n), s_(pts[0]), t_(pts[1]), sp_(pts[2]), tp_(pts[3]), rho1_(rho1) {}

complex BbmPsi::psi(int sigma, int e, int h, int c, int d) const {
  return s_(sigma + e - c) / t_(sigma + d - h) * omega_pow(static_cast<long long>(sigma) * (h - c), n_);
}

complex BbmPsi::psibar(int sigma, int a, int b, int g, int f) const {
  return sp_(sigma + f - b) / tp_(sigma + a - g) * omega_pow(static_cast<long long>(sigma) * (g - b), n_);
}

complex l_irc(const IrcSpins& spins, const BbmPsi& psi) {
  const auto [a, e, f, g, b, c, d, h] = spins;
  complex sum = 0.0;
  for (int sigma = 0; sigma < psi.modulus().value(); ++sigma)
    sum += psi.psi(sigma, e, h, c, d) * psi.psibar(sigma, a, b, g, f);
  return psi.rho1() * sum;
}

complex l_vertex(int i, int j, int e, int h, int c, int d, const BbmPsi& psi) {
  return psi.rho1() * psi.psi(i, e, h, c, d) * psi.psibar(j, e, h, c, d);
}

IrcWeightFn to_bb_convention(const IrcWeightFn& w) {
  const Trihedron& t = w.trihedron();
  const Trihedron bb{{t.theta[2], t.theta[0], t.theta[1]},
                     {t.a[2], t.a[0], t.a[1]},
                     {t.beta[0], t.beta[3], t.beta[1], t.beta[2]}};
  return IrcWeightFn(w.modulus(), bb, [w](const IrcSpins& s) {
    const auto [a, e, f, g, b, c, d, h] = s;
    return w(a, f, g, e, c, d, b, h);
  });
}

IrcWeightFn from_bb_convention(const IrcWeightFn& w_bb) {
  const Trihedron& t = w_bb.trihedron();
  const Trihedron orig{{t.theta[1], t.theta[2], t.theta[0]},
                       {t.a[1], t.a[2], t.a[0]},
                       {t.beta[0], t.beta[2], t.beta[3], t.beta[1]}};
  return IrcWeightFn(w_bb.modulus(), orig, [w_bb](const IrcSpins& s) {
    const auto [a, e, f, g, b, c, d, h] = s;
    return w_bb(a, g, e, f, d, b, c, h);
  });
}

}  // namespace tpsi
