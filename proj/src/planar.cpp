#include "tpsi/planar.hpp"

#include <cmath>
#include <numbers>

namespace tpsi {

namespace {

constexpr double kPi = std::numbers::pi;

struct PlanarTables {
  WTable r1, r3, or0;
};

PlanarTables planar_tables(const Trihedron& tri, Modulus n) {
  const auto r = r_points(tri, n);
  return {WTable(r[1]), WTable(r[3]), WTable(apply_O(r[0]))};
}

complex w_power(long long k, Modulus n) { return omega_pow(k, n); }

}  // namespace

std::array<FermatPoint, 4> r_points(const Trihedron& tri, Modulus n) {
  const int N = n.value();
  const complex quarter = std::polar(1.0, kPi / (2.0 * N));
  std::array<FermatPoint, 4> out{{{0, 0, 0, n}, {0, 0, 0, n}, {0, 0, 0, n}, {0, 0, 0, n}}};
  for (int i = 0; i < 4; ++i) {
    const double b = tri.beta[i];
    const double s = 2.0 * std::sin(b);
    out[i] = {std::polar(1.0, -b / N), s > 0.0 ? quarter * std::pow(s, 1.0 / N) : complex(0.0),
              std::polar(1.0, b / N), n};
  }
  return out;
}

std::pair<FermatPoint, FermatPoint> vu_points(double a1, double a3, Modulus n) {
  const double a2 = a1 + a3;
  if (!(a1 > 0 && a3 > 0 && a2 < kPi)) {
    throw Error(ErrorCode::degenerate_angles, "need a1, a3, a1 + a3 in (0, pi)");
  }
  const int N = n.value();
  const double rx = std::pow(std::sin(a3) / std::sin(a2), 1.0 / N);
  const double ry = std::pow(std::sin(a1) / std::sin(a2), 1.0 / N);
  const FermatPoint v{std::polar(rx, -a1 / N), std::polar(ry, a3 / N), 1.0, n};
  const FermatPoint u{std::conj(omega_pow(1, n)) * std::polar(rx, a1 / N), std::polar(ry, -a3 / N), 1.0, n};
  return {v, u};
}

WeightTensor r_planar_vertex(const Trihedron& tri, Modulus n, const std::vector<std::string>& labels) {
  const auto t = planar_tables(tri, n);
  const int N = n.value();
  WeightTensor R(n, labels);
  for (int i1 = 0; i1 < N; ++i1)
    for (int i3 = 0; i3 < N; ++i3)
      for (int j1 = 0; j1 < N; ++j1)
        for (int j3 = 0; j3 < N; ++j3) {
          const int j2 = n.reduce(i1 + i3);
          const int i2 = n.reduce(j1 + j3);
          R.at({j1, j2, j3, i1, i2, i3}) = w_power(static_cast<long long>(j1) * (i3 - j3), n) * t.r1(i3 - j3) *
                                           t.r3(i1 - j1) / t.or0(j2 - i2);
        }
  return R;
}

IrcWeightFn w_planar_irc(const Trihedron& tri, Modulus n) {
  return IrcWeightFn(n, tri, [n, t = planar_tables(tri, n)](const IrcSpins& s) {
    const auto [a, e, f, g, b, c, d, h] = s;
    (void)f;
    (void)c;
    const int k = a - d - g + h;
    return w_power(static_cast<long long>(h - e) * k, n) * t.r1(k) * t.r3(b - a - h + e) / t.or0(b - d - g + e);
  });
}

ResidualReport self_duality_check(const Trihedron& tri, Modulus n, unsigned threads) {
  const WeightTensor R = r_planar_vertex(tri, n);
  const IrcWeightFn W = w_planar_irc(tri, n);
  SweepOptions options;
  options.threads = threads;
  return sweep(options, n, 7, [&](std::span<const int> s) {
    const int a = 0;
    const auto [e, f, g, b, c, d, h] = std::array<int, 7>{s[0], s[1], s[2], s[3], s[4], s[5], s[6]};
    const complex lhs = R.at({h - e, b - d, g - h, b - a, g - e, a - d});
    return std::pair{lhs, W(a, e, f, g, b, c, d, h)};
  });
}

PlanarPsi::PlanarPsi(double a1, double a3, Modulus n, PhaseChoice phase) : PlanarPsi(vu_points(a1, a3, n), phase) {}

PlanarPsi::PlanarPsi(const std::pair<FermatPoint, FermatPoint>& vu, PhaseChoice phase)
    : n_(vu.first.n), v_(vu.first), u_(vu.second), phase_(phase) {}

complex PlanarPsi::phi(int a, int b, int c, int d) const {
  const long long k = phase_ == PhaseChoice::first ? static_cast<long long>(a - b) * (a - c)
                                                   : static_cast<long long>(a - b) * (d - b);
  return w_power(k, n_);
}

complex PlanarPsi::phibar(int a, int b, int c, int d) const {
  const long long k = phase_ == PhaseChoice::first ? static_cast<long long>(a - b) * (b - d)
                                                   : static_cast<long long>(a - b) * (c - a);
  return w_power(k, n_);
}

complex PlanarPsi::psi(int sigma, int a, int b, int c, int d) const {
  return v_(sigma + a - b) * w_power(static_cast<long long>(sigma) * (d - b), n_) * phi(a, b, c, d);
}

complex PlanarPsi::psibar(int sigma, int a, int b, int c, int d) const {
  return w_power(static_cast<long long>(sigma) * (c - a), n_) / u_(sigma + a - b) * phibar(a, b, c, d);
}

complex n_factor(int k, const Angle3& a, Modulus n) {
  if (k < 1 || k > 3) throw Error(ErrorCode::degenerate_angles, "n_k index must be 1, 2 or 3");
  const int i = k == 1 ? 2 : 1;
  const int j = k == 3 ? 2 : 3;
  const double si = std::sin(a[i - 1]), sj = std::sin(a[j - 1]), sk = std::sin(a[k - 1]);
  if (!(si > 0 && sj > 0 && sk > 0)) throw Error(ErrorCode::degenerate_angles, "nonpositive sine in n_k");
  const double N = n.value();
  const double modulus = std::sqrt(N) * std::pow(2.0 * si * sj / sk, (N - 1) / (2 * N));
  return 1.0 / std::polar(modulus, kPi * (N * N - 1) / (12 * N));
}

ResidualReport decompose_check(const Trihedron& tri, Modulus n, PhaseChoice phase, const SweepOptions& options) {
  const IrcWeightFn W = w_planar_irc(tri, n);
  const PlanarPsi psi(tri, n, phase);
  const complex n1 = n_factor(1, tri.a, n);
  const bool full = options.mode == SweepMode::full;
  return sweep(options, n, full ? 7 : 8, [&](std::span<const int> s) {
    const int a = full ? 0 : s[7];
    const auto [e, f, g, b, c, d, h] = std::array<int, 7>{s[0], s[1], s[2], s[3], s[4], s[5], s[6]};
    complex sum = 0.0;
    for (int sigma = 0; sigma < n.value(); ++sigma) sum += psi.psi(sigma, e, h, c, d) * psi.psibar(sigma, a, b, g, f);
    const complex gauge = w_power(-static_cast<long long>(a - b) * (d - h) - static_cast<long long>(a - g) * (h - e), n);
    return std::pair{n1 * sum, W(a, e, f, g, b, c, d, h) * gauge};
  });
}

complex l_planar(int i1, int i2, int i3, int j1, int j2, int j3, const PlanarPsi& psi) {
  const Modulus n = psi.modulus();
  if (n.reduce(j1) != n.reduce(j3 - i2) || n.reduce(j1) != n.reduce(i3 - j2)) return 0.0;
  return psi.v()(i1 - j1) * omega_pow(static_cast<long long>(j2) * (i1 - j1), n);
}

}  // namespace tpsi
