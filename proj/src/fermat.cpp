#include "tpsi/fermat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tpsi {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_modulus: return "invalid-modulus";
    case ErrorCode::singular_argument: return "singular-argument";
    case ErrorCode::singular_point: return "singular-point";
    case ErrorCode::region_violation: return "region-violation";
    case ErrorCode::undefined_argument: return "undefined-argument";
    case ErrorCode::degenerate_trihedron: return "degenerate-trihedron";
    case ErrorCode::degenerate_angles: return "degenerate-angles";
    case ErrorCode::sampling_failure: return "sampling-failure";
    case ErrorCode::plan_error: return "plan-error";
    case ErrorCode::format_error: return "format-error";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

// z^e on the principal branch, -pi < Im log z <= pi.
complex principal_pow(complex z, double e) { return std::exp(e * std::log(z)); }

}  // namespace

double FermatPoint::curve_residual() const {
  const int N = n.value();
  const complex xn = std::pow(x, N), yn = std::pow(y, N), zn = std::pow(z, N);
  const double scale = std::max({std::abs(xn), std::abs(yn), std::abs(zn)});
  return scale == 0.0 ? 0.0 : std::abs(xn + yn - zn) / scale;
}

complex primitive_root(Modulus n) { return std::polar(1.0, kPi / n.value()); }

complex omega_pow(long long k, Modulus n) {
  return std::polar(1.0, 2.0 * kPi * n.reduce(k) / n.value());
}

complex omega_half_pow(long long k, Modulus n) {
  const long long two_n = 2LL * n.value();
  long long r = k % two_n;
  if (r < 0) r += two_n;
  return std::polar(1.0, kPi * static_cast<double>(r) / n.value());
}

complex d_eval(complex x, Modulus n) {
  const int N = n.value();
  complex sum = 0.0;
  for (int a = 1; a < N; ++a) {
    const complex factor = 1.0 - x * omega_pow(a, n);
    if (factor == 0.0) {
      throw Error(ErrorCode::singular_argument, "1 - x omega^" + std::to_string(a) + " vanishes");
    }
    sum += (static_cast<double>(a) / N) * std::log(factor);
  }
  return std::exp(sum);
}

complex phi0(Modulus n) {
  const double N = n.value();
  return std::polar(1.0, kPi * (N - 1) * (N - 2) / (6 * N));
}

complex phi_tilde(CyclicSpin a) {
  const Modulus n = a.modulus();
  const long long v = a.value();
  const double N = n.value();
  return omega_half_pow(v * (v - n.value()), n) * std::polar(1.0, kPi * (N * N - 1) / (6 * N));
}

bool in_region(const FermatPoint& p) {
  if (p.x == 0.0 || p.z == 0.0) {
    throw Error(ErrorCode::undefined_argument, "Arg(x/z) needs nonzero x and z");
  }
  const double N = p.n.value();
  const double arg_x = std::arg(p.x / p.z);
  const double arg_y = std::arg(p.y / p.z);
  return -2 * kPi / N < arg_x && arg_x < 0 && -kPi / N < arg_y && arg_y < kPi / N;
}

complex w_zero(const FermatPoint& p) {
  if (!in_region(p)) throw Error(ErrorCode::region_violation, "w(p|0) branch is fixed only on Y0");
  const Modulus n = p.n;
  return principal_pow(p.y / p.z, (n.value() - 1) / 2.0) / d_eval(omega_pow(1, n) * p.x / p.z, n);
}

complex w_zero_dual(const FermatPoint& p) {
  if (!in_region(p)) throw Error(ErrorCode::region_violation, "w(p|0) branch is fixed only on Y0");
  const Modulus n = p.n;
  return principal_pow(p.x / p.y, (n.value() - 1) / 2.0) / phi0(n) * d_eval(p.z / p.x, n);
}

complex w_eval(const FermatPoint& p, CyclicSpin a) {
  complex w = w_zero(p);
  for (int s = 1; s <= a.value(); ++s) {
    const complex den = p.z - p.x * omega_pow(s, p.n);
    if (den == 0.0) throw Error(ErrorCode::singular_point, "z - x omega^s vanishes");
    w *= p.y / den;
  }
  return w;
}

FermatPoint apply_O(const FermatPoint& p) {
  return {p.z, primitive_root(p.n) * p.y, omega_pow(1, p.n) * p.x, p.n};
}

WTable::WTable(const FermatPoint& p) : n_(p.n), values_(static_cast<std::size_t>(p.n.value())) {
  values_[0] = w_zero(p);
  for (int s = 1; s < n_.value(); ++s) {
    const complex den = p.z - p.x * omega_pow(s, n_);
    if (den == 0.0) throw Error(ErrorCode::singular_point, "z - x omega^s vanishes");
    values_[s] = values_[s - 1] * p.y / den;
  }
}

}  // namespace tpsi
