#pragma once

// Cyclic functions on the Fermat curve x^N + y^N = z^N.
//
// Every Boltzmann weight in this library is assembled from w(p|a), a
// function of a curve point p and a Z_N spin a. w(p|0) is fixed by a branch
// prescription that is only valid on the region Y0 (see in_region), and the
// remaining values follow from the ratio recurrence
//
//   w(p|a) / w(p|a-1) = y / (z - x * omega^a).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tpsi/error.hpp"

namespace tpsi {

using complex = std::complex<double>;

/// Validated modulus N >= 2 of the spin group Z_N.
class Modulus {
 public:
  explicit Modulus(int n) : n_(n) {
    if (n < 2) throw Error(ErrorCode::invalid_modulus, "N must be >= 2, got " + std::to_string(n));
  }
  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }

  /// Canonical representative in 0..N-1.
  int reduce(long long a) const noexcept {
    long long r = a % n_;
    return static_cast<int>(r < 0 ? r + n_ : r);
  }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  int n_;
};

/// Element of Z_N.
class CyclicSpin {
 public:
  CyclicSpin(long long value, Modulus n) : n_(n), value_(n.reduce(value)) {}

  int value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return n_; }

  CyclicSpin operator+(CyclicSpin o) const { return {static_cast<long long>(value_) + o.value_, n_}; }
  CyclicSpin operator-(CyclicSpin o) const { return {static_cast<long long>(value_) - o.value_, n_}; }
  CyclicSpin operator-() const { return {-static_cast<long long>(value_), n_}; }
  friend bool operator==(CyclicSpin, CyclicSpin) = default;

 private:
  Modulus n_;
  int value_;
};

struct FermatPoint {
  complex x;
  complex y;
  complex z;
  Modulus n;

  /// |x^N + y^N - z^N| / max(|x|^N, |y|^N, |z|^N).
  double curve_residual() const;
};

/// omega^{1/2} = exp(i pi / N).
complex primitive_root(Modulus n);

/// omega^k = exp(2 pi i k / N), with k reduced mod N first.
complex omega_pow(long long k, Modulus n);

/// omega^{k/2} = exp(i pi k / N), with k reduced mod 2N first.
complex omega_half_pow(long long k, Modulus n);

/// d(x) = exp sum_{a=1}^{N-1} (a/N) log(1 - x omega^a), principal logs.
complex d_eval(complex x, Modulus n);

/// Phi_0 = exp(i pi (N-1)(N-2) / 6N).
complex phi0(Modulus n);

/// Phi~(a) = omega^{a(a-N)/2} exp(i pi (N^2-1) / 6N), a taken canonical.
complex phi_tilde(CyclicSpin a);

/// Strict membership in Y0: -2pi/N < Arg(x/z) < 0 and -pi/N < Arg(y/z) < pi/N.
bool in_region(const FermatPoint& p);

/// w(p|0) = (y/z)^{(N-1)/2} / d(omega x / z). Requires p in Y0.
complex w_zero(const FermatPoint& p);

/// The second closed form (x/y)^{(N-1)/2} Phi_0^{-1} d(z/x); equal to
/// w_zero on Y0 and used as its self-check.
complex w_zero_dual(const FermatPoint& p);

/// w(p|a) for the canonical representative of a.
complex w_eval(const FermatPoint& p, CyclicSpin a);

/// O(x, y, z) = (z, omega^{1/2} y, omega x).
FermatPoint apply_O(const FermatPoint& p);

/// w(p|0..N-1) precomputed; lookups reduce the spin mod N.
class WTable {
 public:
  explicit WTable(const FermatPoint& p);

  const complex& operator()(long long a) const noexcept { return values_[n_.reduce(a)]; }
  std::span<const complex> values() const noexcept { return values_; }
  Modulus modulus() const noexcept { return n_; }

 private:
  Modulus n_;
  std::vector<complex> values_;
};

}  // namespace tpsi
