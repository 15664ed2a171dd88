#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tpsi/error.hpp"
#include "tpsi/fermat.hpp"
#include "tpsi/random.hpp"

namespace tpsi {
namespace {

constexpr double kPi = std::numbers::pi;

FermatPoint region_point(const CounterRng& rng, std::uint64_t k, Modulus n) {
  const int N = n.value();
  const complex x = std::polar(std::exp(rng.uniform(k, 0, -1.5, 1.5)), rng.uniform(k, 1, -2 * kPi / N, 0.0));
  const complex y = std::exp(std::log(1.0 - std::pow(x, N)) / static_cast<double>(N));
  const complex lambda = std::polar(rng.uniform(k, 2, 0.5, 2.0), rng.uniform(k, 3, -kPi, kPi));
  return {lambda * x, lambda * y, lambda, n};
}

TEST(Modulus, RejectsSmallValues) {
  EXPECT_THROW(Modulus(1), Error);
  EXPECT_THROW(Modulus(-3), Error);
  EXPECT_EQ(Modulus(5).reduce(-7), 3);
  EXPECT_EQ(Modulus(5).reduce(12), 2);
}

TEST(CyclicSpin, ArithmeticStaysInRange) {
  const Modulus n(4);
  for (int a = -9; a < 9; ++a)
    for (int b = -9; b < 9; ++b) {
      const CyclicSpin s(a, n), t(b, n);
      for (const CyclicSpin r : {s + t, s - t, -s}) {
        EXPECT_GE(r.value(), 0);
        EXPECT_LT(r.value(), 4);
      }
      EXPECT_EQ((s + t).value(), n.reduce(a + b));
      EXPECT_EQ((s - t).value(), n.reduce(a - b));
    }
}

TEST(Roots, PrimitiveRootValues) {
  EXPECT_NEAR(std::abs(omega_half_pow(1, Modulus(2)) - complex(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(omega_half_pow(1, Modulus(3)) - complex(0.5, std::sqrt(3.0) / 2)), 0.0, 1e-15);
  for (int N = 2; N <= 7; ++N) {
    EXPECT_NEAR(std::abs(omega_half_pow(2 * N, Modulus(N)) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(phi0(Modulus(N))), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(primitive_root(Modulus(N)) - omega_half_pow(1, Modulus(N))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(primitive_root(Modulus(N)) * primitive_root(Modulus(N)) - omega_pow(1, Modulus(N))), 0.0,
                1e-15);
  }
}

TEST(DEval, KnownValues) {
  EXPECT_EQ(d_eval(0.0, Modulus(5)), complex(1.0));
  EXPECT_NEAR(std::abs(d_eval(3.0, Modulus(2)) - 2.0), 0.0, 1e-15);
  // Independent high-precision evaluation with principal logarithms.
  const complex expected(1.70573706390488641925650192788, 0.300767466360870593278543795225);
  EXPECT_NEAR(std::abs(d_eval(1.0, Modulus(3)) - expected), 0.0, 1e-14);
}

TEST(DEval, SingularFactorThrows) {
  const Modulus n(4);
  const complex x = std::conj(omega_pow(1, n));  // 1 - x * omega = 0
  try {
    d_eval(x, n);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::singular_argument);
  }
}

TEST(WZero, SpotValue) {
  const complex x = std::polar(0.5, -kPi / 2);
  const FermatPoint p{x, std::sqrt(1.0 - x * x), 1.0, Modulus(2)};
  ASSERT_TRUE(in_region(p));
  const complex expected(0.9732489894677301, -0.22975292054736113);
  EXPECT_NEAR(std::abs(w_zero(p) - expected), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(w_zero_dual(p) - expected), 0.0, 1e-14);
}

TEST(WZero, OutsideRegionThrows) {
  const FermatPoint p{0.5, std::sqrt(0.75), 1.0, Modulus(2)};
  EXPECT_FALSE(in_region(p));
  try {
    w_zero(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::region_violation);
  }
}

TEST(Region, StrictInequalities) {
  const Modulus n(3);
  EXPECT_FALSE(in_region({0.5, 1.0, 1.0, n}));
  EXPECT_TRUE(in_region({std::polar(0.5, -kPi / 3), 1.0, 1.0, n}));
  EXPECT_THROW(in_region({0.0, 1.0, 1.0, n}), Error);
  EXPECT_THROW(in_region({1.0, 1.0, 0.0, n}), Error);
}

TEST(ApplyO, Substitution) {
  const FermatPoint p{complex(0.3, -0.4), complex(0.7, 0.1), 1.0, Modulus(2)};
  const FermatPoint o = apply_O(p);
  EXPECT_EQ(o.x, complex(1.0));
  EXPECT_NEAR(std::abs(o.y - complex(0, 1) * p.y), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(o.z + p.x), 0.0, 1e-15);
}

TEST(PhiTilde, Values) {
  const Modulus two(2);
  EXPECT_NEAR(std::abs(phi_tilde(CyclicSpin(0, two)) - std::polar(1.0, kPi / 4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(phi_tilde(CyclicSpin(1, two)) - std::polar(1.0, -kPi / 4)), 0.0, 1e-15);
  for (int N = 2; N <= 7; ++N) {
    complex prod = 1.0;
    for (int a = 0; a < N; ++a) {
      const complex f = phi_tilde(CyclicSpin(a, Modulus(N)));
      EXPECT_NEAR(std::abs(f), 1.0, 1e-15);
      prod *= f;
    }
    EXPECT_NEAR(std::abs(prod - 1.0), 0.0, 1e-12) << "N=" << N;
  }
}

class FermatProperties : public ::testing::TestWithParam<int> {};

TEST_P(FermatProperties, RandomRegionPoints) {
  const Modulus n(GetParam());
  const int N = n.value();
  const CounterRng rng(17 + N);
  for (std::uint64_t k = 0; k < 100; ++k) {
    const FermatPoint p = region_point(rng, k, n);
    ASSERT_TRUE(in_region(p));
    EXPECT_LT(p.curve_residual(), 1e-12);
    const FermatPoint op = apply_O(p);
    EXPECT_TRUE(in_region(op));
    EXPECT_LT(op.curve_residual(), 1e-12);

    const complex w0 = w_zero(p);
    EXPECT_LT(std::abs(w0 - w_zero_dual(p)) / std::abs(w0), 1e-10);

    const WTable w(p), wo(op);
    complex prod = 1.0, telescope = 1.0;
    for (int a = 0; a < N; ++a) {
      prod *= w(a);
      EXPECT_LT(std::abs(w(a) * wo(-a) * phi_tilde(CyclicSpin(a, n)) - 1.0), 1e-10);
      EXPECT_LT(std::abs(w(a) - w_eval(p, CyclicSpin(a, n))), 1e-12 * std::abs(w(a)));
      telescope *= p.y / (p.z - p.x * omega_pow(a + 1, n));
    }
    EXPECT_LT(std::abs(prod - 1.0), 1e-10);
    EXPECT_LT(std::abs(telescope - 1.0), 1e-10);
    EXPECT_EQ(w(N + 2), w(2 % N));
    EXPECT_EQ(w(-1), w(N - 1));
  }
}

INSTANTIATE_TEST_SUITE_P(AllModuli, FermatProperties, ::testing::Range(2, 8));

}  // namespace
}  // namespace tpsi
