#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "eigres/errors.hpp"
#include "eigres/quadrature.hpp"

using namespace eigres;
using std::numbers::pi;
using cd = std::complex<double>;

TEST(Trapezoid, Examples) {
  EXPECT_NEAR(std::abs(periodic_trapezoid([](double) { return cd(1.0); }, 2 * pi, 16) - 2 * pi), 0.0,
              1e-14);
  EXPECT_LT(std::abs(periodic_trapezoid([](double s) { return std::polar(1.0, s); }, 2 * pi, 16)),
            1e-14);
  auto f = [](double s) { return std::polar(1.0, 40 * s) * (2.0 + std::sin(s)); };
  const cd coarse = periodic_trapezoid(f, 2 * pi, 512);
  const cd dense = periodic_trapezoid(f, 2 * pi, 4096);
  EXPECT_LT(std::abs(coarse - dense), 1e-12);
}

TEST(Trapezoid, SpectralExactness) {
  const double L = 3.7;
  for (long N : {16L, 64L, 256L}) {
    for (long k = -(N / 2 - 1); k <= N / 2 - 1; ++k) {
      auto f = [&](double s) { return std::polar(1.0, 2 * pi * k * s / L); };
      const cd v = periodic_trapezoid(f, L, N, 0.41);
      if (k == 0) {
        ASSERT_NEAR(std::abs(v - L), 0.0, 1e-13);
      } else {
        ASSERT_LE(std::abs(v), 1e-13) << "N=" << N << " k=" << k;
      }
    }
  }
}

TEST(Adaptive, Examples) {
  const auto one = adaptive_periodic([](double) { return cd(1.0); }, 2 * pi, 0.0, 1e-10);
  EXPECT_NEAR(one.value.real(), 2 * pi, 1e-14);
  EXPECT_LE(one.error_estimate, 1e-10);
  const auto mode = adaptive_periodic([](double s) { return std::polar(1.0, 100 * s); }, 2 * pi, 100.0);
  EXPECT_LT(std::abs(mode.value), 1e-12);
  EXPECT_GE(mode.nodes_used, 800);
}

TEST(Adaptive, InitialNodes) {
  EXPECT_EQ(initial_nodes(0.0), 64);
  EXPECT_EQ(initial_nodes(8.0), 64);
  EXPECT_EQ(initial_nodes(8.1), 128);
  EXPECT_EQ(initial_nodes(100.0), 1024);
}

TEST(Adaptive, MonotoneRefinementOnTrigPolynomials) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int degree : {5, 37, 128, 256}) {
    std::vector<cd> coef(2 * degree + 1);
    for (auto& c : coef) c = {g(rng), g(rng)};
    auto f = [&](double s) {
      cd sum = 0.0;
      for (int k = -degree; k <= degree; ++k) sum += coef[k + degree] * std::polar(1.0, k * s);
      return sum;
    };
    const cd exact = 2 * pi * coef[degree];
    cd prev = periodic_trapezoid(f, 2 * pi, 2 * degree + 2);
    double prev_diff = -1.0;
    for (long N = 4L * degree + 4; N <= 16L * degree + 16; N *= 2) {
      const cd cur = periodic_trapezoid(f, 2 * pi, N);
      const double diff = std::abs(cur - prev);
      const double floor = 1e-12 * std::max(1.0, std::abs(cur));
      if (prev_diff >= 0.0 && prev_diff > floor) EXPECT_LE(diff, prev_diff / 10.0 + floor);
      EXPECT_LT(std::abs(cur - exact), 1e-11 * std::max(1.0, std::abs(exact)));
      prev_diff = diff;
      prev = cur;
    }
  }
}

TEST(Adaptive, MonotoneRefinementOnAnalyticIntegrand) {
  auto f = [](double s) { return cd(std::exp(3.0 * std::cos(s))); };
  double prev = -1.0;
  for (long N = 8; N <= 64; N *= 2) {
    const double d = std::abs(periodic_trapezoid(f, 2 * pi, N) - periodic_trapezoid(f, 2 * pi, N / 2));
    if (prev > 1e-13) EXPECT_LE(d, prev / 10.0);
    prev = d;
  }
}

TEST(Adaptive, ConvergenceFailure) {
  // A square-root cusp converges only like N^{-3/2}, far too slowly for 1e-14.
  auto cusp = [](double s) { return cd(std::sqrt(std::abs(std::sin(s)))); };
  try {
    adaptive_periodic(cusp, 2 * pi, 0.0, 1e-14);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.nodes(), 0);
    EXPECT_LE(e.nodes(), kMaxNodes);
    EXPECT_NE(e.last(), e.previous());
  }
}

TEST(Adaptive, SharedMatchesSingle) {
  auto base = [](double s) { return cd(std::cos(7 * s), std::sin(3 * s)) * std::exp(std::cos(s)); };
  std::vector<Integrand> mods;
  for (int k : {0, 3, 7, 40}) mods.push_back([k](double s) { return std::polar(1.0, -k * s); });
  const auto shared = adaptive_periodic_shared(base, mods, 2 * pi, 12.0);
  for (std::size_t i = 0; i < mods.size(); ++i) {
    auto product = [&](double s) { return base(s) * mods[i](s); };
    const auto single = adaptive_periodic(product, 2 * pi, 12.0);
    EXPECT_EQ(shared[i].value, single.value);
    EXPECT_EQ(shared[i].nodes_used, single.nodes_used);
    EXPECT_EQ(shared[i].error_estimate, single.error_estimate);
  }
}

TEST(Bump, Examples) {
  EXPECT_DOUBLE_EQ(bump_window(0.3, 0.3, 0.5), 1.0);
  EXPECT_EQ(bump_window(0.8, 0.3, 0.5), 0.0);
  EXPECT_EQ(bump_window(-0.2, 0.3, 0.5), 0.0);
  EXPECT_EQ(bump_window(5.0, 0.3, 0.5), 0.0);
}

TEST(Bump, IntegralMatchesDenseReference) {
  auto chi = [](double s) { return cd(bump_window(s, 0.0, 1.0)); };
  const auto adaptive = adaptive_periodic(chi, 2.0, 0.0, 1e-12, -1.0);
  const cd dense = periodic_trapezoid(chi, 2.0, 1 << 16, -1.0);
  EXPECT_NEAR(adaptive.value.real(), dense.real(), 1e-10);
  EXPECT_NEAR(adaptive.value.real(), std::numbers::e * 0.443993816168, 1e-9);
}

TEST(Bump, FlatAtSupportBoundary) {
  const double h = 1e-3;
  const double edge = 1.0;
  auto b = [](double s) { return bump_window(s, 0.0, 1.0); };
  const double d1 = (b(edge + h) - b(edge - h)) / (2 * h);
  const double d2 = (b(edge + h) - 2 * b(edge) + b(edge - h)) / (h * h);
  const double d3 = (b(edge + 2 * h) - 2 * b(edge + h) + 2 * b(edge - h) - b(edge - 2 * h)) / (2 * h * h * h);
  const double d4 =
      (b(edge + 2 * h) - 4 * b(edge + h) + 6 * b(edge) - 4 * b(edge - h) + b(edge - 2 * h)) / (h * h * h * h);
  for (double d : {d1, d2, d3, d4}) EXPECT_LT(std::abs(d), 1e-4);
}
