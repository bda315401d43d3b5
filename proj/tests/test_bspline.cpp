#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "iga/bspline.hpp"
#include "oracles.hpp"

using iga::BSplineBasis;
using iga::cardinal_bspline;
using iga::make_knot_vector;

TEST_CASE("cardinal spline frozen values") {
  CHECK(cardinal_bspline(0, 0.5, 0) == 1.0);
  CHECK(cardinal_bspline(3, 2.0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(cardinal_bspline(3, 1.0, 0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(cardinal_bspline(3, 2.0, 2) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(cardinal_bspline(3, 1.0, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cardinal_bspline(5, -0.1, 0) == 0.0);
  CHECK(cardinal_bspline(5, 6.0, 0) == 0.0);
  CHECK(cardinal_bspline(5, 6.1, 0) == 0.0);
  // Quintic integer samples 1/120, 26/120, 66/120.
  CHECK(cardinal_bspline(5, 1.0, 0) == doctest::Approx(1.0 / 120).epsilon(1e-13));
  CHECK(cardinal_bspline(5, 2.0, 0) == doctest::Approx(26.0 / 120).epsilon(1e-13));
  CHECK(cardinal_bspline(5, 3.0, 0) == doctest::Approx(66.0 / 120).epsilon(1e-13));
}

TEST_CASE("cardinal spline rejects bad arguments") {
  CHECK_THROWS_AS(cardinal_bspline(-1, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(cardinal_bspline(2, 0.5, 3), std::invalid_argument);
}

TEST_CASE("cardinal spline degenerate derivative orders are zero a.e.") {
  CHECK(cardinal_bspline(0, 0.4, 1) == 0.0);
  CHECK(cardinal_bspline(1, 0.7, 2) == 0.0);
}

TEST_CASE("cardinal spline matches the truncated-power closed form") {
  std::mt19937_64 rng(42);
  for (int p = 0; p <= 6; ++p) {
    std::uniform_real_distribution<double> dist(-0.5, p + 1.5);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = dist(rng);
      for (int d = 0; d <= std::min(p == 0 ? 0 : (p == 1 ? 1 : 2), 2); ++d) {
        const double got = cardinal_bspline(p, x, d);
        const double want = oracle::cardinal_truncated_power(p, x, d);
        CHECK(got == doctest::Approx(want).epsilon(1e-11).scale(1.0));
      }
    }
  }
}

TEST_CASE("cardinal spline matches the convolution oracle") {
  // p >= 2 keeps the convolution integrand continuous.
  for (int p : {2, 3, 4}) {
    for (double x : {0.3, 0.9, 1.5, 2.2, 0.5 * (p + 1)}) {
      CHECK(cardinal_bspline(p, x, 0) ==
            doctest::Approx(oracle::cardinal_convolution(p, x)).epsilon(1e-8));
    }
  }
}

TEST_CASE("cardinal spline positivity and partition of unity") {
  std::mt19937_64 rng(7);
  for (int p = 0; p <= 6; ++p) {
    std::uniform_real_distribution<double> dist(0.0, p + 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const double x = dist(rng);
      CHECK(cardinal_bspline(p, x, 0) >= 0.0);
      double sum = 0.0;
      for (int k = -p - 2; k <= p + 2; ++k)
        sum += cardinal_bspline(p, x - k, 0);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("cardinal spline first derivative matches central differences") {
  std::mt19937_64 rng(11);
  const double step = 1e-5;
  for (int p = 1; p <= 6; ++p) {
    std::uniform_real_distribution<double> dist(0.0, p + 1.0);
    int accepted = 0;
    while (accepted < 1000) {
      const double x = dist(rng);
      // Stay away from the knots where N_p' may be only one-sided.
      if (std::abs(x - std::round(x)) < 1e-3) continue;
      ++accepted;
      const double fd = (cardinal_bspline(p, x + step, 0) -
                         cardinal_bspline(p, x - step, 0)) /
                        (2.0 * step);
      CHECK(cardinal_bspline(p, x, 1) ==
            doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("knot vector layout") {
  const auto kv = make_knot_vector(2, 4);
  const std::vector<double> want = {0, 0, 0, 0.25, 0.5, 0.75, 1, 1, 1};
  CHECK(kv.knots == want);

  const auto kv2 = make_knot_vector(1, 1);
  CHECK(kv2.knots == std::vector<double>({0, 0, 1, 1}));

  const auto kv3 = make_knot_vector(3, 2);
  CHECK(kv3.knots == std::vector<double>({0, 0, 0, 0, 0.5, 1, 1, 1, 1}));

  CHECK_THROWS_AS(make_knot_vector(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_knot_vector(2, 0), std::invalid_argument);
}

TEST_CASE("basis frozen values") {
  {
    const BSplineBasis b(1, 4);
    CHECK(b.count() == 5);
    // Hat with peak at knot 2/4 is the j = 2 function.
    CHECK(b.eval(2, 0.5, 0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  {
    const BSplineBasis b(2, 4);
    CHECK(b.eval(0, 0.0, 0) == 1.0);
    CHECK(b.eval(1, 0.0, 0) == 0.0);
    // Last function interpolates at t = 1.
    CHECK(b.eval(b.count() - 1, 1.0, 0) == 1.0);
  }
  {
    const BSplineBasis b(3, 10);
    CHECK_THROWS_AS(b.eval(-1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(b.eval(13, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(b.eval(0, 1.5, 0), std::invalid_argument);
  }
}

TEST_CASE("basis partition of unity and boundary behavior") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int p = 1; p <= 6; ++p) {
    for (int n : {1, 4, 17, 64}) {
      const BSplineBasis b(p, n);
      for (int trial = 0; trial < 100; ++trial) {
        const double t = trial == 0 ? 1.0 : dist(rng);
        double sum = 0.0;
        for (int j = 0; j < b.count(); ++j) sum += b.eval(j, t, 0);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      }
      // Interior functions vanish identically at the endpoints.
      for (int j = 1; j < b.count() - 1; ++j) {
        CHECK(b.eval(j, 0.0, 0) == 0.0);
        CHECK(b.eval(j, 1.0, 0) == 0.0);
      }
    }
  }
}

TEST_CASE("interior basis functions equal shifted cardinal splines") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int p = 1; p <= 4; ++p) {
    for (int n : {8, 16}) {
      const BSplineBasis b(p, n);
      for (int j = p; j <= n - 1; ++j) {
        for (int trial = 0; trial < 25; ++trial) {
          const double t = dist(rng);
          const double want = cardinal_bspline(p, n * t - j + p, 0);
          CHECK(b.eval(j, t, 0) ==
                doctest::Approx(want).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("basis derivative matches finite differences") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(0.01, 0.99);
  const double step = 1e-6;
  for (int p = 1; p <= 4; ++p) {
    const int n = 10;
    const BSplineBasis b(p, n);
    int accepted = 0;
    while (accepted < 200) {
      const double t = dist(rng);
      if (std::abs(t * n - std::round(t * n)) < 1e-2) continue;
      ++accepted;
      for (int j = 0; j < b.count(); ++j) {
        const double fd =
            (b.eval(j, t + step, 0) - b.eval(j, t - step, 0)) / (2.0 * step);
        CHECK(b.eval(j, t, 1) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
      }
    }
  }
}

TEST_CASE("partition of unity at a specific interior point") {
  const BSplineBasis b(3, 10);
  double sum = 0.0;
  for (int j = 0; j < b.count(); ++j) sum += b.eval(j, 0.37, 0);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}
