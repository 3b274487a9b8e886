#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "moebius/real_dynamics.hpp"
#include "support.hpp"

using namespace moebius;
using moebius::testing::Gen;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }
MoebiusMap M(long a, long b, long c) { return {R(a), R(b), R(c)}; }

using Tag = RealClassification::Tag;

// arg(alpha) for alpha = (1 + c + i sqrt(-D))/2, straight from atan2.
double oracle_theta(const MoebiusMap& f) {
  return std::atan2(std::sqrt(-f.discriminant().to_double()), 1.0 + f.c().to_double());
}

}  // namespace

TEST(ClassifyReal, ConvergesToLargerMultiplierRoot) {
  const auto rc = classify_real(M(1, 2, 3));
  EXPECT_EQ(rc.tag, Tag::ConvergesTo);
  EXPECT_EQ(rc.limit_label, Which::X1);
  EXPECT_EQ(*rc.limit, QuadExt(R(-1, 2), R(1, 2), R(3)));
  EXPECT_EQ(rc.ratio_vs_one, std::strong_ordering::greater);
  EXPECT_EQ(rc.qmax_scanned, kDefaultQmax);
}

TEST(ClassifyReal, NegativeTraceSelectsSecondRoot) {
  // 1 + c < 0 makes |beta| > |alpha|.
  const MoebiusMap f = M(1, 1, -4);
  const auto rc = classify_real(f);
  EXPECT_EQ(rc.tag, Tag::ConvergesTo);
  EXPECT_EQ(rc.limit_label, Which::X2);
  EXPECT_EQ(rc.ratio_vs_one, std::strong_ordering::less);
}

TEST(ClassifyReal, DoubleRoot) {
  const auto rc = classify_real(M(1, -1, 3));
  EXPECT_EQ(rc.tag, Tag::ConvergesTo);
  EXPECT_EQ(rc.limit_label, Which::Unique);
  EXPECT_EQ(*rc.limit, QuadExt(R(1)));
}

TEST(ClassifyReal, Dense) {
  const auto rc = classify_real(MoebiusMap(R(1), R(-1), R(1, 2)));
  EXPECT_EQ(rc.tag, Tag::Dense);
  EXPECT_EQ(rc.qmax_scanned, 64u);
  ASSERT_TRUE(rc.theta.has_value());
  EXPECT_FALSE(rc.limit.has_value());
}

TEST(ClassifyReal, Periodic) {
  EXPECT_EQ(classify_real(M(1, 1, -1)).period, 2u);
  EXPECT_EQ(classify_real(M(-1, 1, 0)).period, 3u);
  EXPECT_EQ(classify_real(M(1, -1, 1)).period, 4u);
  EXPECT_EQ(classify_real(M(1, -1, 1)).tag, Tag::GloballyPeriodic);
}

TEST(ClassifyReal, PeriodicVerdictMatchesOrbits) {
  Gen g(moebius::testing::test_seed() + 20);
  std::vector<MoebiusMap> maps{M(1, 1, -1), M(-1, 1, 0), M(1, -1, 1), M(2, -1, -1)};
  for (int tries = 0; maps.size() < 12 && tries < 20000; ++tries) {
    const MoebiusMap f = g.map(4, 2);
    if (min_period(f, 8)) maps.push_back(f);
  }
  for (const auto& f : maps) {
    const auto rc = classify_real(f, 12);
    ASSERT_EQ(rc.tag, Tag::GloballyPeriodic);
    const std::size_t q = *rc.period;
    for (int i = 0; i < 20; ++i) {
      const Rational x = moebius::testing::fresh_point(g, f, 2 * q + 2);
      EXPECT_EQ(*moebius::testing::oracle_iterate(f.a(), f.b(), f.c(), x, q), x);
      for (std::size_t r = 1; r < q; ++r)
        EXPECT_NE(*moebius::testing::oracle_iterate(f.a(), f.b(), f.c(), x, r), x);
    }
  }
}

TEST(ClassifyReal, LimitAgreesWithFloatOrbits) {
  Gen g(moebius::testing::test_seed() + 21);
  std::uniform_real_distribution<double> start(-20.0, 20.0);
  int maps = 0;
  while (maps < 30) {
    const MoebiusMap f = g.map();
    if (f.discriminant().sign() <= 0) continue;
    const auto rc = classify_real(f);
    if (rc.tag != Tag::ConvergesTo) continue;
    ++maps;
    const double target = rc.limit->to_double();
    const MoebiusMapF ff = to_float(f);
    for (int i = 0; i < 10; ++i) {
      double x0 = start(g.engine());
      if (std::abs(ff.b() * x0 + ff.c()) < 1e-3) continue;
      const auto lim = limit_of_orbit(ff, x0, 1e-13);
      ASSERT_TRUE(lim.converged()) << f.a() << " " << f.b() << " " << f.c() << " x0=" << x0;
      EXPECT_NEAR(lim.value, target, 1e-8);
    }
  }
}

TEST(ThetaOf, Examples) {
  const auto r4 = theta_of(M(1, -1, 1));
  EXPECT_NEAR(r4.theta, std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(r4.r, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(theta_of(M(-1, 1, 0)).theta, std::numbers::pi / 3, 1e-15);
  EXPECT_DOUBLE_EQ(theta_of(M(2, -1, -1)).theta, std::numbers::pi / 2);
  EXPECT_THROW(theta_of(M(1, 2, 3)), std::domain_error);
}

TEST(ThetaOf, QuadrantMatchesArgument) {
  Gen g(moebius::testing::test_seed() + 22);
  int n = 0;
  while (n < 200) {
    const MoebiusMap f = g.map();
    if (f.discriminant().sign() >= 0) continue;
    ++n;
    const auto rot = theta_of(f);
    EXPECT_NEAR(rot.theta, oracle_theta(f), 1e-12);
    EXPECT_GT(rot.theta, 0.0);
    EXPECT_LT(rot.theta, std::numbers::pi);
    EXPECT_NEAR(rot.r * rot.r, f.determinant().to_double(), 1e-9);
  }
}

TEST(ThetaOf, RationalMultipleOfPiForPeriodicMaps) {
  for (const auto& f : {M(1, -1, 1), M(-1, 1, 0), M(2, -1, -1)}) {
    const std::size_t q = *min_period(f);
    const double t = static_cast<double>(q) * theta_of(f).theta;
    EXPECT_LT(std::abs(std::remainder(t, std::numbers::pi)), 1e-9);
  }
  const double t = theta_of(MoebiusMap(R(1), R(-1), R(1, 2))).theta;
  for (int q = 2; q <= 64; ++q)
    EXPECT_GT(std::abs(std::remainder(q * t, std::numbers::pi)), 1e-9) << q;
}

TEST(LimitOfOrbit, Examples) {
  const auto a = limit_of_orbit(M(1, 2, 3), 5.0, 1e-10);
  ASSERT_TRUE(a.converged());
  EXPECT_NEAR(a.value, (std::sqrt(3.0) - 1) / 2, 1e-9);
  EXPECT_LT(a.steps, 100u);

  // Residual-only test: |f(x) - x| ~ (x - 1)^2/2 drops below 1e-8 near n = 1.4e4.
  const auto b = limit_of_orbit(M(1, -1, 3), 0.0, 1e-8);
  ASSERT_TRUE(b.converged());
  EXPECT_NEAR(b.value, 1.0, 1e-3);
  EXPECT_FALSE(limit_of_orbit(M(1, -1, 3), 0.0, 1e-10).converged());

  const auto c = limit_of_orbit(MoebiusMap(R(1), R(-1), R(1, 2)), 0.3, 1e-10);
  EXPECT_FALSE(c.converged());
  EXPECT_EQ(c.status, LimitResult::Status::MaxIterations);
}

TEST(LimitOfOrbit, NearPole) {
  const auto r = limit_of_orbit(MoebiusMapF(1.0, 2.0, 3.0), -1.5, 1e-10);
  EXPECT_EQ(r.status, LimitResult::Status::NearPole);
  EXPECT_THROW(limit_of_orbit(MoebiusMapF(1.0, 2.0, 3.0), 0.0, 0.0), std::invalid_argument);
}

// With a double root x0 the orbit obeys 1/(x_n - x0) = 1/(x - x0) + n/A,
// A = (1 + c)/(2b), so the error after n steps is about |A|/n.
TEST(LimitOfOrbit, ParabolicRateFollowsClosedForm) {
  const MoebiusMapF f(1.0, -1.0, 3.0);
  const double A = (1.0 + 3.0) / (2.0 * -1.0);
  double x = 0.0;
  for (int n = 1; n <= 100000; ++n) {
    x = *f(x);
    if (n % 10000 == 0) {
      const double predicted = 1.0 + 1.0 / (1.0 / (0.0 - 1.0) + n / A);
      EXPECT_NEAR(x, predicted, 1e-9 * n);
    }
  }
  EXPECT_GT(std::abs(x - 1.0), 1e-5);
}

TEST(DensityHistogram, DenseMapFillsEveryBin) {
  const auto f = to_float(MoebiusMap(R(1), R(-1), R(1, 2)));
  const auto h = density_histogram(f, 0.3, 100000);
  EXPECT_EQ(h.counts.size(), 40u);
  EXPECT_EQ(h.empty_bins(), 0u);
  EXPECT_EQ(h.total() + h.underflow + h.overflow + h.skipped, 100000u);
  EXPECT_DOUBLE_EQ(h.edges.front(), -10.0);
  EXPECT_DOUBLE_EQ(h.edges.back(), 10.0);
}

TEST(DensityHistogram, PeriodicMapVisitsThreeValues) {
  const auto f = to_float(M(-1, 1, 0));
  const auto h = density_histogram(f, 0.3, 999);
  EXPECT_LE(h.nonempty_bins(), 3u);
  EXPECT_EQ(h.total() + h.underflow + h.overflow + h.skipped, 999u);
  std::set<double> seen;
  double x = 0.3;
  for (int k = 0; k < 30; ++k) {
    x = *f(x);
    seen.insert(std::round(x * 1e9) / 1e9);
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(DensityHistogram, EmptyRun) {
  const auto h = density_histogram(to_float(MoebiusMap(R(1), R(-1), R(1, 2))), 0.3, 0);
  EXPECT_EQ(h.total(), 0u);
  EXPECT_EQ(h.empty_bins(), 40u);
}

TEST(DensityHistogram, CountsConserved) {
  Gen g(moebius::testing::test_seed() + 23);
  for (int i = 0; i < 50; ++i) {
    const auto f = to_float(g.map());
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 5000));
    const auto h = density_histogram(f, g.rational().to_double(), n,
                                     static_cast<std::size_t>(g.integer(1, 50)), -3.0, 4.0);
    EXPECT_EQ(h.total() + h.underflow + h.overflow + h.skipped, n);
  }
}

TEST(DensityHistogram, PoleStepsAreSkipped) {
  // The pole is 1 = 1/b, so restarting from 1/b lands on it again.
  const auto f = MoebiusMapF(1.0, 1.0, -1.0);
  const auto h = density_histogram(f, 1.0, 4);
  EXPECT_EQ(h.skipped, 4u);
  EXPECT_EQ(h.total() + h.underflow + h.overflow + h.skipped, 4u);
}
