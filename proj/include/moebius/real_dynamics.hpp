#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "moebius/moebius_map.hpp"

namespace moebius {

/// Long-run behavior of real orbits outside the bad-point set.
struct RealClassification {
  enum class Tag {
    GloballyPeriodic,  ///< K_q = 0: every x outside the bad set has f^q(x) = x
    ConvergesTo,       ///< every orbit off Fix(f) tends to `limit`
    Dense              ///< D < 0 and no K_q = 0 up to the scan bound
  };

  Tag tag = Tag::Dense;
  std::size_t qmax_scanned = 0;
  std::optional<std::size_t> period;
  std::optional<QuadExt> limit;
  std::optional<Which> limit_label;
  /// |alpha/beta| compared with 1, when D > 0.
  std::optional<std::strong_ordering> ratio_vs_one;
  /// arg(alpha), when D < 0.
  std::optional<double> theta;
};

const char* to_string(RealClassification::Tag t);

RealClassification classify_real(const MoebiusMap& f, std::size_t qmax = kDefaultQmax);

struct Rotation {
  double theta = 0.0;  ///< arg(alpha) in (0, pi)
  double r = 0.0;      ///< |alpha| = |beta| = sqrt(c - ab)
};

/// Rotation angle and modulus of alpha for D < 0. Throws std::domain_error otherwise.
Rotation theta_of(const MoebiusMap& f);

struct LimitResult {
  enum class Status { Converged, MaxIterations, NearPole };

  Status status = Status::MaxIterations;
  double value = 0.0;
  std::size_t steps = 0;

  bool converged() const { return status == Status::Converged; }
};

const char* to_string(LimitResult::Status s);

enum class ConvergenceTest {
  StepAndResidual,  ///< |x_{n+1} - x_n| < tol and |f(x) - x| < 10 tol
  ResidualOnly      ///< |f(x) - x| < tol; for the parabolic D = 0 case
};

inline constexpr std::size_t kDefaultLimitSteps = 100000;

/// Float orbit until the convergence test passes.
LimitResult limit_of_orbit(const MoebiusMapF& f, double x0, double tol,
                           std::size_t nmax = kDefaultLimitSteps,
                           ConvergenceTest test = ConvergenceTest::StepAndResidual);

/// Picks ResidualOnly when the exact discriminant vanishes.
LimitResult limit_of_orbit(const MoebiusMap& f, double x0, double tol,
                           std::size_t nmax = kDefaultLimitSteps);

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> edges;  ///< bins + 1 edges
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;
  std::size_t skipped = 0;  ///< pole steps

  std::size_t total() const;
  std::size_t empty_bins() const;
  std::size_t nonempty_bins() const { return counts.size() - empty_bins(); }
};

inline constexpr std::size_t kDefaultBins = 40;
inline constexpr double kDefaultHistLo = -10.0;
inline constexpr double kDefaultHistHi = 10.0;

/// Bins f^k(x0) for k = 1..n. A near-pole step is counted in `skipped` and the
/// orbit continues from f(infinity) = 1/b.
Histogram density_histogram(const MoebiusMapF& f, double x0, std::size_t n,
                            std::size_t bins = kDefaultBins, double lo = kDefaultHistLo,
                            double hi = kDefaultHistHi);

}  // namespace moebius
