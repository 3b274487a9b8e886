#include "moebius/real_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace moebius {

const char* to_string(RealClassification::Tag t) {
  switch (t) {
    case RealClassification::Tag::GloballyPeriodic: return "GloballyPeriodic";
    case RealClassification::Tag::ConvergesTo: return "ConvergesTo";
    case RealClassification::Tag::Dense: return "Dense";
  }
  return "?";
}

const char* to_string(LimitResult::Status s) {
  switch (s) {
    case LimitResult::Status::Converged: return "converged";
    case LimitResult::Status::MaxIterations: return "max-iterations";
    case LimitResult::Status::NearPole: return "near-pole";
  }
  return "?";
}

RealClassification classify_real(const MoebiusMap& f, std::size_t qmax) {
  RealClassification out;
  out.qmax_scanned = qmax;
  const Rational d = f.discriminant();
  if (d.sign() < 0) out.theta = theta_of(f).theta;

  if (auto q = min_period(f, qmax)) {
    out.tag = RealClassification::Tag::GloballyPeriodic;
    out.period = q;
    return out;
  }
  if (d.sign() < 0) {
    out.tag = RealClassification::Tag::Dense;
    return out;
  }
  const auto fix = fixed_points(f);
  out.tag = RealClassification::Tag::ConvergesTo;
  if (d.is_zero()) {
    out.limit = fix.points.front();
    out.limit_label = Which::Unique;
    return out;
  }
  // alpha^2 - beta^2 = (alpha + beta)(alpha - beta) = (1 + c) sqrt(D) with sqrt(D) > 0.
  const int side = (Rational(1) + f.c()).sign();
  if (side == 0) throw std::logic_error("|alpha| = |beta| with D > 0 means K_2 = 0");
  out.ratio_vs_one = side > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  out.limit_label = side > 0 ? Which::X1 : Which::X2;
  out.limit = fix.at(*out.limit_label);
  return out;
}

Rotation theta_of(const MoebiusMap& f) {
  const Rational d = f.discriminant();
  if (d.sign() >= 0) throw std::domain_error("rotation angle needs D < 0");
  const double imag = std::sqrt((-d).to_double());
  const Rational trace = Rational(1) + f.c();
  Rotation rot;
  rot.r = std::sqrt(f.determinant().to_double());
  if (trace.is_zero()) {
    rot.theta = std::numbers::pi / 2;
  } else if (trace.sign() > 0) {
    rot.theta = std::atan(imag / trace.to_double());
  } else {
    rot.theta = std::numbers::pi - std::atan(imag / (-trace).to_double());
  }
  return rot;
}

LimitResult limit_of_orbit(const MoebiusMapF& f, double x0, double tol, std::size_t nmax,
                           ConvergenceTest test) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  LimitResult out;
  double x = x0;
  for (std::size_t n = 0; n < nmax; ++n) {
    auto next = f.apply(x);
    if (!next) {
      out.status = LimitResult::Status::NearPole;
      out.value = x;
      out.steps = n;
      return out;
    }
    const double step = std::abs(*next - x);
    bool done = false;
    if (test == ConvergenceTest::ResidualOnly) {
      done = step < tol;
    } else if (step < tol) {
      auto again = f.apply(*next);
      done = again && std::abs(*again - *next) < 10 * tol;
    }
    x = *next;
    if (done) {
      out.status = LimitResult::Status::Converged;
      out.value = x;
      out.steps = n + 1;
      return out;
    }
  }
  out.value = x;
  out.steps = nmax;
  return out;
}

LimitResult limit_of_orbit(const MoebiusMap& f, double x0, double tol, std::size_t nmax) {
  const auto test = f.discriminant().is_zero() ? ConvergenceTest::ResidualOnly
                                               : ConvergenceTest::StepAndResidual;
  return limit_of_orbit(to_float(f), x0, tol, nmax, test);
}

std::size_t Histogram::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::size_t Histogram::empty_bins() const {
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), std::size_t{0}));
}

Histogram density_histogram(const MoebiusMapF& f, double x0, std::size_t n, std::size_t bins,
                            double lo, double hi) {
  if (bins == 0) throw std::invalid_argument("need at least one bin");
  if (!(lo < hi)) throw std::invalid_argument("histogram range needs lo < hi");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(bins, 0);
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges.back() = hi;

  double x = x0;
  for (std::size_t k = 0; k < n; ++k) {
    auto next = f.apply(x);
    if (!next) {
      ++h.skipped;
      x = 1.0 / f.b();
      continue;
    }
    x = *next;
    if (x < lo) {
      ++h.underflow;
    } else if (x >= hi) {
      ++h.overflow;
    } else {
      auto bin = static_cast<std::size_t>((x - lo) / width);
      h.counts[std::min(bin, bins - 1)]++;
    }
  }
  return h;
}

}  // namespace moebius
