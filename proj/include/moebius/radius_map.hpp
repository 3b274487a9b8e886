#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "moebius/valuation.hpp"

namespace moebius {

/// The boundary branch needs the point-dependent star value.
class NeedsPoint : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// psi_alpha on norm values: r for r < alpha, alpha* at r = alpha, alpha for r > alpha.
///
/// Symbolic mode leaves alpha* unset; concrete mode passes alpha*(x) = |f(x) - x0|_p
/// per step.
class RadiusMapPsi {
 public:
  explicit RadiusMapPsi(PVal alpha, std::optional<PVal> alpha_star = std::nullopt);

  const PVal& alpha() const { return alpha_; }
  const std::optional<PVal>& alpha_star() const { return alpha_star_; }

  PVal step(const PVal& r) const;
  PVal step(const PVal& r, const PVal& star) const;

 private:
  PVal alpha_;
  std::optional<PVal> alpha_star_;
};

PVal psi_step(const RadiusMapPsi& m, const PVal& r);

/// phi_{alpha,beta}: (alpha/beta) r for r < beta, beta* at r = beta, alpha for r > beta.
class RadiusMapPhi {
 public:
  RadiusMapPhi(PVal alpha, PVal beta, std::optional<PVal> beta_star = std::nullopt);

  const PVal& alpha() const { return alpha_; }
  const PVal& beta() const { return beta_; }
  const std::optional<PVal>& beta_star() const { return beta_star_; }

  PVal step(const PVal& r) const;
  PVal step(const PVal& r, const PVal& star) const;

 private:
  PVal alpha_;
  PVal beta_;
  std::optional<PVal> beta_star_;
};

struct PhiLimit {
  enum class Kind { ToZero, ToAlpha };

  Kind kind = Kind::ToZero;
  /// Limit of phi^n(r), the same for every r >= 0.
  PVal limit = PVal::unit(2);
  /// Fixed points that do not depend on beta*.
  std::vector<PVal> fixed;
  /// beta is also fixed when beta* = beta (only possible for alpha < beta).
  bool beta_fixed_when_star_equal = false;
};

/// Fixed points and limit of phi iterates. Throws std::domain_error when
/// alpha = beta.
PhiLimit phi_limit(const RadiusMapPhi& m);

}  // namespace moebius
