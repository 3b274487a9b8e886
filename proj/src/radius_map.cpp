#include "moebius/radius_map.hpp"

namespace moebius {

RadiusMapPsi::RadiusMapPsi(PVal alpha, std::optional<PVal> alpha_star)
    : alpha_(std::move(alpha)), alpha_star_(std::move(alpha_star)) {
  if (alpha_star_ && *alpha_star_ < alpha_) throw std::invalid_argument("alpha* must be >= alpha");
}

PVal RadiusMapPsi::step(const PVal& r) const {
  if (r == alpha_) {
    if (!alpha_star_) throw NeedsPoint("psi at r = alpha depends on the point on the sphere");
    return *alpha_star_;
  }
  return r < alpha_ ? r : alpha_;
}

PVal RadiusMapPsi::step(const PVal& r, const PVal& star) const {
  if (r == alpha_) {
    if (star < alpha_) throw std::invalid_argument("alpha* must be >= alpha");
    return star;
  }
  return step(r);
}

PVal psi_step(const RadiusMapPsi& m, const PVal& r) { return m.step(r); }

RadiusMapPhi::RadiusMapPhi(PVal alpha, PVal beta, std::optional<PVal> beta_star)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), beta_star_(std::move(beta_star)) {
  if (beta_.is_infinite()) throw std::invalid_argument("phi needs beta > 0");
  if (beta_star_ && *beta_star_ < alpha_) throw std::invalid_argument("beta* must be >= alpha");
}

PVal RadiusMapPhi::step(const PVal& r) const {
  if (r == beta_) {
    if (!beta_star_) throw NeedsPoint("phi at r = beta depends on the point on the sphere");
    return *beta_star_;
  }
  if (r < beta_) return r * alpha_ / beta_;
  return alpha_;
}

PVal RadiusMapPhi::step(const PVal& r, const PVal& star) const {
  if (r == beta_) {
    if (star < alpha_) throw std::invalid_argument("beta* must be >= alpha");
    return star;
  }
  return step(r);
}

PhiLimit phi_limit(const RadiusMapPhi& m) {
  if (m.alpha() == m.beta()) {
    throw std::domain_error("alpha = beta is the single-fixed-point regime (use psi)");
  }
  const PVal zero = PVal::infinite(m.alpha().prime());
  if (m.alpha() < m.beta()) return PhiLimit{PhiLimit::Kind::ToZero, zero, {zero}, true};
  return PhiLimit{PhiLimit::Kind::ToAlpha, m.alpha(), {zero, m.alpha()}, false};
}

}  // namespace moebius
