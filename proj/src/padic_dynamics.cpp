#include "moebius/padic_dynamics.hpp"

namespace moebius {

namespace {

PVal half(const PVal& v) {
  if (v.is_infinite()) return v;
  return {v.prime(), v.exponent() / Rational(2)};
}

Which other_of(Which w) {
  if (w == Which::Unique) throw std::domain_error("single fixed point has no partner");
  return w == Which::X1 ? Which::X2 : Which::X1;
}

void require_two_points(const PadicContext& ctx, const char* what) {
  if (ctx.single_fixed_point()) throw std::domain_error(std::string(what) + " needs D != 0");
}

}  // namespace

PadicContext::PadicContext(MoebiusMap f, std::int64_t p)
    : f_(std::move(f)),
      p_(p),
      val_(sqrt_discriminant(f_).radicand(), p),
      fix_(fixed_points(f_, FieldMode::AlgebraicallyClosed)),
      v_alpha_(PVal::unit(p)),
      v_beta_(PVal::unit(p)),
      v_det_(PVal::unit(p)),
      v_b_(PVal::unit(p)) {
  std::tie(alpha_, beta_) = alpha_beta(f_);
  if (alpha_ * beta_ != QuadExt(f_.determinant()) ||
      alpha_ + beta_ != QuadExt(Rational(1) + f_.c())) {
    throw std::logic_error("alpha/beta do not satisfy alpha*beta = c-ab, alpha+beta = 1+c");
  }
  v_alpha_ = val_(alpha_);
  v_beta_ = val_(beta_);
  v_det_ = val_(f_.determinant());
  v_b_ = val_(f_.b());
  if (v_alpha_ * v_beta_ != v_det_) {
    throw std::logic_error("v(alpha) + v(beta) != v(c-ab)");
  }
  if (!fix_.double_root) {
    if (multiplier_denominator(Which::X1) != alpha_ || multiplier_denominator(Which::X2) != beta_) {
      throw std::logic_error("fixed point labels disagree with alpha/beta");
    }
  }
}

QuadExt PadicContext::multiplier_denominator(Which w) const {
  return QuadExt(f_.b()) * fix_.at(w) + QuadExt(f_.c());
}

PVal PadicContext::separation() const {
  if (fix_.double_root) return PVal::infinite(p_);
  return val_(sqrt_discriminant(f_)) / v_b_;
}

const char* to_string(FixedPointCharacter::Kind k) {
  switch (k) {
    case FixedPointCharacter::Kind::Attracting: return "attracting";
    case FixedPointCharacter::Kind::Indifferent: return "indifferent";
    case FixedPointCharacter::Kind::Repelling: return "repelling";
  }
  return "?";
}

FixedPointCharacter fp_character(const PadicContext& ctx, Which which) {
  // f'(x) = (c - ab)/(bx + c)^2.
  const PVal den = ctx.val(ctx.multiplier_denominator(which));
  FixedPointCharacter out;
  out.point = which;
  out.multiplier = ctx.val_det() / (den * den);
  const int s = out.multiplier.exponent().sign();
  out.kind = s > 0 ? FixedPointCharacter::Kind::Attracting
                   : (s == 0 ? FixedPointCharacter::Kind::Indifferent
                             : FixedPointCharacter::Kind::Repelling);
  return out;
}

const char* to_string(SiegelReport::Relation r) {
  switch (r) {
    case SiegelReport::Relation::Single: return "single";
    case SiegelReport::Relation::Equal: return "equal";
    case SiegelReport::Relation::Disjoint: return "disjoint";
  }
  return "?";
}

SiegelReport siegel_unique(const PadicContext& ctx) {
  if (!ctx.single_fixed_point()) throw std::domain_error("siegel_unique needs D = 0");
  const auto& f = ctx.map();
  SiegelReport out;
  out.centers = {Which::Unique};
  out.radius = ctx.val((Rational(1) + f.c()) / (Rational(2) * f.b()));
  out.relation = SiegelReport::Relation::Single;
  out.steps_to_sphere = 2;
  return out;
}

Checked<SiegelReport> siegel_known(const PadicContext& ctx) {
  require_two_points(ctx, "siegel_known");
  const PVal sqrt_det = half(ctx.val_det());
  // |b / sqrt(c - ab)|_p < 1.
  if (!(ctx.val_b() / sqrt_det < PVal::unit(ctx.prime()))) {
    return ConditionFails{1, "|b/sqrt(c-ab)|_p = " + (ctx.val_b() / sqrt_det).to_string() +
                                 " is not < 1"};
  }
  for (Which w : {Which::X1, Which::X2}) {
    const auto ch = fp_character(ctx, w);
    if (ch.kind != FixedPointCharacter::Kind::Indifferent) {
      return ConditionFails{2, std::string("|f'(") + to_string(w) + ")|_p = " +
                                   ch.multiplier.to_string() + " is not 1"};
    }
  }
  SiegelReport out;
  out.centers = {Which::X1, Which::X2};
  out.radius = sqrt_det / ctx.val_b();
  out.separation = ctx.separation();
  out.relation = *out.separation >= out.radius ? SiegelReport::Relation::Disjoint
                                               : SiegelReport::Relation::Equal;
  return out;
}

Checked<BasinReport> basin_check(const PadicContext& ctx, Which target) {
  require_two_points(ctx, "basin_check");
  const PVal den = ctx.val(ctx.multiplier_denominator(target));
  const PVal one = PVal::unit(ctx.prime());
  const PVal multiplier = ctx.val_det() / (den * den);
  if (!(multiplier < one)) {
    return ConditionFails{1, std::string("|f'(") + to_string(target) + ")|_p = " +
                                 multiplier.to_string() + " is not < 1"};
  }
  const PVal ratio = ctx.val_b() / den;
  if (!(ratio < one)) {
    return ConditionFails{2, std::string("|b/(b") + to_string(target) + "+c)|_p = " +
                                 ratio.to_string() + " is not < 1"};
  }
  BasinReport out;
  out.target = target;
  out.pole = ctx.map().pole();
  out.other = other_of(target);
  out.critical_sphere = den / ctx.val_b();
  return out;
}

RadiusMapPsi psi_map(const PadicContext& ctx) {
  if (!ctx.single_fixed_point()) throw std::domain_error("psi_alpha needs D = 0");
  return RadiusMapPsi(siegel_unique(ctx).radius);
}

RadiusMapPhi phi_map(const PadicContext& ctx, Which which) {
  require_two_points(ctx, "phi_map");
  const auto& f = ctx.map();
  const QuadExt& x = ctx.fixed().at(which);
  const QuadExt b(f.b());
  // alpha(x) = (1 - bx)/b, beta(x) = (bx + c)/b.
  const PVal a = ctx.val((QuadExt(Rational(1)) - b * x) / b);
  const PVal bb = ctx.val((b * x + QuadExt(f.c())) / b);
  return {a, bb};
}

PVal distance_to_fixed(const PadicContext& ctx, const Rational& y, Which which) {
  const QuadExt& x = ctx.fixed().at(which);
  if (auto r = x.as_rational()) return ctx.val(y - *r);

  const auto& f = ctx.map();
  const PVal product = ctx.val(f.fixed_point_polynomial(y) / f.b());
  const PVal sep = ctx.separation();
  const PVal even = half(product);
  if (!(sep > even)) {
    // |y - x1| = |y - x2|.
    return even;
  }
  // Unequal pair {|sqrt(D)/b|, product/|sqrt(D)/b|}; the embedding picks one.
  const PVal direct = ctx.val(QuadExt(y) - x);
  if (direct != sep && direct != product / sep) {
    throw std::logic_error("embedding valuation disagrees with the norm form");
  }
  return direct;
}

RadiusTrajectory radius_trajectory(const PadicContext& ctx, const Rational& x, Which which,
                                   std::size_t n) {
  if (!ctx.single_fixed_point()) {
    const QuadExt& other = ctx.fixed().at(other_of(which));
    if (other == QuadExt(x)) throw std::invalid_argument("start point is the other fixed point");
  }
  const auto orbit = iterate_naive(ctx.map(), x, n);
  RadiusTrajectory out;
  out.pole = orbit.pole;
  out.radii.reserve(orbit.points.size());
  for (const auto& y : orbit.points) out.radii.push_back(distance_to_fixed(ctx, y, which));

  out.model.push_back(out.radii.front());
  for (std::size_t k = 1; k < out.radii.size(); ++k) {
    const PVal& prev = out.model.back();
    const PVal& star = out.radii[k];
    if (ctx.single_fixed_point()) {
      out.model.push_back(psi_map(ctx).step(prev, star));
    } else {
      out.model.push_back(phi_map(ctx, which).step(prev, star));
    }
  }
  for (std::size_t k = 0; k < out.radii.size(); ++k) {
    if (out.radii[k] != out.model[k]) out.matches = false;
  }
  return out;
}

const char* to_string(PadicClassification::Tag t) {
  switch (t) {
    case PadicClassification::Tag::GloballyPeriodic: return "GloballyPeriodic";
    case PadicClassification::Tag::ConvergesTo: return "ConvergesTo";
    case PadicClassification::Tag::Indifferent: return "Indifferent";
  }
  return "?";
}

PadicClassification classify_padic(const PadicContext& ctx, std::size_t qmax) {
  PadicClassification out;
  out.qmax_scanned = qmax;
  out.excluded.emplace_back("P_p (preimages of the pole)");
  if (auto q = min_period(ctx.map(), qmax)) {
    out.tag = PadicClassification::Tag::GloballyPeriodic;
    out.period = q;
    return out;
  }
  if (ctx.single_fixed_point()) {
    out.tag = PadicClassification::Tag::Indifferent;
    out.target = Which::Unique;
    out.siegel = siegel_unique(ctx);
    return out;
  }
  const Rational ratio = ctx.val_alpha().exponent() - ctx.val_beta().exponent();
  out.ratio_valuation = ratio;
  if (ratio.is_zero()) {
    out.tag = PadicClassification::Tag::Indifferent;
    auto known = siegel_known(ctx);
    if (auto* rep = std::get_if<SiegelReport>(&known)) {
      out.siegel = *rep;
    } else {
      out.siegel_condition = std::get<ConditionFails>(known);
    }
    return out;
  }
  // |alpha/beta|_p < 1 exactly when v(alpha) > v(beta).
  out.tag = PadicClassification::Tag::ConvergesTo;
  out.target = ratio.sign() > 0 ? Which::X2 : Which::X1;
  out.limit = ctx.fixed().at(*out.target);
  out.excluded.emplace_back(std::string(to_string(other_of(*out.target))) + " (other fixed point)");
  return out;
}

}  // namespace moebius
