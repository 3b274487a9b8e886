#include "moebius/report.hpp"

#include <cmath>

namespace moebius::report {

namespace {

Json optional_period(const std::optional<std::size_t>& q) {
  return q ? Json(*q) : Json(nullptr);
}

const char* ordering_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "<1";
  if (o == std::strong_ordering::greater) return ">1";
  return "=1";
}

}  // namespace

Json rational(const Rational& x) { return x.to_string(); }

Json value(const QuadExt& x) {
  Json j;
  j["exact"] = x.to_string();
  if (x.is_rational() || x.radicand().sign() >= 0) {
    j["decimal"] = x.to_double();
  } else {
    j["decimal_re"] = x.u().to_double();
    j["decimal_im"] = x.v().to_double() * std::sqrt((-x.radicand()).to_double());
  }
  return j;
}

Json norm(const PVal& v) {
  Json j;
  j["p"] = v.prime();
  j["exponent"] = v.is_infinite() ? std::string("-inf") : v.norm_exponent().to_string();
  j["decimal"] = v.norm();
  return j;
}

PVal norm_from_json(const Json& j) {
  const auto p = j.at("p").get<std::int64_t>();
  const auto e = j.at("exponent").get<std::string>();
  if (e == "-inf") return PVal::infinite(p);
  return PVal::norm_power(p, Rational::parse(e));
}

Json real_classification(const RealClassification& rc, const FixedPointSet& fix) {
  Json j;
  j["verdict"] = to_string(rc.tag);
  j["qmax_scanned"] = rc.qmax_scanned;
  j["period"] = optional_period(rc.period);
  if (rc.limit) {
    j["limit_label"] = to_string(*rc.limit_label);
    j["limit"] = value(*rc.limit);
  }
  if (rc.ratio_vs_one) j["abs_alpha_over_beta"] = ordering_name(*rc.ratio_vs_one);
  if (rc.theta) j["theta"] = *rc.theta;
  j["fixed_point_count"] = fix.points.size();
  return j;
}

Json fixed_point_character(const FixedPointCharacter& ch) {
  Json j;
  j["point"] = to_string(ch.point);
  j["multiplier_norm"] = norm(ch.multiplier);
  j["kind"] = to_string(ch.kind);
  return j;
}

Json siegel(const SiegelReport& rep) {
  Json j;
  Json centers = Json::array();
  for (auto w : rep.centers) centers.push_back(to_string(w));
  j["centers"] = centers;
  j["radius"] = norm(rep.radius);
  j["relation"] = to_string(rep.relation);
  if (rep.separation) j["separation"] = norm(*rep.separation);
  if (rep.steps_to_sphere) j["steps_to_sphere"] = *rep.steps_to_sphere;
  return j;
}

Json condition(const ConditionFails& fail) {
  Json j;
  j["clause"] = fail.clause;
  j["detail"] = fail.detail;
  return j;
}

Json basin(const BasinReport& rep) {
  Json j;
  j["target"] = to_string(rep.target);
  j["excluded"] = Json::array({rep.pole.to_string(), to_string(rep.other)});
  j["critical_sphere"] = norm(rep.critical_sphere);
  return j;
}

Json phi_limit(const PhiLimit& lim) {
  Json j;
  j["kind"] = lim.kind == PhiLimit::Kind::ToZero ? "to-zero" : "to-alpha";
  j["limit"] = norm(lim.limit);
  Json fixed = Json::array();
  for (const auto& v : lim.fixed) fixed.push_back(norm(v));
  j["fixed"] = fixed;
  j["beta_fixed_when_star_equal"] = lim.beta_fixed_when_star_equal;
  return j;
}

Json radius_trajectory(const RadiusTrajectory& tr) {
  Json j;
  Json radii = Json::array();
  for (const auto& r : tr.radii) radii.push_back(norm(r));
  j["radii"] = radii;
  j["matches_radius_map"] = tr.matches;
  j["pole_at"] = tr.pole ? Json(tr.pole->index) : Json(nullptr);
  return j;
}

Json padic_block(const PadicContext& ctx, std::size_t qmax) {
  Json j;
  j["p"] = ctx.prime();
  j["splitting"] = to_string(ctx.valuation().splitting());
  j["norm_alpha"] = norm(ctx.val_alpha());
  j["norm_beta"] = norm(ctx.val_beta());

  Json points = Json::array();
  if (ctx.single_fixed_point()) {
    Json pt = value(ctx.fixed().points.front());
    pt["label"] = "x0";
    pt["character"] = fixed_point_character(fp_character(ctx, Which::Unique));
    points.push_back(pt);
  } else {
    for (Which w : {Which::X1, Which::X2}) {
      Json pt = value(ctx.fixed().at(w));
      pt["label"] = to_string(w);
      pt["character"] = fixed_point_character(fp_character(ctx, w));
      const auto phi = phi_map(ctx, w);
      pt["radius_map"] = {{"alpha", norm(phi.alpha())}, {"beta", norm(phi.beta())}};
      if (phi.alpha() != phi.beta()) pt["radius_limit"] = phi_limit(moebius::phi_limit(phi));
      points.push_back(pt);
    }
  }
  j["fixed_points"] = points;

  const auto cls = classify_padic(ctx, qmax);
  j["verdict"] = to_string(cls.tag);
  j["period"] = optional_period(cls.period);
  if (cls.target) j["target"] = to_string(*cls.target);
  if (cls.limit) j["limit"] = value(*cls.limit);
  if (cls.ratio_valuation) {
    j["norm_alpha_over_beta"] = norm(PVal(ctx.prime(), *cls.ratio_valuation));
  }
  if (cls.siegel) j["siegel"] = siegel(*cls.siegel);
  if (cls.siegel_condition) j["siegel_condition"] = condition(*cls.siegel_condition);

  if (!ctx.single_fixed_point()) {
    Json basins = Json::object();
    for (Which w : {Which::X1, Which::X2}) {
      auto res = basin_check(ctx, w);
      if (auto* rep = std::get_if<BasinReport>(&res)) {
        basins[to_string(w)] = basin(*rep);
      } else {
        basins[to_string(w)] = {{"condition_fails", condition(std::get<ConditionFails>(res))}};
      }
    }
    j["basin"] = basins;
  }
  j["excluded"] = cls.excluded;
  return j;
}

Json periods(const MoebiusMap& f, std::size_t qmax) {
  Json j;
  j["schema"] = kSchema;
  j["qmax"] = qmax;
  Json rows = Json::array();
  const auto ks = k_sequence(f, qmax);
  for (std::size_t q = 1; q <= ks.size(); ++q) {
    rows.push_back({{"q", q}, {"k", rational(ks[q - 1])}, {"zero", ks[q - 1].is_zero()}});
  }
  j["k"] = rows;
  j["min_period"] = optional_period(min_period(f, qmax));
  return j;
}

Json classify(const MoebiusMap& f, std::optional<std::int64_t> p, std::size_t qmax) {
  Json j;
  j["schema"] = kSchema;
  j["params"] = {{"a", rational(f.a())}, {"b", rational(f.b())}, {"c", rational(f.c())}};
  j["pole"] = rational(f.pole());
  j["discriminant"] = rational(f.discriminant());
  const QuadExt root = sqrt_discriminant(f);
  j["sqrt_discriminant"] = {{"exact", root.to_string()}, {"rational", root.is_rational()}};
  const auto [alpha, beta] = alpha_beta(f);
  j["alpha"] = value(alpha);
  j["beta"] = value(beta);

  const auto fix = fixed_points(f);
  Json points = Json::array();
  if (fix.double_root) {
    Json pt = value(fix.points.front());
    pt["label"] = "x0";
    points.push_back(pt);
  } else {
    for (std::size_t i = 0; i < fix.points.size(); ++i) {
      Json pt = value(fix.points[i]);
      pt["label"] = i == 0 ? "x1" : "x2";
      points.push_back(pt);
    }
  }
  j["fixed_points"] = points;

  const auto ks = k_sequence(f, qmax);
  Json zeros = Json::array();
  for (std::size_t q = 2; q <= ks.size(); ++q) {
    if (ks[q - 1].is_zero()) zeros.push_back(q);
  }
  j["kq_scan"] = {{"qmax", qmax}, {"zeros", zeros}, {"min_period", optional_period(min_period(f, qmax))}};

  j["real"] = real_classification(classify_real(f, qmax), fix);
  if (p) j["padic"] = padic_block(PadicContext(f, *p), qmax);
  return j;
}

}  // namespace moebius::report
