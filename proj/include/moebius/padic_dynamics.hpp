#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moebius/moebius_map.hpp"
#include "moebius/radius_map.hpp"
#include "moebius/valuation.hpp"

namespace moebius {

/// f over C_p with rational parameters. Fixed points, alpha and beta live in
/// Q(sqrt(D)); every norm below is an exact valuation of such an element.
class PadicContext {
 public:
  PadicContext(MoebiusMap f, std::int64_t p);

  const MoebiusMap& map() const { return f_; }
  std::int64_t prime() const { return p_; }
  const QuadValuation& valuation() const { return val_; }
  const FixedPointSet& fixed() const { return fix_; }
  const QuadExt& alpha() const { return alpha_; }
  const QuadExt& beta() const { return beta_; }
  bool single_fixed_point() const { return fix_.double_root; }

  PVal val(const Rational& x) const { return val_(x); }
  PVal val(const QuadExt& x) const { return val_(x); }

  const PVal& val_alpha() const { return v_alpha_; }
  const PVal& val_beta() const { return v_beta_; }
  /// v(c - ab).
  const PVal& val_det() const { return v_det_; }
  const PVal& val_b() const { return v_b_; }

  /// b x* + c for the given fixed point; alpha for x1, beta for x2.
  QuadExt multiplier_denominator(Which w) const;
  /// |x1 - x2|_p = |sqrt(D)/b|_p; +inf when D = 0.
  PVal separation() const;

 private:
  MoebiusMap f_;
  std::int64_t p_;
  QuadValuation val_;
  FixedPointSet fix_;
  QuadExt alpha_, beta_;
  PVal v_alpha_, v_beta_, v_det_, v_b_;
};

struct FixedPointCharacter {
  enum class Kind { Attracting, Indifferent, Repelling };

  Which point = Which::X1;
  /// |f'(x*)|_p as a valuation.
  PVal multiplier = PVal::unit(2);
  Kind kind = Kind::Indifferent;
};

const char* to_string(FixedPointCharacter::Kind k);

FixedPointCharacter fp_character(const PadicContext& ctx, Which which);

/// A hypothesis of a known theorem does not hold.
struct ConditionFails {
  int clause = 0;
  std::string detail;
};

template <class T>
using Checked = std::variant<T, ConditionFails>;

struct SiegelReport {
  enum class Relation {
    Single,    ///< D = 0
    Equal,     ///< SI(x1) = SI(x2)
    Disjoint   ///< SI(x1) and SI(x2) do not meet
  };

  std::vector<Which> centers;
  /// SI(x*) = U_radius(x*).
  PVal radius = PVal::unit(2);
  Relation relation = Relation::Single;
  /// |x1 - x2|_p, when there are two centers.
  std::optional<PVal> separation;
  /// D = 0: points outside U_radius reach S_radius(x0) within this many steps.
  std::optional<std::size_t> steps_to_sphere;
};

const char* to_string(SiegelReport::Relation r);

/// Maximal Siegel disk about the single fixed point. Throws std::domain_error
/// unless D = 0.
SiegelReport siegel_unique(const PadicContext& ctx);

/// Both fixed points indifferent with |b/sqrt(c-ab)|_p < 1. Throws
/// std::domain_error when D = 0.
Checked<SiegelReport> siegel_known(const PadicContext& ctx);

struct BasinReport {
  Which target = Which::X1;
  /// The basin is C_p minus the pole and the other fixed point.
  Rational pole;
  Which other = Which::X2;
  /// 1 + delta_2 = |(b x* + c)/b|_p.
  PVal critical_sphere = PVal::unit(2);
};

/// Strong attraction test on the target fixed point. Throws std::domain_error
/// when D = 0.
Checked<BasinReport> basin_check(const PadicContext& ctx, Which target = Which::X1);

/// psi_alpha with alpha = |(c+1)/(2b)|_p, for D = 0.
RadiusMapPsi psi_map(const PadicContext& ctx);
/// phi_{alpha_i, beta_i} about the chosen fixed point, for D != 0.
RadiusMapPhi phi_map(const PadicContext& ctx, Which which);

struct RadiusTrajectory {
  /// |f^k(x) - x*|_p for k = 0..n (fewer on a pole hit).
  std::vector<PVal> radii;
  /// psi/phi iterates of radii[0], boundary branches fed by the actual point.
  std::vector<PVal> model;
  bool matches = true;
  std::optional<PoleHit> pole;
};

/// Exact distances from the orbit of x to the chosen fixed point.
///
/// Irrational fixed points are handled by the norm form: the two distances
/// multiply to |P_{2,1}(y)/b|_p and differ by at most |sqrt(D)/b|_p, which
/// fixes both whenever they coincide. Unequal pairs (split p only) are
/// assigned with the canonical embedding.
RadiusTrajectory radius_trajectory(const PadicContext& ctx, const Rational& x, Which which,
                                   std::size_t n);

/// |y - x*|_p for rational y, via the norm form for irrational x*.
PVal distance_to_fixed(const PadicContext& ctx, const Rational& y, Which which);

struct PadicClassification {
  enum class Tag {
    GloballyPeriodic,  ///< K_q = 0
    ConvergesTo,       ///< |alpha/beta|_p != 1
    Indifferent        ///< |alpha/beta|_p = 1 or D = 0: Siegel regime
  };

  Tag tag = Tag::Indifferent;
  std::size_t qmax_scanned = 0;
  std::optional<std::size_t> period;
  std::optional<Which> target;
  std::optional<QuadExt> limit;
  /// v(alpha) - v(beta); |alpha/beta|_p = p^-(this).
  std::optional<Rational> ratio_valuation;
  std::optional<SiegelReport> siegel;
  std::optional<ConditionFails> siegel_condition;
  /// Points excluded from the statement.
  std::vector<std::string> excluded;
};

const char* to_string(PadicClassification::Tag t);

PadicClassification classify_padic(const PadicContext& ctx, std::size_t qmax = kDefaultQmax);

}  // namespace moebius
