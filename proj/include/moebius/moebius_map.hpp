#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "moebius/quad_ext.hpp"
#include "moebius/rational.hpp"

namespace moebius {

class InvalidMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The orbit reached the pole -c/b. `index` is the orbit position holding the
/// pole, so f is undefined at step index + 1. `near` marks float-mode hits
/// detected by the guard rather than exact equality.
struct PoleHit {
  std::size_t index = 0;
  bool near = false;

  friend bool operator==(const PoleHit&, const PoleHit&) = default;
};

/// A value or a pole hit.
template <class T>
class PoleOr {
 public:
  PoleOr(T value) : v_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  PoleOr(PoleHit hit) : v_(hit) {}           // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }
  const T& value() const {
    if (!ok()) throw std::logic_error("value() on a pole hit");
    return std::get<T>(v_);
  }
  const T& operator*() const { return value(); }
  const PoleHit& pole() const { return std::get<PoleHit>(v_); }

 private:
  std::variant<T, PoleHit> v_;
};

/// Guard on |bx + c| below which float evaluation reports a near pole.
inline constexpr double kNearPoleGuard = 1e-12;

namespace detail {
template <class T>
bool is_zero(const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return x == T(0);
  } else {
    return x.is_zero();
  }
}
}  // namespace detail

/// g(x) = (a - cx)/(bx - 1), the inverse of x -> (x+a)/(bx+c), defined for x != 1/b.
template <class T>
class InverseMap {
 public:
  InverseMap(T a, T b, T c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  PoleOr<T> apply(const T& x) const {
    const T den = b_ * x - T(1);
    if constexpr (std::is_floating_point_v<T>) {
      if (std::abs(den) < kNearPoleGuard) return PoleHit{0, true};
    } else {
      if (detail::is_zero(den)) return PoleHit{0, false};
    }
    return (a_ - c_ * x) / den;
  }
  PoleOr<T> operator()(const T& x) const { return apply(x); }

  /// 1/b, where the inverse is undefined.
  T pole() const { return T(1) / b_; }

 private:
  T a_, b_, c_;
};

/// f(x) = (x + a)/(bx + c) with b != 0 and c != ab.
///
/// T is Rational for exact work and double for numeric orbits.
template <class T>
class BasicMoebius {
 public:
  BasicMoebius(T a, T b, T c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (detail::is_zero(b_)) throw InvalidMap("b must be nonzero");
    if (detail::is_zero(T(c_ - a_ * b_))) throw InvalidMap("c - ab must be nonzero");
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }

  /// x_hat = -c/b.
  T pole() const { return -c_ / b_; }
  T determinant() const { return c_ - a_ * b_; }
  /// (c-1)^2 + 4ab.
  T discriminant() const { return (c_ - T(1)) * (c_ - T(1)) + T(4) * a_ * b_; }

  PoleOr<T> apply(const T& x) const {
    const T den = b_ * x + c_;
    if constexpr (std::is_floating_point_v<T>) {
      if (std::abs(den) < kNearPoleGuard) return PoleHit{0, true};
    } else {
      if (detail::is_zero(den)) return PoleHit{0, false};
    }
    return (x + a_) / den;
  }
  PoleOr<T> operator()(const T& x) const { return apply(x); }

  InverseMap<T> inverse() const { return {a_, b_, c_}; }

  /// P_{2,1}(x) = bx^2 + (c-1)x - a; vanishes exactly on the fixed points.
  T fixed_point_polynomial(const T& x) const { return b_ * x * x + (c_ - T(1)) * x - a_; }

 private:
  T a_, b_, c_;
};

using MoebiusMap = BasicMoebius<Rational>;
using MoebiusMapF = BasicMoebius<double>;

MoebiusMapF to_float(const MoebiusMap& f);

/// Orbit x, f(x), ..., up to the requested length or the first pole hit.
template <class T>
struct Orbit {
  std::vector<T> points;
  std::optional<PoleHit> pole;
};

/// Repeated application of f: the orbit x, f(x), ..., f^n(x).
template <class T>
Orbit<T> iterate_naive(const BasicMoebius<T>& f, const T& x, std::size_t n) {
  Orbit<T> orbit;
  orbit.points.reserve(n + 1);
  orbit.points.push_back(x);
  for (std::size_t k = 0; k < n; ++k) {
    auto next = f.apply(orbit.points.back());
    if (!next) {
      orbit.pole = PoleHit{k, next.pole().near};
      return orbit;
    }
    orbit.points.push_back(*next);
  }
  return orbit;
}

/// Which fixed point a quantity refers to.
enum class Which { X1, X2, Unique };

const char* to_string(Which w);

enum class FieldMode {
  Real,                ///< D < 0 has no fixed points.
  AlgebraicallyClosed  ///< D != 0 always gives two fixed points.
};

struct FixedPointSet {
  Rational discriminant;
  /// sqrt(D): rational when D is a rational square, the formal symbol otherwise.
  QuadExt sqrt_discriminant;
  /// x1 (+ branch) then x2, or the single double root when D = 0.
  std::vector<QuadExt> points;
  bool double_root = false;

  const QuadExt& x1() const { return points.at(0); }
  const QuadExt& x2() const { return points.at(1); }
  const QuadExt& at(Which w) const;
};

/// sqrt(D) as used by every labeled quantity: x1, alpha pair with its + branch.
QuadExt sqrt_discriminant(const MoebiusMap& f);

FixedPointSet fixed_points(const MoebiusMap& f, FieldMode mode = FieldMode::Real);

/// alpha = (1+c+sqrt(D))/2, beta = (1+c-sqrt(D))/2.
std::pair<QuadExt, QuadExt> alpha_beta(const MoebiusMap& f);

/// f^n(x) from the closed form in alpha and beta. PoleHit carries the step at
/// which the orbit sits on the pole.
PoleOr<Rational> iterate_closed(const MoebiusMap& f, const Rational& x, std::size_t n);

/// K_q from K_1 = 1, K_2 = 1 + c, K_{q+2} = (c+1)K_{q+1} - (c-ab)K_q.
Rational k_q(const MoebiusMap& f, std::size_t q);
/// K_1..K_qmax (index 0 holds K_1).
std::vector<Rational> k_sequence(const MoebiusMap& f, std::size_t qmax);

inline constexpr std::size_t kDefaultQmax = 64;

/// Smallest q in [2, qmax] with K_q = 0.
std::optional<std::size_t> min_period(const MoebiusMap& f, std::size_t qmax = kDefaultQmax);

/// f^q(x) = (a_q x + b_q)/(c_q x + d_q).
struct Composition {
  Rational a, b, c, d;
};

/// Coefficients of f^q from the composition recurrence with f^1 = (1, a, b, c).
Composition composition(const MoebiusMap& f, std::size_t q);

struct BadPointSet {
  enum class Stop {
    DepthReached,  ///< all requested preimages exist
    InversePole,   ///< a preimage equals 1/b, which has no preimage
    Cycle          ///< a preimage repeats an earlier point
  };

  std::size_t depth = 0;
  /// points[n] = f^{-n}(x_hat).
  std::vector<Rational> points;
  Stop stop = Stop::DepthReached;

  bool contains(const Rational& x) const;
  /// Smallest n with points[n] == x.
  std::optional<std::size_t> index_of(const Rational& x) const;
};

BadPointSet bad_points(const MoebiusMap& f, std::size_t depth);

}  // namespace moebius
