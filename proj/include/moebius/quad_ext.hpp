#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "moebius/rational.hpp"

namespace moebius {

class RadicandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element u + v*sqrt(D) of Q(sqrt(D)).
///
/// sqrt(D) is a formal symbol: no real or p-adic embedding is chosen here.
/// Values with v = 0 are identified with the rational u and combine with
/// elements of any radicand. Two elements with v != 0 must share D.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational u) : u_(std::move(u)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational u, Rational v, Rational radicand);

  /// The symbol sqrt(D) itself.
  static QuadExt sqrt_of(const Rational& radicand) { return {Rational(0), Rational(1), radicand}; }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return v_.is_zero(); }
  std::optional<Rational> as_rational() const;
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  /// u^2 - D v^2.
  Rational norm() const { return u_ * u_ - d_ * v_ * v_; }
  /// 2u.
  Rational trace() const { return u_ + u_; }
  QuadExt conjugate() const { return {u_, -v_, d_}; }

  QuadExt inverse() const;
  QuadExt pow(long exponent) const;

  /// Real value under sqrt(D) > 0; requires D >= 0.
  double to_double() const;
  /// "u + v*sqrt(D)", or just "u" for rational values.
  std::string to_string() const;

  QuadExt operator-() const { return {-u_, -v_, d_}; }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.u_ == y.u_ && x.v_ == y.v_ && (x.v_.is_zero() || x.d_ == y.d_);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << x.to_string();
  }

 private:
  Rational u_;
  Rational v_;
  Rational d_;
};

/// sqrt(d) = coefficient * sqrt(radicand) with an integer radicand free of
/// small square factors (radicand 1 when d is a rational square, 0 when d = 0).
struct SurdForm {
  Rational coefficient;
  Rational radicand;
};

SurdForm simplify_radicand(const Rational& d);

/// sqrt(d) as an element: rational when d is a rational square, otherwise
/// coefficient * sqrt(radicand) over the simplified radicand.
QuadExt make_sqrt(const Rational& d);

}  // namespace moebius
