#include "moebius/quad_ext.hpp"

#include <cmath>

namespace moebius {

namespace {

const Rational& common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw RadicandMismatch("cannot combine elements of Q(sqrt(" + x.radicand().to_string() +
                           ")) and Q(sqrt(" + y.radicand().to_string() + "))");
  }
  return x.radicand();
}

}  // namespace

QuadExt::QuadExt(Rational u, Rational v, Rational radicand)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(radicand)) {}

std::optional<Rational> QuadExt::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return u_;
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of a zero-norm element " + to_string());
  return {u_ / n, -v_ / n, d_};
}

QuadExt QuadExt::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadExt result(Rational(1), Rational(0), d_);
  QuadExt base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

double QuadExt::to_double() const {
  if (is_rational()) return u_.to_double();
  if (d_.sign() < 0) throw std::domain_error("no real value for " + to_string());
  return u_.to_double() + v_.to_double() * std::sqrt(d_.to_double());
}

std::string QuadExt::to_string() const {
  if (is_rational()) return u_.to_string();
  return u_.to_string() + " + " + v_.to_string() + "*sqrt(" + d_.to_string() + ")";
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  const Rational& d = common_radicand(x, y);
  return {x.u_ + y.u_, x.v_ + y.v_, d};
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  const Rational& d = common_radicand(x, y);
  return {x.u_ - y.u_, x.v_ - y.v_, d};
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  const Rational& d = common_radicand(x, y);
  return {x.u_ * y.u_ + d * x.v_ * y.v_, x.u_ * y.v_ + x.v_ * y.u_, d};
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_rational()) {
    if (y.u_.is_zero()) throw std::domain_error("division by zero");
    return {x.u_ / y.u_, x.v_ / y.u_, x.d_};
  }
  common_radicand(x, y);
  return x * y.inverse();
}

SurdForm simplify_radicand(const Rational& d) {
  if (d.is_zero()) return {Rational(0), Rational(0)};
  if (auto root = sqrt_rational(d)) return {*root, Rational(1)};
  // sqrt(n/m) = sqrt(n*m)/m.
  mpz_class n = d.num() * d.den();
  const int sign = sgn(n);
  n = abs(n);
  mpz_class outside = 1;
  constexpr unsigned long kTrialLimit = 1u << 16;
  for (unsigned long k = 2; k <= kTrialLimit && k * k <= n; ++k) {
    const unsigned long kk = k * k;
    while (mpz_divisible_ui_p(n.get_mpz_t(), kk)) {
      n /= kk;
      outside *= k;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r = sqrt(n);
    outside *= r;
    n = 1;
  }
  return {Rational(outside, d.den()), Rational(mpz_class(sign * n))};
}

QuadExt make_sqrt(const Rational& d) {
  const SurdForm s = simplify_radicand(d);
  if (s.radicand == Rational(1) || s.radicand.is_zero()) return QuadExt(s.coefficient);
  return {Rational(0), s.coefficient, s.radicand};
}

}  // namespace moebius
