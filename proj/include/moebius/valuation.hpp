#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "moebius/quad_ext.hpp"
#include "moebius/rational.hpp"

namespace moebius {

class InvalidPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ReducibleExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// p-adic valuation v with an exact rational exponent; the norm is p^(-v).
///
/// Doubles as the value of a p-adic norm: the ordering operators compare
/// norms, so a larger valuation sorts first and +inf (norm 0) is the minimum.
class PVal {
 public:
  enum class Kind { Finite, Infinite };

  PVal(std::int64_t prime, Rational exponent)
      : prime_(prime), kind_(Kind::Finite), exponent_(std::move(exponent)) {}

  /// Valuation +inf, i.e. norm 0.
  static PVal infinite(std::int64_t prime) { return PVal(prime); }
  /// The norm value p^e (valuation -e).
  static PVal norm_power(std::int64_t prime, Rational e) { return {prime, -e}; }
  static PVal unit(std::int64_t prime) { return {prime, Rational(0)}; }

  std::int64_t prime() const { return prime_; }
  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::Infinite; }

  /// The valuation v. Throws for +inf.
  const Rational& exponent() const;
  /// -v, the power of p in the norm. Throws for +inf.
  Rational norm_exponent() const { return -exponent(); }
  /// Decimal approximation of p^(-v); 0 for +inf.
  double norm() const;

  /// "p^(-v)" with -v in lowest terms, or "0".
  std::string to_string() const;

  /// Norm product: valuations add.
  friend PVal operator*(const PVal& x, const PVal& y);
  /// Norm quotient; the divisor must be finite.
  friend PVal operator/(const PVal& x, const PVal& y);

  friend bool operator==(const PVal& x, const PVal& y);
  friend std::strong_ordering operator<=>(const PVal& x, const PVal& y);

  friend std::ostream& operator<<(std::ostream& os, const PVal& x) { return os << x.to_string(); }

 private:
  explicit PVal(std::int64_t prime) : prime_(prime), kind_(Kind::Infinite) {}

  std::int64_t prime_;
  Kind kind_;
  Rational exponent_;
};

/// Largest k with p^k | n, for n != 0.
long integer_valuation(const mpz_class& n, std::int64_t p);

/// Valuation of a rational; +inf for zero. Throws InvalidPrime.
PVal padic_val(const Rational& x, std::int64_t p);

/// How the prime p behaves in Q(sqrt(D)).
enum class Splitting {
  Rational,   ///< D is a square in Q; the extension is trivial.
  Ramified,   ///< one prime above p, e = 2.
  Inert,      ///< one prime above p, f = 2.
  Split,      ///< D is a square in Q_p; two inequivalent extensions.
};

std::string to_string(Splitting s);

/// Valuation on Q(sqrt(D)) extending v_p.
///
/// For ramified and inert p the extension is unique and v(x) = v(N(x))/2.
/// For split p, sqrt(D) is a square root in Q_p and the valuation depends on
/// which one; the canonical embedding sends sqrt(D) to p^e*s where s is the
/// unit root with the smallest residue mod p (p odd) or s = 1 mod 4 (p = 2).
/// Negating sqrt(D) swaps v(x) and v(conj x).
class QuadValuation {
 public:
  QuadValuation(Rational radicand, std::int64_t p);

  std::int64_t prime() const { return p_; }
  const Rational& radicand() const { return d_; }
  Splitting splitting() const { return splitting_; }
  /// v(sqrt(D)) = v(D)/2 (+inf for D = 0).
  PVal sqrt_radicand_val() const;

  PVal operator()(const Rational& x) const { return padic_val(x, p_); }
  PVal operator()(const QuadExt& x) const;

 private:
  /// v(a + s) for a unit rational a and the embedded unit root s of d0_.
  long unit_sum_valuation(const Rational& a) const;
  /// s mod p^precision, s^2 = d0_ in Z_p.
  mpz_class unit_root(long precision) const;

  Rational d_;
  std::int64_t p_;
  Splitting splitting_ = Splitting::Rational;
  std::optional<Rational> rational_root_;
  long half_val_ = 0;  // e with v(D) = 2e, split case
  Rational d0_;        // D / p^(2e), split case
  mpz_class residue_root_;
};

/// v(x) = v(N(x))/2 for x in Q(sqrt(D)) with D not a rational square.
/// Split primes use the canonical embedding of QuadValuation.
/// Throws ReducibleExtension when D is a rational square and x is irrational
/// as written.
PVal quad_val(const QuadExt& x, std::int64_t p);

}  // namespace moebius
