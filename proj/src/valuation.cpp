#include "moebius/valuation.hpp"

#include <cmath>

namespace moebius {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
}

mpz_class pow_mpz(std::int64_t p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

Rational pow_p(std::int64_t p, long k) {
  if (k >= 0) return Rational(pow_mpz(p, k));
  return Rational(mpz_class(1), pow_mpz(p, -k));
}

/// Residue of a p-integral rational modulo `modulus`.
mpz_class reduce_mod(const Rational& x, const mpz_class& modulus) {
  mpz_class inv;
  const mpz_class den = x.den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw std::domain_error("denominator not invertible modulo " + modulus.get_str());
  }
  mpz_class r = x.num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

mpz_class sqrt_mod_prime(const mpz_class& n, const mpz_class& p) {
  if (p == 2) return n % 2;
  mpz_class q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  mpz_class c, r, t, b;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_class e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    mpz_class tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

}  // namespace

const Rational& PVal::exponent() const {
  if (is_infinite()) throw std::domain_error("valuation of zero is +inf");
  return exponent_;
}

double PVal::norm() const {
  if (is_infinite()) return 0.0;
  return std::pow(static_cast<double>(prime_), -exponent_.to_double());
}

std::string PVal::to_string() const {
  if (is_infinite()) return "0";
  return std::to_string(prime_) + "^(" + (-exponent_).to_string() + ")";
}

PVal operator*(const PVal& x, const PVal& y) {
  if (x.prime_ != y.prime_) throw std::invalid_argument("mixing valuations of different primes");
  if (x.is_infinite() || y.is_infinite()) return PVal::infinite(x.prime_);
  return {x.prime_, x.exponent_ + y.exponent_};
}

PVal operator/(const PVal& x, const PVal& y) {
  if (x.prime_ != y.prime_) throw std::invalid_argument("mixing valuations of different primes");
  if (y.is_infinite()) throw std::domain_error("division by norm 0");
  if (x.is_infinite()) return x;
  return {x.prime_, x.exponent_ - y.exponent_};
}

bool operator==(const PVal& x, const PVal& y) {
  if (x.prime_ != y.prime_ || x.kind_ != y.kind_) return false;
  return x.is_infinite() || x.exponent_ == y.exponent_;
}

std::strong_ordering operator<=>(const PVal& x, const PVal& y) {
  if (x.prime_ != y.prime_) throw std::invalid_argument("comparing norms of different primes");
  if (x.is_infinite() || y.is_infinite()) {
    if (x.is_infinite() && y.is_infinite()) return std::strong_ordering::equal;
    return x.is_infinite() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Larger valuation means smaller norm.
  return y.exponent_ <=> x.exponent_;
}

long integer_valuation(const mpz_class& n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  const mpz_class prime(static_cast<long>(p));
  mpz_class rest = n;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

PVal padic_val(const Rational& x, std::int64_t p) {
  require_prime(p);
  if (x.is_zero()) return PVal::infinite(p);
  return {p, Rational(integer_valuation(x.num(), p) - integer_valuation(x.den(), p))};
}

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Rational: return "rational";
    case Splitting::Ramified: return "ramified";
    case Splitting::Inert: return "inert";
    case Splitting::Split: return "split";
  }
  return "?";
}

QuadValuation::QuadValuation(Rational radicand, std::int64_t p) : d_(std::move(radicand)), p_(p) {
  require_prime(p_);
  rational_root_ = sqrt_rational(d_);
  if (rational_root_) {
    splitting_ = Splitting::Rational;
    return;
  }
  const long vd = padic_val(d_, p_).exponent().num().get_si();
  if (vd % 2 != 0) {
    splitting_ = Splitting::Ramified;
    return;
  }
  half_val_ = vd / 2;
  d0_ = d_ / pow_p(p_, vd);
  if (p_ == 2) {
    const long r8 = reduce_mod(d0_, mpz_class(8)).get_si();
    if (r8 == 1) {
      splitting_ = Splitting::Split;
      residue_root_ = 1;
    } else {
      splitting_ = r8 == 5 ? Splitting::Inert : Splitting::Ramified;
    }
    return;
  }
  const mpz_class prime(static_cast<long>(p_));
  const mpz_class residue = reduce_mod(d0_, prime);
  if (mpz_legendre(residue.get_mpz_t(), prime.get_mpz_t()) != 1) {
    splitting_ = Splitting::Inert;
    return;
  }
  splitting_ = Splitting::Split;
  mpz_class r = sqrt_mod_prime(residue, prime);
  const mpz_class other = prime - r;
  residue_root_ = r < other ? r : other;
}

PVal QuadValuation::sqrt_radicand_val() const {
  const PVal vd = padic_val(d_, p_);
  if (vd.is_infinite()) return vd;
  return {p_, vd.exponent() / Rational(2)};
}

PVal QuadValuation::operator()(const QuadExt& x) const {
  if (x.is_rational()) return padic_val(x.u(), p_);
  if (x.radicand() != d_) {
    throw RadicandMismatch("valuation on Q(sqrt(" + d_.to_string() + ")) applied to " +
                           x.to_string());
  }
  switch (splitting_) {
    case Splitting::Rational:
      return padic_val(x.u() + x.v() * *rational_root_, p_);
    case Splitting::Ramified:
    case Splitting::Inert: {
      const PVal vn = padic_val(x.norm(), p_);
      if (vn.is_infinite()) return vn;
      return {p_, vn.exponent() / Rational(2)};
    }
    case Splitting::Split:
      break;
  }
  // sqrt(D) = p^e * s with s a unit root of d0.
  const long vv = padic_val(x.v(), p_).exponent().num().get_si() + half_val_;
  if (x.u().is_zero()) return {p_, Rational(vv)};
  const long vu = padic_val(x.u(), p_).exponent().num().get_si();
  if (vu != vv) return {p_, Rational(std::min(vu, vv))};
  const Rational a = x.u() / (x.v() * pow_p(p_, half_val_));
  return {p_, Rational(vv + unit_sum_valuation(a))};
}

long QuadValuation::unit_sum_valuation(const Rational& a) const {
  // v(a + s) + v(a - s) = v(a^2 - d0) and both terms are >= 0.
  const long bound = padic_val(a * a - d0_, p_).exponent().num().get_si();
  const long precision = bound + 1;
  const mpz_class modulus = pow_mpz(p_, precision);
  mpz_class t = reduce_mod(a, modulus) + unit_root(precision);
  mpz_mod(t.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
  return integer_valuation(t, p_);
}

mpz_class QuadValuation::unit_root(long precision) const {
  if (p_ == 2) {
    // Roots of s^2 = d0 mod 2^m (m >= 3) are determined mod 2^(m-1) up to sign.
    const long m = precision + 1;
    const mpz_class modulus = pow_mpz(2, m);
    const mpz_class target = reduce_mod(d0_, modulus);
    mpz_class s = 1;
    for (long k = 3; k < m; ++k) {
      const mpz_class next = pow_mpz(2, k + 1);
      mpz_class diff = s * s - target;
      mpz_mod(diff.get_mpz_t(), diff.get_mpz_t(), next.get_mpz_t());
      if (diff != 0) s += pow_mpz(2, k - 1);
    }
    const mpz_class out_mod = pow_mpz(2, precision);
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), out_mod.get_mpz_t());
    return s;
  }
  const mpz_class modulus = pow_mpz(p_, precision);
  const mpz_class target = reduce_mod(d0_, modulus);
  mpz_class s = residue_root_;
  for (;;) {
    mpz_class f = s * s - target;
    mpz_mod(f.get_mpz_t(), f.get_mpz_t(), modulus.get_mpz_t());
    if (f == 0) return s;
    mpz_class inv;
    const mpz_class two_s = 2 * s;
    mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), modulus.get_mpz_t());
    s = s - f * inv;
    mpz_mod(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
  }
}

PVal quad_val(const QuadExt& x, std::int64_t p) {
  require_prime(p);
  if (x.is_rational()) return padic_val(x.u(), p);
  if (sqrt_rational(x.radicand())) {
    throw ReducibleExtension("sqrt(" + x.radicand().to_string() +
                             ") is rational; reduce the element to a Rational first");
  }
  return QuadValuation(x.radicand(), p)(x);
}

}  // namespace moebius
