#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// Oracles here deliberately avoid the library's own algorithms.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "moebius/moebius_map.hpp"
#include "moebius/rational.hpp"

namespace moebius::testing {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// MOEBIUS_TEST_SEED overrides the fixed default.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("MOEBIUS_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// n/m with |n| <= num_bound, 1 <= m <= den_bound.
  Rational rational(long num_bound = 30, long den_bound = 12) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }
  Rational nonzero_rational(long num_bound = 30, long den_bound = 12) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (!r.is_zero()) return r;
    }
  }
  /// Rationals with a planted power of p so valuations are spread out.
  Rational padic_rational(std::int64_t p) {
    Rational x = nonzero_rational(40, 40);
    const long k = integer(-3, 4);
    return x * Rational(p).pow(k);
  }

  /// A valid map with small rational parameters.
  MoebiusMap map(long num_bound = 9, long den_bound = 4) {
    for (;;) {
      Rational a = rational(num_bound, den_bound);
      Rational b = rational(num_bound, den_bound);
      Rational c = rational(num_bound, den_bound);
      if (b.is_zero() || c == a * b) continue;
      return {a, b, c};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// v_p of a nonzero integer by repeated division.
inline long oracle_int_val(mpz_class n, long p) {
  if (n < 0) n = -n;
  long k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

/// v_p of a nonzero rational; nullopt for zero.
inline std::optional<long> oracle_val(const Rational& x, long p) {
  if (x.is_zero()) return std::nullopt;
  return oracle_int_val(x.num(), p) - oracle_int_val(x.den(), p);
}

/// Smallest non-negative s < p^k with s^2 = d (mod p^k), by exhaustive search.
inline std::optional<long> oracle_sqrt_mod(long d, long p, int k) {
  long m = 1;
  for (int i = 0; i < k; ++i) m *= p;
  d = ((d % m) + m) % m;
  for (long s = 0; s < m; ++s)
    if ((s * s) % m == d) return s;
  return std::nullopt;
}

/// Orbit by direct substitution, written independently of BasicMoebius::apply.
inline std::optional<Rational> oracle_iterate(const Rational& a, const Rational& b,
                                              const Rational& c, Rational x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const Rational den = b * x + c;
    if (den.is_zero()) return std::nullopt;
    x = (x + a) / den;
  }
  return x;
}

/// 2x2 matrix power of [[1, a], [b, c]]; entries (a_q, b_q, c_q, d_q).
inline std::vector<Rational> oracle_matrix_power(const MoebiusMap& f, std::size_t q) {
  std::vector<Rational> r{Rational(1), Rational(0), Rational(0), Rational(1)};
  const std::vector<Rational> m{Rational(1), f.a(), f.b(), f.c()};
  for (std::size_t i = 0; i < q; ++i) {
    r = {r[0] * m[0] + r[1] * m[2], r[0] * m[1] + r[1] * m[3], r[2] * m[0] + r[3] * m[2],
         r[2] * m[1] + r[3] * m[3]};
  }
  return r;
}

/// A rational start outside the bad set up to `depth`, off the fixed points.
inline Rational fresh_point(Gen& g, const MoebiusMap& f, std::size_t depth) {
  const BadPointSet bad = bad_points(f, depth);
  for (;;) {
    Rational x = g.rational(40, 15);
    if (bad.contains(x)) continue;
    if (f.fixed_point_polynomial(x).is_zero()) continue;
    return x;
  }
}

}  // namespace moebius::testing
