#include "moebius/moebius_map.hpp"

#include <algorithm>

namespace moebius {

MoebiusMapF to_float(const MoebiusMap& f) {
  return {f.a().to_double(), f.b().to_double(), f.c().to_double()};
}

const char* to_string(Which w) {
  switch (w) {
    case Which::X1: return "x1";
    case Which::X2: return "x2";
    case Which::Unique: return "x0";
  }
  return "?";
}

const QuadExt& FixedPointSet::at(Which w) const {
  if (points.empty()) throw std::out_of_range("no fixed points");
  if (w == Which::Unique) {
    if (!double_root) throw std::out_of_range("two distinct fixed points; pick x1 or x2");
    return points.front();
  }
  if (double_root) throw std::out_of_range("single fixed point; use Which::Unique");
  return w == Which::X1 ? points.at(0) : points.at(1);
}

QuadExt sqrt_discriminant(const MoebiusMap& f) {
  return make_sqrt(f.discriminant());
}

FixedPointSet fixed_points(const MoebiusMap& f, FieldMode mode) {
  FixedPointSet set;
  set.discriminant = f.discriminant();
  set.sqrt_discriminant = sqrt_discriminant(f);
  const Rational two_b = Rational(2) * f.b();
  const QuadExt base(Rational(1) - f.c());
  if (set.discriminant.is_zero()) {
    set.double_root = true;
    set.points.push_back(base / QuadExt(two_b));
    return set;
  }
  if (mode == FieldMode::Real && set.discriminant.sign() < 0) return set;
  set.points.push_back((base + set.sqrt_discriminant) / QuadExt(two_b));
  set.points.push_back((base - set.sqrt_discriminant) / QuadExt(two_b));
  return set;
}

std::pair<QuadExt, QuadExt> alpha_beta(const MoebiusMap& f) {
  const QuadExt root = sqrt_discriminant(f);
  const QuadExt half(Rational(1, 2));
  const QuadExt trace(Rational(1) + f.c());
  return {(trace + root) * half, (trace - root) * half};
}

PoleOr<Rational> iterate_closed(const MoebiusMap& f, const Rational& x, std::size_t n) {
  if (n == 0) return x;
  const BadPointSet bad = bad_points(f, n - 1);
  if (auto k = bad.index_of(x); k && *k < n) return PoleHit{*k, false};

  const Rational s = f.b() * x - Rational(1);
  const auto [alpha, beta] = alpha_beta(f);
  const long m = static_cast<long>(n);

  QuadExt num, den;
  if (alpha == beta) {
    const Rational al = *alpha.as_rational();
    num = QuadExt(s * Rational(m - 1) + Rational(m) * al);
    den = QuadExt(al * (s * Rational(m) + Rational(m + 1) * al));
  } else {
    const QuadExt ca = QuadExt(s) + alpha;
    const QuadExt cb = QuadExt(s) + beta;
    const QuadExt an = alpha.pow(m - 1);
    const QuadExt bn = beta.pow(m - 1);
    num = ca * an - cb * bn;
    den = ca * an * alpha - cb * bn * beta;
  }
  if (den.is_zero()) {
    // Degenerate closed form; fall back to the orbit.
    auto orbit = iterate_naive(f, x, n);
    if (orbit.pole) return *orbit.pole;
    return orbit.points.back();
  }
  const QuadExt value =
      QuadExt(f.b().inverse()) + QuadExt(-f.determinant() / f.b()) * (num / den);
  if (!value.is_rational()) {
    throw std::logic_error("closed-form iterate left an irrational part: " + value.to_string());
  }
  return value.u();
}

std::vector<Rational> k_sequence(const MoebiusMap& f, std::size_t qmax) {
  std::vector<Rational> ks;
  if (qmax == 0) return ks;
  ks.reserve(qmax);
  ks.emplace_back(1);
  if (qmax == 1) return ks;
  const Rational trace = Rational(1) + f.c();
  const Rational det = f.determinant();
  ks.push_back(trace);
  while (ks.size() < qmax) {
    const std::size_t n = ks.size();
    ks.push_back(trace * ks[n - 1] - det * ks[n - 2]);
  }
  return ks;
}

Rational k_q(const MoebiusMap& f, std::size_t q) {
  if (q == 0) throw std::invalid_argument("K_q needs q >= 1");
  return k_sequence(f, q).back();
}

std::optional<std::size_t> min_period(const MoebiusMap& f, std::size_t qmax) {
  const auto ks = k_sequence(f, qmax);
  for (std::size_t q = 2; q <= ks.size(); ++q) {
    if (ks[q - 1].is_zero()) return q;
  }
  return std::nullopt;
}

Composition composition(const MoebiusMap& f, std::size_t q) {
  if (q == 0) throw std::invalid_argument("composition needs q >= 1");
  Composition m{Rational(1), f.a(), f.b(), f.c()};
  for (std::size_t k = 1; k < q; ++k) {
    m = Composition{m.a + f.b() * m.b, f.a() * m.a + f.c() * m.b, m.c + f.b() * m.d,
                    f.a() * m.c + f.c() * m.d};
  }
  return m;
}

bool BadPointSet::contains(const Rational& x) const { return index_of(x).has_value(); }

std::optional<std::size_t> BadPointSet::index_of(const Rational& x) const {
  const auto it = std::find(points.begin(), points.end(), x);
  if (it == points.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

BadPointSet bad_points(const MoebiusMap& f, std::size_t depth) {
  BadPointSet set;
  set.depth = depth;
  set.points.push_back(f.pole());
  const auto g = f.inverse();
  while (set.points.size() <= depth) {
    auto prev = g.apply(set.points.back());
    if (!prev) {
      set.stop = BadPointSet::Stop::InversePole;
      return set;
    }
    if (set.contains(*prev)) {
      set.stop = BadPointSet::Stop::Cycle;
      return set;
    }
    set.points.push_back(*prev);
  }
  return set;
}

}  // namespace moebius
