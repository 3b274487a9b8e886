// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N]... [--seed S]
//
// Exit status is 0 only when every selected criterion passes.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moebius/padic_dynamics.hpp"
#include "moebius/real_dynamics.hpp"
#include "moebius/valuation.hpp"
#include "support.hpp"

using namespace moebius;
using moebius::testing::Gen;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }
MoebiusMap M(long a, long b, long c) { return {R(a), R(b), R(c)}; }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure and keeps going so the detail line stays short.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass_) first_ = what;
    pass_ = false;
    ++failures_;
  }
  Outcome done(const std::string& summary) const {
    if (pass_) return {true, summary};
    std::ostringstream os;
    os << failures_ << " failure(s); first: " << first_;
    return {false, os.str()};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string first_;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome(std::uint64_t)> run;
};

std::string str(const Rational& r) { return r.to_string(); }

Outcome closed_form_equivalence(std::uint64_t seed) {
  Gen g(seed + 1);
  Check ck;
  int square = 0;
  for (int i = 0; i < 200; ++i) {
    const MoebiusMap f = g.map();
    if (sqrt_rational(f.discriminant())) ++square;
    const Rational x = moebius::testing::fresh_point(g, f, 30);
    const auto orbit = iterate_naive(f, x, 30);
    ck.require(!orbit.pole, "naive orbit hit the pole");
    if (orbit.pole) continue;
    for (std::size_t n = 1; n <= 30; ++n) {
      const auto y = iterate_closed(f, x, n);
      ck.require(y.ok() && *y == orbit.points[n],
                 "(" + str(f.a()) + "," + str(f.b()) + "," + str(f.c()) + ") x=" + str(x) +
                     " n=" + std::to_string(n));
    }
  }
  return ck.done("200 maps x 30 steps exact (" + std::to_string(square) + " with rational sqrt(D))");
}

Outcome periodicity(std::uint64_t seed) {
  Gen g(seed + 2);
  Check ck;
  const std::vector<std::pair<MoebiusMap, std::size_t>> periodic{
      {M(1, 1, -1), 2}, {M(-1, 1, 0), 3}, {M(1, -1, 1), 4}};
  for (const auto& [f, q] : periodic) {
    ck.require(min_period(f, q) == q, "K_q scan for q=" + std::to_string(q));
    for (int i = 0; i < 50; ++i) {
      const Rational x = moebius::testing::fresh_point(g, f, 2 * q);
      const auto y = iterate_closed(f, x, q);
      ck.require(y.ok() && *y == x, "f^" + std::to_string(q) + "(" + str(x) + ") != x");
    }
  }
  int triples = 0;
  while (triples < 50) {
    const MoebiusMap f = g.map();
    if (min_period(f, 12)) continue;
    ++triples;
    for (int i = 0; i < 4; ++i) {
      const Rational x = moebius::testing::fresh_point(g, f, 14);
      for (std::size_t q = 2; q <= 12; ++q) {
        const auto y = iterate_closed(f, x, q);
        ck.require(y.ok() && *y != x, "non-periodic map has f^q(x) = x");
      }
    }
  }
  return ck.done("3 periodic maps x 50 points; 50 aperiodic maps x 4 points x q<=12");
}

Outcome divisibility(std::uint64_t seed) {
  Gen g(seed + 3);
  Check ck;
  for (int i = 0; i < 100; ++i) {
    const MoebiusMap f = g.map();
    const auto ks = k_sequence(f, 12);
    for (std::size_t q = 1; q <= 12; ++q) {
      const Composition m = composition(f, q);
      const Rational& K = ks[q - 1];
      ck.require(m.c == f.b() * K, "c_q != b K_q");
      ck.require(m.d - m.a == (f.c() - R(1)) * K, "d_q - a_q != (c-1) K_q");
      ck.require(m.b == f.a() * K, "b_q != a K_q");
    }
  }
  return ck.done("100 triples, q <= 12");
}

Outcome real_convergence(std::uint64_t seed) {
  Gen g(seed + 4);
  Check ck;
  std::ostringstream note;

  const MoebiusMap f = M(1, 2, 3);
  const double target = (std::sqrt(3.0) - 1.0) / 2.0;
  std::uniform_real_distribution<double> start(-50.0, 50.0);
  double worst = 0.0;
  std::size_t most_steps = 0;
  for (int i = 0; i < 10; ++i) {
    const double x0 = start(g.engine());
    const auto lim = limit_of_orbit(to_float(f), x0, 1e-12, 500);
    ck.require(lim.converged(), "(1,2,3) x0=" + std::to_string(x0) + " did not converge");
    worst = std::max(worst, std::abs(lim.value - target));
    most_steps = std::max(most_steps, lim.steps);
  }
  ck.require(worst < 1e-8, "(1,2,3) error " + std::to_string(worst));
  note << "(1,2,3): max error " << worst << " in <= " << most_steps << " steps; ";

  // Double root: error after n steps is |A|/n with A = (1+c)/(2b) = -2.
  const MoebiusMap g0 = M(1, -1, 3);
  double best = 1.0;
  for (double x0 : {0.0, 3.5, -7.0}) {
    const auto lim = limit_of_orbit(g0, x0, 1e-14, 100000);
    double x = x0;
    double closest = std::abs(x - 1.0);
    for (int n = 0; n < 100000; ++n) {
      x = *to_float(g0)(x);
      closest = std::min(closest, std::abs(x - 1.0));
    }
    best = std::min(best, closest);
    ck.require(closest < 1e-6, "(1,-1,3) x0=" + std::to_string(x0) +
                                   ": closest approach to 1 in 1e5 steps is " +
                                   std::to_string(closest) + " (limit_of_orbit: " +
                                   to_string(lim.status) + ")");
  }
  note << "(1,-1,3): closest approach " << best << " in 1e5 steps";
  Outcome out = ck.done(note.str());
  if (!out.pass) out.detail += "; " + note.str();
  return out;
}

Outcome density(std::uint64_t) {
  Check ck;
  const auto dense = density_histogram(to_float(MoebiusMap(R(1), R(-1), R(1, 2))), 0.3, 100000,
                                       40, -10.0, 10.0);
  ck.require(dense.empty_bins() == 0,
             std::to_string(dense.empty_bins()) + " empty bins for (1,-1,1/2)");
  const auto periodic = density_histogram(to_float(M(-1, 1, 0)), 0.3, 100000, 40, -10.0, 10.0);
  ck.require(periodic.nonempty_bins() <= 3,
             std::to_string(periodic.nonempty_bins()) + " occupied bins for (-1,1,0)");
  return ck.done("(1,-1,1/2): 0/40 empty bins; (-1,1,0): " +
                 std::to_string(periodic.nonempty_bins()) + " occupied");
}

Outcome padic_attraction(std::uint64_t) {
  Check ck;
  const MoebiusMap f = M(0, 1, 5);
  const auto orbit = iterate_naive(f, R(1), 30);
  ck.require(!orbit.pole, "orbit of 1 hit the pole");
  Rational prev(-1000);
  std::string seq;
  for (std::size_t n = 0; n < orbit.points.size(); ++n) {
    const Rational e = padic_val(orbit.points[n] - R(-4), 5).exponent();
    ck.require(e >= prev, "exponent decreased at n=" + std::to_string(n));
    ck.require(e >= Rational(static_cast<long>(n) - 2), "exponent < n-2 at n=" + std::to_string(n));
    prev = e;
    if (n < 4) seq += e.to_string() + ",";
  }
  return ck.done("(0,1,5) p=5: exponents " + seq + "... nondecreasing, >= n-2 for n <= 30");
}

Outcome siegel_invariance(std::uint64_t seed) {
  Gen g(seed + 7);
  Check ck;
  const PadicContext ctx(M(1, -1, 3), 2);
  const PVal alpha = siegel_unique(ctx).radius;
  ck.require(alpha == PVal(2, R(1)), "alpha != 1/2");
  for (int i = 0; i < 10; ++i) {
    const Rational unit(2 * g.integer(0, 50) + 1, 2 * g.integer(0, 20) + 1);
    const Rational x = R(1) + Rational(2).pow(2 + g.integer(0, 4)) * unit * (g.coin() ? 1 : -1);
    const PVal r = padic_val(x - R(1), 2);
    const auto orbit = iterate_naive(ctx.map(), x, 20);
    ck.require(!orbit.pole, "pole hit inside the disk");
    for (const auto& y : orbit.points)
      ck.require(padic_val(y - R(1), 2) == r, "radius changed for x=" + str(x));
  }
  for (int i = 0; i < 10; ++i) {
    const Rational unit(2 * g.integer(0, 50) + 1, 2 * g.integer(0, 20) + 1);
    const Rational x = R(1) + Rational(2).pow(-g.integer(0, 4)) * unit * (g.coin() ? 1 : -1);
    if (x == R(3)) continue;  // the pole
    const auto y = ctx.map()(x);
    ck.require(y.ok() && padic_val(*y - R(1), 2) == alpha,
               "x=" + str(x) + " did not land on S_{1/2}(1)");
  }
  return ck.done("(1,-1,3) p=2: 10 inner points fixed radius for n<=20, 10 outer land on S_{1/2}(1)");
}

Outcome ramified_siegel(std::uint64_t) {
  Check ck;
  const PadicContext ctx(M(1, 3, 1), 3);
  const auto res = siegel_known(ctx);
  ck.require(std::holds_alternative<SiegelReport>(res), "condition (c1) reported as failing");
  if (auto* rep = std::get_if<SiegelReport>(&res)) {
    ck.require(rep->radius == PVal::norm_power(3, R(1)), "radius " + rep->radius.to_string());
    ck.require(rep->relation == SiegelReport::Relation::Equal, "relation is not 'equal'");
  }
  const auto tr = radius_trajectory(ctx, R(0), Which::X1, 20);
  ck.require(tr.radii.size() == 21, "trajectory too short");
  for (const auto& r : tr.radii)
    ck.require(r == PVal::norm_power(3, R(1, 2)), "|f^n(0) - x1|_3 = " + r.to_string());
  return ck.done("(1,3,1) p=3: (c1) holds, radius 3^(1), SI(x1) = SI(x2), |f^n(0)-x1|_3 = 3^(1/2)");
}

Outcome radius_reduction(std::uint64_t seed) {
  Gen g(seed + 9);
  Check ck;
  struct Ctx {
    MoebiusMap f;
    std::int64_t p;
  };
  std::vector<Ctx> contexts{
      {M(0, 1, 5), 5},  {M(1, 3, 1), 3},  {M(1, -1, 3), 2},  {M(1, -1, 3), 3},
      {M(1, -1, 3), 5}, {M(0, 3, 2), 3},  {M(1, 2, 3), 11},  {M(1, 2, 3), 2},
      {M(3, 1, 0), 3},  {M(5, 1, 0), 5},  {MoebiusMap(R(4, 9), R(3), R(7, 3)), 3}};
  for (long p : {2, 3, 5, 7}) {
    contexts.push_back({M(0, 1, p), p});
    contexts.push_back({M(0, p, p), p});
  }
  for (int i = 0; i < 40; ++i) contexts.push_back({g.map(6, 3), std::array<int, 4>{2, 3, 5, 7}[i % 4]});
  std::size_t runs = 0;
  for (const auto& c : contexts) {
    const PadicContext ctx(c.f, c.p);
    const std::vector<Which> targets =
        ctx.single_fixed_point() ? std::vector<Which>{Which::Unique}
                                 : std::vector<Which>{Which::X1, Which::X2};
    for (int i = 0; i < 5; ++i) {
      const Rational x = i == 0 ? R(0) : g.padic_rational(c.p);
      if (bad_points(c.f, 20).contains(x)) continue;
      for (Which w : targets) {
        if (w != Which::Unique &&
            ctx.fixed().at(w == Which::X1 ? Which::X2 : Which::X1) == QuadExt(x)) {
          continue;
        }
        const auto tr = radius_trajectory(ctx, x, w, 20);
        ++runs;
        ck.require(!tr.pole && tr.matches, "(" + str(c.f.a()) + "," + str(c.f.b()) + "," +
                                               str(c.f.c()) + ") p=" + std::to_string(c.p) +
                                               " x=" + str(x));
      }
    }
  }
  return ck.done(std::to_string(contexts.size()) + " contexts, " + std::to_string(runs) +
                 " trajectories of length 20 equal their psi/phi iterates");
}

Outcome valuation_arithmetic(std::uint64_t seed) {
  Gen g(seed + 10);
  Check ck;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 500; ++i) {
      const Rational x = g.padic_rational(p), y = g.padic_rational(p);
      const PVal vx = padic_val(x, p), vy = padic_val(y, p);
      ck.require(padic_val(x * y, p) == vx * vy, "multiplicativity");
      const PVal vs = padic_val(x + y, p);
      ck.require(vs <= std::max(vx, vy), "strong triangle");
      if (vx != vy) ck.require(vs == std::max(vx, vy), "equality case of strong triangle");
    }
    for (int i = 0; i < 200; ++i) {
      const Rational d = g.nonzero_rational(40, 3);
      if (sqrt_rational(d)) continue;
      const QuadExt x(g.padic_rational(p), g.padic_rational(p), d);
      ck.require(quad_val(x, p) * quad_val(x.inverse(), p) == PVal::unit(p), "v(x) + v(1/x) != 0");
    }
  }
  return ck.done("500 pairs x p in {2,3,5,7}; v(x)+v(1/x)=0 on quadratic elements");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  std::uint64_t seed = moebius::testing::kDefaultSeed;
  app.add_option("--criterion", only, "run only these criteria (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--seed", seed, "generator seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "closed-form oracle equivalence", 30, closed_form_equivalence},
      {2, "periodicity criterion", 10, periodicity},
      {3, "divisibility identity", 5, divisibility},
      {4, "real convergence", 5, real_convergence},
      {5, "density at desk scale", 5, density},
      {6, "p-adic attraction", 5, padic_attraction},
      {7, "Siegel invariance", 5, siegel_invariance},
      {8, "ramified Siegel case", 5, ramified_siegel},
      {9, "radius-map reduction", 5, radius_reduction},
      {10, "valuation arithmetic", 5, valuation_arithmetic},
  };
  const std::set<int> selected(only.begin(), only.end());
  bool all_pass = true;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run(seed);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    std::printf("%s %2d %-32s %6.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                out.detail.c_str());
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
