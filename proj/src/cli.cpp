#include "moebius/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "moebius/report.hpp"

namespace moebius::cli {

namespace {

using report::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

MoebiusMap parse_map(const RunConfig& cfg) {
  return {Rational::parse(cfg.a), Rational::parse(cfg.b), Rational::parse(cfg.c)};
}

bool looks_decimal(const std::string& s) {
  return s.find_first_of(".eE") != std::string::npos;
}

double parse_float(const std::string& s) {
  if (!looks_decimal(s)) return Rational::parse(s).to_double();
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not a number: '" + s + "'");
  return x;
}

std::string valuation_text(const PVal& v) {
  return v.is_infinite() ? std::string("inf") : v.exponent().to_string();
}

/// Fixed point used as the reference for p-adic distances in orbit output.
Which reference_point(const PadicContext& ctx) {
  if (ctx.single_fixed_point()) return Which::Unique;
  const auto cls = classify_padic(ctx);
  if (cls.tag == PadicClassification::Tag::ConvergesTo) return *cls.target;
  return Which::X1;
}

Which parse_which(const std::string& s) {
  if (s == "x1") return Which::X1;
  if (s == "x2") return Which::X2;
  if (s == "x0") return Which::Unique;
  throw ParseError("fixed point label must be x1, x2 or x0: '" + s + "'");
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string text_summary(const MoebiusMap& f, const Json& j) {
  std::ostringstream os;
  os << "f(x) = (x + " << f.a() << ")/(" << f.b() << "*x + " << f.c() << ")\n";
  os << "pole            " << j["pole"].get<std::string>() << '\n';
  os << "discriminant    " << j["discriminant"].get<std::string>() << '\n';
  os << "alpha           " << j["alpha"]["exact"].get<std::string>() << '\n';
  os << "beta            " << j["beta"]["exact"].get<std::string>() << '\n';
  for (const auto& pt : j["fixed_points"]) {
    os << "fixed point " << pt["label"].get<std::string>() << "  " << pt["exact"].get<std::string>();
    if (pt.contains("decimal")) os << "  ~ " << decimal(pt["decimal"].get<double>());
    os << '\n';
  }
  const auto& scan = j["kq_scan"];
  os << "K_q zeros (q <= " << scan["qmax"].get<std::size_t>() << ")  ";
  if (scan["zeros"].empty()) {
    os << "none\n";
  } else {
    for (const auto& q : scan["zeros"]) os << q.get<std::size_t>() << ' ';
    os << '\n';
  }
  const auto& real = j["real"];
  os << "real verdict    " << real["verdict"].get<std::string>();
  if (!real["period"].is_null()) os << "(" << real["period"].get<std::size_t>() << ")";
  if (real.contains("limit")) {
    os << " " << real["limit_label"].get<std::string>() << " = "
       << real["limit"]["exact"].get<std::string>();
  }
  if (real["verdict"] == "Dense") os << " (no K_q zero up to q = " << real["qmax_scanned"] << ")";
  os << '\n';
  if (real.contains("theta")) os << "theta           " << decimal(real["theta"].get<double>()) << '\n';
  if (j.contains("padic")) {
    const auto& pa = j["padic"];
    os << "p-adic (p = " << pa["p"] << ", " << pa["splitting"].get<std::string>() << ")\n";
    for (const auto& pt : pa["fixed_points"]) {
      os << "  " << pt["label"].get<std::string>() << "  "
         << pt["character"]["kind"].get<std::string>() << ", |f'|_p = p^("
         << pt["character"]["multiplier_norm"]["exponent"].get<std::string>() << ")\n";
    }
    os << "  verdict       " << pa["verdict"].get<std::string>();
    if (!pa["period"].is_null()) os << "(" << pa["period"].get<std::size_t>() << ")";
    if (pa.contains("target")) os << " " << pa["target"].get<std::string>();
    os << '\n';
    if (pa.contains("siegel")) {
      os << "  Siegel disk   radius p^(" << pa["siegel"]["radius"]["exponent"].get<std::string>()
         << "), " << pa["siegel"]["relation"].get<std::string>() << '\n';
    }
    if (pa.contains("siegel_condition")) {
      os << "  Siegel test   fails: " << pa["siegel_condition"]["detail"].get<std::string>() << '\n';
    }
  }
  return os.str();
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const int range = *cfg.sweep;
  if (range < 0) throw UsageError("--sweep needs a non-negative range");
  struct Cell {
    int a, b, c;
    std::string line;
  };
  std::vector<Cell> cells;
  for (int a = -range; a <= range; ++a) {
    for (int b = -range; b <= range; ++b) {
      for (int c = -range; c <= range; ++c) {
        if (b != 0 && c != a * b) cells.push_back({a, b, c, {}});
      }
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      auto& cell = cells[i];
      const MoebiusMap f(Rational(cell.a), Rational(cell.b), Rational(cell.c));
      const auto rc = classify_real(f, cfg.qmax);
      std::ostringstream os;
      os << cell.a << ',' << cell.b << ',' << cell.c << ',' << f.discriminant() << ','
         << to_string(rc.tag) << ',';
      if (rc.period) os << *rc.period;
      if (rc.limit_label) os << to_string(*rc.limit_label);
      if (cfg.p) {
        const auto pc = classify_padic(PadicContext(f, *cfg.p), cfg.qmax);
        os << ',' << to_string(pc.tag) << ',';
        if (pc.period) os << *pc.period;
        if (pc.target) os << to_string(*pc.target);
      }
      cell.line = os.str();
    }
  };
  std::size_t nthreads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  nthreads = std::max<std::size_t>(1, std::min<std::size_t>(nthreads, 64));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  out << "a,b,c,discriminant,real_verdict,real_detail";
  if (cfg.p) out << ",padic_verdict,padic_detail";
  out << '\n';
  for (const auto& cell : cells) out << cell.line << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sweep) return cmd_sweep(cfg, out);
  const auto f = parse_map(cfg);
  if (cfg.p && !is_prime(*cfg.p)) throw InvalidPrime(std::to_string(*cfg.p) + " is not prime");
  const Json j = report::classify(f, cfg.p, cfg.qmax);
  if (cfg.format == "text") {
    out << text_summary(f, j);
  } else {
    write_json(out, j);
  }
  return kOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const auto f = parse_map(cfg);
  if (cfg.p && !is_prime(*cfg.p)) throw InvalidPrime(std::to_string(*cfg.p) + " is not prime");
  Json j = report::classify(f, cfg.p, cfg.qmax);
  j["periods"] = report::periods(f, cfg.qmax)["k"];
  if (cfg.format == "json") {
    write_json(out, j);
    return kOk;
  }
  out << text_summary(f, j);
  const auto ks = k_sequence(f, std::min<std::size_t>(cfg.qmax, 6));
  out << "K_1..K_" << ks.size() << "       ";
  for (const auto& k : ks) out << k << ' ';
  out << '\n';
  const auto rc = classify_real(f, cfg.qmax);
  if (rc.tag == RealClassification::Tag::ConvergesTo) {
    const double start = cfg.x0 ? parse_float(*cfg.x0) : f.pole().to_double() + 1.0;
    const auto lim = limit_of_orbit(f, start, cfg.tol);
    out << "float orbit     from " << decimal(start) << ": " << to_string(lim.status) << " to "
        << decimal(lim.value) << " after " << lim.steps << " steps\n";
  }
  return kOk;
}

int cmd_iterate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = parse_map(cfg);
  if (!cfg.x0) throw UsageError("iterate needs a start point -x");
  std::optional<PadicContext> ctx;
  std::optional<Which> ref;
  if (cfg.p) {
    ctx.emplace(f, *cfg.p);
    ref = reference_point(*ctx);
  }
  const auto header = [&] {
    out << "n,value_exact,value_decimal";
    if (ctx) out << ",padic_exponent";
    out << '\n';
  };

  if (looks_decimal(*cfg.x0)) {
    const auto ff = to_float(f);
    const auto orbit = iterate_naive(ff, parse_float(*cfg.x0), cfg.n);
    if (orbit.pole && orbit.pole->index == 0) {
      err << "start point is (numerically) the pole -c/b\n";
      return kPoleAtStart;
    }
    header();
    for (std::size_t k = 0; k < orbit.points.size(); ++k) {
      out << k << ",," << decimal(orbit.points[k]);
      if (ctx) out << ',';
      out << '\n';
    }
    if (orbit.pole) out << orbit.points.size() << ",pole,\n";
    return kOk;
  }

  const Rational x = Rational::parse(*cfg.x0);
  const auto orbit = iterate_naive(f, x, cfg.n);
  if (orbit.pole && orbit.pole->index == 0) {
    err << "start point " << x << " is the pole -c/b\n";
    return kPoleAtStart;
  }
  header();
  for (std::size_t k = 0; k < orbit.points.size(); ++k) {
    const auto& y = orbit.points[k];
    out << k << ',' << y << ',' << decimal(y.to_double());
    if (ctx) out << ',' << valuation_text(distance_to_fixed(*ctx, y, *ref));
    out << '\n';
  }
  if (orbit.pole) {
    out << orbit.points.size() << ",pole,";
    if (ctx) out << ',';
    out << '\n';
  }
  return kOk;
}

int cmd_periods(const RunConfig& cfg, std::ostream& out) {
  const auto f = parse_map(cfg);
  if (cfg.qmax < 2) throw UsageError("--qmax must be at least 2");
  const Json j = report::periods(f, cfg.qmax);
  if (cfg.format == "json") {
    write_json(out, j);
    return kOk;
  }
  if (cfg.format == "csv") {
    out << "q,k_q,zero\n";
    for (const auto& row : j["k"]) {
      out << row["q"].get<std::size_t>() << ',' << row["k"].get<std::string>() << ','
          << (row["zero"].get<bool>() ? 1 : 0) << '\n';
    }
    return kOk;
  }
  out << "q\tK_q\n";
  for (const auto& row : j["k"]) {
    out << row["q"].get<std::size_t>() << '\t' << row["k"].get<std::string>();
    if (row["zero"].get<bool>()) out << "\t<-- zero";
    out << '\n';
  }
  if (j["min_period"].is_null()) {
    out << "min period: none up to q = " << cfg.qmax << '\n';
  } else {
    out << "min period: " << j["min_period"].get<std::size_t>() << '\n';
  }
  return kOk;
}

int cmd_padic(const RunConfig& cfg, std::ostream& out, const std::string& about) {
  const auto f = parse_map(cfg);
  if (!cfg.p) throw UsageError("padic needs a prime -p");
  const PadicContext ctx(f, *cfg.p);
  Json j;
  j["schema"] = report::kSchema;
  j["params"] = {{"a", report::rational(f.a())}, {"b", report::rational(f.b())},
                 {"c", report::rational(f.c())}};
  j["padic"] = report::padic_block(ctx, cfg.qmax);
  if (cfg.x0) {
    const Rational x = Rational::parse(*cfg.x0);
    const Which w = about.empty() ? reference_point(ctx) : parse_which(about);
    const auto tr = radius_trajectory(ctx, x, w, cfg.n);
    Json t = report::radius_trajectory(tr);
    t["start"] = x.to_string();
    t["about"] = to_string(w);
    j["trajectory"] = t;
  }
  if (cfg.format == "text") {
    out << text_summary(f, report::classify(f, cfg.p, cfg.qmax));
    if (j.contains("trajectory")) {
      out << "radii about " << j["trajectory"]["about"].get<std::string>() << ": ";
      for (const auto& r : j["trajectory"]["radii"]) out << "p^(" << r["exponent"].get<std::string>() << ") ";
      out << '\n';
    }
  } else {
    write_json(out, j);
  }
  return kOk;
}

int cmd_density(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto f = parse_map(cfg);
  const auto rc = classify_real(f, cfg.qmax);
  if (rc.tag != RealClassification::Tag::Dense) {
    err << "density needs a Dense verdict; this map is " << to_string(rc.tag);
    if (rc.period) err << " with period " << *rc.period;
    err << ", so its orbits are not dense\n";
    return kVerdictMismatch;
  }
  const double x0 = parse_float(cfg.x0.value_or("0.3"));
  const auto h = density_histogram(to_float(f), x0, cfg.n, cfg.bins, cfg.lo, cfg.hi);
  if (cfg.format == "json") {
    Json j;
    j["schema"] = report::kSchema;
    j["edges"] = h.edges;
    j["counts"] = h.counts;
    j["underflow"] = h.underflow;
    j["overflow"] = h.overflow;
    j["skipped"] = h.skipped;
    j["empty_bins"] = h.empty_bins();
    write_json(out, j);
    return kOk;
  }
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << decimal(h.edges[i]) << ',' << decimal(h.edges[i + 1]) << ',' << h.counts[i] << '\n';
  }
  out << "-inf," << decimal(h.lo) << ',' << h.underflow << '\n';
  out << decimal(h.hi) << ",inf," << h.overflow << '\n';
  if (h.skipped) err << h.skipped << " pole steps skipped\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamics of x -> (x+a)/(bx+c) over the reals and p-adic fields", "moebius-dyn"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string about;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("-a", cfg.a, "parameter a (n or n/m)")->required()->allow_extra_args(false);
    sub->add_option("-b", cfg.b, "parameter b (n or n/m)")->required()->allow_extra_args(false);
    sub->add_option("-c", cfg.c, "parameter c (n or n/m)")->required()->allow_extra_args(false);
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    sub->add_option("--qmax", cfg.qmax, "largest q in the K_q scan")->capture_default_str();
  };

  auto* classify = app.add_subcommand("classify", "real (and p-adic) classification report");
  add_params(classify);
  classify->add_option("-p", cfg.p, "prime for the p-adic block");
  classify->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  classify->add_option("--sweep", cfg.sweep, "classify every integer triple in [-N, N]^3 (CSV)");
  classify->add_option("--threads", cfg.threads, "worker threads for --sweep");

  auto* iterate = app.add_subcommand("iterate", "orbit as CSV");
  add_params(iterate);
  iterate->add_option("-x", cfg.x0, "start point; n/m for exact, decimal for float")->required();
  cfg.n = 10;
  iterate->add_option("-n", cfg.n, "number of steps");
  iterate->add_option("-p", cfg.p, "add the p-adic distance exponent column");

  auto* periods = app.add_subcommand("periods", "table of K_q");
  add_params(periods);
  periods->add_option("--format", cfg.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* padic = app.add_subcommand("padic", "p-adic characters, Siegel disks, basins");
  add_params(padic);
  padic->add_option("-p", cfg.p, "prime")->required();
  padic->add_option("-x", cfg.x0, "start point for a radius trajectory");
  padic->add_option("-n", cfg.n, "trajectory length");
  padic->add_option("--about", about, "fixed point for the trajectory: x1, x2 or x0");
  padic->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* density = app.add_subcommand("density", "orbit histogram as CSV (dense case only)");
  add_params(density);
  density->add_option("-x", cfg.x0, "float start point (default 0.3)");
  std::size_t density_n = 100000;
  density->add_option("-n", density_n, "number of iterates")->capture_default_str();
  density->add_option("--bins", cfg.bins)->capture_default_str();
  density->add_option("--lo", cfg.lo)->capture_default_str();
  density->add_option("--hi", cfg.hi)->capture_default_str();
  density->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* rep = app.add_subcommand("report", "human-readable overview");
  add_params(rep);
  rep->add_option("-p", cfg.p, "prime for the p-adic block");
  rep->add_option("-x", cfg.x0, "float start for the numeric convergence check");
  rep->add_option("--tol", cfg.tol)->capture_default_str();
  rep->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // CLI11 reads negative numbers such as "-1" as values, but not "-1/2".
  // Glue option values that start with '-' to their flag.
  std::vector<std::string> argv;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& s = args[i];
    const bool takes_value = s == "-a" || s == "-b" || s == "-c" || s == "-x";
    if (takes_value && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-') {
      argv.push_back(s + args[i + 1]);
      ++i;
    } else {
      argv.push_back(s);
    }
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidParameters;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "cannot open " << cfg.output << " for writing\n";
      return kInvalidParameters;
    }
    sink = &file;
  }

  try {
    if (*classify) return cmd_classify(cfg, *sink);
    if (*iterate) return cmd_iterate(cfg, *sink, err);
    if (*periods) return cmd_periods(cfg, *sink);
    if (*padic) return cmd_padic(cfg, *sink, about);
    if (*density) {
      cfg.n = density_n;
      return cmd_density(cfg, *sink, err);
    }
    if (*rep) return cmd_report(cfg, *sink);
  } catch (const ParseError& e) {
    err << "invalid parameter: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const InvalidMap& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const InvalidPrime& e) {
    err << "invalid prime: " << e.what() << '\n';
    return kInvalidParameters;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kInvalidParameters;
  }
  return kInvalidParameters;
}

}  // namespace moebius::cli
