#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "moebius/moebius_map.hpp"
#include "moebius/padic_dynamics.hpp"
#include "moebius/real_dynamics.hpp"
#include "moebius/report.hpp"

namespace py = pybind11;
using namespace moebius;

namespace {

// Rationals cross the boundary as "n/m" strings; the Python side wraps them in Fraction.
Rational q(const std::string& s) { return Rational::parse(s); }

MoebiusMap make(const std::string& a, const std::string& b, const std::string& c) {
  return MoebiusMap(q(a), q(b), q(c));
}

std::vector<std::string> strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact dynamics of x -> (x+a)/(bx+c) over Q, R and Q_p";

  py::register_exception<InvalidMap>(m, "InvalidMap", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidPrime>(m, "InvalidPrime", PyExc_ValueError);

  m.def("apply", [](const std::string& a, const std::string& b, const std::string& c,
                    const std::string& x) -> std::optional<std::string> {
    const auto y = make(a, b, c).apply(q(x));
    if (!y) return std::nullopt;
    return y.value().to_string();
  });

  m.def("iterate", [](const std::string& a, const std::string& b, const std::string& c,
                      const std::string& x, std::size_t n) {
    const auto orbit = iterate_naive(make(a, b, c), q(x), n);
    return py::make_tuple(strings(orbit.points), orbit.pole.has_value());
  });

  m.def("k_sequence", [](const std::string& a, const std::string& b, const std::string& c,
                         std::size_t qmax) { return strings(k_sequence(make(a, b, c), qmax)); });

  m.def("min_period",
        [](const std::string& a, const std::string& b, const std::string& c, std::size_t qmax) {
          return min_period(make(a, b, c), qmax);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("qmax") = kDefaultQmax);

  m.def("bad_points", [](const std::string& a, const std::string& b, const std::string& c,
                         std::size_t depth) {
    const auto set = bad_points(make(a, b, c), depth);
    const char* stop = set.stop == BadPointSet::Stop::DepthReached ? "depth"
                       : set.stop == BadPointSet::Stop::InversePole ? "inverse_pole"
                                                                    : "cycle";
    return py::make_tuple(strings(set.points), stop);
  });

  m.def("limit_of_orbit",
        [](const std::string& a, const std::string& b, const std::string& c, double x0,
           double tol, std::size_t nmax) {
          const auto r = limit_of_orbit(make(a, b, c), x0, tol, nmax);
          return py::make_tuple(to_string(r.status), r.value, r.steps);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x0"), py::arg("tol") = 1e-10,
        py::arg("nmax") = kDefaultLimitSteps);

  m.def("padic_val", [](const std::string& x, std::int64_t p) -> std::optional<std::string> {
    const auto v = padic_val(q(x), p);
    if (v.is_infinite()) return std::nullopt;
    return v.exponent().to_string();
  });

  // JSON reports are returned as text and decoded with the json module.
  m.def("classify_json",
        [](const std::string& a, const std::string& b, const std::string& c,
           std::optional<std::int64_t> p, std::size_t qmax) {
          return report::classify(make(a, b, c), p, qmax).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("p") = py::none(),
        py::arg("qmax") = kDefaultQmax);

  m.def("periods_json",
        [](const std::string& a, const std::string& b, const std::string& c, std::size_t qmax) {
          return report::periods(make(a, b, c), qmax).dump();
        });
}
