#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locrep/catalog/catalog.hpp"
#include "locrep/cli/parse.hpp"
#include "locrep/cli/report.hpp"
#include "locrep/errors.hpp"
#include "locrep/padic/padic.hpp"
#include "locrep/ramification/ramification.hpp"

namespace py = pybind11;
using namespace locrep;

namespace {

cli::JobConfig make_config(std::vector<std::string> functions, const std::string& catalog,
                           const std::optional<std::string>& t0, std::size_t t0_samples, std::uint64_t prime_bound,
                           std::uint64_t seed, std::optional<std::size_t> cap) {
  cli::JobConfig c;
  c.exprs = std::move(functions);
  c.catalog = catalog;
  if (t0) c.t0 = cli::parse_rational(*t0);
  c.t0_samples = t0_samples;
  c.prime_bound = prime_bound;
  c.seed = seed;
  c.cap = cap ? *cap : cli::cap_from_env(perm::kDefaultCap);
  return c;
}

// Reports cross the boundary as JSON text; the Python package decodes them.
template <cli::json (*Run)(const cli::JobConfig&)>
std::string run(std::vector<std::string> functions, const std::string& catalog, const std::optional<std::string>& t0,
                std::size_t t0_samples, std::uint64_t prime_bound, std::uint64_t seed, std::optional<std::size_t> cap) {
  const auto c = make_config(std::move(functions), catalog, t0, t0_samples, prime_bound, seed, cap);
  py::gil_scoped_release release;
  return Run(c).dump();
}

template <cli::json (*Run)(const cli::JobConfig&)>
void def_job(py::module_& m, const char* name, const char* doc, std::size_t samples, std::uint64_t bound) {
  m.def(name, &run<Run>, doc, py::arg("functions") = std::vector<std::string>{}, py::arg("catalog") = "",
        py::arg("t0") = py::none(), py::arg("t0_samples") = samples, py::arg("prime_bound") = bound,
        py::arg("seed") = 0, py::arg("cap") = py::none());
}

}  // namespace

PYBIND11_MODULE(_locrep, m) {
  m.doc() = "Verification of sets of rational functions that locally represent Q";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<RatFunc>(m, "RatFunc")
      .def(py::init([](const std::string& s) { return cli::parse_ratfunc(s); }), py::arg("expr"))
      .def_property_readonly("degree", &RatFunc::degree)
      .def("compose", &RatFunc::compose, py::arg("inner"))
      .def("__call__",
           [](const RatFunc& f, const std::string& t) {
             return f(t == "inf" ? ProjRat::infinity() : ProjRat(cli::parse_rational(t))).to_string();
           })
      .def("__eq__", [](const RatFunc& a, const RatFunc& b) { return a == b; })
      .def("__str__", &cli::format_ratfunc)
      .def("__repr__", [](const RatFunc& f) { return "RatFunc('" + cli::format_ratfunc(f) + "')"; });

  m.def(
      "is_kp_value",
      [](const std::string& f, const std::string& t0, std::uint64_t p) {
        if (!is_prime(p)) throw DomainError("p must be prime");
        return padic::is_kp_value(cli::parse_ratfunc(f), cli::parse_rational(t0), p);
      },
      "Whether t0 = f(beta) for some beta in P^1(Q_p)", py::arg("f"), py::arg("t0"), py::arg("p"));

  m.def(
      "galois_closure_genus",
      [](std::uint64_t order, const std::vector<int>& indices) {
        return ram::galois_closure_genus(order, indices).get_str();
      },
      py::arg("order"), py::arg("indices"));

  m.def("chebyshev", [](int n) { return cli::format_ratfunc(RatFunc(catalog::chebyshev(n))); }, py::arg("n"));
  m.def(
      "redei", [](long p, const std::string& a) { return cli::format_ratfunc(catalog::redei(p, cli::parse_rational(a))); },
      py::arg("p"), py::arg("a"));
  m.def("catalog_names", &catalog::entry_names);

  def_job<cli::run_check>(m, "check", "Prime scan report", 25, 1000);
  def_job<cli::run_minimal>(m, "minimal", "Scan and minimality report", 40, 2000);
  def_job<cli::run_branch>(m, "branch", "Branch data report", 25, 1000);
  def_job<cli::run_monodromy>(m, "monodromy", "Cycle type report", 25, 1000);
  def_job<cli::run_catalog>(m, "catalog", "Catalog entry verification report", 25, 1000);

  m.def(
      "padic",
      [](const std::string& f, const std::string& t0, std::uint64_t p) {
        cli::JobConfig c;
        c.exprs = {f};
        c.t0 = cli::parse_rational(t0);
        c.p = p;
        return cli::run_padic(c).dump();
      },
      py::arg("f"), py::arg("t0"), py::arg("p"));
  m.def(
      "group",
      [](const std::string& catalog, const std::string& model, std::optional<std::size_t> cap) {
        cli::JobConfig c;
        c.catalog = catalog;
        c.model = model;
        c.cap = cap ? *cap : cli::cap_from_env(perm::kDefaultCap);
        py::gil_scoped_release release;
        return cli::run_group(c).dump();
      },
      py::arg("catalog") = "", py::arg("model") = "", py::arg("cap") = py::none());
  m.def(
      "exit_code", [](const std::string& report) { return cli::exit_code(cli::json::parse(report)); },
      py::arg("report"));
}
