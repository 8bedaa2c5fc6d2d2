#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "igusa/error.hpp"
#include "igusa/job.hpp"
#include "igusa/zeta.hpp"

namespace py = pybind11;
using namespace igusa;

namespace {

py::object fraction(const mpq_class& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

py::list fractions(const std::vector<mpq_class>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

PolySystem make_system(const std::vector<std::string>& polys, const std::vector<std::string>& vars) {
  return parse_system(polys, vars);
}

py::dict witness_dict(const std::optional<DegeneracyWitness>& w) {
  py::dict d;
  if (!w) return d;
  d["direction"] = w->direction;
  d["point"] = w->point;
  d["rank"] = w->rank;
  return d;
}

}  // namespace

PYBIND11_MODULE(_igusa, m) {
  m.doc() = "Exact local zeta functions of non-degenerate complete intersections";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<HypothesisError>(m, "HypothesisError", base);

  py::class_<RatFun>(m, "RatFun")
      .def_property_readonly("q", &RatFun::q)
      .def("taylor", [](const RatFun& r, std::size_t M) { return fractions(r.taylor(M)); }, py::arg("M"))
      .def("poles",
           [](const RatFun& r) {
             py::list out;
             for (const auto& pl : r.poles()) out.append(py::make_tuple(fraction(pl.re), pl.period, pl.multiplicity));
             return out;
           })
      .def("t_form", &RatFun::to_t_string)
      .def("s_form", &RatFun::to_s_string)
      .def("equals", &RatFun::equals)
      .def("__add__", [](const RatFun& a, const RatFun& b) { return a + b; })
      .def("__sub__", [](const RatFun& a, const RatFun& b) { return a - b; })
      .def("__mul__", [](const RatFun& a, const RatFun& b) { return a * b; })
      .def("__eq__", &RatFun::equals)
      .def("__str__", &RatFun::to_t_string)
      .def("__repr__", [](const RatFun& r) { return "<RatFun " + r.to_t_string() + ">"; });

  m.def("geometric_tail", &RatFun::geometric_tail, py::arg("q"), py::arg("a"), py::arg("b"),
        "q^a t^b / (1 - q^a t^b)");

  py::class_<ZetaReport>(m, "ZetaReport")
      .def_readonly("zeta", &ZetaReport::zeta)
      .def_readonly("L0", &ZetaReport::L0)
      .def_readonly("p", &ZetaReport::p)
      .def_property_readonly("scope", [](const ZetaReport& r) { return to_string(r.scope); })
      .def_property_readonly("skeleton", [](const ZetaReport& r) { return r.fan.skeleton; })
      .def_property_readonly("cone_count", [](const ZetaReport& r) { return r.fan.cones.size(); })
      .def_property_readonly("candidates",
                             [](const ZetaReport& r) {
                               py::list out;
                               for (const auto& c : r.candidates.lines) {
                                 out.append(py::make_tuple(c.ray, fraction(c.re), c.period));
                               }
                               return out;
                             })
      .def_property_readonly("gamma_f",
                             [](const ZetaReport& r) -> py::object {
                               return r.candidates.gamma_f ? fraction(*r.candidates.gamma_f) : py::none();
                             })
      .def_property_readonly("beta_f",
                             [](const ZetaReport& r) -> py::object {
                               return r.beta_f ? fraction(*r.beta_f) : py::none();
                             })
      .def_property_readonly("poles", [](const ZetaReport& r) {
        py::list out;
        for (const auto& pl : r.poles) {
          out.append(py::make_tuple(fraction(pl.line.re), pl.line.period, pl.line.multiplicity, pl.candidate));
        }
        return out;
      });

  auto engine = [](bool origin) {
    return [origin](const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p,
                    bool require_certificates, double budget) {
      EngineOptions opts;
      opts.require_certificates = require_certificates;
      opts.budget = budget;
      auto sys = make_system(polys, vars);
      PrimeContext ctx(p);
      py::gil_scoped_release release;
      return origin ? zeta_origin(sys, ctx, opts) : zeta_full(sys, ctx, opts);
    };
  };
  m.def("zeta", engine(false), py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("require_certificates") = true,
        py::arg("budget") = kDefaultBudget, "Z(s) over Z_p^n; the last polynomial is f_l.");
  m.def("zeta0", engine(true), py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("require_certificates") = true,
        py::arg("budget") = kDefaultBudget, "Z_0(s) over (pZ_p)^n.");

  m.def(
      "poincare_series",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p) {
        return poincare_series(make_system(polys, vars), PrimeContext(p));
      },
      py::arg("polys"), py::arg("vars"), py::arg("p"));

  m.def(
      "congruence_counts",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p,
         std::size_t depth, double budget) {
        auto t = congruence_table(make_system(polys, vars), PrimeContext(p), depth, budget);
        return py::make_tuple(t.counts, fractions(t.normalized));
      },
      py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("depth"), py::arg("budget") = kDefaultBudget,
      "(N_0..N_depth, normalised counts)");

  m.def(
      "exp_sum",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p, std::size_t m,
         std::uint64_t u, double budget) { return exp_sum(make_system(polys, vars), PrimeContext(p), m, u, budget); },
      py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("m"), py::arg("u") = 1,
      py::arg("budget") = kDefaultBudget);

  m.def(
      "check_nondegenerate",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& vars, std::uint64_t p,
         const std::string& scope) {
        if (scope != "global" && scope != "at_origin") throw DomainError("scope must be global or at_origin");
        auto c = check_nondegenerate(make_system(polys, vars), PrimeContext(p),
                                     scope == "global" ? Scope::Global : Scope::AtOrigin);
        py::dict d;
        d["ok"] = c.ok;
        d["scope"] = to_string(c.scope);
        d["directions_checked"] = c.directions_checked;
        d["witness"] = c.witness ? py::object(witness_dict(c.witness)) : py::none();
        return d;
      },
      py::arg("polys"), py::arg("vars"), py::arg("p"), py::arg("scope") = "global");

  m.def(
      "run_job",
      [](const std::string& text) {
        auto res = run_job(parse_job(text));
        return py::make_tuple(res.exit_code, res.json, res.text);
      },
      py::arg("text"), "Runs a job file's text; returns (exit_code, json, text).");
}
