#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "poincare/cli.hpp"
#include "poincare/error.hpp"
#include "poincare/families.hpp"
#include "poincare/json_io.hpp"
#include "poincare/netconics.hpp"
#include "poincare/series.hpp"

namespace py = pybind11;
using namespace poincare;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

IdealPresentation from_py(const py::dict& d) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(d));
  return presentation_from_text(text);
}

IntPolynomial ints(const py::sequence& s) {
  IntPolynomial out;
  for (const auto& v : s) out.push_back(Integer::parse(std::string(py::str(v))));
  return out;
}

py::list py_ints(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& c : v) out.append(py::int_(py::module_::import("builtins").attr("int")(c.to_string())));
  return out;
}

py::object rational(const RationalFunction& f) { return to_py(rational_to_json(f)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Betti numbers and Poincare series of local Artinian algebras";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<ResourceLimit> resource_limit(m, "ResourceLimit", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const ResourceLimit& e) {
      py::set_error(resource_limit, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "family",
      [](const std::string& name, std::size_t n, long alpha, int p, std::vector<unsigned> exponents,
         unsigned socle_degree) {
        FamilySpec spec;
        spec.tag = parse_family_tag(name);
        spec.n = n;
        spec.alpha = alpha;
        spec.p = p;
        spec.exponents = std::move(exponents);
        spec.socle_degree = socle_degree;
        return to_py(presentation_to_json(family_ideal(spec)));
      },
      py::arg("name"), py::arg("n"), py::arg("alpha") = 0, py::arg("p") = -1,
      py::arg("exponents") = std::vector<unsigned>{}, py::arg("socle_degree") = 3,
      "Presentation dict of a named family.");

  m.def(
      "invariants",
      [](const py::dict& pres) {
        const IdealPresentation p = from_py(pres);
        const LocalAlgebra a = build_quotient_algebra(p);
        return to_py(invariants_to_json(a, algebra_invariants(a), minimal_generator_count(p)));
      },
      py::arg("presentation"));

  m.def(
      "betti",
      [](const py::dict& pres, std::size_t max_step, const std::string& field) {
        IdealPresentation p = from_py(pres);
        if (field != "file") p.field = Field::parse_selector(field);
        BettiResult r;
        {
          py::gil_scoped_release release;
          r = betti_numbers(build_quotient_algebra(p), max_step);
        }
        return to_py(betti_to_json(r));
      },
      py::arg("presentation"), py::arg("max_step"), py::arg("field") = "file",
      "Betti numbers b_0..b_max_step; field 'file' keeps the presentation's characteristic.");

  m.def(
      "normalize", [](const py::sequence& num, const py::sequence& den) { return rational(RationalFunction(ints(num), ints(den))); },
      py::arg("num"), py::arg("den"));

  m.def(
      "expand",
      [](const py::sequence& num, const py::sequence& den, std::size_t order) {
        return py_ints(expand_rational(RationalFunction(ints(num), ints(den)), order).coefficients);
      },
      py::arg("num"), py::arg("den"), py::arg("order"));

  m.def(
      "fit",
      [](const py::sequence& coeffs, std::size_t num_deg, std::size_t den_deg) -> py::object {
        const auto f = fit_rational(TruncatedSeries{ints(coeffs)}, num_deg, den_deg);
        if (!f) return py::none();
        return rational(*f);
      },
      py::arg("coefficients"), py::arg("num_deg"), py::arg("den_deg"));

  m.def(
      "transform_socle",
      [](const py::sequence& num, const py::sequence& den, const std::string& direction) {
        if (direction != "toA" && direction != "fromA") throw InputError("direction must be toA or fromA");
        return rational(transform_socle(RationalFunction(ints(num), ints(den)),
                                        direction == "toA" ? SocleDirection::ToA : SocleDirection::FromA));
      },
      py::arg("num"), py::arg("den"), py::arg("direction"));

  m.def(
      "transform_tate",
      [](const py::sequence& num, const py::sequence& den, bool square) {
        return rational(
            transform_tate(RationalFunction(ints(num), ints(den)), square ? TateKind::Square : TateKind::NonSquare));
      },
      py::arg("num"), py::arg("den"), py::arg("square") = false);

  m.def(
      "golod",
      [](const py::sequence& num, const py::sequence& den, std::size_t m) {
        return rational(transform_golod_socle_vars(RationalFunction(ints(num), ints(den)), m));
      },
      py::arg("num"), py::arg("den"), py::arg("m"));

  m.def(
      "pipeline",
      [](const py::sequence& num, const py::sequence& den, std::size_t n) {
        return rational(compose_h1331_pipeline(RationalFunction(ints(num), ints(den)), n));
      },
      py::arg("num"), py::arg("den"), py::arg("n"));

  m.def(
      "verify_family",
      [](const std::string& name, std::size_t n, std::size_t max_step, const std::string& field) {
        FamilySpec spec;
        spec.tag = parse_family_tag(name);
        spec.n = n;
        spec.field = Field::parse_selector(field);
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_family(spec, max_step);
        }
        return to_py(report_to_json(r));
      },
      py::arg("name"), py::arg("n"), py::arg("max_step"), py::arg("field") = "Q");

  m.def(
      "verify",
      [](const py::dict& pres, std::size_t max_step) {
        const IdealPresentation p = from_py(pres);
        return to_py(report_to_json(verify_presentation(p, max_step, {}, "presentation")));
      },
      py::arg("presentation"), py::arg("max_step"));

  m.def(
      "netclass",
      [](const py::dict& pres, std::uint64_t seed) {
        SquareSearchOptions opts;
        opts.seed = seed;
        return to_py(netclass_to_json(classify_net(build_quotient_algebra(from_py(pres)), opts)));
      },
      py::arg("presentation"), py::arg("seed") = 1);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const CommandResult r = execute(args);
        return py::make_tuple(r.status, r.out, r.err);
      },
      py::arg("args"), "Runs one command line; returns (status, stdout, stderr).");
}
