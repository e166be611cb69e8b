#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wzcheck/engine.hpp"
#include "wzcheck/report_io.hpp"

namespace py = pybind11;
using namespace wzcheck;

namespace pybind11 {
namespace detail {

// Int <-> int, exact in both directions via decimal strings.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    object exact = reinterpret_steal<object>(PyNumber_Long(src.ptr()));
    if (!exact) {
      PyErr_Clear();
      return false;
    }
    value = mpz_class(std::string(str(exact)), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

// Rat <-> fractions.Fraction.  Anything with integer numerator and
// denominator attributes loads, so plain ints work; floats never do.
template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

  bool load(handle src, bool) {
    if (PyFloat_Check(src.ptr())) return false;
    if (!hasattr(src, "numerator") || !hasattr(src, "denominator")) return false;
    object num = src.attr("numerator");
    object den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) return false;
    value = mpq_class(std::string(str(num)) + "/" + std::string(str(den)), 10);
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(v.get_str()).release();
  }
};

}  // namespace detail
}  // namespace pybind11

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and fast modular verification of WZ-pair supercongruence claims";

  auto err = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NegativeValuationError>(m, "NegativeValuationError", err);
  py::register_exception<PrecisionExhaustedError>(m, "PrecisionExhaustedError", err);
  py::register_exception<DomainError>(m, "DomainError", err);
  py::register_exception<InternalMismatchError>(m, "InternalMismatchError", err);
  py::register_exception<ConfigError>(m, "ConfigError", err);

  py::class_<Valuation>(m, "Valuation")
      .def(py::init<long>())
      .def_static("infinity", &Valuation::infinity)
      .def("is_infinite", &Valuation::is_infinite)
      .def("finite", &Valuation::finite)
      .def("at_least", &Valuation::at_least)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__str__", &Valuation::str)
      .def("__repr__", [](Valuation v) { return "Valuation(" + v.str() + ")"; });

  m.def("valuation", py::overload_cast<const Rat&, long>(&valuation), py::arg("x"),
        py::arg("p"), "Exact p-adic valuation; infinity for x == 0.");
  m.def("reduce_mod", &reduce_mod, py::arg("x"), py::arg("p"), py::arg("k"),
        "Residue of x modulo p^k in [0, p^k); the denominator must be a unit.");
  m.def("congruent", &congruent, py::arg("a"), py::arg("b"), py::arg("p"), py::arg("k"),
        "True iff valuation(a - b, p) >= k.");
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("prime_power", &prime_power, py::arg("p"), py::arg("k"));

  m.attr("DEFAULT_UNIT_PRECISION") = kDefaultUnitPrecision;

  py::class_<FactoredResidue>(m, "FactoredResidue")
      .def_static("zero", &FactoredResidue::zero, py::arg("p"))
      .def_static("from_integer", &FactoredResidue::from_integer, py::arg("x"), py::arg("p"),
                  py::arg("unit_prec"))
      .def_static("from_rational", &FactoredResidue::from_rational, py::arg("x"), py::arg("p"),
                  py::arg("unit_prec"))
      .def_static("from_parts", &FactoredResidue::from_parts, py::arg("p"), py::arg("v"),
                  py::arg("unit"), py::arg("unit_prec"))
      .def("prime", &FactoredResidue::prime)
      .def("is_zero", &FactoredResidue::is_zero)
      .def("val", &FactoredResidue::val)
      .def("finite_val", &FactoredResidue::finite_val)
      .def("unit", &FactoredResidue::unit)
      .def("unit_precision", &FactoredResidue::unit_precision)
      .def("abs_precision", &FactoredResidue::abs_precision)
      .def("residue", &FactoredResidue::residue, py::arg("m"))
      .def("pow", &FactoredResidue::pow, py::arg("e"))
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self);

  py::class_<HarmonicPair>(m, "HarmonicPair")
      .def_readonly("h1", &HarmonicPair::h1)
      .def_readonly("h2", &HarmonicPair::h2);

  m.def("euler_numbers", &euler_numbers, py::arg("n_max"));
  m.def("euler_mod", &euler_mod, py::arg("n"), py::arg("p"));
  m.def("harmonic", &harmonic, py::arg("n"));
  m.def("pochhammer", &pochhammer, py::arg("a"), py::arg("n"));
  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("multinomial4", &multinomial4, py::arg("n"));
  m.def("fermat_quotient", &fermat_quotient, py::arg("p"));
  m.def("factored_factorial", &factored_factorial, py::arg("n"), py::arg("p"),
        py::arg("unit_prec"));
  m.def("factored_binomial", &factored_binomial, py::arg("n"), py::arg("k"), py::arg("p"),
        py::arg("unit_prec"));

  py::class_<PrimePowerContext>(m, "PrimePowerContext")
      .def(py::init<long, int>(), py::arg("p"), py::arg("unit_prec"))
      .def("prime", &PrimePowerContext::prime)
      .def("unit_prec", &PrimePowerContext::unit_prec)
      .def("factorial", &PrimePowerContext::factorial, py::arg("n"))
      .def("binomial", &PrimePowerContext::binomial, py::arg("n"), py::arg("k"))
      .def("pow2", &PrimePowerContext::pow2, py::arg("e"))
      .def("from_rational", &PrimePowerContext::from_rational, py::arg("x"));

  py::enum_<WZPairId>(m, "WZPairId")
      .value("Pair256", WZPairId::Pair256)
      .value("Pair1024", WZPairId::Pair1024);

  m.def("eval_F", &eval_F, py::arg("pair"), py::arg("n"), py::arg("k"));
  m.def("eval_G", &eval_G, py::arg("pair"), py::arg("n"), py::arg("k"));
  m.def("check_telescoping", &check_telescoping, py::arg("pair"), py::arg("n"), py::arg("k"));
  m.def("eval_F_fast", &eval_F_fast, py::arg("pair"), py::arg("n"), py::arg("k"),
        py::arg("ctx"));
  m.def("eval_G_fast", &eval_G_fast, py::arg("pair"), py::arg("n"), py::arg("k"),
        py::arg("ctx"));

  py::class_<BoundaryCheck>(m, "BoundaryCheck")
      .def_readonly("holds", &BoundaryCheck::holds)
      .def_readonly("lhs", &BoundaryCheck::lhs)
      .def_readonly("rhs", &BoundaryCheck::rhs);

  m.def("boundary_identity", &boundary_identity, py::arg("pair"), py::arg("p"));

  py::enum_<PrimeDomain>(m, "PrimeDomain")
      .value("PrimeGreaterThan3", PrimeDomain::PrimeGreaterThan3)
      .value("OddPrime", PrimeDomain::OddPrime)
      .value("AllN", PrimeDomain::AllN);

  py::enum_<EvalPath>(m, "EvalPath")
      .value("Exact", EvalPath::Exact)
      .value("Fast", EvalPath::Fast)
      .value("Both", EvalPath::Both);

  py::class_<Claim>(m, "Claim")
      .def_readonly("id", &Claim::id)
      .def_readonly("domain", &Claim::domain)
      .def_readonly("modulus_exponent", &Claim::modulus_exponent)
      .def_readonly("multi_instance", &Claim::multi_instance)
      .def_readonly("statement", &Claim::statement)
      .def_readonly("source", &Claim::source)
      .def("__repr__", [](const Claim& c) { return "<Claim " + c.id + ">"; });

  py::class_<VerificationOutcome>(m, "VerificationOutcome")
      .def_readonly("claim", &VerificationOutcome::claim)
      .def_readonly("p", &VerificationOutcome::p)
      .def_readonly("holds", &VerificationOutcome::holds)
      .def_readonly("lhs", &VerificationOutcome::lhs)
      .def_readonly("rhs", &VerificationOutcome::rhs)
      .def_readonly("modulus", &VerificationOutcome::modulus)
      .def_readonly("diff_valuation", &VerificationOutcome::diff_valuation)
      .def_readonly("path", &VerificationOutcome::path)
      .def("__repr__", [](const VerificationOutcome& o) {
        return "<" + o.claim + " p=" + std::to_string(o.p) +
               (o.holds ? " holds" : " FAILS") + " lhs=" + o.lhs + " rhs=" + o.rhs + " mod " +
               o.modulus + ">";
      });

  m.def("registry", [] { return registry(); },
        "The fixed claim registry, deterministically ordered.");
  m.def("find_claim",
        [](const std::string& id) -> py::object {
          const Claim* c = find_claim(id);
          return c ? py::cast(*c) : py::none();
        },
        py::arg("id"));
  m.def("in_domain", &in_domain, py::arg("claim"), py::arg("p"));
  m.def("claim_unit_prec", &claim_unit_prec, py::arg("claim"));

  py::class_<ClaimTables>(m, "ClaimTables")
      .def(py::init<long>(), py::arg("p_max"))
      .def("euler_p3", &ClaimTables::euler_p3, py::arg("p"));

  m.def("rhs_value", &rhs_value, py::arg("claim"), py::arg("p"), py::arg("tables"));
  m.def("evaluate_claim",
        [](const std::string& id, long p, EvalPath path) { return evaluate_claim(id, p, path); },
        py::arg("id"), py::arg("p"), py::arg("path") = EvalPath::Both,
        "Evaluate one claim at one prime (or n): one outcome per instance.");
  m.def("evaluate_claim",
        [](const Claim& c, long p, EvalPath path, const ClaimTables& tables) {
          return evaluate_claim(c, p, path, tables);
        },
        py::arg("claim"), py::arg("p"), py::arg("path"), py::arg("tables"));

  py::class_<DecompositionCheck>(m, "DecompositionCheck")
      .def_readonly("lhs_exact_equal", &DecompositionCheck::lhs_exact_equal)
      .def_readonly("rhs_congruent", &DecompositionCheck::rhs_congruent);

  m.def("check_decomposition", &check_decomposition, py::arg("pair"), py::arg("p"),
        py::arg("tables"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("claim_ids", &RunConfig::claim_ids)
      .def_readwrite("p_min", &RunConfig::p_min)
      .def_readwrite("p_max", &RunConfig::p_max)
      .def_readwrite("oracle_max", &RunConfig::oracle_max)
      .def_readwrite("identity_n_max", &RunConfig::identity_n_max)
      .def_readwrite("telescope_grid", &RunConfig::telescope_grid)
      .def_readwrite("worker_count", &RunConfig::worker_count);

  py::class_<ClaimStats>(m, "ClaimStats")
      .def_readonly("passed", &ClaimStats::pass)
      .def_readonly("failed", &ClaimStats::fail)
      .def_readonly("errored", &ClaimStats::error)
      .def_readonly("ms", &ClaimStats::ms);

  py::class_<Report>(m, "Report")
      .def_readonly("config", &Report::config)
      .def_readonly("outcomes", &Report::outcomes)
      .def_readonly("per_claim", &Report::per_claim)
      .def_readonly("passed", &Report::pass)
      .def_readonly("failed", &Report::fail)
      .def_readonly("errored", &Report::error)
      .def_readonly("wall_ms", &Report::wall_ms);

  m.def("primes_in", &primes_in, py::arg("lo"), py::arg("hi"),
        "Primes in [lo, hi], ascending; requires 2 <= lo <= hi.");
  m.def("run_suite", &run_suite, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Run the selected claims over their domains; see RunConfig.");

  m.def("to_json", &to_json, py::arg("report"), py::arg("include_timing") = true);
  m.def("to_csv", &to_csv, py::arg("report"));
  m.def("to_text", &to_text, py::arg("report"));
}
