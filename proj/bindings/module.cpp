// Python bindings. Arbitrary-precision integers cross the boundary as
// native Python ints (decimal-string bridge); rationals come back as
// fractions.Fraction. Reports are returned in the machine JSON format.

#include "coble/enriques.hpp"
#include "coble/scenarios.hpp"
#include "coble/singular.hpp"
#include "coble/surface_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace coble;

Int intFromPy(py::handle h) {
  PyObject* num = PyNumber_Long(h.ptr());
  if (!num) throw py::error_already_set();
  py::int_ v = py::reinterpret_steal<py::int_>(num);
  return Int(py::str(v).cast<std::string>());
}

py::int_ intToPy(const Int& v) {
  PyObject* out = PyLong_FromString(v.str().c_str(), nullptr, 10);
  if (!out) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(out);
}

py::object ratToPy(const Rat& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(intToPy(numerator(q)), intToPy(denominator(q)));
}

IntVec vecFromPy(py::handle seq) {
  IntVec out;
  for (py::handle item : py::reinterpret_borrow<py::iterable>(seq)) out.push_back(intFromPy(item));
  return out;
}

IntMat matFromPy(py::handle rows) {
  std::vector<IntVec> parsed;
  for (py::handle row : py::reinterpret_borrow<py::iterable>(rows)) parsed.push_back(vecFromPy(row));
  return IntMat::fromRows(parsed);
}

py::list vecToPy(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(intToPy(x));
  return out;
}

py::list matToPy(const IntMat& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(vecToPy(m.row(i)));
  return out;
}

HJChain chainFromPy(py::handle seq) { return vecFromPy(seq); }

py::list chainToPy(const HJChain& chain) { return vecToPy(chain); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact lattice computations backing the coble package";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SurfaceParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "snf",
      [](py::handle rows) {
        SnfResult r = smithNormalForm(matFromPy(rows));
        py::dict out;
        out["d"] = matToPy(r.d);
        out["u"] = matToPy(r.u);
        out["v"] = matToPy(r.v);
        out["divisors"] = vecToPy(r.divisors);
        return out;
      },
      py::arg("rows"),
      "Smith normal form with unimodular witnesses: u * rows * v = d.");

  m.def(
      "present_group",
      [](const std::vector<std::string>& generators, py::handle relations) {
        PresentedGroup g = presentGroup(generators, matFromPy(relations));
        py::dict out;
        out["rank"] = g.rank;
        out["torsion"] = vecToPy(g.torsion);
        return out;
      },
      py::arg("generators"), py::arg("relations"),
      "Free rank and torsion of <generators | rows of relations>.");

  m.def(
      "kernel_basis",
      [](py::handle rows) {
        py::list out;
        for (const IntVec& v : kernelBasis(matFromPy(rows))) out.append(vecToPy(v));
        return out;
      },
      py::arg("rows"), "Basis of the integer kernel {x : rows * x = 0}.");

  m.def(
      "saturate",
      [](py::handle vectors, std::size_t ambient_rank) {
        std::vector<IntVec> vs;
        for (py::handle v : py::reinterpret_borrow<py::iterable>(vectors)) vs.push_back(vecFromPy(v));
        SaturationResult r = saturate(vs, ambient_rank);
        py::dict out;
        py::list basis;
        for (const IntVec& v : r.basis) basis.append(vecToPy(v));
        out["basis"] = basis;
        out["index"] = intToPy(r.index);
        return out;
      },
      py::arg("vectors"), py::arg("ambient_rank"),
      "Saturation of the span of the row vectors inside Z^ambient_rank.");

  m.def(
      "hj_expand",
      [](py::handle n, py::handle a) { return chainToPy(hjExpand(intFromPy(n), intFromPy(a))); },
      py::arg("n"), py::arg("a"),
      "Hirzebruch-Jung expansion of n/a (0 < a < n, coprime).");

  m.def(
      "hj_evaluate",
      [](py::handle chain) { return ratToPy(hjEvaluate(chainFromPy(chain))); },
      py::arg("chain"), "Exact value of a chain as a Fraction.");

  m.def(
      "is_wahl",
      [](py::handle chain) -> py::object {
        std::optional<CyclicQuotient> w = isWahl(chainFromPy(chain));
        if (!w) return py::none();
        return py::make_tuple(intToPy(w->n), intToPy(w->a));
      },
      py::arg("chain"), "(n, a) when the chain's value is n^2/(na-1), else None.");

  m.def(
      "is_t_chain",
      [](py::handle chain) -> py::object {
        std::optional<TParams> t = isTChain(chainFromPy(chain));
        if (!t) return py::none();
        return py::make_tuple(intToPy(t->d), intToPy(t->n), intToPy(t->a));
      },
      py::arg("chain"),
      "(d, n, a) when the chain's value is dn^2/(dna-1) with n >= 2, else None.");

  m.def(
      "t_chain_from_s", [](int s) { return chainToPy(tChainFromS(s)); }, py::arg("s"),
      "The length-s chain [4] or [3, 2 x (s-2), 3].");

  m.def(
      "wahl_family_chain", [](int k) { return chainToPy(wahlFamilyChain(k)); },
      py::arg("k"), "k-th member of the family [4], [2,2,6], [2,2,2,2,8], ...");

  m.def("milnor_rank", &milnorRank, py::arg("s"),
        "Second-homology rank of the Milnor fiber of 1/(4s)(1, 2s-1): s - 1.");

  m.def(
      "admissible_degenerations",
      [](int s) {
        std::vector<std::string> out;
        for (const SingConfiguration& c : admissibleDegenerations(s))
          out.push_back(c.str());
        return out;
      },
      py::arg("s"),
      "Singularity configurations of the one-parameter degenerations, as strings.");

  m.def(
      "root_configuration_rank",
      [](const std::string& text) { return rootConfigurationRank(parseAdeConfiguration(text)); },
      py::arg("configuration"),
      "Total rank of an ADE configuration like 'D8+A1' or '3A3'.");

  m.def("scenario_names", &scenarioNames, "Names of the built-in scenarios.");

  m.def(
      "run_scenario_json",
      [](const std::string& name, bool allow_known_discrepancies) {
        std::optional<ScenarioId> id = scenarioFromName(name);
        if (!id) throw std::invalid_argument("unknown scenario '" + name + "'");
        VerificationReport report = runScenario(*id);
        if (allow_known_discrepancies)
          applyKnownDiscrepancies(report, knownDiscrepancyTable());
        return renderMachine(report);
      },
      py::arg("name"), py::arg("allow_known_discrepancies") = false,
      "Machine-format JSON report for one built-in scenario.");

  m.def(
      "run_all_scenarios_json",
      [](bool allow_known_discrepancies) {
        VerificationReport report = runAllScenarios();
        if (allow_known_discrepancies)
          applyKnownDiscrepancies(report, knownDiscrepancyTable());
        return renderMachine(report);
      },
      py::arg("allow_known_discrepancies") = false,
      "Machine-format JSON report covering every scenario.");

  m.def(
      "verify_surface_file",
      [](const std::string& path) {
        return renderMachine(surfaceVerificationReport(loadSurfaceFile(path)));
      },
      py::arg("path"),
      "Machine-format JSON report for a surface description file.");
}
