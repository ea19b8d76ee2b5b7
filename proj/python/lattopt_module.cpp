// Python bindings: the main operations (count, bounds, optimize, fptas,
// oracle, mixed, instance builders) over the same canonical JSON instance
// text and result documents the CLI uses. Values that can exceed native
// integer range travel as strings inside the JSON documents; the pure-python
// wrapper package turns them back into ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lattopt/documents.hpp"
#include "lattopt/errors.hpp"
#include "lattopt/instances.hpp"

namespace py = pybind11;

namespace {

using lattopt::InstanceBundle;

InstanceBundle parse(const std::string& text) { return lattopt::io::parse_instance(text); }

lattopt::BigRat epsilon_from(const std::string& text) {
  auto eps = lattopt::rat_from_string(text);
  if (!eps) throw std::invalid_argument("epsilon: not an exact rational: " + text);
  return *eps;
}

std::string render(const lattopt::io::Json& doc) { return lattopt::io::render_document(doc); }

}  // namespace

PYBIND11_MODULE(_lattopt, m) {
  m.doc() =
      "Exact lattice-point counting and integer polynomial optimization over rational "
      "polytopes. All functions take canonical JSON instance text and return JSON result "
      "documents (as strings); arithmetic is exact end to end.";

  py::register_exception<lattopt::io::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<lattopt::InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
  py::register_exception<lattopt::UnboundedError>(m, "UnboundedError", PyExc_ValueError);
  py::register_exception<lattopt::DegenerateError>(m, "DegenerateError", PyExc_ValueError);
  py::register_exception<lattopt::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "canonical", [](const std::string& text) { return lattopt::io::format_instance(parse(text)); },
      py::arg("instance_text"), "Canonical serialization of an instance (a formatting fixed point).");

  m.def(
      "digest", [](const std::string& text) { return lattopt::io::instance_digest(parse(text)); },
      py::arg("instance_text"), "Content digest of the canonical serialization.");

  m.def(
      "count",
      [](const std::string& text) { return render(lattopt::io::count_document(parse(text))); },
      py::arg("instance_text"), "Exact |P cap Z^d| as a result document.");

  m.def(
      "bounds",
      [](const std::string& text, unsigned k, bool shift, unsigned digits) {
        return render(lattopt::io::bounds_document(parse(text), k, shift, digits));
      },
      py::arg("instance_text"), py::arg("k"), py::arg("shift") = false, py::arg("digits") = 6,
      "Bound table rows L_k/U_k for k = 1..k.");

  m.def(
      "optimize",
      [](const std::string& text, unsigned k_max, unsigned digits) {
        return render(lattopt::io::optimize_document(parse(text), k_max, digits));
      },
      py::arg("instance_text"), py::arg("k_max") = 30, py::arg("digits") = 6,
      "Exact optimization via the integer-gap stopping rule.");

  m.def(
      "fptas",
      [](const std::string& text, const std::string& epsilon, bool recover, bool shift,
         unsigned digits) {
        return render(
            lattopt::io::fptas_document(parse(text), epsilon_from(epsilon), recover, shift, digits));
      },
      py::arg("instance_text"), py::arg("epsilon"), py::arg("recover") = false,
      py::arg("shift") = false, py::arg("digits") = 6,
      "(1-epsilon)-approximation with optional certified point recovery.");

  m.def(
      "oracle",
      [](const std::string& text, long budget) {
        return render(lattopt::io::oracle_document(parse(text), budget));
      },
      py::arg("instance_text"), py::arg("budget") = lattopt::kDefaultOracleBudget,
      "Brute-force reference count and optimum.");

  m.def(
      "mixed",
      [](const std::string& text, const std::vector<size_t>& integer_vars,
         const std::vector<long>& grid, const std::string& epsilon, bool exact,
         bool nonnegative, unsigned digits) {
        return render(lattopt::io::mixed_document(parse(text), integer_vars, grid,
                                                  epsilon_from(epsilon), exact, nonnegative,
                                                  digits));
      },
      py::arg("instance_text"), py::arg("integer_vars"), py::arg("grid"),
      py::arg("epsilon") = "1/10", py::arg("exact") = false, py::arg("nonnegative") = false,
      py::arg("digits") = 6, "Grid-refinement sequence for mixed instances.");

  m.def(
      "generate",
      [](const std::string& which, unsigned long a, unsigned long b, unsigned long c, size_t d,
         unsigned degree, long radius, unsigned long seed) {
        InstanceBundle inst;
        if (which == "example1") {
          inst = lattopt::example1();
        } else if (which == "nvs04") {
          inst = lattopt::nvs04();
        } else if (which == "an1") {
          inst = lattopt::an1_instance(a, b, c);
        } else if (which == "random") {
          inst = lattopt::random_instance(d, degree, radius, seed);
        } else {
          throw std::invalid_argument("unknown builder \"" + which +
                                      "\" (expected example1, nvs04, an1, or random)");
        }
        return lattopt::io::format_instance(inst);
      },
      py::arg("which"), py::arg("a") = 1, py::arg("b") = 3, py::arg("c") = 3, py::arg("d") = 2,
      py::arg("degree") = 3, py::arg("radius") = 5, py::arg("seed") = 1,
      "Builder instances as canonical JSON text.");
}
