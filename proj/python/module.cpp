#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibnum/errors.hpp"
#include "fibnum/numeration.hpp"
#include "fibnum/serialize.hpp"
#include "fibnum/synthesis.hpp"
#include "fibnum/verify.hpp"

namespace py = pybind11;
using namespace fibnum;

namespace {

Nat to_nat(const py::int_& n) {
  if (n < py::int_(0)) throw InputError("expected a nonnegative integer");
  return parse_nat(py::str(n));
}

py::int_ from_nat(const Nat& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

DigitWord single(const std::string& text) { return parse_word(text, 1); }

py::object check_value(const CheckValue& v) {
  if (std::holds_alternative<bool>(v)) return py::bool_(std::get<bool>(v));
  return py::int_(std::get<std::int64_t>(v));
}

py::dict check_dict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["claim"] = c.claim;
  d["expected"] = check_value(c.expected);
  d["observed"] = c.observed ? check_value(*c.observed) : py::none();
  d["passed"] = c.passed;
  d["runtime_ms"] = c.runtime_ms;
  d["detail"] = c.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_fibnum, m) {
  m.doc() = "Zeckendorf and Chung-Graham numeration with synthesized automata";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<SynthesisError>(m, "SynthesisError", PyExc_RuntimeError);
  py::register_exception<RelationError>(m, "RelationError", PyExc_RuntimeError);

  m.def("fib", [](std::size_t i) { return from_nat(fib(i)); });
  m.def("value", [](const std::string& w, int shift) { return from_nat(value(single(w), shift)); }, py::arg("word"),
        py::arg("shift") = 0);
  m.def("zeck_encode", [](const py::int_& n) { return to_text(zeck_encode(to_nat(n))); });
  m.def("cg_encode", [](const py::int_& n) { return to_text(cg_encode(to_nat(n))); });
  m.def("zeck_valid", [](const std::string& w) { return zeck_valid(single(w)); });
  m.def("cg_valid", [](const std::string& w) { return cg_valid(single(w)); });
  m.def("cg_violation", [](const std::string& w) { return cg_violation(single(w)); });
  m.def("cg_split", [](const std::string& w) {
    auto s = cg_split(single(w));
    return py::make_tuple(to_text(s.high), to_text(s.low));
  });
  m.def("phi_floor", [](const py::int_& n) { return from_nat(phi_floor(to_nat(n))); });

  py::class_<Automaton>(m, "Automaton")
      .def_static("from_native", [](const std::string& text) { return from_native(text); })
      .def_property_readonly("track_count", &Automaton::track_count)
      .def_property_readonly("state_count", &Automaton::state_count)
      .def_property_readonly("tracks",
                             [](const Automaton& a) {
                               std::vector<std::string> out;
                               for (const auto& t : a.tracks()) out.push_back(t.to_string());
                               return out;
                             })
      .def("accepts", [](const Automaton& a, const std::string& w) { return a.accepts(parse_word(w, a.track_count())); })
      .def("counts",
           [](const Automaton& a) {
             auto c = a.counts();
             return py::make_tuple(c.live, c.total);
           })
      .def("to_native", &to_native)
      .def("to_dot", [](const Automaton& a, const std::string& name) { return to_dot(a, name); },
           py::arg("name") = "automaton")
      .def("equivalent", [](const Automaton& a, const Automaton& b) { return equivalent(a, b); })
      .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
      .def("__repr__", [](const Automaton& a) {
        return "<Automaton tracks=" + signature_to_string(a.tracks()) + " states=" + std::to_string(a.state_count()) + ">";
      });

  m.def("automaton_names", [] { return std::vector<std::string>(automaton_names().begin(), automaton_names().end()); });
  m.def("build", [](const std::string& name) { return cached_automaton(name); },
        "Synthesize a named automaton (memoized); returns a copy");
  m.def(
      "apply_relation",
      [](const Automaton& r, const std::vector<std::string>& inputs, std::size_t output_track) {
        std::vector<DigitWord> words;
        for (const auto& w : inputs) words.push_back(single(w));
        std::vector<std::string> out;
        for (const auto& w : apply_relation(r, words, output_track)) out.push_back(to_text(w));
        return out;
      },
      py::arg("relation"), py::arg("inputs"), py::arg("output_track"));

  m.def(
      "verify",
      [](std::uint64_t max_n, std::uint64_t seed) {
        VerifyScale scale;
        scale.max_n = max_n;
        scale.seed = seed;
        Report report;
        {
          py::gil_scoped_release release;
          report = run_all(scale);
        }
        py::list checks;
        for (const auto& c : report.checks) checks.append(check_dict(c));
        py::dict d;
        d["passed"] = report.all_passed();
        d["checks"] = checks;
        d["notes"] = report.notes;
        return d;
      },
      py::arg("max_n") = VerifyScale{}.max_n, py::arg("seed") = VerifyScale{}.seed);
}
