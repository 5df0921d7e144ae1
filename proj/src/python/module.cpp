#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qdyck/crosscheck.hpp"
#include "qdyck/generation.hpp"
#include "qdyck/qstrings.hpp"
#include "qdyck/sequences.hpp"
#include "qdyck/validity.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const qdyck::Count& value) {
  const std::string dec = value.str();
  PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::list to_pyints(const std::vector<qdyck::Count>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_pyint(v));
  return out;
}

qdyck::Count from_pyint(const py::handle& obj) {
  return qdyck::Count(py::cast<std::string>(py::str(obj)));
}

qdyck::RationalSlope slope_of(int r, int s) { return qdyck::RationalSlope::reduced(r, s); }

py::list rendered(const qdyck::PathSet& set) {
  py::list out;
  for (const auto& path : set.members) out.append(qdyck::render_path(path));
  return out;
}

py::dict report_dict(const qdyck::CheckReport& report) {
  py::dict out;
  out["pass"] = report.passed();
  out["checks"] = report.lines.size();
  out["failures"] = report.failures();
  out["text"] = report.to_text();
  return out;
}

}  // namespace

PYBIND11_MODULE(_qdyck, m) {
  m.doc() = "Height-bounded Dyck paths counted by rational Q-bonacci numbers";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qdyck::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const qdyck::CapExceeded& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "humps", [](const std::string& text) { return qdyck::parse_path_any(text).hump_peaks(); },
      py::arg("path"), "Hump peak counts p_1..p_m of a path given as U/D letters or parentheses.");

  m.def(
      "render",
      [](const std::vector<int>& peaks) {
        return qdyck::render_path(qdyck::path_of_humps(qdyck::HumpProfile{peaks}));
      },
      py::arg("humps"), "Rebuild the U/D string from hump peak counts.");

  m.def(
      "is_valid",
      [](const std::string& text, int r, int s) {
        return qdyck::is_valid_unified(qdyck::parse_path_any(text), slope_of(r, s));
      },
      py::arg("path"), py::arg("r"), py::arg("s") = 1);

  m.def(
      "explain",
      [](const std::string& text, int r, int s) -> py::object {
        const auto v = qdyck::first_violation(qdyck::parse_path_any(text), slope_of(r, s));
        if (!v) return py::none();
        return py::str(v->describe());
      },
      py::arg("path"), py::arg("r"), py::arg("s") = 1,
      "None for a valid path, otherwise the violated rule.");

  m.def(
      "enumerate_paths",
      [](int n, int cap) {
        py::list out;
        for (const auto& path : qdyck::enumerate_height2(n, cap)) {
          out.append(qdyck::render_path(path));
        }
        return out;
      },
      py::arg("n"), py::arg("cap") = qdyck::kDefaultEnumCap);

  m.def(
      "generate",
      [](int n, int r, int s) { return rendered(qdyck::generate_general(n, slope_of(r, s))); },
      py::arg("n"), py::arg("r"), py::arg("s") = 1,
      "Members of D_n^{r/s} from the recursive construction, sorted.");

  m.def(
      "brute_force",
      [](int n, int r, int s, int cap) {
        return rendered(qdyck::brute_force(n, slope_of(r, s), cap));
      },
      py::arg("n"), py::arg("r"), py::arg("s") = 1, py::arg("cap") = qdyck::kDefaultEnumCap,
      "Members of D_n^{r/s} by exhaustive filtering, sorted.");

  m.def(
      "count", [](int n, int r, int s) { return to_pyint(qdyck::w_general(slope_of(r, s), n)); },
      py::arg("n"), py::arg("r"), py::arg("s") = 1, "|D_n^{r/s}| from the recurrence.");

  m.def(
      "gfib", [](int k, long long n) { return to_pyint(qdyck::gfib(k, n)); }, py::arg("k"),
      py::arg("n"));

  m.def(
      "w_unit", [](int s, long long n) { return to_pyint(qdyck::w_unit(s, n)); }, py::arg("s"),
      py::arg("n"));

  m.def(
      "table",
      [](int r, int s, int n_max, int cap) {
        return to_pyints(qdyck::w_general_table(slope_of(r, s), n_max, cap));
      },
      py::arg("r"), py::arg("s"), py::arg("n_max"), py::arg("cap") = qdyck::kDefaultTableCap);

  m.def(
      "gfib_table",
      [](int k, int n_max, int cap) { return to_pyints(qdyck::gfib_table(k, n_max, cap)); },
      py::arg("k"), py::arg("n_max"), py::arg("cap") = qdyck::kDefaultTableCap);

  m.def(
      "is_q_decreasing",
      [](const std::string& bits, int r, int s) {
        return qdyck::is_q_decreasing(bits, slope_of(r, s));
      },
      py::arg("bits"), py::arg("r"), py::arg("s") = 1);

  m.def(
      "strings",
      [](int n, int r, int s, int cap) {
        return qdyck::enumerate_q_decreasing(n, slope_of(r, s), cap);
      },
      py::arg("n"), py::arg("r"), py::arg("s") = 1, py::arg("cap") = qdyck::kDefaultStringCap,
      "q-decreasing strings of length n, sorted.");

  m.def(
      "count_q_decreasing",
      [](int n, int r, int s) { return to_pyint(qdyck::count_q_decreasing(n, slope_of(r, s))); },
      py::arg("n"), py::arg("r"), py::arg("s") = 1);

  m.def(
      "count_avoiding_ones_run",
      [](int n, int k) { return to_pyint(qdyck::count_avoiding_ones_run(n, k)); }, py::arg("n"),
      py::arg("k"));

  m.def(
      "find_shift",
      [](const py::sequence& a, const py::sequence& b, int max_shift) -> py::object {
        std::vector<qdyck::Count> ca, cb;
        for (const auto& item : a) ca.push_back(from_pyint(item));
        for (const auto& item : b) cb.push_back(from_pyint(item));
        const auto d = qdyck::find_shift(ca, cb, max_shift);
        if (!d) return py::none();
        return py::int_(*d);
      },
      py::arg("a"), py::arg("b"), py::arg("max_shift") = 3);

  m.def(
      "crosscheck",
      [](int r, int s, int max_n, int cap) {
        const auto slope = slope_of(r, s);
        qdyck::CheckReport report;
        report.append(qdyck::verify_grammar_vs_oracle(slope, max_n, cap));
        report.append(qdyck::verify_counts(slope, max_n, cap));
        report.append(qdyck::verify_string_alignment(slope, max_n + 4));
        return report_dict(report);
      },
      py::arg("r"), py::arg("s") = 1, py::arg("max_n") = 12,
      py::arg("cap") = qdyck::kDefaultEnumCap);

  m.def(
      "crosscheck_all",
      [](int max_n, int cap) {
        return report_dict(qdyck::run_full_crosscheck(max_n, max_n + 4, cap));
      },
      py::arg("max_n") = 12, py::arg("cap") = qdyck::kDefaultEnumCap);

#ifdef VERSION_INFO
#define QDYCK_STR_(x) #x
#define QDYCK_STR(x) QDYCK_STR_(x)
  m.attr("__version__") = QDYCK_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
