#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xytr/cli/cli.hpp"
#include "xytr/io/parser.hpp"
#include "xytr/report.hpp"
#include "xytr/trees/trees.hpp"
#include "xytr/xy/xy_transform.hpp"

namespace py = pybind11;
using namespace xytr;

namespace {

SpectralCurve curve(const std::string& x, const std::string& y) { return SpectralCurve::validate(parse_expr(x), parse_expr(y)); }

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_xytr, m) {
  m.doc() = "Exact topological recursion and x-y swap verification";
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CurveRejected>(m, "CurveRejected", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  m.def("version", &tool_version);
  m.def("run", &run, py::arg("args"), "Run the command line tool; returns (exit code, stdout, stderr)");
  m.def("fingerprint", [](const std::string& x, const std::string& y) { return curve(x, y).fingerprint(); }, py::arg("x"), py::arg("y"));
  m.def(
      "tr", [](const std::string& x, const std::string& y, int g, int n) { return tr_correlator(curve(x, y), g, n).value.to_string(); },
      py::arg("x"), py::arg("y"), py::arg("g"), py::arg("n"), "W^(g)_{n,0} in z1..zn");
  m.def(
      "xy", [](const std::string& x, const std::string& y, int n, int mm) { return xy_wnm(curve(x, y), n, mm).value.to_string(); },
      py::arg("x"), py::arg("y"), py::arg("n"), py::arg("m"), "W^(0)_{n,m} from the tree formula");
  m.def("tree_count", [](int n, int mm) { return enumerate_trees(n, mm).size(); }, py::arg("n"), py::arg("m"));
}
