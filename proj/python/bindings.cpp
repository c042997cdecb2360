#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semidet/factorization.hpp"
#include "semidet/io.hpp"
#include "semidet/scan.hpp"
#include "semidet/verify.hpp"

namespace py = pybind11;
using namespace semidet;

namespace {

  py::dict factor_dict(FiniteSemigroup const& S, std::size_t max_dim) {
    auto     F = factorize(S, max_dim);
    auto     R = report_factorization(S, F);
    py::list blocks;
    for (auto const& b : R.blocks) {
      py::dict d;
      d["idempotent"]      = b.idempotent;
      d["rows"]            = b.rows;
      d["cols"]            = b.cols;
      d["det"]             = b.det;
      d["det_substituted"] = b.det_substituted;
      blocks.append(d);
    }
    py::dict out;
    out["determinant"]    = render(F.reference(), S.names());
    out["blocks"]         = blocks;
    out["sign"]           = R.sign;
    out["product"]        = R.product;
    out["verified"]       = R.verified;
    out["eta_iterations"] = F.eta_iterations;
    return out;
  }

  py::dict verify_dict(FiniteSemigroup const& S, std::string const& name) {
    auto     rep = verify_semigroup(S, name);
    py::dict results;
    for (auto const& r : rep.results) {
      py::dict d;
      d["applicable"] = r.applicable;
      d["holds"]      = r.holds;
      d["checked"]    = r.checked;
      d["witnesses"]  = r.witnesses;
      results[py::str(r.name)] = d;
    }
    py::dict out;
    out["ok"]                    = rep.ok();
    out["ll_transitive"]         = rep.ll_transitive;
    out["smooth"]                = rep.smooth;
    out["non_transitive_chains"] = rep.non_transitive_chains;
    out["results"]               = results;
    return out;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semigroup determinants and their factorisation";

  auto error = py::register_exception<Error>(m, "SemidetError");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", error);

  py::class_<FiniteSemigroup>(m, "Semigroup")
      .def_static("parse", &parse_semigroup, py::arg("text"))
      .def_static("load", &load_semigroup, py::arg("path"))
      .def_static(
          "from_table",
          [](Table const& t) { return semigroup_from_table(t); },
          py::arg("table"))
      .def_property_readonly("order", &FiniteSemigroup::order)
      .def_property_readonly("names", &FiniteSemigroup::names)
      .def_property_readonly("has_zero", &FiniteSemigroup::has_zero)
      .def_property_readonly("singleton_rich", &FiniteSemigroup::singleton_rich)
      .def_property_readonly("unital", &FiniteSemigroup::unital)
      .def_property_readonly("table", &FiniteSemigroup::table)
      .def("product",
           [](FiniteSemigroup const& S, std::string const& a, std::string const& b) {
             return S.name(S.product(S.at(a), S.at(b)));
           })
      .def("star",
           [](FiniteSemigroup const& S, std::string const& a) { return S.name(S.star(S.at(a))); })
      .def("plus",
           [](FiniteSemigroup const& S, std::string const& a) { return S.name(S.plus(S.at(a))); })
      .def("__str__", &print_semigroup)
      .def("__repr__", [](FiniteSemigroup const& S) {
        return "<Semigroup of order " + std::to_string(S.order()) + ">";
      });

  m.def(
      "determinant",
      [](FiniteSemigroup const& S, bool contracted, std::size_t max_dim) {
        return render(contracted ? theta_contracted(S, max_dim) : theta(S, max_dim), S.names());
      },
      py::arg("semigroup"), py::arg("contracted") = false,
      py::arg("max_dim") = default_max_dim);

  m.def(
      "analyze_json",
      [](FiniteSemigroup const& S, std::string const& name, std::size_t max_dim) {
        return emit_report(classify(S, name, max_dim));
      },
      py::arg("semigroup"), py::arg("name") = "", py::arg("max_dim") = default_max_dim);

  m.def("factor", &factor_dict, py::arg("semigroup"), py::arg("max_dim") = default_max_dim);

  m.def("verify", &verify_dict, py::arg("semigroup"), py::arg("name") = "");

  m.def(
      "count",
      [](std::size_t n, bool up_to_iso, bool anti) {
        py::gil_scoped_release release;
        return count_tables(n, up_to_iso, anti);
      },
      py::arg("order"), py::arg("up_to_iso") = false, py::arg("anti") = true);

  m.def(
      "scan",
      [](std::size_t n, bool up_to_iso, std::vector<std::string> const& filters) {
        ScanTask task;
        task.order     = n;
        task.up_to_iso = up_to_iso;
        task.filters   = filters;
        std::vector<std::string> lines;
        {
          py::gil_scoped_release release;
          scan(task, [&](std::string const& l) { lines.push_back(l); });
        }
        return lines;
      },
      py::arg("order"), py::arg("up_to_iso") = true,
      py::arg("filters") = std::vector<std::string>{});
}
