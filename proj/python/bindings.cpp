#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "orthospec/basmajian.hpp"
#include "orthospec/config.hpp"
#include "orthospec/errors.hpp"
#include "orthospec/flags.hpp"
#include "orthospec/mcshane.hpp"
#include "orthospec/rep_builder.hpp"
#include "orthospec/run.hpp"

namespace py = pybind11;
using namespace orthospec;

namespace {

using Rep = std::shared_ptr<Representation>;
// (word, sign) with sign +1 attracting, -1 repelling
using PointArg = std::tuple<std::string, int>;
using CosetArg = std::tuple<int, int, std::string>;

Rep share(Representation r) { return std::make_shared<Representation>(std::move(r)); }

BoundaryPoint point(const Representation& r, const PointArg& p) {
  const int s = std::get<1>(p);
  if (s != 1 && s != -1) throw ConfigError("point sign must be +1 or -1");
  const Word w = r.presentation().parse(std::get<0>(p));
  if (w.empty()) throw ConfigError("the identity has no fixed points");
  return BoundaryPoint{w, s};
}

OrthosetElement coset(const Representation& r, const CosetArg& c) {
  const auto& p = r.presentation();
  const int i = std::get<0>(c), j = std::get<1>(c);
  if (i < 0 || j < 0 || i >= p.boundary_count || j >= p.boundary_count)
    throw ConfigError("boundary index out of range");
  auto x = canonical_double_coset(p, i, j, p.parse(std::get<2>(c)));
  if (!x) throw ConfigError("H_i e H_i is not an orthoset element");
  return *x;
}

CosetArg coset_tuple(const Representation& r, const OrthosetElement& x) {
  return {x.from, x.to, r.presentation().format(x.canonical)};
}

py::dict report_dict(const PartialSumReport& s) {
  py::dict d;
  d["L"] = s.L;
  d["per_boundary"] = s.per_boundary;
  d["per_boundary_count"] = s.per_boundary_count;
  d["total"] = s.total;
  d["boundary_lengths"] = s.boundary_lengths;
  d["total_length"] = s.total_length;
  d["defect"] = s.defect;
  d["term_count"] = s.term_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orthospectrum identity checks for surface group representations";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<LoxodromyError>(m, "LoxodromyError", PyExc_ArithmeticError);
  py::register_exception<DegenerateQuadruple>(m, "DegenerateQuadruple", PyExc_ArithmeticError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Representation, Rep>(m, "Representation")
      .def_property_readonly("n", &Representation::n)
      .def_property_readonly("rank", &Representation::rank)
      .def_property_readonly("construction", &Representation::construction)
      .def_property_readonly("genus", [](const Representation& r) { return r.presentation().genus; })
      .def_property_readonly("boundary_count",
                             [](const Representation& r) { return r.presentation().boundary_count; })
      .def_property_readonly("names", [](const Representation& r) { return r.presentation().names; })
      .def("generator", [](const Representation& r, int k) {
        if (k < 0 || k >= r.rank()) throw py::index_error("generator index out of range");
        return Mat(r.generator(k));
      })
      .def("alpha", [](const Representation& r, int i) {
        const auto& p = r.presentation();
        if (i < 0 || i >= p.boundary_count) throw py::index_error("boundary index out of range");
        return p.format(p.alpha(i));
      }, "Peripheral word of boundary i (0-based).")
      .def("eval", [](const Representation& r, const std::string& w) {
        return r.eval(r.presentation().parse(w));
      })
      .def("length", [](const Representation& r, const std::string& w) {
        return length(r, r.presentation().parse(w));
      })
      .def("period", [](const Representation& r, const std::string& w, const PointArg& x) {
        return period(r, r.presentation().parse(w), point(r, x));
      })
      .def("cross_ratio", [](const Representation& r, const PointArg& x, const PointArg& y,
                             const PointArg& z, const PointArg& t) {
        return B_rho(r, point(r, x), point(r, y), point(r, z), point(r, t));
      })
      .def("cyclic_order", [](const Representation& r, const PointArg& x, const PointArg& y,
                              const PointArg& z, const PointArg& t) {
        return to_string(cyclic_order(r, point(r, x), point(r, y), point(r, z), point(r, t)));
      })
      .def("orthoset", [](const Representation& r, int L) {
        std::vector<CosetArg> out;
        for (const auto& x : orthoset_stream(r.presentation(), L)) out.push_back(coset_tuple(r, x));
        return out;
      }, py::arg("L"), "Orthoset elements (from, to, word) with canonical length <= L.")
      .def("canonical", [](const Representation& r, const CosetArg& c) {
        return coset_tuple(r, coset(r, c));
      })
      .def("G", [](const Representation& r, const CosetArg& c) { return G(r, coset(r, c)); })
      .def("partial_sum", [](const Representation& r, int L) {
        PartialSumReport s;
        {
          py::gil_scoped_release nogil;
          s = basmajian_partial_sum(r, L);
        }
        return report_dict(s);
      }, py::arg("L"))
      .def("series", [](const Representation& r, int L, int step) {
        std::vector<PartialSumReport> s;
        {
          py::gil_scoped_release nogil;
          s = basmajian_series(r, L, step);
        }
        py::list out;
        for (const auto& x : s) out.append(report_dict(x));
        return out;
      }, py::arg("L"), py::arg("step") = 2)
      .def("pants", [](const Representation& r, int depth) {
        std::vector<std::pair<std::string, std::string>> out;
        const auto& p = r.presentation();
        for (const auto& P : pants_enumeration(p, depth)) out.emplace_back(p.format(P.beta), p.format(P.gamma));
        return out;
      }, py::arg("depth") = 3, "Pants classes (beta, gamma) for boundary 0.")
      .def("gap_H", [](const Representation& r, const std::string& beta, const std::string& gamma) {
        const auto& p = r.presentation();
        return gap_H(r, PantsClass{p.parse(beta), p.parse(gamma)});
      })
      .def("validate", [](const Representation& r, int L) {
        const auto v = validate_loxodromic(r, L);
        py::dict d;
        d["pass"] = v.pass;
        d["failures"] = v.failures;
        d["min_gap_ratio"] = v.min_gap_ratio;
        d["words"] = v.records.size();
        return d;
      }, py::arg("L") = 4)
      .def("__repr__", [](const Representation& r) {
        std::ostringstream s;
        s << "<Representation n=" << r.n() << " genus=" << r.presentation().genus
          << " boundaries=" << r.presentation().boundary_count << " " << r.construction() << ">";
        return s.str();
      });

  m.def("fuchsian_pants", [](double l1, double l2, double l3) { return share(fuchsian_pants(l1, l2, l3)); },
        py::arg("l1"), py::arg("l2"), py::arg("l3"));
  m.def("fuchsian_one_holed_torus", [](double ta, double tb) { return share(fuchsian_one_holed_torus(ta, tb)); },
        py::arg("ta"), py::arg("tb"));
  m.def("irreducible_embed", [](const Representation& r, int n) { return share(irreducible_embed(r, n)); },
        py::arg("rep"), py::arg("n"));
  m.def("explicit_representation", [](int genus, int boundaries, std::vector<Mat> gens) {
    return share(explicit_representation(surface_presentation(genus, boundaries), std::move(gens)));
  }, py::arg("genus"), py::arg("boundaries"), py::arg("generators"));
  m.def("from_config", [](const std::string& text) { return share(load_representation(parse_config(text).rep)); },
        py::arg("text"), "Representation described by a configuration document.");
  m.def("run", [](const std::string& text, const std::string& command) {
    const RunConfig cfg = parse_config(text);
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release nogil;
      code = orthospec::run(cfg, command, "python", out, err);
    }
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("text"), py::arg("command"), "Returns (exit code, table text, diagnostics).");
  m.def("sym_power", &sym_power, py::arg("m"), py::arg("n"));
  m.def("basmajian_term", &basmajian_term, py::arg("d"));
  m.def("n3_closed_form", &n3_closed_form, py::arg("l"));
  m.def("hilbert_distance_disk", [](const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
    return hilbert_distance_disk(p, q);
  });
}
