#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "sperner/construction.hpp"
#include "sperner/descriptor.hpp"
#include "sperner/error.hpp"
#include "sperner/qbf.hpp"
#include "sperner/reduction.hpp"
#include "sperner/render.hpp"
#include "sperner/verify.hpp"
#include "sperner/walker.hpp"

namespace py = pybind11;
using namespace sperner;

namespace {

using XY = std::pair<Coord, Coord>;

XY xy(Point p) { return {p.x, p.y}; }

Region region_arg(const std::optional<std::tuple<Coord, Coord, Coord, Coord>>& r, Coord side) {
  if (!r) return Region{0, 0, side, side};
  const auto [x0, y0, x1, y1] = *r;
  return Region{x0, y0, x1, y1};
}

py::dict walk_dict(const WalkResult& r) {
  py::dict d;
  d["outcome"] = std::string(to_string(r.outcome));
  d["steps"] = r.steps;
  d["square"] = r.solution ? py::cast(xy(r.solution->anchor)) : py::none();
  if (!r.error.empty()) d["error"] = r.error;
  return d;
}

py::dict sperner_walk_dict(const SpernerWalkResult& r) {
  py::dict d;
  d["outcome"] = std::string(to_string(r.outcome));
  d["steps"] = r.steps;
  if (r.solution) {
    d["triangle"] = py::make_tuple(xy(r.solution->anchor),
                                   r.solution->kind == TriangleKind::kLower ? "lower" : "upper");
    d["square"] = xy(sperner_solution_to_brouwer(*r.solution).anchor);
  } else {
    d["triangle"] = py::none();
    d["square"] = py::none();
  }
  if (!r.error.empty()) d["error"] = r.error;
  return d;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["check"] = r.name;
  d["passed"] = r.passed;
  d["checked"] = r.checked;
  d["counterexample"] = r.counterexample ? py::cast(xy(*r.counterexample)) : py::none();
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QBF to Brouwer/Sperner instance construction and path following";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_IndexError);
  py::register_exception<MalformedInstance>(m, "MalformedInstance", PyExc_RuntimeError);

  py::enum_<Quantifier>(m, "Quantifier")
      .value("FORALL", Quantifier::kForall)
      .value("EXISTS", Quantifier::kExists);

  py::class_<QbfFormula>(m, "Formula")
      .def(py::init<std::vector<Quantifier>, std::vector<Clause>>(), py::arg("prefix"), py::arg("matrix"))
      .def_static("parse", &parse_qdimacs, py::arg("text"))
      .def_property_readonly("num_vars", &QbfFormula::num_vars)
      .def_property_readonly("prefix", &QbfFormula::prefix)
      .def_property_readonly("matrix", &QbfFormula::matrix)
      .def("to_qdimacs", &to_qdimacs)
      .def("eval", [](const QbfFormula& f, const std::string& bits) { return eval_qbf(f, parse_prefix(bits)); },
           py::arg("prefix") = "")
      .def(py::self == py::self);

  py::class_<LayoutParams>(m, "LayoutParams")
      .def(py::init([](Coord lw, Coord lh, Coord margin, Coord gap) {
             LayoutParams p{lw, lh, margin, gap};
             p.validate();
             return p;
           }),
           py::arg("leaf_width") = 32, py::arg("leaf_height") = 32, py::arg("margin") = 8, py::arg("gap") = 8)
      .def_readonly("leaf_width", &LayoutParams::leaf_width)
      .def_readonly("leaf_height", &LayoutParams::leaf_height)
      .def_readonly("margin", &LayoutParams::margin)
      .def_readonly("gap", &LayoutParams::gap);

  py::class_<SpernerInstance>(m, "SpernerInstance")
      .def_property_readonly("m", &SpernerInstance::size_param)
      .def_property_readonly("side", &SpernerInstance::side)
      .def("color", [](const SpernerInstance& s, Coord x, Coord y) { return static_cast<int>(s.color({x, y})); })
      .def("walk", [](const SpernerInstance& s, std::optional<std::uint64_t> cap) {
             return sperner_walk_dict(sperner_walk(s, cap.value_or(default_cap(s.size_param()))));
           }, py::arg("cap") = py::none())
      .def("render_ascii", [](const SpernerInstance& s, std::optional<std::tuple<Coord, Coord, Coord, Coord>> r) {
             return render_ascii(s, region_arg(r, s.side()));
           }, py::arg("region") = py::none())
      .def("export_dense", [](const SpernerInstance& s) { return export_dense(s); });

  py::class_<BrouwerInstance>(m, "BrouwerInstance")
      .def_property_readonly("m", &BrouwerInstance::size_param)
      .def_property_readonly("side", &BrouwerInstance::side)
      .def("color", [](const BrouwerInstance& b, Coord x, Coord y) { return static_cast<int>(b.color({x, y})); })
      .def("walk", [](const BrouwerInstance& b, std::optional<std::uint64_t> cap) {
             return walk_dict(brouwer_walk(b, cap.value_or(default_cap(b.size_param()))));
           }, py::arg("cap") = py::none())
      .def("reduce", &brouwer_to_sperner)
      .def("solutions", [](const BrouwerInstance& b, std::optional<std::tuple<Coord, Coord, Coord, Coord>> r) {
             std::vector<XY> out;
             for (const Square& s : enumerate_solutions(b, region_arg(r, b.side() - 1))) out.push_back(xy(s.anchor));
             return out;
           }, py::arg("region") = py::none())
      .def("render_ascii", [](const BrouwerInstance& b, std::optional<std::tuple<Coord, Coord, Coord, Coord>> r) {
             return render_ascii(b, region_arg(r, b.side()));
           }, py::arg("region") = py::none())
      .def("render_svg", [](const BrouwerInstance& b, std::optional<std::tuple<Coord, Coord, Coord, Coord>> r) {
             return render_svg(b, region_arg(r, b.side()));
           }, py::arg("region") = py::none())
      .def("export_dense", [](const BrouwerInstance& b) { return export_dense(b); })
      .def("check_boundary", [](const BrouwerInstance& b, std::uint64_t samples, std::uint64_t seed) {
             return report_dict(check_boundary(b, samples, seed));
           }, py::arg("samples") = 10000, py::arg("seed") = 1)
      .def("check_reduction", [](const BrouwerInstance& b) { return report_dict(check_reduction_correspondence(b)); });

  m.def("build", [](const QbfFormula& f, const LayoutParams& p) { return build_brouwer(f, p); },
        py::arg("formula"), py::arg("params") = LayoutParams{});
  m.def("terminals", [](const QbfFormula& f, const LayoutParams& p) {
          const TerminalSquares t = terminals(f, p);
          py::dict d;
          d["yes"] = xy(t.yes.anchor);
          d["no"] = xy(t.no.anchor);
          d["aux"] = xy(t.aux_source.anchor);
          return d;
        }, py::arg("formula"), py::arg("params") = LayoutParams{});
  m.def("check_routing", [](const QbfFormula& f, const std::string& prefix, const LayoutParams& p, bool exhaustive) {
          RoutingOptions o;
          o.mode = exhaustive ? RoutingMode::kExhaustive : RoutingMode::kTraceBased;
          return report_dict(check_structure_routing(f, parse_prefix(prefix), p, o));
        }, py::arg("formula"), py::arg("prefix") = "", py::arg("params") = LayoutParams{},
        py::arg("exhaustive") = true);
  m.def("brouwer_from_rows", &brouwer_from_rows, py::arg("m"), py::arg("rows_top_down"));
  m.def("descriptor_json", [](const QbfFormula& f, const LayoutParams& p) {
          return descriptor_to_json(InstanceDescriptor{f, p});
        }, py::arg("formula"), py::arg("params") = LayoutParams{});
  m.def("load", [](const std::string& text) {
          LoadedInstance li = load_instance(text);
          if (li.sperner) return py::cast(*li.sperner);
          return py::cast(*li.brouwer);
        }, py::arg("text"));
}
