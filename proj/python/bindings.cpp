#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hitset/ab_index.hpp"
#include "hitset/error.hpp"
#include "hitset/io.hpp"
#include "hitset/oracle.hpp"
#include "hitset/pruner.hpp"
#include "hitset/solver.hpp"

namespace py = pybind11;
using namespace hitset;

namespace {

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = v[t] + 1;
  return out;
}

py::list ab_to_python(const std::vector<ABRecord>& ab) {
  py::list out;
  for (const ABRecord& r : ab) out.append(py::make_tuple(r.a + 1, r.b + 1));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hitset, m) {
  m.doc() = "Exact hitting sets for line-constrained and line-separable disks";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "HitsetError")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // Line numbers are already 1-based; disk positions are shifted to match.
      py::object index = py::none();
      if (e.index()) index = py::int_(*e.index() + (e.code() == ErrorCode::ParseError ? 0 : 1));
      py::set_error(error_type.get_stored(), py::make_tuple(to_string(e.code()), e.what(), index));
    }
  });

  py::enum_<Mode>(m, "Mode")
      .value("line_constrained", Mode::line_constrained)
      .value("line_separable", Mode::line_separable);

  py::enum_<GenKind>(m, "GenKind")
      .value("line_constrained", GenKind::line_constrained)
      .value("unit_separable", GenKind::unit_separable)
      .value("separable_from_constrained", GenKind::separable_from_constrained);

  py::class_<Point>(m, "Point")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Point{x, y}; }), py::arg("x"), py::arg("y"))
      .def(py::init([](py::tuple t) { return Point{t[0].cast<double>(), t[1].cast<double>()}; }))
      .def_readwrite("x", &Point::x)
      .def_readwrite("y", &Point::y)
      .def(py::self == py::self)
      .def("__repr__", [](const Point& p) { return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; });
  py::implicitly_convertible<py::tuple, Point>();

  py::class_<Disk>(m, "Disk")
      .def(py::init<>())
      .def(py::init([](double cx, double cy, double r) { return Disk{cx, cy, r}; }), py::arg("cx"), py::arg("cy"),
           py::arg("r"))
      .def(py::init([](py::tuple t) {
        return Disk{t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>()};
      }))
      .def_readwrite("cx", &Disk::cx)
      .def_readwrite("cy", &Disk::cy)
      .def_readwrite("r", &Disk::r)
      .def(py::self == py::self)
      .def("__repr__", [](const Disk& d) {
        return "Disk(" + std::to_string(d.cx) + ", " + std::to_string(d.cy) + ", " + std::to_string(d.r) + ")";
      });
  py::implicitly_convertible<py::tuple, Disk>();

  py::class_<RawInstance>(m, "RawInstance")
      .def(py::init([](std::vector<Point> points, std::vector<Disk> disks, Mode mode) {
             return RawInstance{std::move(points), std::move(disks), mode};
           }),
           py::arg("points"), py::arg("disks"), py::arg("mode") = Mode::line_separable)
      .def_readwrite("points", &RawInstance::points)
      .def_readwrite("disks", &RawInstance::disks)
      .def_readwrite("mode", &RawInstance::mode)
      .def(py::self == py::self);

  py::class_<Instance>(m, "Instance")
      .def_readonly("points", &Instance::points)
      .def_readonly("disks", &Instance::disks)
      .def_property_readonly("spans",
                             [](const Instance& in) {
                               py::list out;
                               for (const DiskSpan& s : in.spans) out.append(py::make_tuple(s.xl, s.xr));
                               return out;
                             })
      .def_readonly("point_origin", &Instance::point_origin)
      .def_readonly("disk_origin", &Instance::disk_origin)
      .def_readonly("mode", &Instance::mode);

  m.def("point_in_disk", &point_in_disk, py::arg("p"), py::arg("s"), py::arg("eps") = kDefaultEps);
  m.def(
      "disk_span", [](const Disk& s) { const DiskSpan sp = disk_span(s); return py::make_tuple(sp.xl, sp.xr); },
      py::arg("s"));
  m.def("normalize", py::overload_cast<const RawInstance&>(&normalize), py::arg("raw"));
  m.def(
      "remove_contained",
      [](const std::vector<Disk>& disks) {
        const ContainmentResult r = remove_contained(disks);
        py::dict witness;
        for (const auto& [removed, kept] : r.witness) witness[py::int_(removed + 1)] = kept + 1;
        return py::make_tuple(one_based(r.kept), witness);
      },
      py::arg("disks"), "1-based kept positions and a removed -> witness map");
  m.def(
      "validate_single_intersection",
      [](const std::vector<Disk>& disks) -> std::optional<std::pair<std::size_t, std::size_t>> {
        auto bad = validate_single_intersection(disks);
        if (!bad) return std::nullopt;
        return std::make_pair(bad->first + 1, bad->second + 1);
      },
      py::arg("disks"));

  m.def(
      "compute_ab",
      [](const std::vector<Point>& points, const std::vector<Disk>& disks, std::optional<double> unit_radius) {
        if (unit_radius) return ab_to_python(compute_ab_unit(EnvelopeTree(points, *unit_radius), disks));
        return ab_to_python(compute_ab(NNTree(points), disks));
      },
      py::arg("points"), py::arg("disks"), py::arg("unit_radius") = std::nullopt,
      "1-based (a, b) per disk; points must be sorted by x");
  m.def(
      "find_prunable",
      [](const std::vector<Point>& points, const std::vector<Disk>& disks) {
        const std::vector<ABRecord> ab = compute_ab(NNTree(points), disks);
        std::vector<std::size_t> ids(disks.size());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
        const PruneTree tree(points.size(), disks, ids, ab);
        return one_based(find_prunable(tree, points));
      },
      py::arg("points"), py::arg("disks"), "1-based prunable points; disks must be pairwise non-nested");

  m.def(
      "solve",
      [](const RawInstance& raw, std::optional<double> unit_radius, bool validate) {
        SolveOptions options;
        options.unit_radius = unit_radius;
        options.validate = validate;
        return solve_raw(raw, options).indices;
      },
      py::arg("raw"), py::arg("unit_radius") = std::nullopt, py::arg("validate") = false,
      "Optimal hitting set as 1-based input point indices");
  m.def(
      "solve_timed",
      [](const RawInstance& raw, std::optional<double> unit_radius) {
        SolveOptions options;
        options.unit_radius = unit_radius;
        StageTimings t;
        auto indices = solve_raw(raw, options, &t).indices;
        py::dict timings;
        timings["normalize"] = t.normalize;
        timings["filter"] = t.filter;
        timings["ab"] = t.ab;
        timings["prune"] = t.prune;
        timings["reduce"] = t.reduce;
        timings["1d"] = t.oned;
        timings["total"] = t.total;
        return py::make_tuple(indices, timings);
      },
      py::arg("raw"), py::arg("unit_radius") = std::nullopt);
  m.def(
      "verify_solution",
      [](const RawInstance& raw, std::vector<std::size_t> indices) {
        const VerifyResult r = verify_solution(raw, HittingSet{std::move(indices)});
        std::optional<std::size_t> unhit;
        if (r.unhit_disk) unhit = *r.unhit_disk + 1;
        return py::make_tuple(r.ok, unhit);
      },
      py::arg("raw"), py::arg("indices"), "(ok, first unhit 1-based disk or None)");
  m.def(
      "brute_optimum",
      [](const RawInstance& raw) {
        const Instance in = normalize(raw);
        return to_input_order(in, brute_optimum(in.points, in.disks).set).indices;
      },
      py::arg("raw"), "Exact optimum by exhaustive search (at most 20 points)");

  m.def(
      "generate",
      [](std::size_t n, std::size_t m_, std::uint64_t seed, GenKind kind, double coord_range,
         std::pair<double, double> radius_range, std::optional<double> min_x_gap) {
        GenConfig c;
        c.n = n;
        c.m = m_;
        c.seed = seed;
        c.kind = kind;
        c.coord_range = coord_range;
        c.radius_range = radius_range;
        c.min_x_gap = min_x_gap;
        return generate(c);
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("kind") = GenKind::line_constrained,
      py::arg("coord_range") = 10.0, py::arg("radius_range") = std::make_pair(1.0, 4.0),
      py::arg("min_x_gap") = std::nullopt);

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); }, py::arg("text"));
  m.def("format_instance", &format_instance, py::arg("raw"));
  m.def(
      "parse_solution", [](const std::string& text) { return parse_solution(text).indices; }, py::arg("text"));
  m.def(
      "format_solution", [](std::vector<std::size_t> indices) { return format_solution(HittingSet{std::move(indices)}); },
      py::arg("indices"));
}
