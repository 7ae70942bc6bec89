#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elastica/family.hpp"
#include "elastica/gallery.hpp"
#include "elastica/grid.hpp"
#include "elastica/relaxed.hpp"
#include "elastica/smoothing.hpp"

namespace py = pybind11;
using namespace elastica;

namespace {

std::vector<Vec2> to_points(const std::vector<std::pair<double, double>>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.first, p.second});
    return out;
}

std::vector<std::pair<double, double>> from_points(const std::vector<Vec2>& pts) {
    std::vector<std::pair<double, double>> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({p.x, p.y});
    return out;
}

}  // namespace

PYBIND11_MODULE(_elastica, m) {
    m.doc() = "p-elastica energies of planar curve systems, level families and grids";

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<DegenerateCurve>(m, "DegenerateCurveError");
    py::register_exception<PointOnTrace>(m, "PointOnTraceError");
    py::register_exception<OpenContour>(m, "OpenContourError");
    py::register_exception<OffsetSingularity>(m, "OffsetSingularityError");
    py::register_exception<BridgeCrossing>(m, "BridgeCrossingError");
    py::register_exception<NoValidCandidate>(m, "NoValidCandidateError");

    py::class_<ElasticaParams>(m, "ElasticaParams")
        .def(py::init<double, double, double>(), py::arg("p") = 2.0,
             py::arg("alpha") = 1.0, py::arg("beta") = 1.0)
        .def_readwrite("p", &ElasticaParams::p)
        .def_readwrite("alpha", &ElasticaParams::alpha)
        .def_readwrite("beta", &ElasticaParams::beta);

    py::class_<Curve>(m, "Curve")
        .def_static(
            "from_points",
            [](const std::vector<std::pair<double, double>>& pts) {
                return Curve::from_points(to_points(pts));
            },
            py::arg("points"))
        .def_static(
            "circle",
            [](std::pair<double, double> center, double radius, int n, bool ccw) {
                return Curve::circle({center.first, center.second}, radius, n, ccw);
            },
            py::arg("center"), py::arg("radius"), py::arg("n"), py::arg("ccw") = true)
        .def_property_readonly(
            "points", [](const Curve& c) { return from_points(c.points()); })
        .def_property_readonly("total_length", &Curve::total_length)
        .def_property_readonly("is_resampled", &Curve::is_resampled)
        .def_property_readonly("orientation", &Curve::orientation)
        .def("__len__", &Curve::size);

    m.def("resample_arclength", &resample_arclength, py::arg("curve"),
          py::arg("n_samples"));
    m.def("curvature_samples", &curvature_samples, py::arg("curve"));
    m.def("elastica_energy", &elastica_energy, py::arg("curve"), py::arg("params"));

    py::class_<CurveSystem>(m, "CurveSystem")
        .def(py::init<>())
        .def_static("from_parts", &CurveSystem::from_parts, py::arg("curves"),
                    py::arg("multiplicities"))
        .def_static("single", &CurveSystem::single, py::arg("curve"),
                    py::arg("multiplicity") = 1)
        .def_property_readonly("empty", &CurveSystem::empty)
        .def("__len__", &CurveSystem::size)
        .def("curve", &CurveSystem::curve, py::arg("i"))
        .def_property_readonly("multiplicities", &CurveSystem::multiplicities)
        .def("energy", &CurveSystem::energy, py::arg("params"))
        .def("total_trace_length", &CurveSystem::total_trace_length);

    m.def(
        "winding_index",
        [](std::pair<double, double> p, const CurveSystem& s, double tol) {
            return winding_index({p.first, p.second}, s, tol);
        },
        py::arg("point"), py::arg("system"), py::arg("dist_tol") = 1e-9);
    m.def(
        "interior_membership",
        [](std::pair<double, double> p, const CurveSystem& s, double tol) {
            return interior_membership({p.first, p.second}, s, tol);
        },
        py::arg("point"), py::arg("system"), py::arg("dist_tol") = 1e-9);
    m.def(
        "interior_area",
        [](const CurveSystem& s, std::pair<double, double> lo,
           std::pair<double, double> hi, int resolution, double boundary_tol) {
            BBox box;
            box.expand({lo.first, lo.second});
            box.expand({hi.first, hi.second});
            return interior_area(s, box, resolution, boundary_tol);
        },
        py::arg("system"), py::arg("bbox_lo"), py::arg("bbox_hi"),
        py::arg("resolution") = 512, py::arg("boundary_tol") = 0.0);

    py::enum_<ContactClass>(m, "ContactClass")
        .value("disjoint", ContactClass::disjoint)
        .value("tangential_contact", ContactClass::tangential_contact)
        .value("crossing", ContactClass::crossing);

    py::class_<ContactWitness>(m, "ContactWitness")
        .def_property_readonly(
            "point",
            [](const ContactWitness& w) { return std::pair{w.point.x, w.point.y}; })
        .def_readonly("curve_a", &ContactWitness::curve_a)
        .def_readonly("curve_b", &ContactWitness::curve_b)
        .def_readonly("angle", &ContactWitness::angle)
        .def_readonly("distance", &ContactWitness::distance);

    py::class_<ContactReport>(m, "ContactReport")
        .def_readonly("classification", &ContactReport::classification)
        .def_readonly("witnesses", &ContactReport::witnesses);

    m.def(
        "classify_contact",
        [](const CurveSystem& a, const CurveSystem& b, double dist_tol,
           double angle_tol) {
            if (dist_tol <= 0.0) return classify_contact(a, b, ContactTolerances{});
            return classify_contact(a, b, dist_tol, angle_tol);
        },
        py::arg("a"), py::arg("b"), py::arg("dist_tol") = 0.0,
        py::arg("angle_tol") = 0.15);

    py::class_<GridFunction>(m, "GridFunction")
        .def_static(
            "from_values",
            [](const std::vector<std::vector<double>>& rows, double spacing,
               std::pair<double, double> origin) {
                int nr = static_cast<int>(rows.size());
                int nc = nr > 0 ? static_cast<int>(rows[0].size()) : 0;
                std::vector<double> flat;
                flat.reserve(static_cast<std::size_t>(nr) * nc);
                for (const auto& r : rows) {
                    if (static_cast<int>(r.size()) != nc)
                        throw ValidationError("GridFunction: ragged rows");
                    flat.insert(flat.end(), r.begin(), r.end());
                }
                return GridFunction::from_values(std::move(flat), nr, nc, spacing,
                                                 {origin.first, origin.second});
            },
            py::arg("values"), py::arg("spacing"),
            py::arg("origin") = std::pair<double, double>{0.0, 0.0})
        .def_property_readonly("rows", &GridFunction::rows)
        .def_property_readonly("cols", &GridFunction::cols)
        .def_property_readonly("spacing", &GridFunction::spacing)
        .def("value", &GridFunction::value, py::arg("i"), py::arg("j"))
        .def("min_value", &GridFunction::min_value)
        .def("max_value", &GridFunction::max_value)
        .def("scaled", &GridFunction::scaled, py::arg("factor"),
             py::arg("offset") = 0.0);

    py::class_<LevelSetExtraction>(m, "LevelSetExtraction")
        .def_readonly("threshold", &LevelSetExtraction::threshold)
        .def_readonly("system", &LevelSetExtraction::system)
        .def_readonly("open_fragments", &LevelSetExtraction::open_fragments);

    m.def(
        "extract_level_set",
        [](const GridFunction& u, double t) { return extract_level_set(u, t); },
        py::arg("u"), py::arg("t"));

    py::class_<EnergyReport::Level>(m, "EnergyLevel")
        .def_readonly("level", &EnergyReport::Level::level)
        .def_readonly("t", &EnergyReport::Level::t)
        .def_readonly("length", &EnergyReport::Level::length)
        .def_readonly("curvature_term", &EnergyReport::Level::curvature_term)
        .def_readonly("energy", &EnergyReport::Level::energy);

    py::class_<EnergyReport>(m, "EnergyReport")
        .def_readonly("levels", &EnergyReport::levels)
        .def_readonly("total", &EnergyReport::total)
        .def_readonly("flags", &EnergyReport::flags)
        .def("to_csv", &EnergyReport::to_csv);

    m.def(
        "coarea_energy",
        [](const GridFunction& u, const ElasticaParams& prm, int n_levels, int threads) {
            return coarea_energy(u, prm, n_levels, threads);
        },
        py::arg("u"), py::arg("params"), py::arg("n_levels") = 64,
        py::arg("threads") = 0);
    m.def("divergence_energy", &divergence_energy, py::arg("u"), py::arg("params"),
          py::arg("grad_floor") = -1.0);

    py::class_<LevelFamily>(m, "LevelFamily")
        .def(py::init<>())
        .def_readwrite("thresholds", &LevelFamily::thresholds)
        .def_readwrite("systems", &LevelFamily::systems)
        .def_readwrite("range", &LevelFamily::range)
        .def("validate", &LevelFamily::validate);

    py::class_<NestingTolerances>(m, "NestingTolerances")
        .def(py::init<>())
        .def_readwrite("dist_tol", &NestingTolerances::dist_tol)
        .def_readwrite("angle_tol", &NestingTolerances::angle_tol)
        .def_readwrite("area_res", &NestingTolerances::area_res)
        .def_readwrite("match_dist_tol", &NestingTolerances::match_dist_tol)
        .def_readwrite("seed", &NestingTolerances::seed);

    py::class_<ConditionVerdict>(m, "ConditionVerdict")
        .def_readonly("pass_", &ConditionVerdict::pass)
        .def_property_readonly("witness_count", [](const ConditionVerdict& v) {
            return v.witnesses.size();
        });

    py::class_<LevelMatch>(m, "LevelMatch")
        .def_readonly("t", &LevelMatch::t)
        .def_readonly("area_pass", &LevelMatch::area_pass)
        .def_readonly("cover_pass", &LevelMatch::cover_pass)
        .def_readonly("sym_diff_area", &LevelMatch::sym_diff_area)
        .def_readonly("covered_fraction", &LevelMatch::covered_fraction);

    py::class_<NestingVerdict>(m, "NestingVerdict")
        .def_readonly("condition_i", &NestingVerdict::condition_i)
        .def_readonly("condition_ii", &NestingVerdict::condition_ii)
        .def_readonly("condition_iii", &NestingVerdict::condition_iii)
        .def_readonly("level_matches", &NestingVerdict::level_matches)
        .def_readonly("is_member", &NestingVerdict::is_member);

    m.def("check_conditions", &check_conditions, py::arg("phi"),
          py::arg("tolerances") = NestingTolerances{});
    m.def("check_membership", &check_membership, py::arg("phi"), py::arg("u"),
          py::arg("tolerances") = NestingTolerances{});
    m.def("family_energy_G", &family_energy_G, py::arg("phi"), py::arg("params"));

    py::class_<CandidateRanking::Entry>(m, "CandidateEntry")
        .def_readonly("index", &CandidateRanking::Entry::index)
        .def_readonly("member", &CandidateRanking::Entry::member)
        .def_readonly("energy", &CandidateRanking::Entry::energy)
        .def_readonly("verdict", &CandidateRanking::Entry::verdict);

    py::class_<CandidateRanking>(m, "CandidateRanking")
        .def_readonly("entries", &CandidateRanking::entries)
        .def_readonly("best_index", &CandidateRanking::best_index);

    m.def("compare_candidates", &compare_candidates, py::arg("candidates"), py::arg("u"),
          py::arg("params"), py::arg("tolerances") = NestingTolerances{});

    py::class_<Tabulated1D>(m, "Tabulated1D")
        .def(py::init([](std::vector<double> ts, std::vector<double> values) {
                 Tabulated1D t;
                 t.ts = std::move(ts);
                 t.values = std::move(values);
                 t.validate();
                 return t;
             }),
             py::arg("ts"), py::arg("values"))
        .def("integral", &Tabulated1D::integral)
        .def("integral_on", &Tabulated1D::integral_on, py::arg("a"), py::arg("b"));

    py::class_<DyadicAverages>(m, "DyadicAverages")
        .def_readonly("depth", &DyadicAverages::depth)
        .def_readonly("values", &DyadicAverages::values);

    m.def("dyadic_average", &dyadic_average, py::arg("f"), py::arg("depth"));

    py::class_<CutoffProfile>(m, "CutoffProfile")
        .def_static("quintic", &CutoffProfile::quintic, py::arg("width"), py::arg("c"),
                    py::arg("table_size") = 2048)
        .def("eval", &CutoffProfile::eval, py::arg("d"))
        .def("inverse", &CutoffProfile::inverse, py::arg("t"))
        .def_property_readonly("width", &CutoffProfile::width)
        .def_property_readonly("plateau", &CutoffProfile::plateau);

    py::class_<OffsetCurve>(m, "OffsetCurve")
        .def_readonly("delta", &OffsetCurve::delta)
        .def_readonly("result", &OffsetCurve::result)
        .def_readonly("predicted_curvature", &OffsetCurve::predicted_curvature);

    m.def("offset_curve", &offset_curve, py::arg("base"), py::arg("delta"));
    m.def("offset_energy_transform", &offset_energy_transform, py::arg("base"),
          py::arg("delta"), py::arg("params"));
    m.def("build_smooth_indicator", &build_smooth_indicator, py::arg("boundary"),
          py::arg("c"), py::arg("profile"), py::arg("grid_template"));
    m.def("smoothing_convergence_study", &smoothing_convergence_study,
          py::arg("boundary"), py::arg("c"), py::arg("collar_widths"), py::arg("params"),
          py::arg("grid_template"), py::arg("n_levels") = 64);

    py::class_<CuspedSet>(m, "CuspedSet")
        .def(py::init([](const std::vector<std::vector<std::pair<double, double>>>& arcs,
                         const std::vector<std::pair<std::pair<double, double>,
                                                     std::pair<double, double>>>& pairs) {
                 CuspedSet s;
                 for (const auto& a : arcs) s.boundary_arcs.push_back(to_points(a));
                 for (const auto& p : pairs)
                     s.cusp_pairs.push_back({{p.first.first, p.first.second},
                                             {p.second.first, p.second.second}});
                 for (const auto& arc : s.boundary_arcs)
                     for (const auto& q : arc) s.bbox.expand(q);
                 return s;
             }),
             py::arg("arcs"), py::arg("cusp_pairs"))
        .def("validate", &CuspedSet::validate, py::arg("angle_tol") = 0.15);

    py::class_<RelaxedEnergy>(m, "RelaxedEnergy")
        .def_readonly("report", &RelaxedEnergy::report)
        .def_readonly("minimizing_system", &RelaxedEnergy::minimizing_system)
        .def_readonly("bridge_length", &RelaxedEnergy::bridge_length);

    m.def("relaxed_energy_cusped", &relaxed_energy_cusped, py::arg("set"),
          py::arg("params"), py::arg("samples_per_arc") = 2048);
    m.def("coarea_lower_bound", &coarea_lower_bound, py::arg("u"),
          py::arg("per_level_relaxed"));
    m.def(
        "clip_energy",
        [](const CurveSystem& s, const std::vector<std::pair<double, double>>& omega,
           const ElasticaParams& prm) { return clip_energy(s, to_points(omega), prm); },
        py::arg("system"), py::arg("omega"), py::arg("params"));

    py::class_<ClippedArc>(m, "ClippedArc")
        .def_property_readonly(
            "points", [](const ClippedArc& a) { return from_points(a.points); })
        .def_readonly("source_curve", &ClippedArc::source_curve);

    py::class_<ClipResult>(m, "ClipResult")
        .def_readonly("report", &ClipResult::report)
        .def_readonly("arcs", &ClipResult::arcs);

    py::class_<SavareFamily>(m, "SavareFamily")
        .def_readonly("n", &SavareFamily::n)
        .def("eval", &SavareFamily::eval, py::arg("x"))
        .def("default_t_grid", &SavareFamily::default_t_grid)
        .def("subslab_width", &SavareFamily::subslab_width);

    m.def("make_savare_family", &make_savare_family, py::arg("n"),
          py::arg("grid_resolution") = 0);
    m.def("savare_level_counts", &savare_level_counts, py::arg("family"),
          py::arg("t_grid"));
    m.def("savare_energy_bound", &savare_energy_bound, py::arg("family"),
          py::arg("params"));

    m.attr("__version__") = "1.0.0";
}
