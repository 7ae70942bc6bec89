#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "elastica/errors.hpp"
#include "elastica/gallery.hpp"
#include "elastica/io.hpp"
#include "elastica/parallel.hpp"
#include "elastica/smoothing.hpp"

using namespace elastica;

namespace {

struct CommonOpts {
    double p = 2.0;
    double alpha = 1.0;
    double beta = 1.0;
    int levels = 64;
    int samples = 1024;
    double spacing = 0.0;
    double dist_tol = 0.0;
    double angle_tol = 0.15;
    int area_res = 512;
    int threads = 0;
    unsigned seed = 12345;
    std::string out;

    ElasticaParams params() const { return {p, alpha, beta}; }
    NestingTolerances tolerances() const {
        NestingTolerances t;
        t.dist_tol = dist_tol;
        t.angle_tol = angle_tol;
        t.area_res = area_res;
        t.seed = seed;
        return t;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "curvature exponent p > 1");
    cmd->add_option("--alpha", o.alpha, "length weight");
    cmd->add_option("--beta", o.beta, "curvature weight");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    cmd->add_option("--seed", o.seed, "seed for sampled long-range checks");
    cmd->add_option("-o,--out", o.out, "output file");
}

Curve load_curve(const std::string& path, int samples) {
    Curve c = curve_from_json(load_json(path));
    if (!c.is_resampled()) c = resample_arclength(c, samples);
    return c;
}

CurveSystem load_system_any(const json& j, int samples) {
    if (j.contains("curves")) {
        CurveSystem s = system_from_json(j);
        std::vector<Curve> cs;
        for (const auto& c : s.curves())
            cs.push_back(c.is_resampled() ? c : resample_arclength(c, samples));
        return CurveSystem::from_parts(std::move(cs), s.multiplicities());
    }
    Curve c = curve_from_json(j);
    if (!c.is_resampled()) c = resample_arclength(c, samples);
    return CurveSystem::single(std::move(c));
}

void emit(const std::string& text, const std::string& out) {
    if (!out.empty()) save_text(text, out);
}

int run_app(int argc, char** argv) {
    CLI::App app{"p-elastica energies of curves, grids and level families"};
    app.require_subcommand(1);

    // ---- energy-curve ------------------------------------------------------
    auto* ec = app.add_subcommand("energy-curve", "p-elastica energy of a closed curve");
    std::string ec_path;
    CommonOpts ec_o;
    ec->add_option("curve", ec_path, "curve JSON")->required();
    ec->add_option("--samples", ec_o.samples, "resampling count");
    add_common(ec, ec_o);
    ec->callback([&] {
        Curve c = load_curve(ec_path, ec_o.samples);
        EnergySplit e = elastica_energy_split(c, ec_o.params());
        EnergyReport rep;
        rep.levels.push_back({0, 0.0, c.total_length(), e.curvature_term, e.total()});
        rep.total = e.total();
        emit(rep.to_csv(), ec_o.out);
        std::cout << format_g9(e.total()) << "\n";
    });

    // ---- energy-image ------------------------------------------------------
    auto* ei = app.add_subcommand("energy-image",
                                  "coarea and divergence energies of a grid function");
    std::string ei_path;
    CommonOpts ei_o;
    ei->add_option("image", ei_path, "PGM or grid JSON")->required();
    ei->add_option("--levels", ei_o.levels, "number of coarea levels");
    ei->add_option("--spacing", ei_o.spacing, "physical pixel size for PGM input");
    add_common(ei, ei_o);
    ei->callback([&] {
        GridFunction u = read_grid_any(ei_path, ei_o.spacing);
        EnergyReport rep = coarea_energy(u, ei_o.params(), ei_o.levels, ei_o.threads);
        double fd = divergence_energy(u, ei_o.params());
        emit(rep.to_csv(), ei_o.out);
        std::cout << "coarea " << format_g9(rep.total) << "\n";
        std::cout << "divergence " << format_g9(fd) << "\n";
        for (const auto& f : rep.flags) std::cout << "flag " << f << "\n";
    });

    // ---- check-family ------------------------------------------------------
    auto* cf = app.add_subcommand("check-family",
                                  "nesting conditions and membership against an image");
    std::string cf_family, cf_image;
    CommonOpts cf_o;
    cf->add_option("family", cf_family, "LevelFamily JSON")->required();
    cf->add_option("image", cf_image, "PGM or grid JSON")->required();
    cf->add_option("--dist-tol", cf_o.dist_tol, "contact distance tolerance");
    cf->add_option("--angle-tol", cf_o.angle_tol, "crossing angle tolerance");
    cf->add_option("--area-res", cf_o.area_res, "rasterization resolution");
    cf->add_option("--spacing", cf_o.spacing, "physical pixel size for PGM input");
    add_common(cf, cf_o);
    cf->callback([&] {
        LevelFamily phi = family_from_json(load_json(cf_family));
        GridFunction u = read_grid_any(cf_image, cf_o.spacing);
        NestingVerdict v = check_membership(phi, u, cf_o.tolerances());
        json j = verdict_to_json(v);
        if (!cf_o.out.empty()) save_json(j, cf_o.out);
        std::cout << (v.is_member ? "member" : "not_member") << "\n";
        std::cout << "condition_i " << (v.condition_i.pass ? "pass" : "fail") << "\n";
        std::cout << "condition_ii " << (v.condition_ii.pass ? "pass" : "fail") << "\n";
        std::cout << "condition_iii " << (v.condition_iii.pass ? "pass" : "fail") << "\n";
    });

    // ---- compare -----------------------------------------------------------
    auto* cp = app.add_subcommand("compare", "rank candidate families by G over A(u)");
    std::vector<std::string> cp_inputs;
    CommonOpts cp_o;
    cp->add_option("inputs", cp_inputs, "family JSON files..., then the image")
        ->required()
        ->expected(-2);
    cp->add_option("--dist-tol", cp_o.dist_tol, "contact distance tolerance");
    cp->add_option("--spacing", cp_o.spacing, "physical pixel size for PGM input");
    add_common(cp, cp_o);
    cp->callback([&] {
        if (cp_inputs.size() < 2)
            throw ValidationError("compare: need at least one family and an image");
        GridFunction u = read_grid_any(cp_inputs.back(), cp_o.spacing);
        std::vector<LevelFamily> candidates;
        for (std::size_t i = 0; i + 1 < cp_inputs.size(); ++i)
            candidates.push_back(family_from_json(load_json(cp_inputs[i])));
        CandidateRanking r =
            compare_candidates(candidates, u, cp_o.params(), cp_o.tolerances());
        json j;
        j["format"] = 1;
        j["best_index"] = r.best_index;
        j["entries"] = json::array();
        for (const auto& e : r.entries)
            j["entries"].push_back({{"index", e.index},
                                    {"member", e.member},
                                    {"energy", e.energy}});
        if (!cp_o.out.empty()) save_json(j, cp_o.out);
        std::cout << "best " << r.best_index << " energy "
                  << format_g9(r.entries.front().energy) << "\n";
        for (const auto& e : r.entries)
            std::cout << "candidate " << e.index << (e.member ? " member " : " rejected ")
                      << format_g9(e.energy) << "\n";
    });

    // ---- smooth ------------------------------------------------------------
    auto* sm = app.add_subcommand("smooth",
                                  "smooth indicator of a set via the cut-off collar");
    std::string sm_path;
    std::vector<double> sm_collars;
    double sm_c = 1.0;
    int sm_grid = 512;
    double sm_pad = 0.0;
    CommonOpts sm_o;
    sm->add_option("curve", sm_path, "boundary curve JSON")->required();
    sm->add_option("--collar", sm_collars, "collar width(s); several run a study")
        ->required();
    sm->add_option("--c", sm_c, "plateau height");
    sm->add_option("--grid", sm_grid, "grid resolution per axis");
    sm->add_option("--pad", sm_pad, "extra margin around the boundary bbox");
    sm->add_option("--levels", sm_o.levels, "coarea levels for the study");
    sm->add_option("--samples", sm_o.samples, "boundary resampling count");
    add_common(sm, sm_o);
    sm->callback([&] {
        Curve boundary = load_curve(sm_path, std::max(sm_o.samples, 2048));
        double wmax = *std::max_element(sm_collars.begin(), sm_collars.end());
        BBox box = boundary.bbox();
        box.pad(wmax + sm_pad + 4.0 * std::max(box.width(), box.height()) / sm_grid);
        double h = std::max(box.width(), box.height()) / (sm_grid - 1);
        int cols = static_cast<int>(std::lround(box.width() / h)) + 1;
        int rows = static_cast<int>(std::lround(box.height() / h)) + 1;
        GridFunction tpl(rows, cols, h, box.lo);
        if (sm_collars.size() == 1) {
            GridFunction u = build_smooth_indicator(
                boundary, sm_c, CutoffProfile::quintic(sm_collars[0], sm_c), tpl);
            double f = coarea_energy(u, sm_o.params(), sm_o.levels, sm_o.threads).total;
            if (!sm_o.out.empty()) {
                if (sm_o.out.size() > 4 &&
                    sm_o.out.substr(sm_o.out.size() - 4) == ".pgm")
                    write_pgm(u.scaled(1.0 / sm_c), sm_o.out);
                else
                    save_json(grid_to_json(u), sm_o.out);
            }
            std::cout << format_g9(f) << "\n";
        } else {
            std::sort(sm_collars.rbegin(), sm_collars.rend());
            EnergyReport rep = smoothing_convergence_study(
                boundary, sm_c, sm_collars, sm_o.params(), tpl, sm_o.levels);
            emit(rep.to_csv(), sm_o.out);
            std::cout << format_g9(rep.study.back().coarea) << "\n";
            for (const auto& f : rep.flags) std::cout << "flag " << f << "\n";
        }
    });

    // ---- offset ------------------------------------------------------------
    auto* of = app.add_subcommand("offset", "normal offset of a closed curve");
    std::string of_path;
    double of_delta = 0.0;
    CommonOpts of_o;
    of->add_option("curve", of_path, "curve JSON")->required();
    of->add_option("--delta", of_delta, "signed offset distance")->required();
    of->add_option("--samples", of_o.samples, "resampling count");
    add_common(of, of_o);
    of->callback([&] {
        Curve base = load_curve(of_path, of_o.samples);
        OffsetCurve oc = offset_curve(base, of_delta);
        double predicted = offset_energy_transform(base, of_delta, of_o.params());
        double measured = elastica_energy(oc.result, of_o.params());
        if (!of_o.out.empty()) save_json(curve_to_json(oc.result), of_o.out);
        std::cout << "predicted " << format_g9(predicted) << "\n";
        std::cout << "measured " << format_g9(measured) << "\n";
    });

    // ---- relaxed-cusped ----------------------------------------------------
    auto* rc = app.add_subcommand("relaxed-cusped",
                                  "ghost-bridge relaxed energy of a cusped set");
    std::string rc_path, rc_system_out;
    CommonOpts rc_o;
    rc->add_option("set", rc_path, "CuspedSet JSON")->required();
    rc->add_option("--out-system", rc_system_out, "write the minimizing system JSON");
    add_common(rc, rc_o);
    rc->callback([&] {
        CuspedSet set = cusped_from_json(load_json(rc_path));
        RelaxedEnergy e = relaxed_energy_cusped(set, rc_o.params());
        emit(e.report.to_csv(), rc_o.out);
        if (!rc_system_out.empty())
            save_json(system_to_json(e.minimizing_system), rc_system_out);
        std::cout << format_g9(e.report.total) << "\n";
    });

    // ---- clip --------------------------------------------------------------
    auto* cl = app.add_subcommand("clip", "energy of the level lines inside a domain");
    std::string cl_input, cl_omega;
    CommonOpts cl_o;
    cl->add_option("input", cl_input, "family, system or curve JSON")->required();
    cl->add_option("omega", cl_omega, "polygon JSON")->required();
    cl->add_option("--samples", cl_o.samples, "resampling count");
    add_common(cl, cl_o);
    cl->callback([&] {
        json j = load_json(cl_input);
        std::vector<Vec2> omega = polygon_from_json(load_json(cl_omega));
        double total = 0.0;
        if (j.contains("slabs")) {
            LevelFamily phi = family_from_json(j);
            for (std::size_t s = 0; s < phi.slab_count(); ++s)
                total += phi.slab_width(s) *
                         clip_energy(phi.systems[s], omega, cl_o.params()).report.total;
        } else {
            ClipResult r = clip_energy(load_system_any(j, cl_o.samples), omega,
                                       cl_o.params());
            total = r.report.total;
            emit(r.report.to_csv(), cl_o.out);
        }
        std::cout << format_g9(total) << "\n";
    });

    // ---- savare ------------------------------------------------------------
    auto* sv = app.add_subcommand("savare", "the oscillating-counts example");
    int sv_n = 3;
    int sv_res = 0;
    CommonOpts sv_o;
    sv->add_option("--n", sv_n, "dyadic frequency")->required();
    sv->add_option("--grid", sv_res, "x-grid resolution for counting");
    add_common(sv, sv_o);
    sv->callback([&] {
        SavareFamily fam = make_savare_family(sv_n, sv_res);
        auto tg = fam.default_t_grid();
        auto counts = savare_level_counts(fam, tg);
        double bound = savare_energy_bound(fam, sv_o.params());
        std::vector<std::function<double(double)>> phis = {
            [](double) { return 1.0; }, [](double t) { return t; }};
        std::vector<int> ns;
        for (int k = 0; k <= sv_n; ++k) ns.push_back(k);
        auto weak = savare_weak_convergence(ns, phis);
        json rep;
        rep["format"] = 1;
        rep["n"] = sv_n;
        rep["t_grid"] = tg;
        rep["counts"] = counts;
        rep["energy_integral"] = bound;
        rep["bound_ok"] = bound < 1.5;
        rep["weak_convergence"] = json::array();
        for (const auto& r : weak)
            rep["weak_convergence"].push_back({{"n", r.n},
                                               {"phi", r.phi_index},
                                               {"gap", r.gap},
                                               {"l2_distance_sq", r.l2_sq}});
        if (!sv_o.out.empty()) save_json(rep, sv_o.out);
        std::cout << "energy " << format_g9(bound) << (bound < 1.5 ? " < 1.5" : " >= 1.5")
                  << "\n";
        for (const auto& r : weak)
            if (r.phi_index == 1)
                std::cout << "gap n=" << r.n << " " << format_g9(r.gap) << "\n";
    });

    // ---- gallery -----------------------------------------------------------
    auto* ga = app.add_subcommand("gallery", "write the figure fixtures");
    std::string ga_name = "all";
    std::string ga_dir;
    CommonOpts ga_o;
    ga->add_option("fixture", ga_name, "fixture name: fig1|fig5|fig9|fig10|savare|all");
    ga->add_option("--dir", ga_dir,
                   "output directory (default ELASTICA_FIXTURES or ./fixtures)");
    add_common(ga, ga_o);
    ga->callback([&] {
        if (ga_dir.empty()) {
            const char* env = std::getenv("ELASTICA_FIXTURES");
            ga_dir = env != nullptr ? env : "fixtures";
        }
        FixtureSet set = build_figure_examples();
        write_fixture_files(set, ga_dir);
        std::cout << "fixtures written to " << ga_dir << "\n";
        ElasticaParams prm = ga_o.params();
        if (ga_name == "fig10" || ga_name == "all") {
            RelaxedEnergy whole = relaxed_energy_cusped(set.drop_omega.drop, prm);
            ClipResult clipped =
                clip_energy(set.drop_omega.boundary, set.drop_omega.omega, prm);
            std::cout << "fig10 whole-plane " << format_g9(whole.report.total)
                      << " clipped " << format_g9(clipped.report.total) << "\n";
        }
        if (ga_name == "fig5" || ga_name == "all") {
            NestingVerdict v = check_conditions(set.nesting.family_gamma1,
                                                set.nesting.tolerances);
            std::cout << "fig5 gamma1/gamma2 condition_iii "
                      << (v.condition_iii.pass ? "pass" : "fail") << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
