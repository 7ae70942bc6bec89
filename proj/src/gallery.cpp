#include "elastica/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/errors.hpp"
#include "elastica/io.hpp"
#include "elastica/smoothing.hpp"

namespace elastica {

namespace {

constexpr double kPi = std::numbers::pi;

double sq(double v) { return v * v; }

// Integral of the 2-periodic square wave (+1 on (0,1/2) and (1,2), -1 on
// (1/2,1)); U(2k) = k.
double square_wave_integral(double y) {
    double q = std::floor(y / 2.0);
    double r = y - 2.0 * q;
    double frac;
    if (r <= 0.5)
        frac = r;
    else if (r <= 1.0)
        frac = 1.0 - r;
    else
        frac = r - 1.0;
    return q + frac;
}

}  // namespace

double SavareFamily::eval(double x) const {
    double scale = std::ldexp(1.0, n + 1);  // 2^(n+1)
    return square_wave_integral(scale * x) / scale;
}

double SavareFamily::subslab_width() const { return std::ldexp(1.0, -(n + 2)); }

std::vector<double> SavareFamily::default_t_grid() const {
    double w = subslab_width();
    int count = 1 << (n + 1);  // sub-slabs in (0, 1/2)
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) ts.push_back((j + 0.5) * w);
    return ts;
}

SavareFamily make_savare_family(int n, int grid_resolution) {
    if (n < 0 || n > 20) throw ValidationError("SavareFamily: n must be in [0, 20]");
    SavareFamily f;
    f.n = n;
    f.grid_resolution = std::max(grid_resolution, std::max(1 << (n + 6), 4096));
    return f;
}

std::vector<int> savare_level_counts(const SavareFamily& fam,
                                     const std::vector<double>& t_grid) {
    const int m = fam.grid_resolution;
    std::vector<double> vals(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i)
        vals[i] = fam.eval(static_cast<double>(i) / m);
    std::vector<int> counts;
    counts.reserve(t_grid.size());
    for (double t : t_grid) {
        // sign-run counting: exact hits on grid nodes do not break a
        // transversal crossing
        int c = 0, last = 0;
        for (int i = 0; i <= m; ++i) {
            int s = vals[i] > t ? 1 : (vals[i] < t ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++c;
            last = s;
        }
        counts.push_back(c);
    }
    return counts;
}

Tabulated1D savare_count_tabulation(const SavareFamily& fam) {
    std::vector<double> ts = fam.default_t_grid();
    std::vector<int> counts = savare_level_counts(fam, ts);
    const double w = fam.subslab_width();
    const double eps = 1e-9 * w;
    Tabulated1D tab;
    tab.ts.push_back(0.0);
    tab.values.push_back(counts.front());
    for (std::size_t j = 1; j < counts.size(); ++j) {
        double b = j * w;
        tab.ts.push_back(b - eps);
        tab.values.push_back(counts[j - 1]);
        tab.ts.push_back(b + eps);
        tab.values.push_back(counts[j]);
    }
    tab.ts.push_back(0.5);
    tab.values.push_back(counts.back());
    return tab;
}

std::vector<SavareWeakRow> savare_weak_convergence(
    const std::vector<int>& n_list,
    const std::vector<std::function<double(double)>>& test_functions) {
    // 4-point Gauss-Legendre on each sub-slab
    static const double gx[4] = {-0.8611363115940526, -0.3399810435848563,
                                 0.3399810435848563, 0.8611363115940526};
    static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                 0.6521451548625461, 0.3478548451374538};
    std::vector<SavareWeakRow> rows;
    for (int n : n_list) {
        SavareFamily fam = make_savare_family(n);
        std::vector<double> ts = fam.default_t_grid();
        std::vector<int> counts = savare_level_counts(fam, ts);
        const double w = fam.subslab_width();
        double l2 = 0.0;
        for (int c : counts) l2 += sq(static_cast<double>(c) - 2.0) * w;
        for (std::size_t pi = 0; pi < test_functions.size(); ++pi) {
            const auto& phi = test_functions[pi];
            double int_f = 0.0, int_2 = 0.0;
            for (std::size_t j = 0; j < counts.size(); ++j) {
                double a = j * w, b = (j + 1) * w;
                double mid = 0.5 * (a + b), half = 0.5 * (b - a);
                double phint = 0.0;
                for (int q = 0; q < 4; ++q) phint += gw[q] * phi(mid + half * gx[q]);
                phint *= half;
                int_f += counts[j] * phint;
                int_2 += 2.0 * phint;
            }
            rows.push_back({n, static_cast<int>(pi), int_f, int_2, int_f - int_2, l2});
        }
    }
    return rows;
}

double savare_energy_bound(const SavareFamily& fam, const ElasticaParams& params) {
    params.validate();
    std::vector<double> ts = fam.default_t_grid();
    std::vector<int> counts = savare_level_counts(fam, ts);
    const double w = fam.subslab_width();
    double acc = 0.0;
    // level lines are unit-height vertical segments with zero curvature
    for (int c : counts) acc += params.alpha * static_cast<double>(c) * 1.0 * w;
    return acc;
}

// ---------------------------------------------------------------------------
// Shared construction helpers

namespace {

constexpr double kSampleSpacing = 0.003;

void push_point(std::vector<Vec2>& pts, const Vec2& p) {
    if (pts.empty() || dist(pts.back(), p) > 1e-12) pts.push_back(p);
}

// Graph sampler: appends (x, g(x)) walking x from x0 to x1.
void append_graph(std::vector<Vec2>& pts, const std::function<double(double)>& g,
                  double x0, double x1, int n) {
    for (int i = 0; i <= n; ++i) {
        double x = x0 + (x1 - x0) * static_cast<double>(i) / n;
        push_point(pts, {x, g(x)});
    }
}

Curve finish_closed(std::vector<Vec2> pts, double spacing = kSampleSpacing) {
    Curve raw = Curve::from_points(std::move(pts));
    int n = std::max(64, static_cast<int>(std::lround(raw.total_length() / spacing)));
    return resample_arclength(raw, n);
}

// ---- nesting fixture geometry --------------------------------------------

struct SliverShape {
    double x_cusp;   // cusp abscissa (the bridged end)
    double x_tip;    // far tip abscissa
    double span;     // |x_cusp - x_tip|
    double hi_amp = 0.95;
    double lo_frac = 0.36;

    double param(double x) const { return (x - x_tip) / (x_cusp - x_tip); }
    // quartic flatness at both ends keeps every tangential approach within
    // the contact angle tolerance
    double hi(double x) const { return hi_amp * sq(sq(std::sin(kPi * param(x)))); }
    double lo(double x) const { return lo_frac * hi(x); }
    double mid(double x) const { return 0.5 * (hi(x) + lo(x)); }
};

// Ends the wall sampling near the far tip so that the last wall point, the
// tip and the first point of the other wall are collinear: the reversal
// through the tip then carries no spurious discrete curvature.
double matched_tip_offset(const SliverShape& s, double eps_hi) {
    double x_hi = s.x_tip + (s.x_cusp > s.x_tip ? eps_hi : -eps_hi);
    double slope = s.hi(x_hi) / eps_hi;
    double a = eps_hi, b = 16.0 * eps_hi;
    for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        double x = s.x_tip + (s.x_cusp > s.x_tip ? m : -m);
        if (s.lo(x) / m < slope)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

}  // namespace

NestingFixture build_nesting_fixture() {
    NestingFixture fx;
    const double xa = -1.5, xb = 1.5;  // cusp points A, B on the axis
    fx.bridge_length = xb - xa;

    // --- boundary of E ------------------------------------------------------
    // Upper half: ellipse 4.5 x 2.6. Lower half: y = sin(theta) R(x) with a
    // radial profile R that dips under the slivers, rises into the mouth
    // bump over the bridge, and vanishes quartically flat at the cusps A, B
    // so every contact there stays tangential.
    auto qM = [&](double x) {
        if (x <= xa || x >= xb) return 0.0;
        return sq(sq(std::sin(kPi * (x - xa) / (xb - xa))));
    };
    auto q_out = [&](double x) {
        double r = std::abs(x);
        if (r <= 1.5) return 0.0;
        double s = std::min((r - 1.5) / 2.4, 0.5);
        return sq(sq(std::sin(kPi * s)));
    };
    auto lower_radial = [&](double x) { return 1.0 * q_out(x) - 1.17 * qM(x); };
    {
        std::vector<Vec2> pts;
        const int N = 24000;
        for (int i = 0; i < N; ++i) {
            double th = 2.0 * kPi * i / N;
            double x = 4.5 * std::cos(th);
            double y = th <= kPi ? 2.6 * std::sin(th)
                                 : std::sin(th) * lower_radial(x);
            push_point(pts, {x, y});
        }
        fx.e_boundary = finish_closed(std::move(pts));
    }
    fx.gamma1 = CurveSystem::single(fx.e_boundary);

    // --- the cusped pair F and its bridged system gamma2 -------------------
    SliverShape s1{xa, -3.8, 2.3};
    SliverShape s2{xb, 3.8, 2.3};

    auto hi1 = [&](double x) { return s1.hi(x); };
    auto lo1 = [&](double x) { return s1.lo(x); };
    auto hi2 = [&](double x) { return s2.hi(x); };
    auto lo2 = [&](double x) { return s2.lo(x); };

    const double eps_hi = 0.02;
    const double eps_lo1 = matched_tip_offset(s1, eps_hi);
    const double eps_lo2 = eps_lo1;  // mirrored shape

    {
        std::vector<Vec2> pts;
        const int wall_n = 4000, bridge_n = 1000;
        // around F1: cusp A -> tip along hi, back along lo
        append_graph(pts, hi1, xa, s1.x_tip + eps_hi, wall_n);
        push_point(pts, {s1.x_tip, 0.0});
        append_graph(pts, lo1, s1.x_tip + eps_lo1, xa, wall_n);
        // bridge A -> B
        append_graph(pts, [](double) { return 0.0; }, xa, xb, bridge_n);
        // around F2: cusp B -> tip along lo, back along hi
        append_graph(pts, lo2, xb, s2.x_tip - eps_lo2, wall_n);
        push_point(pts, {s2.x_tip, 0.0});
        append_graph(pts, hi2, s2.x_tip - eps_hi, xb, wall_n);
        // bridge B -> A (drop the final duplicate of A)
        for (int i = 0; i <= bridge_n; ++i) {
            double x = xb + (xa - xb) * static_cast<double>(i) / bridge_n;
            if (i == bridge_n) break;
            push_point(pts, {x, 0.0});
        }
        fx.gamma2 = CurveSystem::single(finish_closed(std::move(pts)));
    }

    // --- gamma3: dE plus the out-and-back bridge runner --------------------
    auto make_out_and_back = [&](const std::vector<Vec2>& fore) {
        std::vector<Vec2> pts = fore;
        for (std::size_t i = fore.size() - 1; i-- > 1;) push_point(pts, fore[i]);
        return Curve::from_uniform_samples(std::move(pts));
    };
    {
        std::vector<Vec2> fore;
        append_graph(fore, [](double) { return 0.0; }, xa, xb, 1000);
        fx.gamma3 = CurveSystem::from_parts({fx.e_boundary, make_out_and_back(fore)},
                                            {1, 1});
    }

    // --- gamma4: dE plus a runner dipping through the open slivers ---------
    {
        std::vector<Vec2> fore;
        append_graph(fore, [&](double x) { return s1.mid(x); }, -2.9, xa, 470);
        append_graph(fore, [](double) { return 0.0; }, xa, xb, 1000);
        append_graph(fore, [&](double x) { return s2.mid(x); }, xb, 2.9, 470);
        fx.gamma4 = CurveSystem::from_parts({fx.e_boundary, make_out_and_back(fore)},
                                            {1, 1});
    }

    // --- F as a CuspedSet ---------------------------------------------------
    {
        auto sample_arc = [&](const std::function<double(double)>& g, double x0,
                              double x1, int n) {
            std::vector<Vec2> pts;
            append_graph(pts, g, x0, x1, n);
            return pts;
        };
        fx.f_cusped.boundary_arcs.push_back(sample_arc(hi1, xa, s1.x_tip, 6000));
        fx.f_cusped.boundary_arcs.push_back(sample_arc(lo1, s1.x_tip, xa, 6000));
        fx.f_cusped.boundary_arcs.push_back(sample_arc(hi2, xb, s2.x_tip, 6000));
        fx.f_cusped.boundary_arcs.push_back(sample_arc(lo2, s2.x_tip, xb, 6000));
        fx.f_cusped.cusp_pairs.push_back({{xa, 0.0}, {xb, 0.0}});
        for (const auto& arc : fx.f_cusped.boundary_arcs)
            for (const auto& p : arc) fx.f_cusped.bbox.expand(p);
    }

    // --- u = 1_E + 1_F on a grid -------------------------------------------
    {
        const double h = 0.0125;
        BBox box = fx.e_boundary.bbox();
        box.pad(0.15);
        int cols = static_cast<int>(std::lround(box.width() / h)) + 1;
        int rows = static_cast<int>(std::lround(box.height() / h)) + 1;
        GridFunction u(rows, cols, h, box.lo);
        BBox node_box;
        node_box.expand(box.lo - Vec2{h / 2, h / 2});
        node_box.expand(u.point_at(rows - 1, cols - 1) + Vec2{h / 2, h / 2});
        auto me = rasterize_interior(fx.gamma1, node_box, cols, rows);
        auto mf = rasterize_interior(fx.gamma2, node_box, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                std::size_t k = static_cast<std::size_t>(i) * cols + j;
                u.at(i, j) = static_cast<double>(me[k]) + static_cast<double>(mf[k]);
            }
        fx.u = std::move(u);
    }

    fx.tolerances.dist_tol = 0.006;
    fx.tolerances.angle_tol = 0.15;
    fx.tolerances.area_res = 512;

    auto family_with = [&](const CurveSystem& lower) {
        LevelFamily f;
        f.thresholds = {0.02, 1.0};
        f.systems = {lower, fx.gamma2};
        f.range = {0.02, 2.0};
        return f;
    };
    fx.family_gamma1 = family_with(fx.gamma1);
    fx.family_gamma3 = family_with(fx.gamma3);
    fx.family_gamma4 = family_with(fx.gamma4);
    return fx;
}

// ---------------------------------------------------------------------------

namespace {

// Drop wall: round nose at u=0 (sqrt), flat cusp at u=1 (quadratic).
double drop_wall(double u) {
    u = std::clamp(u, 0.0, 1.0);
    return 1.8 * std::sqrt(u) * sq(1.0 - u);
}

Curve staircase_drop(double x_nose, double x_cusp) {
    std::vector<Vec2> pts;
    const int n = 1400;
    // lower wall nose->cusp, then upper wall cusp->nose: ccw
    for (int i = 0; i <= n; ++i) {
        double u = static_cast<double>(i) / n;
        double x = x_nose + (x_cusp - x_nose) * u;
        push_point(pts, {x, -drop_wall(u)});
    }
    for (int i = n; i-- > 1;) {
        double u = static_cast<double>(i) / n;
        double x = x_nose + (x_cusp - x_nose) * u;
        push_point(pts, {x, drop_wall(u)});
    }
    return finish_closed(std::move(pts), 0.004);
}

}  // namespace

StaircaseFixture build_staircase_fixture() {
    StaircaseFixture fx;
    Curve d1 = staircase_drop(-3.25, -0.75);
    Curve d2 = staircase_drop(3.25, 0.75);
    fx.drops = CurveSystem::from_parts({d1, d2}, {1, 1});
    fx.cusp_distance = 1.5;
    fx.steps = 3;
    fx.tube_half_heights = {0.18, 0.045, 0.01125};
    fx.collars = {0.24, 0.12, 0.06};

    const double h = 0.012;
    BBox box;
    box.expand({-3.85, -0.95});
    box.expand({3.85, 0.95});
    int cols = static_cast<int>(std::lround(box.width() / h)) + 1;
    int rows = static_cast<int>(std::lround(box.height() / h)) + 1;
    GridFunction u(rows, cols, h, box.lo);
    BBox node_box;
    node_box.expand(box.lo - Vec2{h / 2, h / 2});
    node_box.expand(u.point_at(rows - 1, cols - 1) + Vec2{h / 2, h / 2});
    auto mask = rasterize_interior(fx.drops, node_box, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            u.at(i, j) = mask[static_cast<std::size_t>(i) * cols + j];
    fx.u = std::move(u);
    return fx;
}

namespace {

// C^2 blend of max(a, b): exact max outside |a-b| < k, quintic crossover
// inside; the crossover curvature stays ~ (slope gap)^2 / k.
double blend_max(double a, double b, double k) {
    double d = (a - b) / k;
    if (d >= 1.0) return a;
    if (d <= -1.0) return b;
    double sigma = (3.0 - d) * (d + 1.0) * (d + 1.0) * (d + 1.0) / 16.0;
    return b + k * sigma;
}

}  // namespace

GridFunction staircase_approximant(const StaircaseFixture& fx, int step) {
    if (step < 0 || step >= fx.steps)
        throw ValidationError("staircase_approximant: step out of range");
    const double rho = fx.tube_half_heights[static_cast<std::size_t>(step)];
    const double collar = fx.collars[static_cast<std::size_t>(step)];

    const double x_nose1 = -3.25, x_cusp1 = -0.75;
    auto walls = [&](double x) {
        return drop_wall((x - x_nose1) / (x_cusp1 - x_nose1)) +
               drop_wall((-x - x_nose1) / (x_cusp1 - x_nose1));
    };
    // slope of the wall where it crosses the tube height, for the blend scale
    double a = 0.55, b = 1.0 - 1e-9;
    for (int it = 0; it < 80; ++it) {
        double m = 0.5 * (a + b);
        if (drop_wall(m) > rho)
            a = m;
        else
            b = m;
    }
    double uj = 0.5 * (a + b);
    double du = 1e-5;
    double theta = std::abs(drop_wall(uj + du) - drop_wall(uj - du)) / (2.0 * du) /
                   std::abs(x_cusp1 - x_nose1);
    double k = std::max(1.6 * theta * theta * collar, 1e-4);

    // tube profile: flat at rho between the drops, dying inside them
    auto tube = [&](double x) {
        double over = std::max(0.0, std::abs(x) - 2.2);
        return rho - 8.0 * over * over;
    };
    auto upper = [&](double x) { return blend_max(walls(x), tube(x), k); };

    std::vector<Vec2> pts;
    const int n = 14000;
    for (int i = 0; i <= n; ++i) {  // lower boundary, left nose to right nose
        double x = x_nose1 + (-2.0 * x_nose1) * static_cast<double>(i) / n;
        push_point(pts, {x, -upper(x)});
    }
    for (int i = n; i-- > 1;) {  // upper boundary back
        double x = x_nose1 + (-2.0 * x_nose1) * static_cast<double>(i) / n;
        push_point(pts, {x, upper(x)});
    }
    Curve dumbbell = finish_closed(std::move(pts), 0.004);
    if (dumbbell.orientation() != 1) dumbbell = dumbbell.reversed();

    CutoffProfile profile = CutoffProfile::quintic(collar, 1.0);
    return build_smooth_indicator(dumbbell, 1.0, profile, fx.u);
}

DropOmegaFixture build_drop_omega_fixture() {
    DropOmegaFixture fx;
    auto wall = [](double x) { return 0.8 * sq(std::sin(kPi * x / 3.0)); };
    {
        std::vector<Vec2> up, lo;
        append_graph(up, [&](double x) { return wall(x); }, 0.0, 3.0, 4800);
        append_graph(lo, [&](double x) { return -wall(x); }, 3.0, 0.0, 4800);
        fx.drop.boundary_arcs.push_back(up);
        fx.drop.boundary_arcs.push_back(lo);
        fx.drop.cusp_pairs.push_back({{0.0, 0.0}, {3.0, 0.0}});
        for (const auto& arc : fx.drop.boundary_arcs)
            for (const auto& p : arc) fx.drop.bbox.expand(p);
    }
    {
        std::vector<Vec2> pts;
        append_graph(pts, [&](double x) { return wall(x); }, 0.0, 3.0, 4800);
        for (int i = 4800; i-- > 1;) {
            double x = 3.0 * static_cast<double>(i) / 4800;
            push_point(pts, {x, -wall(x)});
        }
        fx.boundary = CurveSystem::single(finish_closed(std::move(pts), 0.004));
    }
    fx.omega = {{0.7, -1.5}, {2.3, -1.5}, {2.3, 1.5}, {0.7, 1.5}};
    return fx;
}

FixtureSet build_figure_examples() {
    FixtureSet set;
    set.staircase = build_staircase_fixture();
    set.nesting = build_nesting_fixture();
    set.drop_omega = build_drop_omega_fixture();
    return set;
}

void write_fixture_files(const FixtureSet& fixtures, const std::filesystem::path& dir) {
    namespace fsys = std::filesystem;
    fsys::create_directories(dir);
    json manifest = json::array();
    auto note = [&](const std::string& file, const std::string& figure,
                    const std::string& desc) {
        manifest.push_back({{"file", file}, {"figure", figure}, {"description", desc}});
    };

    const NestingFixture& nf = fixtures.nesting;
    // PGM stores u/2 so the three values 0, 1, 2 map into [0,1]; the family
    // thresholds written next to it are scaled the same way.
    GridFunction u_scaled = nf.u.scaled(0.5);
    write_pgm(u_scaled, dir / "figEF.pgm", 60000);
    json meta;
    meta["format"] = 1;
    meta["spacing"] = nf.u.spacing();
    meta["origin"] = {nf.u.origin().x, nf.u.origin().y};
    save_json(meta, dir / "figEF.pgm.json");
    note("figEF.pgm", "fig4", "u = 1_E + 1_F scaled by 1/2 (values 0, 1/2, 1)");
    note("figEF.pgm.json", "fig4", "geometry sidecar: spacing and origin of figEF.pgm");
    save_json(grid_to_json(nf.u), dir / "figEF.json");
    note("figEF.json", "fig4", "u = 1_E + 1_F with values 0, 1, 2");

    auto scaled_family = [&](const LevelFamily& f) {
        LevelFamily g = f;
        g.thresholds = {0.01, 0.5};
        g.range = {0.01, 1.0};
        return g;
    };
    save_json(family_to_json(scaled_family(nf.family_gamma1)),
              dir / "fig5_gamma1_gamma2.json");
    note("fig5_gamma1_gamma2.json", "fig5",
         "family (Gamma_1, Gamma_2) for figEF.pgm; fails condition (iii)");
    save_json(family_to_json(scaled_family(nf.family_gamma3)),
              dir / "fig5_gamma3_gamma2.json");
    note("fig5_gamma3_gamma2.json", "fig5",
         "family (Gamma_3, Gamma_2) for figEF.pgm; member of A(u)");
    save_json(family_to_json(scaled_family(nf.family_gamma4)),
              dir / "fig5_gamma4_gamma2.json");
    note("fig5_gamma4_gamma2.json", "fig5",
         "family (Gamma_4, Gamma_2) for figEF.pgm; fails condition (ii)");
    save_json(cusped_to_json(nf.f_cusped), dir / "fig9_cusped_F.json");
    note("fig9_cusped_F.json", "fig9", "the cusped pair F with its bridge pair");
    save_json(curve_to_json(nf.e_boundary), dir / "fig5_E_boundary.json");
    note("fig5_E_boundary.json", "fig5", "smooth boundary of E");

    const StaircaseFixture& sf = fixtures.staircase;
    write_pgm(sf.u, dir / "fig1_u.pgm", 255);
    json meta1;
    meta1["format"] = 1;
    meta1["spacing"] = sf.u.spacing();
    meta1["origin"] = {sf.u.origin().x, sf.u.origin().y};
    save_json(meta1, dir / "fig1_u.pgm.json");
    note("fig1_u.pgm", "fig1", "binary raster of 1_E, E = facing-cusp drop pair");
    save_json(system_to_json(sf.drops), dir / "fig1_drops.json");
    note("fig1_drops.json", "fig1", "the two cusped drops");

    const DropOmegaFixture& df = fixtures.drop_omega;
    save_json(cusped_to_json(df.drop), dir / "fig10_drop.json");
    note("fig10_drop.json", "fig10", "drop with both cusps outside omega");
    save_json(polygon_to_json(df.omega), dir / "fig10_omega.json");
    note("fig10_omega.json", "fig10", "window domain omega");
    save_json(system_to_json(df.boundary), dir / "fig10_boundary.json");
    note("fig10_boundary.json", "fig10", "closed lens boundary for clipping");

    SavareFamily sav = make_savare_family(3);
    json sj;
    sj["format"] = 1;
    sj["n"] = sav.n;
    sj["t_grid"] = sav.default_t_grid();
    sj["counts"] = savare_level_counts(sav, sav.default_t_grid());
    save_json(sj, dir / "savare_n3_counts.json");
    note("savare_n3_counts.json", "example1.2", "level counts of U_3 on sub-slab midpoints");

    save_json(manifest, dir / "manifest.json");
}

}  // namespace elastica
