#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "elastica/family.hpp"
#include "elastica/smoothing.hpp"

using namespace elastica;

namespace {

constexpr double kPi = std::numbers::pi;

Curve ellipse(double a, double b, int n) {
    std::vector<Vec2> pts;
    // near-uniform arc sampling via simple parameter refinement
    std::vector<Vec2> raw;
    int m = n * 8;
    for (int i = 0; i < m; ++i) {
        double t = 2.0 * kPi * i / m;
        raw.push_back({a * std::cos(t), b * std::sin(t)});
    }
    (void)pts;
    return resample_arclength(Curve::from_points(std::move(raw)), n);
}

GridFunction square_grid(int n, double half) {
    return GridFunction(n, n, 2.0 * half / (n - 1), {-half, -half});
}

}  // namespace

TEST_CASE("offset: circle R=2 by +0.5 has curvature 0.4") {
    Curve base = Curve::circle({0, 0}, 2.0, 1024);
    OffsetCurve oc = offset_curve(base, 0.5);
    for (double k : oc.predicted_curvature) CHECK(k == doctest::Approx(0.4).epsilon(1e-9));
    auto measured = curvature_samples(oc.result);
    for (double k : measured) CHECK(std::abs(k - 0.4) < 1e-2);
    CHECK(oc.result.total_length() ==
          doctest::Approx(2.0 * kPi * 2.5).epsilon(1e-3));
}

TEST_CASE("offset: delta = 0 is the identity") {
    Curve base = Curve::circle({1, 2}, 1.3, 512);
    OffsetCurve oc = offset_curve(base, 0.0);
    REQUIRE(oc.result.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(dist(base.point(i), oc.result.point(i)) < 1e-9);
}

TEST_CASE("offset: inward offset to the singular radius throws") {
    Curve base = Curve::circle({0, 0}, 1.0, 256);
    CHECK_THROWS_AS(offset_curve(base, -1.0), OffsetSingularity);
    CHECK_THROWS_AS(offset_curve(base, -0.97), OffsetSingularity);  // margin 0.05
}

TEST_CASE("offset transform: circle closed form") {
    Curve base = Curve::circle({0, 0}, 2.0, 2048);
    ElasticaParams prm{2.0, 1.0, 1.0};
    double predicted = offset_energy_transform(base, 0.5, prm);
    double expected = 2.0 * kPi * 2.5 * (1.0 + 0.4 * 0.4);  // ~18.221
    CHECK(std::abs(predicted - expected) < 1e-2);
}

TEST_CASE("offset transform: delta = 0 reduces to the plain energy") {
    Curve base = Curve::circle({0, 0}, 1.0, 512);
    ElasticaParams prm{2.0, 1.0, 1.0};
    CHECK(offset_energy_transform(base, 0.0, prm) ==
          doctest::Approx(elastica_energy(base, prm)).epsilon(1e-12));
}

TEST_CASE("offset: geometric vs analytic transform agree on an ellipse") {
    Curve base = ellipse(2.0, 1.0, 2048);
    ElasticaParams prm{2.0, 1.0, 1.0};
    OffsetCurve oc = offset_curve(base, 0.1);
    double measured = elastica_energy(oc.result, prm);
    double predicted = offset_energy_transform(base, 0.1, prm);
    CHECK(std::abs(measured - predicted) / predicted <= 0.01);
}

TEST_CASE("offset: length transform dH1 = |1 + delta k| dH1") {
    Curve base = ellipse(2.0, 1.0, 2048);
    double delta = 0.15;
    OffsetCurve oc = offset_curve(base, delta);
    auto k = curvature_samples(base);
    double ds = base.total_length() / static_cast<double>(base.size());
    double predicted_len = 0.0;
    for (double kj : k) predicted_len += std::abs(1.0 + delta * kj) * ds;
    CHECK(oc.result.total_length() == doctest::Approx(predicted_len).epsilon(0.01));
}

TEST_CASE("offset: per-sample curvature transform, 95th percentile within 2%") {
    Curve base = ellipse(2.0, 1.0, 2048);
    double delta = 0.1;
    OffsetCurve oc = offset_curve(base, delta);

    // cumulative arc positions of the raw offset points (pre-resampling)
    auto kbase = curvature_samples(base);
    const auto& bp = base.points();
    const std::size_t n = bp.size();
    std::vector<Vec2> raw(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 tangent = normalized(bp[(i + 1) % n] - bp[(i + n - 1) % n]);
        raw[i] = bp[i] + rot90(tangent) * -delta;
    }
    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) cum[i + 1] = cum[i] + dist(raw[i], raw[(i + 1) % n]);

    auto measured = curvature_samples(oc.result);
    double total = cum[n];
    std::vector<double> rel_err;
    for (std::size_t j = 0; j < oc.result.size(); ++j) {
        double s = total * static_cast<double>(j) / static_cast<double>(oc.result.size());
        std::size_t i = static_cast<std::size_t>(
                            std::upper_bound(cum.begin(), cum.end(), s) - cum.begin()) -
                        1;
        i = std::min(i, n - 1);
        double t = (s - cum[i]) / std::max(cum[i + 1] - cum[i], 1e-300);
        double kpred = (1 - t) * oc.predicted_curvature[i] +
                       t * oc.predicted_curvature[(i + 1) % n];
        rel_err.push_back(std::abs(measured[j] - kpred) / std::abs(kpred));
    }
    std::sort(rel_err.begin(), rel_err.end());
    CHECK(rel_err[rel_err.size() * 95 / 100] <= 0.02);
}

TEST_CASE("cutoff profile: quintic invariants") {
    CutoffProfile p = CutoffProfile::quintic(0.2, 1.5);
    CHECK_NOTHROW(p.validate());
    CHECK(p.eval(0.0) == 1.5);
    CHECK(p.eval(0.2) == 0.0);
    CHECK(p.eval(0.1) == doctest::Approx(0.75));
    CHECK(p.inverse(0.75) == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(p.end_slope_magnitude() <= 1e-9);
}

TEST_CASE("smooth indicator: disk coarea approaches 4 pi c") {
    Curve disk = Curve::circle({0, 0}, 1.0, 2048);
    ElasticaParams prm{2.0, 1.0, 1.0};
    GridFunction tpl = square_grid(512, 2.0);
    GridFunction u = build_smooth_indicator(disk, 1.0, CutoffProfile::quintic(0.2, 1.0), tpl);
    double f = coarea_energy(u, prm, 64).total;
    CHECK(std::abs(f - 4.0 * kPi) / (4.0 * kPi) <= 0.03);
}

TEST_CASE("smooth indicator: c = 2 doubles the coarea energy") {
    Curve disk = Curve::circle({0, 0}, 1.0, 1024);
    ElasticaParams prm{2.0, 1.0, 1.0};
    GridFunction tpl = square_grid(384, 2.0);
    double f1 = coarea_energy(
                    build_smooth_indicator(disk, 1.0, CutoffProfile::quintic(0.2, 1.0), tpl),
                    prm, 32)
                    .total;
    double f2 = coarea_energy(
                    build_smooth_indicator(disk, 2.0, CutoffProfile::quintic(0.2, 2.0), tpl),
                    prm, 32)
                    .total;
    CHECK(f2 == doctest::Approx(2.0 * f1).epsilon(0.01));
}

TEST_CASE("smooth indicator: level line sits on the offset at w^-1(t)") {
    Curve boundary = ellipse(2.0, 1.0, 2048);
    CutoffProfile profile = CutoffProfile::quintic(0.3, 1.0);
    GridFunction tpl = square_grid(512, 3.0);
    GridFunction u = build_smooth_indicator(boundary, 1.0, profile, tpl);

    double t = 0.5;
    LevelSetExtraction ex = extract_level_set(u, t);
    REQUIRE(ex.system.size() == 1);
    Curve predicted = offset_curve(boundary, profile.inverse(t)).result;

    SegmentGrid ga(CurveSystem::single(predicted), 0.1);
    SegmentGrid gb(CurveSystem::single(ex.system.curve(0)), 0.1);
    double hausdorff = 0.0;
    for (const auto& p : ex.system.curve(0).points())
        hausdorff = std::max(hausdorff, ga.distance_within(p, 0.5));
    for (const auto& p : predicted.points())
        hausdorff = std::max(hausdorff, gb.distance_within(p, 0.5));
    CHECK(hausdorff <= 2.0 * tpl.spacing());
}

TEST_CASE("smooth indicator: preconditions and admissibility") {
    Curve disk = Curve::circle({0, 0}, 1.0, 512);
    GridFunction tpl = square_grid(128, 2.0);
    // profile thinner than 4 cells
    CHECK_THROWS_AS(
        build_smooth_indicator(disk, 1.0, CutoffProfile::quintic(0.01, 1.0), tpl),
        ValidationError);
    // clockwise boundary rejected
    CHECK_THROWS_AS(build_smooth_indicator(Curve::circle({0, 0}, 1.0, 512, false), 1.0,
                                           CutoffProfile::quintic(0.2, 1.0), tpl),
                    ValidationError);
    // collar beyond the concave curvature bound
    std::vector<Vec2> pts;
    for (int i = 0; i < 2048; ++i) {
        double th = 2.0 * kPi * i / 2048;
        double r = 1.0 - 0.4 * std::cos(2.0 * th);
        pts.push_back({r * std::cos(th), r * std::sin(th)});
    }
    Curve peanut = resample_arclength(Curve::from_points(std::move(pts)), 1024);
    GridFunction tpl2 = square_grid(256, 2.5);
    CHECK_THROWS_AS(
        build_smooth_indicator(peanut, 1.0, CutoffProfile::quintic(0.8, 1.0), tpl2),
        OffsetSingularity);
    CHECK_NOTHROW(
        build_smooth_indicator(peanut, 1.0, CutoffProfile::quintic(0.15, 1.0), tpl2));
}

TEST_CASE("convergence study: circle errors decrease to below 3%") {
    Curve disk = Curve::circle({0, 0}, 1.0, 2048);
    ElasticaParams prm{2.0, 1.0, 1.0};
    GridFunction tpl = square_grid(512, 2.0);
    EnergyReport rep =
        smoothing_convergence_study(disk, 1.0, {0.4, 0.2, 0.1, 0.05}, prm, tpl, 64);
    REQUIRE(rep.study.size() == 4);
    for (std::size_t i = 1; i < rep.study.size(); ++i)
        CHECK(rep.study[i].abs_error <= 1.2 * rep.study[i - 1].abs_error);
    CHECK(rep.flags.empty());
    CHECK(rep.study.back().abs_error / rep.study.back().target <= 0.03);
}

TEST_CASE("convergence study: single collar, and ellipse target from curve_core") {
    Curve boundary = ellipse(2.0, 1.0, 2048);
    ElasticaParams prm{2.0, 1.0, 1.0};
    GridFunction tpl = square_grid(512, 3.0);
    EnergyReport one = smoothing_convergence_study(boundary, 1.0, {0.2}, prm, tpl, 32);
    CHECK(one.study.size() == 1);
    EnergyReport rep =
        smoothing_convergence_study(boundary, 1.0, {0.3, 0.15}, prm, tpl, 48);
    CHECK(rep.study.back().abs_error / rep.study.back().target <= 0.05);
}

TEST_CASE("nesting for free: extracted levels of an indicator pass the conditions") {
    Curve disk = Curve::circle({0, 0}, 1.0, 1024);
    GridFunction tpl = square_grid(384, 2.0);
    GridFunction u = build_smooth_indicator(disk, 1.0, CutoffProfile::quintic(0.3, 1.0), tpl);
    LevelFamily phi;
    phi.range = {0.2, 0.8};
    for (double t : {0.2, 0.4, 0.6}) {
        phi.thresholds.push_back(t);
        phi.systems.push_back(extract_level_set(u, t).system);
    }
    NestingVerdict v = check_conditions(phi);
    CHECK(v.condition_i.pass);
    CHECK(v.condition_ii.pass);
    CHECK(v.condition_iii.pass);
}
