#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "elastica/curve.hpp"

using namespace elastica;

namespace {

constexpr double kPi = std::numbers::pi;

Curve unit_square() {
    return Curve::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Closed form for a circle of radius R: alpha*2piR + beta*2piR^(1-p),
// with the polygon chord length substituted for 2piR.
double circle_energy_exact(double R, int n, const ElasticaParams& prm) {
    double chord_len = 2.0 * n * R * std::sin(kPi / n);
    return prm.alpha * chord_len + prm.beta * std::pow(1.0 / R, prm.p) * chord_len;
}

}  // namespace

TEST_CASE("resample: square corners at uniform spacing") {
    Curve sq = unit_square();
    Curve r = resample_arclength(sq, 400);
    CHECK(r.size() == 400);
    CHECK(r.is_resampled());
    CHECK(r.total_length() == doctest::Approx(4.0).epsilon(1e-12));
    double mn = 1e300, mx = 0.0;
    const auto& p = r.points();
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = dist(p[i], p[(i + 1) % p.size()]);
        mn = std::min(mn, d);
        mx = std::max(mx, d);
    }
    CHECK(mx / mn <= 1.01);
}

TEST_CASE("resample: circle length preserved vs analytic circumference") {
    Curve fine = Curve::circle({0, 0}, 1.0, 1000);
    Curve r = resample_arclength(fine, 100);
    CHECK(std::abs(r.total_length() - 2.0 * kPi) < 1e-4);
    // and the length along the input is preserved to 1e-9 relative
    CHECK(std::abs(r.total_length() - fine.total_length()) <=
          1e-9 * fine.total_length());
}

TEST_CASE("resample: degenerate input throws") {
    CHECK_THROWS_AS(Curve::from_points({{0, 0}, {0, 0}, {1, 1}}), DegenerateCurve);
    CHECK_THROWS_AS(Curve::from_points({{0, 0}, {1, 0}}), DegenerateCurve);
}

TEST_CASE("curvature: circle R=2 ccw gives +0.5 everywhere") {
    Curve c = Curve::circle({0.3, -0.2}, 2.0, 512);
    for (double k : curvature_samples(c)) CHECK(k == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("curvature: collinear samples on a polygon edge give 0") {
    Curve r = resample_arclength(unit_square(), 400);
    auto k = curvature_samples(r);
    int zeros = 0;
    for (double v : k)
        if (v == 0.0) ++zeros;
    CHECK(zeros >= 380);  // all but the few corner-straddling triples
}

TEST_CASE("curvature: clockwise circle is negative") {
    Curve c = Curve::circle({0, 0}, 1.0, 256, /*ccw=*/false);
    CHECK(c.orientation() == -1);
    for (double k : curvature_samples(c)) CHECK(k == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("energy: unit circle p=2 is 4pi") {
    Curve c = Curve::circle({0, 0}, 1.0, 1024);
    ElasticaParams prm{2.0, 1.0, 1.0};
    CHECK(elastica_energy(c, prm) == doctest::Approx(4.0 * kPi).epsilon(1e-2 / (4 * kPi)));
    CHECK(std::abs(elastica_energy(c, prm) - 4.0 * kPi) < 1e-2);
}

TEST_CASE("energy: circle closed form 2piR(1 + R^-p)") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    Curve c = Curve::circle({0, 0}, 2.0, 1024);
    double expected = 2.0 * kPi * 2.0 * 1.25;  // ~15.708
    CHECK(std::abs(elastica_energy(c, prm) - expected) < 1e-2);
}

TEST_CASE("energy: beta=0 reduces to alpha * length") {
    ElasticaParams prm{1.5, 0.7, 0.0};
    Curve c = Curve::circle({1, 1}, 1.3, 512);
    CHECK(elastica_energy(c, prm) ==
          doctest::Approx(0.7 * c.total_length()).epsilon(1e-12));
}

TEST_CASE("invariance: rigid motions leave the energy unchanged") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    Curve base = Curve::circle({0, 0}, 1.7, 512);
    double e0 = elastica_energy(base, prm);
    Curve moved = base.transformed(1.0, 0.83, {5.0, -3.0});
    CHECK(elastica_energy(moved, prm) == doctest::Approx(e0).epsilon(1e-9));
}

TEST_CASE("invariance: scaling law on circles") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    Curve base = Curve::circle({0, 0}, 1.0, 512);
    EnergySplit s = elastica_energy_split(base, prm);
    for (double lam : {0.5, 2.0}) {
        Curve scaled = base.transformed(lam, 0.0, {0, 0});
        double expected =
            s.length_term * lam + s.curvature_term * std::pow(lam, 1.0 - prm.p);
        CHECK(elastica_energy(scaled, prm) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("invariance: refinement error drops like 1/n^2") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    double target = 4.0 * kPi;
    double prev_err = -1.0;
    for (int n : {64, 128, 256}) {
        double e = elastica_energy(Curve::circle({0, 0}, 1.0, n), prm);
        double err = std::abs(e - target);
        if (prev_err > 0.0) {
            double ratio = prev_err / err;
            CHECK(ratio >= 3.0);
            CHECK(ratio <= 5.0);
        }
        prev_err = err;
    }
}

TEST_CASE("invariance: orientation flip leaves |k|^p energy unchanged") {
    ElasticaParams prm{3.0, 1.0, 1.0};
    Curve c = Curve::circle({0, 0}, 0.8, 256);
    CHECK(elastica_energy(c.reversed(), prm) ==
          doctest::Approx(elastica_energy(c, prm)).epsilon(1e-12));
}

TEST_CASE("params validation") {
    ElasticaParams bad_p{1.0, 1.0, 1.0};
    ElasticaParams bad_alpha{2.0, 0.0, 1.0};
    ElasticaParams bad_beta{2.0, 1.0, -0.5};
    ElasticaParams good{1.5, 2.0, 0.0};
    CHECK_THROWS_AS(bad_p.validate(), ValidationError);
    CHECK_THROWS_AS(bad_alpha.validate(), ValidationError);
    CHECK_THROWS_AS(bad_beta.validate(), ValidationError);
    CHECK_NOTHROW(good.validate());
}

TEST_CASE("closed-form helper sanity") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    Curve c = Curve::circle({0, 0}, 1.0, 4096);
    CHECK(elastica_energy(c, prm) ==
          doctest::Approx(circle_energy_exact(1.0, 4096, prm)).epsilon(1e-12));
}
