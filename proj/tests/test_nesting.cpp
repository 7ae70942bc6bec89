#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "elastica/family.hpp"
#include "elastica/smoothing.hpp"

using namespace elastica;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction disk_indicator(int n, double half, double collar, double c = 1.0) {
    Curve disk = Curve::circle({0, 0}, 1.0, 1024);
    GridFunction tpl(n, n, 2.0 * half / (n - 1), {-half, -half});
    return build_smooth_indicator(disk, c, CutoffProfile::quintic(collar, c), tpl);
}

LevelFamily self_covering_family(const GridFunction& u, std::vector<double> thresholds,
                                 double top) {
    LevelFamily phi;
    phi.range = {thresholds.front(), top};
    for (double t : thresholds) {
        phi.thresholds.push_back(t);
        phi.systems.push_back(extract_level_set(u, t).system);
    }
    return phi;
}

Curve rotated_ellipse(double a, double b, double angle, int n) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n * 4; ++i) {
        double t = 2.0 * kPi * i / (n * 4);
        double x = a * std::cos(t), y = b * std::sin(t);
        pts.push_back({x * std::cos(angle) - y * std::sin(angle),
                       x * std::sin(angle) + y * std::cos(angle)});
    }
    return resample_arclength(Curve::from_points(std::move(pts)), n);
}

}  // namespace

TEST_CASE("G: constant family, circle on [0,c]") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    LevelFamily phi;
    phi.thresholds = {0.0};
    phi.systems = {CurveSystem::single(Curve::circle({0, 0}, 1.0, 1024))};
    phi.range = {0.0, 0.7};
    double g = family_energy_G(phi, prm).total;
    CHECK(std::abs(g - 0.7 * 4.0 * kPi) < 1e-2);
}

TEST_CASE("G: empty family is zero") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    CHECK(family_energy_G(LevelFamily{}, prm).total == 0.0);
}

TEST_CASE("G: two-slab disks") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    LevelFamily phi;
    phi.thresholds = {0.0, 1.0};
    phi.systems = {CurveSystem::single(Curve::circle({0, 0}, 2.0, 2048)),
                   CurveSystem::single(Curve::circle({0, 0}, 1.0, 2048))};
    phi.range = {0.0, 2.0};
    double expected = 2.0 * kPi * 2.0 * (1.0 + 0.25) + 2.0 * kPi * 2.0;
    CHECK(std::abs(family_energy_G(phi, prm).total - expected) < 1e-2);
}

TEST_CASE("G additivity under a split at an interior threshold") {
    ElasticaParams prm{2.0, 1.0, 1.0};
    CurveSystem s1 = CurveSystem::single(Curve::circle({0, 0}, 1.7, 512));
    CurveSystem s2 = CurveSystem::single(Curve::circle({0, 0}, 0.9, 512));
    LevelFamily whole;
    whole.thresholds = {0.0, 1.25};
    whole.systems = {s1, s2};
    whole.range = {0.0, 3.0};
    LevelFamily lo;
    lo.thresholds = {0.0};
    lo.systems = {s1};
    lo.range = {0.0, 1.25};
    LevelFamily hi;
    hi.thresholds = {1.25};
    hi.systems = {s2};
    hi.range = {1.25, 3.0};
    double g = family_energy_G(whole, prm).total;
    double parts = family_energy_G(lo, prm).total + family_energy_G(hi, prm).total;
    CHECK(g == doctest::Approx(parts).epsilon(1e-12));
}

TEST_CASE("conditions: constant family passes") {
    CurveSystem s = CurveSystem::single(Curve::circle({0, 0}, 1.0, 512));
    LevelFamily phi;
    phi.thresholds = {0.0, 0.5};
    phi.systems = {s, s};
    phi.range = {0.0, 1.0};
    NestingVerdict v = check_conditions(phi);
    CHECK(v.condition_i.pass);
    CHECK(v.condition_ii.pass);
    CHECK(v.condition_iii.pass);
    CHECK(v.is_member);
}

TEST_CASE("conditions: upper interior leaking outside the lower fails (ii)") {
    LevelFamily phi;
    phi.thresholds = {0.0, 1.0};
    phi.systems = {CurveSystem::single(Curve::circle({0, 0}, 1.0, 512)),
                   CurveSystem::single(Curve::circle({0.8, 0}, 1.0, 512))};
    phi.range = {0.0, 2.0};
    NestingVerdict v = check_conditions(phi);
    CHECK_FALSE(v.condition_ii.pass);
    CHECK_FALSE(v.is_member);
    REQUIRE_FALSE(v.condition_ii.witnesses.empty());
}

TEST_CASE("membership: self-covering family of a smoothed disk is a member") {
    GridFunction u = disk_indicator(384, 2.0, 0.3);
    LevelFamily phi = self_covering_family(u, {0.25, 0.5, 0.75}, 0.95);
    NestingVerdict v = check_membership(phi, u);
    CHECK(v.is_member);
    for (const auto& m : v.level_matches) {
        CHECK(m.area_pass);
        CHECK(m.cover_pass);
    }
}

TEST_CASE("membership: interiors shrunk by 10% fail the area match") {
    GridFunction u = disk_indicator(384, 2.0, 0.3);
    LevelFamily phi = self_covering_family(u, {0.25, 0.5, 0.75}, 0.95);
    for (auto& s : phi.systems) {
        std::vector<Curve> scaled;
        for (const auto& c : s.curves()) scaled.push_back(c.transformed(0.9, 0.0, {0, 0}));
        s = CurveSystem::from_parts(std::move(scaled),
                                    std::vector<int>(s.size(), 1));
    }
    NestingVerdict v = check_membership(phi, u);
    CHECK_FALSE(v.is_member);
    bool area_failed = false;
    for (const auto& m : v.level_matches) area_failed |= !m.area_pass;
    CHECK(area_failed);
}

TEST_CASE("membership: crossing level curves fail condition (i)") {
    GridFunction u = disk_indicator(384, 2.0, 0.3);
    LevelFamily phi;
    phi.thresholds = {0.3, 0.6};
    phi.systems = {CurveSystem::single(rotated_ellipse(1.3, 0.7, 0.0, 512)),
                   CurveSystem::single(rotated_ellipse(1.3, 0.7, kPi / 2, 512))};
    phi.range = {0.3, 0.9};
    NestingVerdict v = check_membership(phi, u);
    CHECK_FALSE(v.condition_i.pass);
    CHECK_FALSE(v.is_member);
}

TEST_CASE("membership monotonicity: re-extracting one slab keeps membership") {
    GridFunction u = disk_indicator(384, 2.0, 0.3);
    LevelFamily phi = self_covering_family(u, {0.25, 0.5, 0.75}, 0.95);
    phi.systems[1] = extract_level_set(u, phi.thresholds[1]).system;
    CHECK(check_membership(phi, u).is_member);
}

TEST_CASE("compare_candidates: redundant extra curve ranks second") {
    GridFunction u = disk_indicator(384, 2.0, 0.3);
    LevelFamily good = self_covering_family(u, {0.25, 0.5, 0.75}, 0.95);
    LevelFamily redundant = good;
    // same family plus an even-multiplicity circle far from the disk: the
    // parity interior is unchanged, the energy is strictly larger
    Curve extra = Curve::circle({1.55, 1.55}, 0.25, 256);
    for (auto& s : redundant.systems) {
        std::vector<Curve> cs(s.curves().begin(), s.curves().end());
        std::vector<int> ms(s.multiplicities().begin(), s.multiplicities().end());
        cs.push_back(extra);
        ms.push_back(2);
        s = CurveSystem::from_parts(std::move(cs), std::move(ms));
    }
    ElasticaParams prm{2.0, 1.0, 1.0};
    CandidateRanking r = compare_candidates({redundant, good}, u, prm);
    CHECK(r.best_index == 1);
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].member);
    CHECK(r.entries[1].member);
    CHECK(r.entries[0].energy < r.entries[1].energy);
}

TEST_CASE("compare_candidates: all-crossing candidates throw NoValidCandidate") {
    GridFunction u = disk_indicator(256, 2.0, 0.3);
    LevelFamily bad;
    bad.thresholds = {0.3, 0.6};
    bad.systems = {CurveSystem::single(rotated_ellipse(1.3, 0.7, 0.0, 512)),
                   CurveSystem::single(rotated_ellipse(1.3, 0.7, kPi / 2, 512))};
    bad.range = {0.3, 0.9};
    ElasticaParams prm{2.0, 1.0, 1.0};
    CHECK_THROWS_AS(compare_candidates({bad}, u, prm), NoValidCandidate);
}

TEST_CASE("dyadic: constant tabulation keeps its value") {
    Tabulated1D f;
    for (int i = 0; i <= 100; ++i) {
        f.ts.push_back(static_cast<double>(i) / 100.0);
        f.values.push_back(5.0);
    }
    DyadicAverages d = dyadic_average(f, 3);
    REQUIRE(d.values.size() == 8);
    for (const auto& [k, v] : d.values) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("dyadic: W(t) = t at depth 1") {
    Tabulated1D f;
    for (int i = 0; i <= 1000; ++i) {
        double t = static_cast<double>(i) / 1000.0;
        f.ts.push_back(t);
        f.values.push_back(t);
    }
    DyadicAverages d = dyadic_average(f, 1);
    CHECK(d.values.at(0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(d.values.at(1) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("dyadic martingale identity and mass bound on random tabulations") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> val(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        Tabulated1D f;
        int m = 50 + trial;
        for (int i = 0; i <= m; ++i) {
            f.ts.push_back(static_cast<double>(i) / m);
            f.values.push_back(val(rng));
        }
        double total = f.integral();
        for (int depth = 0; depth < 7; ++depth) {
            DyadicAverages coarse = dyadic_average(f, depth);
            DyadicAverages fine = dyadic_average(f, depth + 1);
            for (const auto& [k, v] : coarse.values) {
                double left = fine.values.count(2 * k) ? fine.values.at(2 * k) : 0.0;
                double right =
                    fine.values.count(2 * k + 1) ? fine.values.at(2 * k + 1) : 0.0;
                CHECK(v == doctest::Approx(0.5 * (left + right)).epsilon(1e-12));
            }
            double mass = 0.0;
            for (const auto& [k, v] : coarse.values) mass += std::ldexp(v, -depth);
            CHECK(mass <= total + 1e-9);
            CHECK(mass >= total - 1e-9);
        }
    }
}

TEST_CASE("dyadic: depth validation") {
    Tabulated1D f;
    f.ts = {0.0, 1.0};
    f.values = {1.0, 1.0};
    CHECK_THROWS_AS(dyadic_average(f, -1), ValidationError);
    CHECK_THROWS_AS(dyadic_average(f, 21), ValidationError);
}
