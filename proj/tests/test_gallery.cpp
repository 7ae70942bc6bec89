#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "elastica/gallery.hpp"
#include "elastica/io.hpp"
#include "elastica/relaxed.hpp"

using namespace elastica;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("savare: level counts follow the 3/1 sub-slab pattern") {
    for (int n = 0; n <= 6; ++n) {
        SavareFamily fam = make_savare_family(n);
        auto counts = savare_level_counts(fam, fam.default_t_grid());
        REQUIRE(counts.size() == static_cast<std::size_t>(1 << (n + 1)));
        for (std::size_t j = 0; j < counts.size(); ++j) {
            CHECK((counts[j] == 1 || counts[j] == 3));
            CHECK(counts[j] == (j % 2 == 0 ? 3 : 1));
        }
    }
}

TEST_CASE("savare: spot values for n = 0") {
    SavareFamily fam = make_savare_family(0);
    // sub-slabs of width 1/4: counts 3 on (0,1/4), 1 on (1/4,1/2)
    auto counts = savare_level_counts(fam, {0.125, 0.375});
    CHECK(counts[0] == 3);
    CHECK(counts[1] == 1);
    CHECK(fam.eval(1.0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("savare: mean of f_3 over (0, 1/2) is 2") {
    SavareFamily fam = make_savare_family(3);
    auto counts = savare_level_counts(fam, fam.default_t_grid());
    double mean = 0.0;
    for (int c : counts) mean += c;
    mean /= static_cast<double>(counts.size());
    CHECK(mean == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("savare: weak convergence to 2, but not strong") {
    std::vector<std::function<double(double)>> phis = {
        [](double) { return 1.0; }, [](double t) { return t; }};
    auto rows = savare_weak_convergence({0, 1, 2, 3, 4, 5}, phis);
    double prev_gap = 0.0;
    for (const auto& r : rows) {
        if (r.phi_index == 0) {
            CHECK(r.integral_f_phi == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(r.gap == doctest::Approx(0.0).epsilon(1e-12));
        } else {
            // |gap| = 2^-(n+4); halves per n
            CHECK(std::abs(r.gap) ==
                  doctest::Approx(std::ldexp(1.0, -(r.n + 4))).epsilon(1e-9));
            if (r.n > 0) {
                double ratio = std::abs(r.gap) / prev_gap;
                CHECK(ratio >= 0.4);
                CHECK(ratio <= 0.6);
            }
            prev_gap = std::abs(r.gap);
        }
        CHECK(r.l2_sq == doctest::Approx(0.5).epsilon(1e-6 / 0.5));
        CHECK(std::abs(r.l2_sq - 0.5) <= 1e-6);
    }
}

TEST_CASE("savare: energy integral is 1, below the 3/2 bound, for any p") {
    for (int n = 0; n <= 6; ++n) {
        SavareFamily fam = make_savare_family(n);
        for (double p : {1.5, 2.0, 3.0}) {
            ElasticaParams prm{p, 1.0, 1.0};
            double e = savare_energy_bound(fam, prm);
            CHECK(e == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(e < 1.5);
        }
    }
}

TEST_CASE("savare: dyadic means converge to 2") {
    for (int n : {2, 3, 4}) {
        SavareFamily fam = make_savare_family(n);
        Tabulated1D tab = savare_count_tabulation(fam);
        DyadicAverages d = dyadic_average(tab, 1);  // means over [0,1/2) piece
        CHECK(d.values.at(0) == doctest::Approx(2.0).epsilon(1e-6));
    }
}

TEST_CASE("staircase fixture: bounded energy while converging in L1") {
    StaircaseFixture fx = build_staircase_fixture();
    ElasticaParams prm{2.0, 1.0, 1.0};
    std::vector<double> energies, l1s;
    for (int s = 0; s < fx.steps; ++s) {
        GridFunction us = staircase_approximant(fx, s);
        energies.push_back(coarea_energy(us, prm, 64).total);
        double l1 = 0.0;
        for (int i = 0; i < us.rows(); ++i)
            for (int j = 0; j < us.cols(); ++j)
                l1 += std::abs(us.value(i, j) - fx.u.value(i, j));
        l1s.push_back(l1 * us.spacing() * us.spacing());
    }
    double emax = *std::max_element(energies.begin(), energies.end());
    double emin = *std::min_element(energies.begin(), energies.end());
    CHECK(emax / emin <= 1.6);  // uniformly bounded across the steps
    for (std::size_t s = 1; s < l1s.size(); ++s) {
        double ratio = l1s[s] / l1s[s - 1];
        CHECK(ratio >= 0.35);
        CHECK(ratio <= 0.65);
    }
}

TEST_CASE("nesting fixture: the three verdicts of the figure") {
    NestingFixture fx = build_nesting_fixture();

    NestingVerdict v1 = check_conditions(fx.family_gamma1, fx.tolerances);
    CHECK(v1.condition_i.pass);
    CHECK(v1.condition_ii.pass);
    CHECK_FALSE(v1.condition_iii.pass);

    NestingVerdict v3 = check_conditions(fx.family_gamma3, fx.tolerances);
    CHECK(v3.condition_i.pass);
    CHECK(v3.condition_ii.pass);
    CHECK(v3.condition_iii.pass);

    NestingVerdict v4 = check_conditions(fx.family_gamma4, fx.tolerances);
    CHECK(v4.condition_i.pass);
    CHECK_FALSE(v4.condition_ii.pass);
    CHECK(v4.condition_iii.pass);
}

TEST_CASE("two-level fixture: membership filtering and the strict gap") {
    NestingFixture fx = build_nesting_fixture();
    ElasticaParams prm{2.0, 1.0, 1.0};

    NestingVerdict bad = check_membership(fx.family_gamma1, fx.u, fx.tolerances);
    CHECK_FALSE(bad.is_member);
    NestingVerdict good = check_membership(fx.family_gamma3, fx.u, fx.tolerances);
    CHECK(good.is_member);

    CandidateRanking ranking =
        compare_candidates({fx.family_gamma1, fx.family_gamma3}, fx.u, prm, fx.tolerances);
    CHECK(ranking.best_index == 1);

    // certified lower bound: relaxed energies of the level sets
    RelaxedEnergy wf = relaxed_energy_cusped(fx.f_cusped, prm);
    double we = elastica_energy(fx.e_boundary, prm);
    double lb = coarea_lower_bound(fx.u, {{0.5, we}, {1.5, wf.report.total}});

    double g = family_energy_G(fx.family_gamma3, prm).total;
    double upper_slab = fx.family_gamma3.range.second - fx.family_gamma3.thresholds[1];
    CHECK(g - lb >= 0.98 * fx.bridge_length * upper_slab * prm.alpha);
}

TEST_CASE("drop-omega fixture: clipping sees only the smooth arcs") {
    DropOmegaFixture fx = build_drop_omega_fixture();
    ElasticaParams prm{2.0, 1.0, 1.0};
    CHECK_NOTHROW(fx.drop.validate());
    RelaxedEnergy whole = relaxed_energy_cusped(fx.drop, prm);
    ClipResult clipped = clip_energy(fx.boundary, fx.omega, prm);
    CHECK(clipped.report.total > 0.0);
    CHECK(clipped.report.total < whole.report.total);
    CHECK(clipped.arcs.size() == 2);
    for (const auto& arc : clipped.arcs)
        for (const auto& p : arc.points) {
            CHECK(p.x >= 0.7 - 1e-9);
            CHECK(p.x <= 2.3 + 1e-9);
        }
}

TEST_CASE("fixture files round-trip bit-exactly") {
    FixtureSet set = build_figure_examples();
    auto dir = std::filesystem::temp_directory_path() / "elastica_fixture_test";
    write_fixture_files(set, dir);

    json fam = load_json(dir / "fig5_gamma3_gamma2.json");
    LevelFamily loaded = family_from_json(fam);
    REQUIRE(loaded.systems.size() == 2);
    const auto& orig = set.nesting.family_gamma3.systems[0].curve(0).points();
    const auto& back = loaded.systems[0].curve(0).points();
    REQUIRE(orig.size() == back.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
        CHECK(orig[i].x == back[i].x);
        CHECK(orig[i].y == back[i].y);
    }

    CuspedSet drop = cusped_from_json(load_json(dir / "fig10_drop.json"));
    REQUIRE(drop.boundary_arcs.size() == set.drop_omega.drop.boundary_arcs.size());
    CHECK(drop.boundary_arcs[0][10].x == set.drop_omega.drop.boundary_arcs[0][10].x);

    GridFunction u = read_pgm(dir / "figEF.pgm");
    CHECK(u.rows() == set.nesting.u.rows());
    CHECK(u.cols() == set.nesting.u.cols());

    json manifest = load_json(dir / "manifest.json");
    CHECK(manifest.size() >= 8);
    std::filesystem::remove_all(dir);
}
