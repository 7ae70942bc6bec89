#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "elastica/family.hpp"
#include "elastica/grid.hpp"
#include "elastica/relaxed.hpp"

namespace elastica {

// Integral of the 2-periodic square wave, scaled so that the function has
// 2^n full periods on [0,1] and value 1/2 at x = 1. Level counts over
// (0, 1/2) alternate 3,1 on sub-slabs of width 2^-(n+2).
struct SavareFamily {
    int n = 0;
    int grid_resolution = 0;  // x-grid used for sign-change counting

    double eval(double x) const;           // U_n(x), exact piecewise-linear
    double subslab_width() const;          // 2^-(n+2)
    std::vector<double> default_t_grid() const;  // sub-slab midpoints in (0, 1/2)
};

SavareFamily make_savare_family(int n, int grid_resolution = 0);

// Solution counts of U_n(x) = t on [0,1] by sign changes on the fine grid.
std::vector<int> savare_level_counts(const SavareFamily& fam,
                                     const std::vector<double>& t_grid);

// Measured level-count profile f_n on (0, 1/2) as a step tabulation
// (near-vertical ramps at the sub-slab boundaries).
Tabulated1D savare_count_tabulation(const SavareFamily& fam);

struct SavareWeakRow {
    int n = 0;
    int phi_index = 0;
    double integral_f_phi = 0.0;
    double integral_2_phi = 0.0;
    double gap = 0.0;      // integral_f_phi - integral_2_phi
    double l2_sq = 0.0;    // int |f_n - 2|^2 over (0, 1/2)
};

// Weak convergence f_n -> 2 against C^1 test functions on [0, 1/2], plus
// the constant L^2 distance that rules out strong convergence.
std::vector<SavareWeakRow> savare_weak_convergence(
    const std::vector<int>& n_list,
    const std::vector<std::function<double(double)>>& test_functions);

// Energy of u_n(x1,x2) = U_n(x1) on (0,1)^2: level lines are vertical unit
// segments with zero curvature, so each level contributes alpha * count.
// Returns the t-integral; the measured value is 1, below the 3/2 bound.
double savare_energy_bound(const SavareFamily& fam, const ElasticaParams& params);

// ---------------------------------------------------------------------------
// Figure reconstructions. Figures fix the topology; dimensions are the
// documented defaults below.

// Two drops with facing cusps bridged by a tube, shrinking onto u = 1_E
// (the non-lsc staircase construction). Approximant step s halves the L1
// distance and keeps the coarea energy bounded.
struct StaircaseFixture {
    CurveSystem drops;          // the two cusped drops (E)
    GridFunction u;             // binary raster of 1_E
    double cusp_distance = 0.0;
    int steps = 3;

    std::vector<double> tube_half_heights;  // per step
    std::vector<double> collars;            // per step
};

StaircaseFixture build_staircase_fixture();
// Smooth approximant u_s of 1_E for step s (dumbbell indicator).
GridFunction staircase_approximant(const StaircaseFixture& fx, int step);

// The nested-systems example: an oval E with a bridged cusped pair F inside,
// the bridge running outside E under its mouth. Families pair each lower
// system with the bridged upper system Gamma_2.
struct NestingFixture {
    Curve e_boundary;       // smooth boundary of E
    CurveSystem gamma1;     // {dE}
    CurveSystem gamma2;     // bridged cusped pair covering F
    CurveSystem gamma3;     // {dE, bridge runner}
    CurveSystem gamma4;     // {dE, runner dipping through the cusp slivers}
    LevelFamily family_gamma1;  // fails (iii)
    LevelFamily family_gamma3;  // member
    LevelFamily family_gamma4;  // fails (ii)
    CuspedSet f_cusped;     // F as arcs + one cusp pair
    GridFunction u;         // raster of 1_E + 1_F
    double bridge_length = 0.0;
    NestingTolerances tolerances;
};

NestingFixture build_nesting_fixture();

// A single drop whose cusps (and ghost bridge) lie outside the window
// domain; clipping sees only smooth arcs.
struct DropOmegaFixture {
    CuspedSet drop;
    CurveSystem boundary;     // closed lens curve
    std::vector<Vec2> omega;  // rectangle avoiding the cusps
};

DropOmegaFixture build_drop_omega_fixture();

struct FixtureSet {
    StaircaseFixture staircase;
    NestingFixture nesting;
    DropOmegaFixture drop_omega;
};

FixtureSet build_figure_examples();

// Writes the fixture artifacts (JSON, PGM) plus a manifest into dir.
void write_fixture_files(const FixtureSet& fixtures, const std::filesystem::path& dir);

}  // namespace elastica
