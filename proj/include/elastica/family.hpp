#pragma once

#include <map>
#include <utility>
#include <vector>

#include "elastica/grid.hpp"
#include "elastica/report.hpp"
#include "elastica/system.hpp"

namespace elastica {

// Piecewise-constant level family: Phi(t) = systems[j] on [t_j, t_{j+1}),
// the last slab closing at range.second; empty outside [range.first,
// range.second].
struct LevelFamily {
    std::vector<double> thresholds;
    std::vector<CurveSystem> systems;
    std::pair<double, double> range{0.0, 0.0};

    void validate() const;
    std::size_t slab_count() const { return thresholds.size(); }
    double slab_width(std::size_t j) const;
    const CurveSystem* system_at(double t) const;  // nullptr outside range
    BBox bbox() const;
};

struct NestingWitness {
    Vec2 point;
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::string note;
};

struct ConditionVerdict {
    bool pass = true;
    std::vector<NestingWitness> witnesses;
};

struct LevelMatch {
    double t = 0.0;
    bool area_pass = true;      // |Int(Phi(t)) sym-diff {u>t}| small
    bool cover_pass = true;     // extracted level lines ride (Phi(t))
    double sym_diff_area = 0.0;
    double covered_fraction = 1.0;
};

struct NestingVerdict {
    ConditionVerdict condition_i;
    ConditionVerdict condition_ii;
    ConditionVerdict condition_iii;
    std::vector<LevelMatch> level_matches;  // filled by check_membership
    bool is_member = false;

    bool conditions_pass() const {
        return condition_i.pass && condition_ii.pass && condition_iii.pass;
    }
};

struct NestingTolerances {
    double dist_tol = 0.0;         // 0: auto, 2 x median sample spacing
    double angle_tol = 0.15;       // radians
    int area_res = 512;
    double area_tol_fraction = 0.005;   // of the family bbox area
    double escape_fraction = 0.01;      // per-curve violating-sample budget
    double match_dist_tol = 0.0;        // 0: auto, max(dist_tol, 2.5 * u spacing)
    double cover_fraction = 0.99;
    unsigned seed = 12345;              // long-range pair sampling
};

// Definition-2.6 style conditions on every consecutive slab pair plus
// ceil(log2(#slabs)) seeded long-range pairs:
//   (i)   the two systems do not cross (tangential contact allowed);
//   (ii)  Int(upper) lies inside Int(lower), checked by rasterized area
//         difference and by lower-trace samples that stray into the open
//         upper interior;
//   (iii) upper arcs escaping the closure of Int(lower) must ride on the
//         lower trace.
NestingVerdict check_conditions(const LevelFamily& phi, const NestingTolerances& tol = {});

// check_conditions plus the per-threshold match against u: interior areas
// against {u > t} and level-line coverage by (Phi(t)).
NestingVerdict check_membership(const LevelFamily& phi, const GridFunction& u,
                                const NestingTolerances& tol = {});

// G(Phi): slab-width-weighted sum of the per-slab system energies.
EnergyReport family_energy_G(const LevelFamily& phi, const ElasticaParams& params);

struct CandidateRanking {
    struct Entry {
        int index = -1;
        bool member = false;
        double energy = 0.0;
        NestingVerdict verdict;
    };
    std::vector<Entry> entries;  // members first, ascending energy
    int best_index = -1;
};

// Filters candidates by membership and ranks members by G ascending.
// Throws NoValidCandidate when every candidate fails.
CandidateRanking compare_candidates(const std::vector<LevelFamily>& candidates,
                                    const GridFunction& u, const ElasticaParams& params,
                                    const NestingTolerances& tol = {});

// Piecewise-linear tabulation of a nonnegative function of t.
struct Tabulated1D {
    std::vector<double> ts;      // strictly increasing
    std::vector<double> values;  // same length

    void validate() const;
    double integral() const;
    // Exact integral of the linear interpolant over [a,b] (zero outside the
    // tabulated support).
    double integral_on(double a, double b) const;
};

// f^N on the dyadic intervals I_{N,k} = [k 2^-N, (k+1) 2^-N).
struct DyadicAverages {
    int depth = 0;
    std::map<long, double> values;
};

DyadicAverages dyadic_average(const Tabulated1D& f, int depth);

}  // namespace elastica
