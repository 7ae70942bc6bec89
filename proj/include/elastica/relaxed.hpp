#pragma once

#include <utility>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/grid.hpp"
#include "elastica/report.hpp"
#include "elastica/system.hpp"

namespace elastica {

// Non-smooth set given by open smooth boundary arcs meeting at cusp points
// with parallel end tangents. The listed cusp pairs get ghost bridges.
struct CuspedSet {
    std::vector<std::vector<Vec2>> boundary_arcs;
    std::vector<std::pair<Vec2, Vec2>> cusp_pairs;
    BBox bbox;

    // Checks arc sanity, the parallel-tangent cusp condition at matched arc
    // ends, and that arcs do not cross each other.
    void validate(double angle_tol = 0.15) const;
};

struct ClippedArc {
    std::vector<Vec2> points;
    std::pair<Vec2, Vec2> endpoints_on_boundary;
    int source_curve = 0;
};

struct RelaxedEnergy {
    EnergyReport report;           // total = alpha*H1 + beta*int|k|^p + 2*alpha*L
    CurveSystem minimizing_system; // arcs chained with doubled straight bridges
    double bridge_length = 0.0;    // sum of cusp-pair distances
};

// The ghost-bridge value of a cusped set: boundary length and curvature
// terms from the arcs plus 2*alpha*|bridge| per cusp pair, together with
// the explicit minimizing system.
RelaxedEnergy relaxed_energy_cusped(const CuspedSet& set, const ElasticaParams& params,
                                    int samples_per_arc = 2048);

// Slab-weighted sum of externally supplied per-level relaxed energies
// (t_i, W_i); slab boundaries at consecutive midpoints, closed by the range
// of u. A certified lower bound for G over A(u).
double coarea_lower_bound(const GridFunction& u,
                          const std::vector<std::pair<double, double>>& per_level_relaxed);

struct ClipResult {
    EnergyReport report;
    std::vector<ClippedArc> arcs;
};

// Energy of the portions of the system's curves inside the open polygonal
// domain omega. Curvature comes from the uncut curves' samples; run ends
// carry half-weight.
ClipResult clip_energy(const CurveSystem& system, const std::vector<Vec2>& omega,
                       const ElasticaParams& params);

}  // namespace elastica
