#pragma once

#include <vector>

#include "elastica/curve.hpp"
#include "elastica/grid.hpp"
#include "elastica/report.hpp"
#include "elastica/system.hpp"

namespace elastica {

// C^2 monotone cut-off: w(0) = c, w(width) = 0, flat at both ends. The
// default shape is the quintic smoothstep scaled to [0,width] x [0,c].
class CutoffProfile {
  public:
    static CutoffProfile quintic(double width, double c, int table_size = 2048);

    double width() const { return width_; }
    double plateau() const { return c_; }
    const std::vector<double>& samples() const { return samples_; }

    double eval(double d) const;     // clamped: c for d<=0, 0 for d>=width
    double inverse(double t) const;  // d with w(d) = t, t in [0, c]
    double end_slope_magnitude() const;  // max |w'| at the two endpoints
    void validate() const;

  private:
    double width_ = 0.0;
    double c_ = 0.0;
    std::vector<double> samples_;
};

// Normal offset of a closed curve: result(s) = base(s) + delta * n(s) with n
// the outward normal of a counterclockwise curve. Carries the predicted
// curvature k/(1 + delta k) per base sample.
struct OffsetCurve {
    Curve base;
    double delta = 0.0;
    Curve result;
    std::vector<double> predicted_curvature;
};

// admissibility margin on |1 + delta k|
inline constexpr double kOffsetMargin = 0.05;

OffsetCurve offset_curve(const Curve& base, double delta);

// The offset's energy evaluated on the base samples directly:
// int [alpha + beta |k/(1+delta k)|^p] |1 + delta k| ds.
double offset_energy_transform(const Curve& base, double delta,
                               const ElasticaParams& params);

// u = c on the closure of E, w(d(x)) in the outside collar, 0 beyond.
// Boundary must be simple and counterclockwise; the profile width must span
// at least 4 grid cells and stay below the curvature-admissible collar.
GridFunction build_smooth_indicator(const Curve& boundary, double c,
                                    const CutoffProfile& profile,
                                    const GridFunction& grid_template);

// Same construction around every curve of a system (union interior).
GridFunction build_smooth_indicator_system(const CurveSystem& boundaries, double c,
                                           const CutoffProfile& profile,
                                           const GridFunction& grid_template);

// For each collar width: build the indicator, run the coarea energy, and
// tabulate |F(u_h) - c W(boundary)|. Rows are flagged when the error fails
// to decrease (value > 1.2x the previous one).
EnergyReport smoothing_convergence_study(const Curve& boundary, double c,
                                         const std::vector<double>& collar_widths,
                                         const ElasticaParams& params,
                                         const GridFunction& grid_template,
                                         int n_levels = 64);

}  // namespace elastica
