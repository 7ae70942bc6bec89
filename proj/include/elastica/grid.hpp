#pragma once

#include <vector>

#include "elastica/curve.hpp"
#include "elastica/report.hpp"
#include "elastica/system.hpp"

namespace elastica {

// Scalar field on a regular grid with equal spacing in x and y. Node (i,j)
// sits at origin + (j*h, i*h); i counts rows (y), j columns (x).
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(int rows, int cols, double spacing, Vec2 origin);

    static GridFunction from_values(std::vector<double> values, int rows, int cols,
                                    double spacing, Vec2 origin);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double spacing() const { return spacing_; }
    const Vec2& origin() const { return origin_; }

    double value(int i, int j) const { return values_[static_cast<std::size_t>(i) * cols_ + j]; }
    double& at(int i, int j) { return values_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<double>& values() const { return values_; }

    Vec2 point_at(int i, int j) const {
        return {origin_.x + j * spacing_, origin_.y + i * spacing_};
    }
    BBox bbox() const {
        BBox b;
        b.expand(origin_);
        b.expand(point_at(rows_ - 1, cols_ - 1));
        return b;
    }

    double min_value() const;
    double max_value() const;
    double border_max() const;

    // Bilinear interpolation; clamps to the grid.
    double sample(const Vec2& p) const;

    GridFunction scaled(double factor, double offset = 0.0) const;

  private:
    int rows_ = 0, cols_ = 0;
    double spacing_ = 1.0;
    Vec2 origin_{0.0, 0.0};
    std::vector<double> values_;
};

struct LevelSetExtraction {
    double threshold = 0.0;
    CurveSystem system;
    int open_fragments = 0;
};

struct ExtractionOptions {
    int smoothing_passes = 4;  // [1,2,1]/4 passes on the resampled contour
    int curvature_window = 0;  // 0: choose from spacing and curvature scale
    int min_samples = 64;
};

// Marching squares on the t-isocontour, linear interpolation, saddles
// resolved by the cell-center average. Contours are oriented so that
// Int(system) = {u > t} and arc-length resampled with per-curve sample
// count max(64, round(length/spacing)). Curvature samples are attached.
// Throws OpenContour when {u > t} touches the grid border.
LevelSetExtraction extract_level_set(const GridFunction& u, double t,
                                     const ExtractionOptions& opts = {});

// Coarea decomposition: levels at midpoints of n_levels equal slabs of the
// value range, per-level p-elastica energies, slab-width-weighted total.
EnergyReport coarea_energy(const GridFunction& u, const ElasticaParams& params,
                           int n_levels, int threads = 0,
                           const ExtractionOptions& opts = {});

// Direct evaluation of |grad u| (alpha + beta |div(grad u/|grad u|)|^p) by
// central differences, with the alpha-only convention below grad_floor.
// grad_floor <= 0 selects 1e-8 * (max u - min u) / spacing.
double divergence_energy(const GridFunction& u, const ElasticaParams& params,
                         double grad_floor = -1.0);

}  // namespace elastica
