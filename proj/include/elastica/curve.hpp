#pragma once

#include <optional>
#include <vector>

#include "elastica/errors.hpp"
#include "elastica/geometry.hpp"

namespace elastica {

// Weights of the p-elastica integrand alpha + beta * |k|^p.
struct ElasticaParams {
    double p = 2.0;
    double alpha = 1.0;
    double beta = 1.0;

    void validate() const {
        if (!(p > 1.0)) throw ValidationError("ElasticaParams: p must be > 1");
        if (!(alpha > 0.0)) throw ValidationError("ElasticaParams: alpha must be > 0");
        if (!(beta >= 0.0)) throw ValidationError("ElasticaParams: beta must be >= 0");
    }
};

// Closed planar polyline. The first point is implicitly connected to the
// last. Curves produced by resample_arclength carry a uniform parameter
// spacing ds = L/n where L is the arc length measured along the source
// polyline; raw curves use the chord sum as their length.
class Curve {
  public:
    Curve() = default;

    // Raw closed polyline. A duplicated closing point is dropped. Throws
    // DegenerateCurve on < 3 distinct points or a zero-length segment.
    static Curve from_points(std::vector<Vec2> pts);

    // Points already at (near-)uniform arc-length spacing, e.g. analytic
    // samples of a circle. Marks the curve as resampled with ds = chord
    // sum / n.
    static Curve from_uniform_samples(std::vector<Vec2> pts);

    // Uniform samples whose arc-length weight comes from the source polyline
    // they were placed on (ds = source_length / n); used by resampling.
    static Curve from_uniform_samples(std::vector<Vec2> pts, double source_length);

    // Exact circle samples; ccw = +1 orientation, cw = -1.
    static Curve circle(Vec2 center, double radius, int n, bool ccw = true);

    const std::vector<Vec2>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    const Vec2& point(std::size_t i) const { return pts_[i]; }

    double total_length() const { return total_length_; }
    bool is_resampled() const { return uniform_spacing_ > 0.0; }
    // Uniform per-sample arc-length weight; only valid on resampled curves.
    double spacing() const { return uniform_spacing_; }

    // +1 counterclockwise, -1 clockwise (from the signed area).
    int orientation() const;
    double signed_area() const;

    BBox bbox() const;

    // Sum of Euclidean segment lengths of the stored polyline.
    double chord_length() const;

    bool has_carried_curvature() const { return !carried_curvature_.empty(); }
    const std::vector<double>& carried_curvature() const { return carried_curvature_; }
    void set_carried_curvature(std::vector<double> k);

    Curve reversed() const;
    Curve transformed(double scale, double angle, Vec2 shift) const;

    void require_resampled(const char* op) const {
        if (!is_resampled())
            throw ValidationError(std::string(op) + ": curve must be arc-length resampled");
    }

  private:
    std::vector<Vec2> pts_;
    double total_length_ = 0.0;
    double uniform_spacing_ = 0.0;
    std::vector<double> carried_curvature_;
};

// Places n_samples points at equal arc-length spacing along the input
// polyline. The arc length measured along the input is preserved as the
// output's total_length.
Curve resample_arclength(const Curve& curve, int n_samples);

// Signed Menger (circumscribed-circle) curvature at every vertex from the
// consecutive point triple. Collinear triples give exactly 0. Sign follows
// the traversal: counterclockwise circles are positive.
std::vector<double> curvature_samples(const Curve& curve);

// Menger curvature on the strided triple (i-w, i, i+w); w = 1 is the
// consecutive-triple estimator.
std::vector<double> curvature_samples_windowed(const Curve& curve, int window);

// Integral of alpha + beta*|k|^p over the curve, midpoint rule on the
// uniform spacing ds = L/n. Uses carried curvature samples when present.
double elastica_energy(const Curve& curve, const ElasticaParams& params);

// Length and curvature parts reported separately: (alpha*L, beta*int |k|^p).
struct EnergySplit {
    double length_term = 0.0;
    double curvature_term = 0.0;
    double total() const { return length_term + curvature_term; }
};
EnergySplit elastica_energy_split(const Curve& curve, const ElasticaParams& params);

// In-place periodic [1,2,1]/4 smoothing passes on the vertex positions.
// Used to knock down sub-cell jitter on contour polylines before curvature
// estimation; displaces a smooth curve by O(ds^2 * k) per pass only.
void smooth_closed_polyline(std::vector<Vec2>& pts, int passes);

// Uniform arc-length resampling of an open polyline (endpoints kept).
std::vector<Vec2> resample_open_polyline(const std::vector<Vec2>& pts, int n_samples);

// Signed Menger curvature per vertex of an open polyline; endpoints copy
// their interior neighbour.
std::vector<double> open_polyline_curvature(const std::vector<Vec2>& pts);

}  // namespace elastica
