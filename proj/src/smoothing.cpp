#include "elastica/smoothing.hpp"

#include <algorithm>
#include <cmath>

#include "elastica/errors.hpp"
#include "elastica/parallel.hpp"

namespace elastica {

namespace {

double quintic_step(double s) { return s * s * s * (10.0 - 15.0 * s + 6.0 * s * s); }

}  // namespace

CutoffProfile CutoffProfile::quintic(double width, double c, int table_size) {
    if (!(width > 0.0) || !(c > 0.0))
        throw ValidationError("CutoffProfile: width and c must be positive");
    if (table_size < 16) throw ValidationError("CutoffProfile: table too small");
    CutoffProfile p;
    p.width_ = width;
    p.c_ = c;
    p.samples_.resize(static_cast<std::size_t>(table_size));
    for (int i = 0; i < table_size; ++i) {
        double s = static_cast<double>(i) / (table_size - 1);
        p.samples_[i] = c * (1.0 - quintic_step(s));
    }
    p.samples_.front() = c;
    p.samples_.back() = 0.0;
    return p;
}

double CutoffProfile::eval(double d) const {
    if (d <= 0.0) return c_;
    if (d >= width_) return 0.0;
    double s = quintic_step(d / width_);
    return c_ * (1.0 - s);
}

double CutoffProfile::inverse(double t) const {
    t = std::clamp(t, 0.0, c_);
    double lo = 0.0, hi = width_;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (eval(mid) > t)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double CutoffProfile::end_slope_magnitude() const {
    // analytic for the quintic family: q'(0) = q'(1) = 0 exactly
    return 0.0;
}

void CutoffProfile::validate() const {
    if (samples_.empty()) throw ValidationError("CutoffProfile: empty table");
    if (samples_.front() != c_ || samples_.back() != 0.0)
        throw ValidationError("CutoffProfile: endpoint values must be c and 0");
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (samples_[i] > samples_[i - 1] + 1e-15)
            throw ValidationError("CutoffProfile: profile must be nonincreasing");
    if (end_slope_magnitude() > 1e-9)
        throw ValidationError("CutoffProfile: endpoint slopes must vanish");
    // bounded second difference = two continuous derivatives at table scale
    double dd = width_ / static_cast<double>(samples_.size() - 1);
    double bound = 40.0 * c_ / (width_ * width_);  // |w''| <= 30c/W^2 for the quintic
    for (std::size_t i = 1; i + 1 < samples_.size(); ++i) {
        double w2 = (samples_[i + 1] - 2.0 * samples_[i] + samples_[i - 1]) / (dd * dd);
        if (std::abs(w2) > bound)
            throw ValidationError("CutoffProfile: second derivative out of bounds");
    }
}

OffsetCurve offset_curve(const Curve& base, double delta) {
    base.require_resampled("offset_curve");
    std::vector<double> k = curvature_samples(base);
    for (std::size_t i = 0; i < k.size(); ++i)
        if (std::abs(1.0 + delta * k[i]) < kOffsetMargin)
            throw OffsetSingularity("offset_curve: |1 + delta k| < margin at sample " +
                                    std::to_string(i));

    const auto& pts = base.points();
    const std::size_t n = pts.size();
    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 tangent = normalized(pts[(i + 1) % n] - pts[(i + n - 1) % n]);
        Vec2 normal = rot90(tangent) * -1.0;  // outward for ccw curves
        out[i] = pts[i] + normal * delta;
    }

    OffsetCurve oc;
    oc.base = base;
    oc.delta = delta;
    oc.result = resample_arclength(Curve::from_points(std::move(out)),
                                   static_cast<int>(n));
    oc.predicted_curvature.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        oc.predicted_curvature[i] = k[i] / std::abs(1.0 + delta * k[i]);
    return oc;
}

double offset_energy_transform(const Curve& base, double delta,
                               const ElasticaParams& params) {
    params.validate();
    base.require_resampled("offset_energy_transform");
    std::vector<double> k = curvature_samples(base);
    const double ds = base.total_length() / static_cast<double>(base.size());
    double acc = 0.0;
    for (double kj : k) {
        double j = 1.0 + delta * kj;
        if (std::abs(j) < kOffsetMargin)
            throw OffsetSingularity("offset_energy_transform: |1 + delta k| < margin");
        double kt = kj / std::abs(j);
        acc += (params.alpha + params.beta * std::pow(std::abs(kt), params.p)) *
               std::abs(j) * ds;
    }
    return acc;
}

namespace {

GridFunction indicator_impl(const CurveSystem& boundaries, double c,
                            const CutoffProfile& profile, const GridFunction& tpl) {
    if (boundaries.empty())
        throw ValidationError("build_smooth_indicator: empty boundary");
    profile.validate();
    const double h = tpl.spacing();
    const double width = profile.width();
    if (width < 4.0 * h)
        throw ValidationError("build_smooth_indicator: profile width must span >= 4 cells");

    // The offset map x + d n(x) stays injective while 1 + d k != 0; cap the
    // collar by the most concave boundary sample.
    for (const auto& bc : boundaries.curves()) {
        double kmin = 0.0;
        for (double k : curvature_samples(bc)) kmin = std::min(kmin, k);
        if (kmin < 0.0 && width >= (1.0 - kOffsetMargin) / (-kmin))
            throw OffsetSingularity(
                "build_smooth_indicator: collar exceeds the curvature-admissible width");
    }

    BBox need = boundaries.bbox();
    need.pad(width);
    BBox have = tpl.bbox();
    if (!(have.lo.x <= need.lo.x && have.lo.y <= need.lo.y && have.hi.x >= need.hi.x &&
          have.hi.y >= need.hi.y))
        throw ValidationError("build_smooth_indicator: grid does not contain the collar");

    // Interior mask at the grid nodes (cell centers of the half-shifted box).
    BBox node_box;
    node_box.expand(tpl.origin() - Vec2{h / 2.0, h / 2.0});
    node_box.expand(tpl.point_at(tpl.rows() - 1, tpl.cols() - 1) + Vec2{h / 2.0, h / 2.0});
    auto inside = rasterize_interior(boundaries, node_box, tpl.cols(), tpl.rows());

    SegmentGrid grid(boundaries, width);
    GridFunction u(tpl.rows(), tpl.cols(), h, tpl.origin());
    parallel_for(static_cast<std::size_t>(tpl.rows()), default_thread_count(),
                 [&](std::size_t i) {
                     for (int j = 0; j < tpl.cols(); ++j) {
                         std::size_t idx = i * static_cast<std::size_t>(tpl.cols()) + j;
                         if (inside[idx]) {
                             u.at(static_cast<int>(i), j) = c;
                             continue;
                         }
                         Vec2 p = u.point_at(static_cast<int>(i), j);
                         double d = grid.distance_within(p, width);
                         u.at(static_cast<int>(i), j) = d < width ? profile.eval(d) : 0.0;
                     }
                 });
    return u;
}

}  // namespace

GridFunction build_smooth_indicator(const Curve& boundary, double c,
                                    const CutoffProfile& profile,
                                    const GridFunction& grid_template) {
    boundary.require_resampled("build_smooth_indicator");
    if (boundary.orientation() != 1)
        throw ValidationError("build_smooth_indicator: boundary must be counterclockwise");
    if (std::abs(profile.plateau() - c) > 1e-12)
        throw ValidationError("build_smooth_indicator: profile plateau must equal c");
    return indicator_impl(CurveSystem::single(boundary), c, profile, grid_template);
}

GridFunction build_smooth_indicator_system(const CurveSystem& boundaries, double c,
                                           const CutoffProfile& profile,
                                           const GridFunction& grid_template) {
    return indicator_impl(boundaries, c, profile, grid_template);
}

EnergyReport smoothing_convergence_study(const Curve& boundary, double c,
                                         const std::vector<double>& collar_widths,
                                         const ElasticaParams& params,
                                         const GridFunction& grid_template,
                                         int n_levels) {
    if (collar_widths.empty())
        throw ValidationError("smoothing_convergence_study: no collar widths");
    for (std::size_t i = 1; i < collar_widths.size(); ++i)
        if (!(collar_widths[i] < collar_widths[i - 1]))
            throw ValidationError("smoothing_convergence_study: collars must decrease");

    double target = c * elastica_energy(boundary, params);
    EnergyReport rep;
    for (double width : collar_widths) {
        CutoffProfile profile = CutoffProfile::quintic(width, c);
        GridFunction u = build_smooth_indicator(boundary, c, profile, grid_template);
        double f = coarea_energy(u, params, n_levels).total;
        rep.study.push_back({width, f, target, std::abs(f - target)});
    }
    rep.total = rep.study.back().coarea;
    for (std::size_t i = 1; i < rep.study.size(); ++i)
        if (rep.study[i].abs_error > 1.2 * rep.study[i - 1].abs_error) {
            rep.flags.push_back("non_monotone_at_collar_" +
                                format_g9(rep.study[i].collar));
        }
    return rep;
}

}  // namespace elastica
