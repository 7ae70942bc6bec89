#include "elastica/curve.hpp"

#include <cmath>
#include <numbers>

namespace elastica {

namespace {

double polygon_signed_area(const std::vector<Vec2>& pts) {
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2& p = pts[i];
        const Vec2& q = pts[(i + 1) % pts.size()];
        a += cross(p, q);
    }
    return 0.5 * a;
}

}  // namespace

Curve Curve::from_points(std::vector<Vec2> pts) {
    if (pts.size() >= 2 && dist(pts.front(), pts.back()) == 0.0) pts.pop_back();
    if (pts.size() < 3) throw DegenerateCurve("Curve: fewer than 3 distinct points");
    double len = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = dist(pts[i], pts[(i + 1) % pts.size()]);
        if (d == 0.0)
            throw DegenerateCurve("Curve: zero-length segment at index " + std::to_string(i));
        len += d;
    }
    if (!(len > 0.0)) throw DegenerateCurve("Curve: total length is 0");
    Curve c;
    c.pts_ = std::move(pts);
    c.total_length_ = len;
    return c;
}

Curve Curve::from_uniform_samples(std::vector<Vec2> pts) {
    Curve c = from_points(std::move(pts));
    c.uniform_spacing_ = c.total_length_ / static_cast<double>(c.pts_.size());
    return c;
}

Curve Curve::from_uniform_samples(std::vector<Vec2> pts, double source_length) {
    Curve c = from_points(std::move(pts));
    if (!(source_length > 0.0))
        throw ValidationError("Curve: source length must be > 0");
    c.total_length_ = source_length;
    c.uniform_spacing_ = source_length / static_cast<double>(c.pts_.size());
    return c;
}

Curve Curve::circle(Vec2 center, double radius, int n, bool ccw) {
    if (n < 8) throw ValidationError("Curve::circle: need at least 8 samples");
    if (!(radius > 0.0)) throw ValidationError("Curve::circle: radius must be > 0");
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    double sgn = ccw ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) {
        double a = sgn * 2.0 * std::numbers::pi * i / n;
        pts.push_back(center + Vec2{radius * std::cos(a), radius * std::sin(a)});
    }
    return from_uniform_samples(std::move(pts));
}

int Curve::orientation() const { return signed_area() >= 0.0 ? 1 : -1; }

double Curve::signed_area() const { return polygon_signed_area(pts_); }

BBox Curve::bbox() const {
    BBox b;
    for (const auto& p : pts_) b.expand(p);
    return b;
}

double Curve::chord_length() const {
    double len = 0.0;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        len += dist(pts_[i], pts_[(i + 1) % pts_.size()]);
    return len;
}

void Curve::set_carried_curvature(std::vector<double> k) {
    if (k.size() != pts_.size())
        throw ValidationError("Curve: carried curvature size mismatch");
    carried_curvature_ = std::move(k);
}

Curve Curve::reversed() const {
    Curve c = *this;
    std::reverse(c.pts_.begin(), c.pts_.end());
    if (!c.carried_curvature_.empty()) {
        std::reverse(c.carried_curvature_.begin(), c.carried_curvature_.end());
        for (double& k : c.carried_curvature_) k = -k;
    }
    return c;
}

Curve Curve::transformed(double scale, double angle, Vec2 shift) const {
    Curve c = *this;
    double ca = std::cos(angle), sa = std::sin(angle);
    for (auto& p : c.pts_) {
        Vec2 q{scale * (ca * p.x - sa * p.y), scale * (ca * p.y + sa * p.x)};
        p = q + shift;
    }
    c.total_length_ *= scale;
    c.uniform_spacing_ *= scale;
    if (!c.carried_curvature_.empty())
        for (double& k : c.carried_curvature_) k /= scale;
    return c;
}

Curve resample_arclength(const Curve& curve, int n_samples) {
    if (n_samples < 8)
        throw ValidationError("resample_arclength: n_samples must be >= 8");
    const auto& pts = curve.points();
    const std::size_t m = pts.size();
    if (m < 3) throw DegenerateCurve("resample_arclength: fewer than 3 points");

    std::vector<double> cum(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        cum[i + 1] = cum[i] + dist(pts[i], pts[(i + 1) % m]);
    const double total = cum[m];
    if (!(total > 0.0)) throw DegenerateCurve("resample_arclength: zero total length");

    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    std::size_t seg = 0;
    for (int j = 0; j < n_samples; ++j) {
        double s = total * static_cast<double>(j) / static_cast<double>(n_samples);
        while (seg + 1 < m && cum[seg + 1] <= s) ++seg;
        double seg_len = cum[seg + 1] - cum[seg];
        double t = seg_len > 0.0 ? (s - cum[seg]) / seg_len : 0.0;
        const Vec2& a = pts[seg];
        const Vec2& b = pts[(seg + 1) % m];
        out.push_back(a + (b - a) * t);
    }
    for (std::size_t j = 0; j < out.size(); ++j)
        if (dist(out[j], out[(j + 1) % out.size()]) == 0.0)
            throw DegenerateCurve("resample_arclength: samples collapsed");

    // The arc length measured along the input is what the samples are spaced
    // by, so it is carried over exactly; each sample weighs ds = L/n.
    return Curve::from_uniform_samples(std::move(out), total);
}

std::vector<double> curvature_samples_windowed(const Curve& curve, int window) {
    curve.require_resampled("curvature_samples");
    const auto& pts = curve.points();
    const std::size_t n = pts.size();
    const std::size_t w = static_cast<std::size_t>(std::max(1, window)) % n;
    std::vector<double> k(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[(i + n - w) % n];
        const Vec2& b = pts[i];
        const Vec2& c = pts[(i + w) % n];
        double l1 = dist(a, b);
        double l2 = dist(b, c);
        double l3 = dist(a, c);
        double area2 = cross(b - a, c - b);
        if (l1 == 0.0 || l2 == 0.0)
            throw DegenerateCurve("curvature_samples: degenerate triple at index " +
                                  std::to_string(i));
        if (area2 == 0.0 || l3 == 0.0) {
            k[i] = 0.0;  // collinear (or exact reversal): infinite radius
        } else {
            k[i] = 2.0 * area2 / (l1 * l2 * l3);
        }
    }
    return k;
}

std::vector<double> curvature_samples(const Curve& curve) {
    return curvature_samples_windowed(curve, 1);
}

EnergySplit elastica_energy_split(const Curve& curve, const ElasticaParams& params) {
    params.validate();
    curve.require_resampled("elastica_energy");
    const std::size_t n = curve.size();
    const double ds = curve.total_length() / static_cast<double>(n);
    EnergySplit e;
    e.length_term = params.alpha * curve.total_length();
    if (params.beta > 0.0) {
        const std::vector<double>& k = curve.has_carried_curvature()
                                           ? curve.carried_curvature()
                                           : curvature_samples(curve);
        double acc = 0.0;
        for (double kj : k) acc += std::pow(std::abs(kj), params.p);
        e.curvature_term = params.beta * acc * ds;
    }
    return e;
}

double elastica_energy(const Curve& curve, const ElasticaParams& params) {
    return elastica_energy_split(curve, params).total();
}

std::vector<Vec2> resample_open_polyline(const std::vector<Vec2>& pts, int n_samples) {
    if (pts.size() < 2) throw DegenerateCurve("resample_open_polyline: too few points");
    if (n_samples < 2) throw ValidationError("resample_open_polyline: n_samples < 2");
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i)
        cum[i] = cum[i - 1] + dist(pts[i - 1], pts[i]);
    double total = cum.back();
    if (!(total > 0.0)) throw DegenerateCurve("resample_open_polyline: zero length");
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    std::size_t seg = 0;
    for (int j = 0; j < n_samples; ++j) {
        double s = total * static_cast<double>(j) / static_cast<double>(n_samples - 1);
        while (seg + 2 < pts.size() && cum[seg + 1] <= s) ++seg;
        double seg_len = cum[seg + 1] - cum[seg];
        double t = seg_len > 0.0 ? (s - cum[seg]) / seg_len : 0.0;
        out.push_back(pts[seg] + (pts[seg + 1] - pts[seg]) * std::min(t, 1.0));
    }
    return out;
}

std::vector<double> open_polyline_curvature(const std::vector<Vec2>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> k(n, 0.0);
    if (n < 3) return k;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Vec2& a = pts[i - 1];
        const Vec2& b = pts[i];
        const Vec2& c = pts[i + 1];
        double l1 = dist(a, b), l2 = dist(b, c), l3 = dist(a, c);
        double area2 = cross(b - a, c - b);
        if (l1 == 0.0 || l2 == 0.0)
            throw DegenerateCurve("open_polyline_curvature: repeated point");
        k[i] = (area2 == 0.0 || l3 == 0.0) ? 0.0 : 2.0 * area2 / (l1 * l2 * l3);
    }
    k[0] = k[1];
    k[n - 1] = k[n - 2];
    return k;
}

void smooth_closed_polyline(std::vector<Vec2>& pts, int passes) {
    const std::size_t n = pts.size();
    if (n < 3 || passes <= 0) return;
    std::vector<Vec2> tmp(n);
    for (int p = 0; p < passes; ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = pts[(i + n - 1) % n];
            const Vec2& b = pts[i];
            const Vec2& c = pts[(i + 1) % n];
            tmp[i] = (a + b * 2.0 + c) / 4.0;
        }
        pts.swap(tmp);
    }
}

}  // namespace elastica
