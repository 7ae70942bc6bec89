#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace elastica {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }
inline double norm2(const Vec2& a) { return a.x * a.x + a.y * a.y; }
inline double dist(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Rotation by +90 degrees: J(x,y) = (-y,x).
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }

inline Vec2 normalized(const Vec2& v) {
    double n = norm(v);
    return n > 0.0 ? v / n : Vec2{0.0, 0.0};
}

struct BBox {
    Vec2 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Vec2 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};

    bool valid() const { return lo.x <= hi.x && lo.y <= hi.y; }
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return valid() ? width() * height() : 0.0; }

    void expand(const Vec2& p) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    void expand(const BBox& b) {
        if (!b.valid()) return;
        expand(b.lo);
        expand(b.hi);
    }
    void pad(double m) {
        lo.x -= m;
        lo.y -= m;
        hi.x += m;
        hi.y += m;
    }
    bool contains(const Vec2& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
};

// Distance from point p to segment [a,b].
inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double l2 = norm2(ab);
    if (l2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

inline double segment_segment_distance(const Vec2& a, const Vec2& b, const Vec2& c,
                                        const Vec2& d) {
    double m = point_segment_distance(a, c, d);
    m = std::min(m, point_segment_distance(b, c, d));
    m = std::min(m, point_segment_distance(c, a, b));
    m = std::min(m, point_segment_distance(d, a, b));
    return m;
}

// Proper (interior-to-interior) intersection test for segments [a,b], [c,d].
inline bool segments_intersect_properly(const Vec2& a, const Vec2& b, const Vec2& c,
                                        const Vec2& d) {
    auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        return cross(q - p, r - p);
    };
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 &&
           o3 != 0 && o4 != 0;
}

// Acute angle between the supporting lines of two directions, in [0, pi/2].
inline double line_angle(const Vec2& u, const Vec2& v) {
    double c = std::abs(cross(u, v));
    double d = std::abs(dot(u, v));
    return std::atan2(c, d);
}

}  // namespace elastica
