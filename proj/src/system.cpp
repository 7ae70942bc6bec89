#include "elastica/system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "elastica/errors.hpp"

namespace elastica {

CurveSystem CurveSystem::from_parts(std::vector<Curve> curves, std::vector<int> mults) {
    if (curves.size() != mults.size())
        throw ValidationError("CurveSystem: curves/multiplicities length mismatch");
    for (int m : mults)
        if (m <= 0) throw ValidationError("CurveSystem: multiplicities must be positive");
    CurveSystem s;
    s.curves_ = std::move(curves);
    s.mults_ = std::move(mults);
    return s;
}

CurveSystem CurveSystem::single(Curve c, int multiplicity) {
    std::vector<Curve> cs;
    cs.push_back(std::move(c));
    return from_parts(std::move(cs), {multiplicity});
}

BBox CurveSystem::bbox() const {
    BBox b;
    for (const auto& c : curves_) b.expand(c.bbox());
    return b;
}

double CurveSystem::total_trace_length() const {
    double l = 0.0;
    for (const auto& c : curves_) l += c.total_length();
    return l;
}

double CurveSystem::median_spacing() const {
    std::vector<double> sp;
    for (const auto& c : curves_)
        sp.push_back(c.total_length() / static_cast<double>(c.size()));
    if (sp.empty()) return 0.0;
    std::sort(sp.begin(), sp.end());
    return sp[sp.size() / 2];
}

EnergySplit CurveSystem::energy_split(const ElasticaParams& params) const {
    EnergySplit total;
    for (std::size_t i = 0; i < curves_.size(); ++i) {
        EnergySplit e = elastica_energy_split(curves_[i], params);
        total.length_term += mults_[i] * e.length_term;
        total.curvature_term += mults_[i] * e.curvature_term;
    }
    return total;
}

double CurveSystem::energy(const ElasticaParams& params) const {
    return energy_split(params).total();
}

std::string to_string(ContactClass c) {
    switch (c) {
        case ContactClass::disjoint: return "disjoint";
        case ContactClass::tangential_contact: return "tangential_contact";
        case ContactClass::crossing: return "crossing";
    }
    return "?";
}

SegmentGrid::SegmentGrid(const CurveSystem& system, double cell_hint) {
    for (std::size_t ci = 0; ci < system.size(); ++ci) {
        const auto& pts = system.curve(ci).points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            segs_.push_back({pts[i], pts[(i + 1) % pts.size()], static_cast<int>(ci),
                             static_cast<int>(i)});
    }
    if (segs_.empty()) return;
    for (const auto& s : segs_) {
        box_.expand(s.a);
        box_.expand(s.b);
    }
    double med = system.median_spacing();
    cell_ = std::max(cell_hint, med);
    if (!(cell_ > 0.0)) cell_ = std::max(box_.width(), box_.height()) / 64.0 + 1e-300;
    nx_ = std::max(1, static_cast<int>(box_.width() / cell_) + 1);
    ny_ = std::max(1, static_cast<int>(box_.height() / cell_) + 1);
    // Cap the table size; coarser cells only cost extra candidate checks.
    while (static_cast<long long>(nx_) * ny_ > 4'000'000LL) {
        cell_ *= 2.0;
        nx_ = std::max(1, static_cast<int>(box_.width() / cell_) + 1);
        ny_ = std::max(1, static_cast<int>(box_.height() / cell_) + 1);
    }
    cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (std::size_t si = 0; si < segs_.size(); ++si) {
        const auto& s = segs_[si];
        int x0 = static_cast<int>((std::min(s.a.x, s.b.x) - box_.lo.x) / cell_);
        int x1 = static_cast<int>((std::max(s.a.x, s.b.x) - box_.lo.x) / cell_);
        int y0 = static_cast<int>((std::min(s.a.y, s.b.y) - box_.lo.y) / cell_);
        int y1 = static_cast<int>((std::max(s.a.y, s.b.y) - box_.lo.y) / cell_);
        for (int iy = std::max(0, y0); iy <= std::min(ny_ - 1, y1); ++iy)
            for (int ix = std::max(0, x0); ix <= std::min(nx_ - 1, x1); ++ix)
                cells_[cell_index(ix, iy)].push_back(static_cast<int>(si));
    }
}

std::vector<int> SegmentGrid::segments_near(const Vec2& p, double radius) const {
    std::vector<int> out;
    if (segs_.empty()) return out;
    int x0 = static_cast<int>((p.x - radius - box_.lo.x) / cell_);
    int x1 = static_cast<int>((p.x + radius - box_.lo.x) / cell_);
    int y0 = static_cast<int>((p.y - radius - box_.lo.y) / cell_);
    int y1 = static_cast<int>((p.y + radius - box_.lo.y) / cell_);
    for (int iy = std::max(0, y0); iy <= std::min(ny_ - 1, y1); ++iy)
        for (int ix = std::max(0, x0); ix <= std::min(nx_ - 1, x1); ++ix)
            for (int si : cells_[cell_index(ix, iy)]) out.push_back(si);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double SegmentGrid::distance_within(const Vec2& p, double cap) const {
    if (segs_.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (int si : segments_near(p, cap)) {
        const auto& s = segs_[si];
        best = std::min(best, point_segment_distance(p, s.a, s.b));
    }
    return best;
}

namespace {

double curve_winding_angle(const Vec2& p, const Curve& c, double dist_tol) {
    const auto& pts = c.points();
    const std::size_t n = pts.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[(i + 1) % n];
        if (point_segment_distance(p, a, b) <= dist_tol)
            throw PointOnTrace("winding_index: point within dist_tol of the trace");
        Vec2 u = a - p, v = b - p;
        total += std::atan2(cross(u, v), dot(u, v));
    }
    return total;
}

}  // namespace

int winding_index(const Vec2& point, const CurveSystem& system, double dist_tol) {
    double total = 0.0;
    for (std::size_t i = 0; i < system.size(); ++i) {
        double ang = curve_winding_angle(point, system.curve(i), dist_tol);
        total += system.multiplicity(i) * ang;
    }
    double turns = total / (2.0 * std::numbers::pi);
    double rounded = std::round(turns);
    if (std::abs(turns - rounded) >= 0.1)
        throw PointOnTrace("winding_index: non-integer angle sum, point too close to trace");
    return static_cast<int>(rounded);
}

bool interior_membership(const Vec2& point, const CurveSystem& system, double dist_tol) {
    int idx = winding_index(point, system, dist_tol);
    return (idx % 2 + 2) % 2 == 1;
}

double distance_to_trace(const Vec2& point, const CurveSystem& system) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : system.curves()) {
        const auto& pts = c.points();
        for (std::size_t i = 0; i < pts.size(); ++i)
            best = std::min(best, point_segment_distance(point, pts[i], pts[(i + 1) % pts.size()]));
    }
    return best;
}

namespace {

struct RowCrossing {
    double x;
    int sign;  // +1 upward, -1 downward, multiplicity-weighted
};

// Signed crossings of the horizontal line y with all segments, half-open in
// y so shared vertices are counted once.
void row_crossings(const CurveSystem& system, double y, std::vector<RowCrossing>& out) {
    out.clear();
    for (std::size_t ci = 0; ci < system.size(); ++ci) {
        int m = system.multiplicity(ci);
        const auto& pts = system.curve(ci).points();
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = pts[i];
            const Vec2& b = pts[(i + 1) % n];
            if (a.y <= y && b.y > y) {
                double t = (y - a.y) / (b.y - a.y);
                out.push_back({a.x + t * (b.x - a.x), +m});
            } else if (b.y <= y && a.y > y) {
                double t = (y - b.y) / (a.y - b.y);
                out.push_back({b.x + t * (a.x - b.x), -m});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RowCrossing& l, const RowCrossing& r) { return l.x < r.x; });
}

}  // namespace

std::vector<std::uint8_t> rasterize_interior(const CurveSystem& system, const BBox& bbox,
                                             int nx, int ny) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
    if (system.empty()) return mask;
    const double cw = bbox.width() / nx;
    const double ch = bbox.height() / ny;
    std::vector<RowCrossing> cr;
    for (int iy = 0; iy < ny; ++iy) {
        double y = bbox.lo.y + (iy + 0.5) * ch;
        row_crossings(system, y, cr);
        std::size_t k = 0;
        int winding = 0;
        for (int ix = 0; ix < nx; ++ix) {
            double x = bbox.lo.x + (ix + 0.5) * cw;
            while (k < cr.size() && cr[k].x < x) winding += cr[k++].sign;
            if (((winding % 2) + 2) % 2 == 1)
                mask[static_cast<std::size_t>(iy) * nx + ix] = 1;
        }
    }
    return mask;
}

void dilate_mask(std::vector<std::uint8_t>& mask, int nx, int ny, int rounds) {
    std::vector<std::uint8_t> tmp(mask.size());
    for (int r = 0; r < rounds; ++r) {
        tmp = mask;
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix) {
                if (tmp[static_cast<std::size_t>(iy) * nx + ix]) continue;
                bool on = false;
                for (int dy = -1; dy <= 1 && !on; ++dy)
                    for (int dx = -1; dx <= 1 && !on; ++dx) {
                        int jx = ix + dx, jy = iy + dy;
                        if (jx < 0 || jy < 0 || jx >= nx || jy >= ny) continue;
                        on = tmp[static_cast<std::size_t>(jy) * nx + jx] != 0;
                    }
                if (on) mask[static_cast<std::size_t>(iy) * nx + ix] = 1;
            }
    }
}

double interior_area(const CurveSystem& system, const BBox& bbox, int resolution,
                     double boundary_tol) {
    if (resolution < 2) throw ValidationError("interior_area: resolution must be >= 2");
    if (system.empty()) return 0.0;
    BBox sys = system.bbox();
    const double cw = bbox.width() / resolution;
    const double ch = bbox.height() / resolution;
    if (sys.lo.x < bbox.lo.x + 2 * cw || sys.hi.x > bbox.hi.x - 2 * cw ||
        sys.lo.y < bbox.lo.y + 2 * ch || sys.hi.y > bbox.hi.y - 2 * ch)
        throw ValidationError("interior_area: bbox must contain curves with a 2-cell margin");

    std::vector<RowCrossing> cr;
    long long count = 0;
    for (int iy = 0; iy < resolution; ++iy) {
        double y = bbox.lo.y + (iy + 0.5) * ch;
        row_crossings(system, y, cr);
        std::size_t k = 0;
        int winding = 0;
        for (int ix = 0; ix < resolution; ++ix) {
            double x = bbox.lo.x + (ix + 0.5) * cw;
            while (k < cr.size() && cr[k].x < x) winding += cr[k++].sign;
            bool inside = ((winding % 2) + 2) % 2 == 1;
            if (inside && boundary_tol > 0.0) {
                if ((k < cr.size() && cr[k].x - x <= boundary_tol) ||
                    (k > 0 && x - cr[k - 1].x <= boundary_tol))
                    inside = false;
            }
            if (inside) ++count;
        }
    }
    return static_cast<double>(count) * cw * ch;
}

namespace {

struct ContactEvent {
    int curve_a, seg_a;
    int curve_b, seg_b;
    double distance;
    double angle;
    Vec2 point;
    bool proper;
};

void collect_events(const CurveSystem& a, const CurveSystem& b, bool self, double dist_tol,
                    std::vector<ContactEvent>& events) {
    SegmentGrid grid_b(b, dist_tol);
    SegmentGrid grid_a(a, dist_tol);
    const auto& asegs = grid_a.segments();
    const auto& bsegs = grid_b.segments();
    for (std::size_t ia = 0; ia < asegs.size(); ++ia) {
        const auto& sa = asegs[ia];
        Vec2 mid = (sa.a + sa.b) / 2.0;
        double half = dist(sa.a, sa.b) / 2.0;
        for (int ib : grid_b.segments_near(mid, half + dist_tol)) {
            const auto& sb = bsegs[ib];
            if (self) {
                if (sb.curve < sa.curve) continue;  // unordered pairs once
                if (sb.curve == sa.curve) {
                    if (sb.index <= sa.index) continue;
                    int n = static_cast<int>(a.curve(sa.curve).size());
                    int di = std::min((sb.index - sa.index + n) % n, (sa.index - sb.index + n) % n);
                    int excl = std::max(
                        2, static_cast<int>(dist_tol / (a.curve(sa.curve).total_length() / n)) + 1);
                    if (di <= excl) continue;
                }
            }
            double d = segment_segment_distance(sa.a, sa.b, sb.a, sb.b);
            bool proper = segments_intersect_properly(sa.a, sa.b, sb.a, sb.b);
            if (d >= dist_tol && !proper) continue;
            double ang = line_angle(sa.b - sa.a, sb.b - sb.a);
            Vec2 w = (sa.a + sa.b + sb.a + sb.b) / 4.0;
            events.push_back({sa.curve, sa.index, sb.curve, sb.index, d, ang, w, proper});
        }
    }
}

}  // namespace

ContactReport classify_contact(const CurveSystem& a, const CurveSystem& b, double dist_tol,
                               double angle_tol) {
    ContactReport report;
    if (a.empty() || b.empty()) return report;
    bool self = &a == &b;
    std::vector<ContactEvent> events;
    collect_events(a, b, self, dist_tol, events);
    if (events.empty()) return report;

    std::sort(events.begin(), events.end(), [](const ContactEvent& l, const ContactEvent& r) {
        if (l.curve_a != r.curve_a) return l.curve_a < r.curve_a;
        if (l.curve_b != r.curve_b) return l.curve_b < r.curve_b;
        return l.seg_a < r.seg_a;
    });

    // One witness per maximal proximate run along curve_a.
    report.classification = ContactClass::tangential_contact;
    struct Run {
        int seg_first, seg_last;
        ContactEvent best;
        bool crossing;
    };
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < events.size()) {
        std::size_t j = i + 1;
        Run run{events[i].seg_a, events[i].seg_a, events[i], events[i].angle > angle_tol};
        while (j < events.size() && events[j].curve_a == events[i].curve_a &&
               events[j].curve_b == events[i].curve_b && events[j].seg_a - events[j - 1].seg_a <= 4) {
            if (events[j].angle > angle_tol) run.crossing = true;
            bool better = run.crossing ? events[j].angle > run.best.angle
                                       : events[j].distance < run.best.distance;
            if (better) run.best = events[j];
            run.seg_last = events[j].seg_a;
            ++j;
        }
        runs.push_back(run);
        i = j;
    }
    // A run may wrap past the index origin of curve_a; merge first into last.
    for (std::size_t lo = 0; lo < runs.size(); ++lo) {
        if (runs[lo].best.curve_a < 0) continue;
        for (std::size_t hi = lo + 1; hi < runs.size(); ++hi) {
            if (runs[hi].best.curve_a != runs[lo].best.curve_a ||
                runs[hi].best.curve_b != runs[lo].best.curve_b)
                continue;
            int n = static_cast<int>(a.curve(runs[lo].best.curve_a).size());
            if (runs[lo].seg_first + n - runs[hi].seg_last <= 4) {
                runs[hi].crossing = runs[hi].crossing || runs[lo].crossing;
                bool better = runs[hi].crossing ? runs[lo].best.angle > runs[hi].best.angle
                                                : runs[lo].best.distance < runs[hi].best.distance;
                if (better) runs[hi].best = runs[lo].best;
                runs[lo].best.curve_a = -1;  // absorbed
            }
        }
    }
    for (const auto& run : runs) {
        if (run.best.curve_a < 0) continue;
        report.witnesses.push_back(
            {run.best.point, run.best.curve_a, run.best.curve_b, run.best.angle, run.best.distance});
        if (run.crossing) report.classification = ContactClass::crossing;
    }
    return report;
}

ContactReport classify_contact(const CurveSystem& a, const CurveSystem& b,
                               const ContactTolerances& tol) {
    double dt = tol.dist_tol;
    if (dt <= 0.0) {
        double ma = a.median_spacing();
        double mb = b.median_spacing();
        dt = 2.0 * std::max(ma, mb);
        if (dt <= 0.0) dt = 1e-9;
    }
    return classify_contact(a, b, dt, tol.angle_tol);
}

}  // namespace elastica
