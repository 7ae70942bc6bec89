#include "elastica/relaxed.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "elastica/errors.hpp"

namespace elastica {

namespace {

double polygon_scale(const CuspedSet& set) {
    BBox b = set.bbox;
    if (!b.valid())
        for (const auto& arc : set.boundary_arcs)
            for (const auto& p : arc) b.expand(p);
    return std::max(b.width(), b.height());
}

Vec2 arc_end_tangent(const std::vector<Vec2>& arc, bool at_front) {
    if (at_front) return normalized(arc[1] - arc[0]);
    return normalized(arc[arc.size() - 1] - arc[arc.size() - 2]);
}

bool point_in_polygon(const Vec2& p, const std::vector<Vec2>& poly) {
    bool in = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % poly.size()];
        if ((a.y <= p.y) != (b.y <= p.y)) {
            double xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (xi > p.x) in = !in;
        }
    }
    return in;
}

}  // namespace

void CuspedSet::validate(double angle_tol) const {
    if (boundary_arcs.empty()) throw ValidationError("CuspedSet: no boundary arcs");
    for (const auto& arc : boundary_arcs)
        if (arc.size() < 2) throw ValidationError("CuspedSet: arc with < 2 points");

    double tol = 1e-6 * std::max(polygon_scale(*this), 1e-30);

    // Arc ends meeting at a common point must have parallel tangents.
    struct End {
        Vec2 p;
        Vec2 tangent;
    };
    std::vector<End> ends;
    for (const auto& arc : boundary_arcs) {
        ends.push_back({arc.front(), arc_end_tangent(arc, true)});
        ends.push_back({arc.back(), arc_end_tangent(arc, false)});
    }
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            if (dist(ends[i].p, ends[j].p) > tol) continue;
            double ang = line_angle(ends[i].tangent, ends[j].tangent);
            if (ang > angle_tol)
                throw ValidationError("CuspedSet: arc ends meet at angle " +
                                      format_g9(ang) + " > tolerance (not a cusp)");
        }

    // Arcs may share endpoints but not cross.
    for (std::size_t a = 0; a < boundary_arcs.size(); ++a)
        for (std::size_t b = a + 1; b < boundary_arcs.size(); ++b) {
            const auto& A = boundary_arcs[a];
            const auto& B = boundary_arcs[b];
            for (std::size_t i = 0; i + 1 < A.size(); ++i)
                for (std::size_t j = 0; j + 1 < B.size(); ++j)
                    if (segments_intersect_properly(A[i], A[i + 1], B[j], B[j + 1]))
                        throw ValidationError("CuspedSet: boundary arcs cross");
        }
}

RelaxedEnergy relaxed_energy_cusped(const CuspedSet& set, const ElasticaParams& params,
                                    int samples_per_arc) {
    params.validate();
    if (set.boundary_arcs.empty()) throw ValidationError("CuspedSet: no boundary arcs");

    // Bridges must not cross the arcs; touching at the bridge endpoints
    // (the cusps themselves) is expected.
    double touch_tol = 1e-9 * std::max(polygon_scale(set), 1e-30);
    for (const auto& pr : set.cusp_pairs)
        for (const auto& arc : set.boundary_arcs)
            for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
                if (segments_intersect_properly(pr.first, pr.second, arc[i], arc[i + 1]))
                    throw BridgeCrossing("relaxed_energy_cusped: bridge crosses an arc");
                if (segment_segment_distance(pr.first, pr.second, arc[i], arc[i + 1]) <=
                    touch_tol) {
                    double d_ends = std::min(
                        {point_segment_distance(pr.first, arc[i], arc[i + 1]),
                         point_segment_distance(pr.second, arc[i], arc[i + 1])});
                    if (d_ends > touch_tol)
                        throw BridgeCrossing(
                            "relaxed_energy_cusped: bridge touches an arc away from "
                            "its endpoints");
                }
            }

    double length_term = 0.0, curvature_term = 0.0;
    std::vector<std::vector<Vec2>> resampled;
    for (const auto& arc : set.boundary_arcs) {
        // Never upsample: placing several samples per source segment would
        // concentrate the polygon corner angles into curvature spikes.
        int n = std::min(samples_per_arc,
                         std::max(16, static_cast<int>(arc.size()) / 2));
        std::vector<Vec2> r = resample_open_polyline(arc, n);
        double len = 0.0;
        for (std::size_t i = 1; i < r.size(); ++i) len += dist(r[i - 1], r[i]);
        double ds = len / static_cast<double>(r.size() - 1);
        std::vector<double> k = open_polyline_curvature(r);
        double kacc = 0.0;
        for (std::size_t i = 0; i < k.size(); ++i) {
            double w = (i == 0 || i + 1 == k.size()) ? 0.5 : 1.0;
            kacc += w * std::pow(std::abs(k[i]), params.p);
        }
        length_term += params.alpha * len;
        curvature_term += params.beta * kacc * ds;
        resampled.push_back(std::move(r));
    }

    double bridge_length = 0.0;
    for (const auto& pr : set.cusp_pairs) bridge_length += dist(pr.first, pr.second);
    double bridge_term = 2.0 * params.alpha * bridge_length;

    RelaxedEnergy out;
    out.bridge_length = bridge_length;
    out.report.levels.push_back({0, 0.0, length_term / params.alpha, curvature_term,
                                 length_term + curvature_term + bridge_term});
    out.report.total = length_term + curvature_term + bridge_term;

    // Chain arcs and doubled bridges into closed curves (Euler walk over the
    // endpoint graph; every cusp has even degree).
    double tol = 1e-6 * std::max(polygon_scale(set), 1e-30);
    struct Edge {
        std::vector<Vec2> pts;  // oriented point run
        int a, b;               // vertex ids
        bool used = false;
    };
    std::vector<Vec2> verts;
    auto vert_id = [&](const Vec2& p) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (dist(verts[i], p) <= tol) return static_cast<int>(i);
        verts.push_back(p);
        return static_cast<int>(verts.size() - 1);
    };
    std::vector<Edge> edges;
    for (auto& r : resampled) {
        Edge e;
        e.a = vert_id(r.front());
        e.b = vert_id(r.back());
        e.pts = std::move(r);
        edges.push_back(std::move(e));
    }
    for (const auto& pr : set.cusp_pairs) {
        int a = vert_id(pr.first), b = vert_id(pr.second);
        int nseg = std::max(8, static_cast<int>(dist(pr.first, pr.second) / 0.01));
        std::vector<Vec2> seg;
        for (int i = 0; i <= nseg; ++i)
            seg.push_back(pr.first + (pr.second - pr.first) *
                                         (static_cast<double>(i) / nseg));
        for (int copy = 0; copy < 2; ++copy) edges.push_back({seg, a, b, false});
    }

    std::vector<Curve> closed;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (edges[start].used) continue;
        std::vector<Vec2> chain;
        int origin = edges[start].a;
        int at = origin;
        bool stuck = false;
        while (true) {
            int pick = -1;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if (!edges[e].used && (edges[e].a == at || edges[e].b == at)) {
                    pick = static_cast<int>(e);
                    break;
                }
            if (pick < 0) {
                stuck = at != origin;
                break;
            }
            Edge& e = edges[pick];
            e.used = true;
            std::vector<Vec2> run = e.pts;
            if (e.b == at && e.a != e.b) std::reverse(run.begin(), run.end());
            for (const auto& p : run)
                if (chain.empty() || dist(chain.back(), p) > 0.0) chain.push_back(p);
            at = (e.a == at) ? e.b : e.a;
            if (at == origin) {
                bool left = false;
                for (const auto& ee : edges)
                    if (!ee.used && (ee.a == at || ee.b == at)) left = true;
                if (!left) break;
            }
        }
        if (stuck || chain.size() < 3)
            throw ValidationError("relaxed_energy_cusped: arcs and bridges do not close");
        while (chain.size() > 1 && dist(chain.front(), chain.back()) <= tol)
            chain.pop_back();
        closed.push_back(Curve::from_uniform_samples(
            resample_open_polyline(chain, static_cast<int>(chain.size()))));
    }
    std::vector<int> mults(closed.size(), 1);
    out.minimizing_system = CurveSystem::from_parts(std::move(closed), std::move(mults));
    return out;
}

double coarea_lower_bound(const GridFunction& u,
                          const std::vector<std::pair<double, double>>& per_level) {
    if (per_level.empty()) return 0.0;
    std::vector<std::pair<double, double>> rows = per_level;
    std::sort(rows.begin(), rows.end());
    const double lo = u.min_value(), hi = u.max_value();
    double acc = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double a = i == 0 ? lo : 0.5 * (rows[i - 1].first + rows[i].first);
        double b = i + 1 == rows.size() ? hi : 0.5 * (rows[i].first + rows[i + 1].first);
        if (b > a) acc += rows[i].second * (b - a);
    }
    return acc;
}

ClipResult clip_energy(const CurveSystem& system, const std::vector<Vec2>& omega,
                       const ElasticaParams& params) {
    params.validate();
    if (omega.size() < 3) throw ValidationError("clip_energy: omega needs >= 3 vertices");

    ClipResult out;
    double total = 0.0;
    for (std::size_t ci = 0; ci < system.size(); ++ci) {
        const Curve& c = system.curve(ci);
        const auto& pts = c.points();
        const std::size_t n = pts.size();
        const double ds = c.total_length() / static_cast<double>(n);
        const std::vector<double> k =
            c.has_carried_curvature() ? c.carried_curvature() : curvature_samples(c);
        const int mult = system.multiplicity(ci);

        std::vector<std::uint8_t> inside(n);
        std::size_t inside_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            inside[i] = point_in_polygon(pts[i], omega) ? 1 : 0;
            inside_count += inside[i];
        }
        if (inside_count == 0) continue;

        double length_term = 0.0, curvature_term = 0.0;
        auto add_sample = [&](std::size_t i, double w) {
            length_term += w * ds;
            curvature_term += w * ds * std::pow(std::abs(k[i]), params.p);
        };

        if (inside_count == n) {
            for (std::size_t i = 0; i < n; ++i) add_sample(i, 1.0);
            ClippedArc arc;
            arc.points = pts;
            arc.source_curve = static_cast<int>(ci);
            out.arcs.push_back(std::move(arc));
        } else {
            // walk circular runs of inside samples
            std::size_t s = 0;
            while (inside[s]) s = (s + 1) % n;  // start outside
            for (std::size_t step = 0; step < n;) {
                std::size_t i = (s + step) % n;
                if (!inside[i]) {
                    ++step;
                    continue;
                }
                ClippedArc arc;
                arc.source_curve = static_cast<int>(ci);
                std::size_t run_start = i;
                while (step < n && inside[(s + step) % n]) {
                    std::size_t idx = (s + step) % n;
                    arc.points.push_back(pts[idx]);
                    ++step;
                }
                std::size_t run_end = (s + step - 1) % n;
                for (std::size_t q = 0; q < arc.points.size(); ++q) {
                    std::size_t idx = (run_start + q) % n;
                    double w = (idx == run_start || idx == run_end) ? 0.5 : 1.0;
                    add_sample(idx, w);
                }
                arc.endpoints_on_boundary = {arc.points.front(), arc.points.back()};
                // refine endpoints to the omega boundary crossing when found
                auto boundary_hit = [&](const Vec2& in_pt, const Vec2& out_pt, Vec2& hit) {
                    for (std::size_t e = 0; e < omega.size(); ++e) {
                        const Vec2& a = omega[e];
                        const Vec2& b = omega[(e + 1) % omega.size()];
                        Vec2 d1 = out_pt - in_pt, d2 = b - a;
                        double den = cross(d1, d2);
                        if (den == 0.0) continue;
                        double t = cross(a - in_pt, d2) / den;
                        double s2 = cross(a - in_pt, d1) / den;
                        if (t >= 0.0 && t <= 1.0 && s2 >= 0.0 && s2 <= 1.0) {
                            hit = in_pt + d1 * t;
                            return true;
                        }
                    }
                    return false;
                };
                Vec2 hit;
                if (boundary_hit(pts[run_start], pts[(run_start + n - 1) % n], hit))
                    arc.endpoints_on_boundary.first = hit;
                if (boundary_hit(pts[run_end], pts[(run_end + 1) % n], hit))
                    arc.endpoints_on_boundary.second = hit;
                out.arcs.push_back(std::move(arc));
            }
        }

        double e = params.alpha * length_term * mult +
                   params.beta * curvature_term * mult;
        out.report.levels.push_back({static_cast<int>(ci), 0.0, length_term * mult,
                                     params.beta * curvature_term * mult, e});
        total += e;
    }
    out.report.total = total;
    return out;
}

}  // namespace elastica
