#include "elastica/grid.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "elastica/errors.hpp"
#include "elastica/parallel.hpp"

namespace elastica {

GridFunction::GridFunction(int rows, int cols, double spacing, Vec2 origin)
    : rows_(rows), cols_(cols), spacing_(spacing), origin_(origin) {
    if (rows < 8 || cols < 8)
        throw ValidationError("GridFunction: grid must be at least 8x8");
    if (!(spacing > 0.0)) throw ValidationError("GridFunction: spacing must be > 0");
    values_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

GridFunction GridFunction::from_values(std::vector<double> values, int rows, int cols,
                                       double spacing, Vec2 origin) {
    GridFunction g(rows, cols, spacing, origin);
    if (values.size() != g.values_.size())
        throw ValidationError("GridFunction: values size mismatch");
    for (double v : values)
        if (!std::isfinite(v)) throw ValidationError("GridFunction: non-finite value");
    g.values_ = std::move(values);
    return g;
}

double GridFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double GridFunction::border_max() const {
    double m = value(0, 0);
    for (int j = 0; j < cols_; ++j)
        m = std::max({m, value(0, j), value(rows_ - 1, j)});
    for (int i = 0; i < rows_; ++i)
        m = std::max({m, value(i, 0), value(i, cols_ - 1)});
    return m;
}

double GridFunction::sample(const Vec2& p) const {
    double fx = std::clamp((p.x - origin_.x) / spacing_, 0.0, static_cast<double>(cols_ - 1));
    double fy = std::clamp((p.y - origin_.y) / spacing_, 0.0, static_cast<double>(rows_ - 1));
    int j = std::min(cols_ - 2, static_cast<int>(fx));
    int i = std::min(rows_ - 2, static_cast<int>(fy));
    double tx = fx - j, ty = fy - i;
    return (1 - tx) * (1 - ty) * value(i, j) + tx * (1 - ty) * value(i, j + 1) +
           (1 - tx) * ty * value(i + 1, j) + tx * ty * value(i + 1, j + 1);
}

GridFunction GridFunction::scaled(double factor, double offset) const {
    GridFunction g = *this;
    for (double& v : g.values_) v = v * factor + offset;
    return g;
}

namespace {

// Marching-squares plumbing. Edge keys: horizontal edge (i,j)-(i,j+1) has id
// 2*(i*cols+j); vertical edge (i,j)-(i+1,j) has id 2*(i*cols+j)+1.
struct MarchSeg {
    long exit_edge = -1;
    Vec2 entry_pt, exit_pt;
    bool used = false;
};

struct CellEdges {
    long key[4];   // B, R, T, L
    Vec2 pt[4];
    bool has[4];
};

constexpr int kB = 0, kR = 1, kT = 2, kL = 3;

}  // namespace

LevelSetExtraction extract_level_set(const GridFunction& u, double t,
                                     const ExtractionOptions& opts) {
    const int rows = u.rows(), cols = u.cols();
    const double h = u.spacing();

    for (int j = 0; j < cols; ++j)
        if (u.value(0, j) > t || u.value(rows - 1, j) > t)
            throw OpenContour("extract_level_set: {u > t} touches the grid border at t = " +
                              format_g9(t));
    for (int i = 0; i < rows; ++i)
        if (u.value(i, 0) > t || u.value(i, cols - 1) > t)
            throw OpenContour("extract_level_set: {u > t} touches the grid border at t = " +
                              format_g9(t));

    auto hkey = [cols](int i, int j) { return 2L * (static_cast<long>(i) * cols + j); };
    auto vkey = [cols](int i, int j) { return 2L * (static_cast<long>(i) * cols + j) + 1; };

    std::unordered_map<long, MarchSeg> segs;  // entry edge -> segment

    for (int i = 0; i + 1 < rows; ++i) {
        for (int j = 0; j + 1 < cols; ++j) {
            double v00 = u.value(i, j), v10 = u.value(i, j + 1);
            double v11 = u.value(i + 1, j + 1), v01 = u.value(i + 1, j);
            int mask = (v00 > t ? 1 : 0) | (v10 > t ? 2 : 0) | (v11 > t ? 4 : 0) |
                       (v01 > t ? 8 : 0);
            if (mask == 0 || mask == 15) continue;

            Vec2 p00 = u.point_at(i, j);
            CellEdges e{};
            auto interp = [t](double va, double vb) {
                double s = (t - va) / (vb - va);
                return std::clamp(s, 1e-9, 1.0 - 1e-9);
            };
            if ((v00 > t) != (v10 > t)) {
                e.has[kB] = true;
                e.key[kB] = hkey(i, j);
                e.pt[kB] = p00 + Vec2{interp(v00, v10) * h, 0.0};
            }
            if ((v10 > t) != (v11 > t)) {
                e.has[kR] = true;
                e.key[kR] = vkey(i, j + 1);
                e.pt[kR] = p00 + Vec2{h, interp(v10, v11) * h};
            }
            if ((v01 > t) != (v11 > t)) {
                e.has[kT] = true;
                e.key[kT] = hkey(i + 1, j);
                e.pt[kT] = p00 + Vec2{interp(v01, v11) * h, h};
            }
            if ((v00 > t) != (v01 > t)) {
                e.has[kL] = true;
                e.key[kL] = vkey(i, j);
                e.pt[kL] = p00 + Vec2{0.0, interp(v00, v01) * h};
            }

            // (entry, exit) pairs; {u > t} stays on the left of travel.
            int pairs[2][2] = {{-1, -1}, {-1, -1}};
            switch (mask) {
                case 1: pairs[0][0] = kB; pairs[0][1] = kL; break;
                case 2: pairs[0][0] = kR; pairs[0][1] = kB; break;
                case 3: pairs[0][0] = kR; pairs[0][1] = kL; break;
                case 4: pairs[0][0] = kT; pairs[0][1] = kR; break;
                case 6: pairs[0][0] = kT; pairs[0][1] = kB; break;
                case 7: pairs[0][0] = kT; pairs[0][1] = kL; break;
                case 8: pairs[0][0] = kL; pairs[0][1] = kT; break;
                case 9: pairs[0][0] = kB; pairs[0][1] = kT; break;
                case 11: pairs[0][0] = kR; pairs[0][1] = kT; break;
                case 12: pairs[0][0] = kL; pairs[0][1] = kR; break;
                case 13: pairs[0][0] = kB; pairs[0][1] = kR; break;
                case 14: pairs[0][0] = kL; pairs[0][1] = kB; break;
                case 5: {
                    bool center = 0.25 * (v00 + v10 + v11 + v01) > t;
                    if (center) {
                        pairs[0][0] = kB; pairs[0][1] = kR;
                        pairs[1][0] = kT; pairs[1][1] = kL;
                    } else {
                        pairs[0][0] = kB; pairs[0][1] = kL;
                        pairs[1][0] = kT; pairs[1][1] = kR;
                    }
                    break;
                }
                case 10: {
                    bool center = 0.25 * (v00 + v10 + v11 + v01) > t;
                    if (center) {
                        pairs[0][0] = kL; pairs[0][1] = kB;
                        pairs[1][0] = kR; pairs[1][1] = kT;
                    } else {
                        pairs[0][0] = kR; pairs[0][1] = kB;
                        pairs[1][0] = kL; pairs[1][1] = kT;
                    }
                    break;
                }
                default: break;
            }
            for (auto& pr : pairs) {
                if (pr[0] < 0) continue;
                MarchSeg s;
                s.entry_pt = e.pt[pr[0]];
                s.exit_pt = e.pt[pr[1]];
                s.exit_edge = e.key[pr[1]];
                segs.emplace(e.key[pr[0]], s);
            }
        }
    }

    LevelSetExtraction out;
    out.threshold = t;
    if (segs.empty()) return out;

    std::vector<Curve> curves;
    int open_fragments = 0;

    for (auto& [start_key, start_seg] : segs) {
        if (start_seg.used) continue;
        std::vector<Vec2> poly;
        long key = start_key;
        bool closed = false;
        while (true) {
            auto it = segs.find(key);
            if (it == segs.end()) break;  // no continuation: open fragment
            if (it->second.used) {
                closed = key == start_key;
                break;
            }
            it->second.used = true;
            poly.push_back(it->second.entry_pt);
            key = it->second.exit_edge;
        }
        if (!closed) {
            ++open_fragments;
            continue;
        }
        // Drop duplicate consecutive vertices from corner-grazing crossings.
        std::vector<Vec2> clean;
        for (const auto& p : poly)
            if (clean.empty() || dist(clean.back(), p) > 1e-12 * h) clean.push_back(p);
        while (clean.size() > 1 && dist(clean.front(), clean.back()) <= 1e-12 * h)
            clean.pop_back();
        if (clean.size() < 3) continue;

        // Seed check: a point just inside (left of travel) must satisfy u > t.
        std::size_t besti = 0;
        double bestlen = 0.0;
        for (std::size_t i = 0; i < clean.size(); ++i) {
            double l = dist(clean[i], clean[(i + 1) % clean.size()]);
            if (l > bestlen) {
                bestlen = l;
                besti = i;
            }
        }
        Vec2 a = clean[besti], b = clean[(besti + 1) % clean.size()];
        Vec2 mid = (a + b) / 2.0;
        Vec2 left = normalized(rot90(b - a));
        double off = 0.3 * h;
        if (u.sample(mid + left * off) <= t && u.sample(mid - left * off) > t)
            std::reverse(clean.begin(), clean.end());

        Curve raw = Curve::from_points(std::move(clean));
        double len = raw.total_length();
        int n_c = std::max(opts.min_samples, static_cast<int>(std::lround(len / h)));
        Curve c = resample_arclength(raw, n_c);

        std::vector<Vec2> pts = c.points();
        smooth_closed_polyline(pts, opts.smoothing_passes);
        c = Curve::from_uniform_samples(std::move(pts));

        // Curvature window sized to the jitter/bias tradeoff on grid-born
        // contours: wider strides average out sub-cell interpolation noise.
        int n = static_cast<int>(c.size());
        int w = opts.curvature_window;
        if (w <= 0) {
            double ds = c.total_length() / n;
            std::vector<double> rough =
                curvature_samples_windowed(c, std::clamp(n / 16, 2, 8));
            std::vector<double> mags(rough.size());
            for (std::size_t i = 0; i < rough.size(); ++i) mags[i] = std::abs(rough[i]);
            std::nth_element(mags.begin(), mags.begin() + mags.size() * 85 / 100, mags.end());
            double kref = std::max(mags[mags.size() * 85 / 100], 1e-12);
            w = static_cast<int>(std::lround(0.8 * std::sqrt(h / kref) / ds));
            w = std::clamp(w, 3, std::max(3, n / 8));
        }
        c.set_carried_curvature(curvature_samples_windowed(c, w));
        curves.push_back(std::move(c));
    }

    if (open_fragments > 0)
        throw OpenContour("extract_level_set: " + std::to_string(open_fragments) +
                          " open contour(s) at t = " + format_g9(t));

    std::vector<int> mults(curves.size(), 1);
    out.system = CurveSystem::from_parts(std::move(curves), std::move(mults));
    out.open_fragments = 0;
    return out;
}

EnergyReport coarea_energy(const GridFunction& u, const ElasticaParams& params,
                           int n_levels, int threads, const ExtractionOptions& opts) {
    params.validate();
    if (n_levels < 16) throw ValidationError("coarea_energy: n_levels must be >= 16");
    if (threads <= 0) threads = default_thread_count();

    EnergyReport rep;
    const double lo = u.min_value();
    const double hi = u.max_value();
    if (hi - lo <= 0.0) {
        for (int j = 0; j < n_levels; ++j) rep.levels.push_back({j, lo, 0.0, 0.0, 0.0});
        rep.total = 0.0;
        return rep;
    }
    const double dt = (hi - lo) / n_levels;

    struct Slot {
        EnergyReport::Level row;
        std::string error;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(n_levels));
    parallel_for(static_cast<std::size_t>(n_levels), threads, [&](std::size_t j) {
        double t = lo + (static_cast<double>(j) + 0.5) * dt;
        Slot& s = slots[j];
        s.row.level = static_cast<int>(j);
        s.row.t = t;
        try {
            LevelSetExtraction ex = extract_level_set(u, t, opts);
            EnergySplit e = ex.system.energy_split(params);
            s.row.length = ex.system.total_trace_length();
            s.row.curvature_term = e.curvature_term;
            s.row.energy = e.total();
        } catch (const OpenContour& oc) {
            s.error = oc.what();
        }
    });

    for (const auto& s : slots)
        if (!s.error.empty()) throw OpenContour(s.error);

    double total = 0.0;
    for (const auto& s : slots) {
        rep.levels.push_back(s.row);
        total += s.row.energy * dt;
    }
    rep.total = total;

    // Half-resolution comparison in t; a large gap signals a non-convergent
    // level integrand (e.g. 1/(1-t) tails).
    double coarse = 0.0;
    for (int j = 0; j < n_levels; j += 2) coarse += slots[j].row.energy * 2.0 * dt;
    if (total > 0.0 && std::abs(total - coarse) / total > 0.05)
        rep.flags.push_back("level_refinement_unstable");
    return rep;
}

double divergence_energy(const GridFunction& u, const ElasticaParams& params,
                         double grad_floor) {
    params.validate();
    const int rows = u.rows(), cols = u.cols();
    const double h = u.spacing();
    if (grad_floor <= 0.0)
        grad_floor = 1e-8 * (u.max_value() - u.min_value()) / h;

    std::vector<double> nx(static_cast<std::size_t>(rows) * cols, 0.0);
    std::vector<double> ny(static_cast<std::size_t>(rows) * cols, 0.0);
    std::vector<double> gm(static_cast<std::size_t>(rows) * cols, 0.0);

    auto idx = [cols](int i, int j) { return static_cast<std::size_t>(i) * cols + j; };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            double gx, gy;
            if (j == 0) gx = (u.value(i, 1) - u.value(i, 0)) / h;
            else if (j == cols - 1) gx = (u.value(i, cols - 1) - u.value(i, cols - 2)) / h;
            else gx = (u.value(i, j + 1) - u.value(i, j - 1)) / (2.0 * h);
            if (i == 0) gy = (u.value(1, j) - u.value(0, j)) / h;
            else if (i == rows - 1) gy = (u.value(rows - 1, j) - u.value(rows - 2, j)) / h;
            else gy = (u.value(i + 1, j) - u.value(i - 1, j)) / (2.0 * h);
            double g = std::hypot(gx, gy);
            gm[idx(i, j)] = g;
            double denom = std::max(g, grad_floor);
            nx[idx(i, j)] = gx / denom;
            ny[idx(i, j)] = gy / denom;
        }
    }

    // Differences of the normalized gradient fall back to the one-sided
    // stencil when a neighbour sits in the |grad u| = 0 region, so the
    // vector field is never differenced across the convention boundary.
    auto diff1d = [&](const std::vector<double>& f, std::size_t c, std::size_t m,
                      std::size_t p, bool m_ok, bool p_ok) {
        if (m_ok && p_ok) return (f[p] - f[m]) / (2.0 * h);
        if (p_ok) return (f[p] - f[c]) / h;
        if (m_ok) return (f[c] - f[m]) / h;
        return 0.0;
    };

    double acc = 0.0;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            double g = gm[idx(i, j)];
            double integrand;
            if (g <= grad_floor || i == 0 || j == 0 || i == rows - 1 || j == cols - 1) {
                integrand = params.alpha * g;
            } else {
                bool xm = gm[idx(i, j - 1)] > grad_floor;
                bool xp = gm[idx(i, j + 1)] > grad_floor;
                bool ym = gm[idx(i - 1, j)] > grad_floor;
                bool yp = gm[idx(i + 1, j)] > grad_floor;
                double div = diff1d(nx, idx(i, j), idx(i, j - 1), idx(i, j + 1), xm, xp) +
                             diff1d(ny, idx(i, j), idx(i - 1, j), idx(i + 1, j), ym, yp);
                integrand = g * (params.alpha +
                                 params.beta * std::pow(std::abs(div), params.p));
            }
            acc += integrand;
        }
    }
    return acc * h * h;
}

}  // namespace elastica
