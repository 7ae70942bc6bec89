#include "elastica/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "elastica/errors.hpp"

namespace elastica {

void LevelFamily::validate() const {
    if (thresholds.size() != systems.size())
        throw ValidationError("LevelFamily: thresholds/systems length mismatch");
    if (thresholds.empty()) return;  // the empty family
    for (std::size_t j = 1; j < thresholds.size(); ++j)
        if (!(thresholds[j] > thresholds[j - 1]))
            throw ValidationError("LevelFamily: thresholds must be strictly increasing");
    if (!(range.first <= thresholds.front()) || !(range.second >= thresholds.back()))
        throw ValidationError("LevelFamily: range must bracket the thresholds");
}

double LevelFamily::slab_width(std::size_t j) const {
    if (j + 1 < thresholds.size()) return thresholds[j + 1] - thresholds[j];
    return range.second - thresholds.back();
}

const CurveSystem* LevelFamily::system_at(double t) const {
    if (thresholds.empty() || t < thresholds.front() || t > range.second) return nullptr;
    auto it = std::upper_bound(thresholds.begin(), thresholds.end(), t);
    std::size_t j = static_cast<std::size_t>(it - thresholds.begin());
    if (j == 0) return nullptr;
    return &systems[j - 1];
}

BBox LevelFamily::bbox() const {
    BBox b;
    for (const auto& s : systems) b.expand(s.bbox());
    return b;
}

namespace {

double auto_dist_tol(const LevelFamily& phi) {
    std::vector<double> sp;
    for (const auto& s : phi.systems)
        for (const auto& c : s.curves())
            sp.push_back(c.total_length() / static_cast<double>(c.size()));
    if (sp.empty()) return 1e-9;
    std::sort(sp.begin(), sp.end());
    return 2.0 * sp[sp.size() / 2];
}

struct PairChecker {
    const LevelFamily& phi;
    NestingTolerances tol;
    BBox box;
    double cellw, cellh, near_band;
    std::vector<std::vector<std::uint8_t>> masks;          // per-slab interior
    std::vector<std::vector<std::uint8_t>> masks_dilated;  // closure approximation
    std::vector<SegmentGrid> grids;

    PairChecker(const LevelFamily& f, const NestingTolerances& t) : phi(f), tol(t) {
        box = phi.bbox();
        if (!box.valid()) {
            box.expand({0, 0});
            box.expand({1, 1});
        }
        box.pad(0.05 * std::max(box.width(), box.height()) + 1e-9);
        cellw = box.width() / tol.area_res;
        cellh = box.height() / tol.area_res;
        near_band = std::max(tol.dist_tol, 2.5 * std::max(cellw, cellh));
        masks.resize(phi.systems.size());
        masks_dilated.resize(phi.systems.size());
        grids.resize(phi.systems.size());
    }

    const std::vector<std::uint8_t>& mask(std::size_t j) {
        if (masks[j].empty())
            masks[j] = rasterize_interior(phi.systems[j], box, tol.area_res, tol.area_res);
        return masks[j];
    }
    const std::vector<std::uint8_t>& mask_dilated(std::size_t j) {
        if (masks_dilated[j].empty()) {
            masks_dilated[j] = mask(j);
            dilate_mask(masks_dilated[j], tol.area_res, tol.area_res, 1);
        }
        return masks_dilated[j];
    }
    const SegmentGrid& grid(std::size_t j) {
        if (!grids[j].valid() && !phi.systems[j].empty())
            grids[j] = SegmentGrid(phi.systems[j], near_band);
        return grids[j];
    }

    bool mask_at(const std::vector<std::uint8_t>& m, const Vec2& p) const {
        int ix = static_cast<int>((p.x - box.lo.x) / cellw);
        int iy = static_cast<int>((p.y - box.lo.y) / cellh);
        if (ix < 0 || iy < 0 || ix >= tol.area_res || iy >= tol.area_res) return false;
        return m[static_cast<std::size_t>(iy) * tol.area_res + ix] != 0;
    }

    // (i): slabs may touch tangentially but not cross.
    void check_crossing(std::size_t jlo, std::size_t jhi, ConditionVerdict& verdict) {
        const CurveSystem& lo = phi.systems[jlo];
        const CurveSystem& hi = phi.systems[jhi];
        if (lo.empty() || hi.empty()) return;
        ContactReport r = classify_contact(lo, hi, tol.dist_tol, tol.angle_tol);
        if (r.classification == ContactClass::crossing) {
            verdict.pass = false;
            for (const auto& w : r.witnesses) {
                if (w.angle <= tol.angle_tol) continue;
                verdict.witnesses.push_back({w.point, phi.thresholds[jlo], phi.thresholds[jhi],
                                             "curves cross at angle " + format_g9(w.angle)});
                if (verdict.witnesses.size() > 16) break;
            }
        }
    }

    // (ii): Int(upper) inside Int(lower): rasterized area difference plus the
    // open-interior test on the lower trace (a lower curve may not run
    // through the open upper interior even when the areas nest).
    void check_inclusion(std::size_t jlo, std::size_t jhi, ConditionVerdict& verdict) {
        const auto& mlo = mask(jlo);
        const auto& mhi = mask(jhi);
        long leak = 0;
        Vec2 leak_witness;
        for (std::size_t k = 0; k < mhi.size(); ++k) {
            if (mhi[k] && !mlo[k]) {
                if (leak == 0) {
                    int iy = static_cast<int>(k) / tol.area_res;
                    int ix = static_cast<int>(k) % tol.area_res;
                    leak_witness = {box.lo.x + (ix + 0.5) * cellw,
                                    box.lo.y + (iy + 0.5) * cellh};
                }
                ++leak;
            }
        }
        double leak_area = leak * cellw * cellh;
        if (leak_area > tol.area_tol_fraction * box.area()) {
            verdict.pass = false;
            verdict.witnesses.push_back({leak_witness, phi.thresholds[jlo], phi.thresholds[jhi],
                                         "Int(upper) leaks area " + format_g9(leak_area)});
        }

        const CurveSystem& lo = phi.systems[jlo];
        const CurveSystem& hi = phi.systems[jhi];
        if (hi.empty()) return;
        const SegmentGrid& ghi = grid(jhi);
        for (std::size_t ci = 0; ci < lo.size(); ++ci) {
            const auto& pts = lo.curve(ci).points();
            long bad = 0;
            Vec2 bad_witness;
            for (const auto& p : pts) {
                if (!mask_at(mhi, p)) continue;
                if (ghi.distance_within(p, near_band) <= near_band) continue;
                if (bad == 0) bad_witness = p;
                ++bad;
            }
            if (bad > tol.escape_fraction * static_cast<double>(pts.size())) {
                verdict.pass = false;
                verdict.witnesses.push_back({bad_witness, phi.thresholds[jlo],
                                             phi.thresholds[jhi],
                                             "lower curve enters the open upper interior"});
            }
        }
    }

    // (iii): upper arcs escaping the closure of Int(lower) must ride the
    // lower trace.
    void check_escape(std::size_t jlo, std::size_t jhi, ConditionVerdict& verdict) {
        const CurveSystem& hi = phi.systems[jhi];
        if (hi.empty()) return;
        const auto& mlo = mask_dilated(jlo);
        const SegmentGrid& glo = grid(jlo);
        bool lo_empty = phi.systems[jlo].empty();
        for (std::size_t ci = 0; ci < hi.size(); ++ci) {
            const auto& pts = hi.curve(ci).points();
            long bad = 0;
            Vec2 bad_witness;
            for (const auto& p : pts) {
                if (mask_at(mlo, p)) continue;  // inside the closure
                double d = lo_empty ? std::numeric_limits<double>::infinity()
                                    : glo.distance_within(p, near_band);
                if (d <= near_band) continue;  // rides the lower trace
                if (bad == 0) bad_witness = p;
                ++bad;
            }
            if (bad > tol.escape_fraction * static_cast<double>(pts.size())) {
                verdict.pass = false;
                verdict.witnesses.push_back({bad_witness, phi.thresholds[jlo],
                                             phi.thresholds[jhi],
                                             "upper arc escapes Int(lower) off the lower trace"});
            }
        }
    }
};

}  // namespace

NestingVerdict check_conditions(const LevelFamily& phi, const NestingTolerances& tol_in) {
    phi.validate();
    NestingVerdict verdict;
    if (phi.slab_count() < 2) {
        verdict.is_member = verdict.conditions_pass();
        return verdict;
    }
    NestingTolerances tol = tol_in;
    if (tol.dist_tol <= 0.0) tol.dist_tol = auto_dist_tol(phi);

    PairChecker checker(phi, tol);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j + 1 < phi.slab_count(); ++j) pairs.push_back({j, j + 1});
    std::size_t n_slabs = phi.slab_count();
    if (n_slabs >= 3) {
        // Rasterized nesting is not automatically transitive; audit a few
        // seeded long-range pairs as well.
        int extra = static_cast<int>(std::ceil(std::log2(static_cast<double>(n_slabs))));
        std::mt19937 rng(tol.seed);
        std::uniform_int_distribution<std::size_t> pick(0, n_slabs - 1);
        for (int e = 0; e < extra; ++e) {
            std::size_t a = pick(rng), b = pick(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (b - a < 2) continue;
            pairs.push_back({a, b});
        }
    }

    for (auto [jlo, jhi] : pairs) {
        checker.check_crossing(jlo, jhi, verdict.condition_i);
        checker.check_inclusion(jlo, jhi, verdict.condition_ii);
        checker.check_escape(jlo, jhi, verdict.condition_iii);
    }
    verdict.is_member = verdict.conditions_pass();
    return verdict;
}

NestingVerdict check_membership(const LevelFamily& phi, const GridFunction& u,
                                const NestingTolerances& tol_in) {
    phi.validate();
    NestingTolerances tol = tol_in;
    if (tol.dist_tol <= 0.0) tol.dist_tol = auto_dist_tol(phi);
    if (tol.match_dist_tol <= 0.0)
        tol.match_dist_tol = std::max(tol.dist_tol, 2.5 * u.spacing());

    const double umin = u.min_value(), umax = u.max_value();
    for (double t : phi.thresholds)
        if (!(t > umin && t < umax))
            throw ValidationError("check_membership: threshold outside (min u, max u)");

    NestingVerdict verdict = check_conditions(phi, tol);

    // Interior masks are compared at the grid's own nodes (cell centers of
    // the half-shifted box), where u is defined exactly.
    const int nx = u.cols(), ny = u.rows();
    const double h = u.spacing();
    BBox node_box;
    node_box.expand(u.origin() - Vec2{h / 2, h / 2});
    node_box.expand(u.point_at(ny - 1, nx - 1) + Vec2{h / 2, h / 2});

    for (std::size_t j = 0; j < phi.slab_count(); ++j) {
        double t = phi.thresholds[j];
        LevelMatch match;
        match.t = t;

        auto mphi = rasterize_interior(phi.systems[j], node_box, nx, ny);
        long diff = 0;
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix) {
                bool in_u = u.value(iy, ix) > t;
                bool in_phi = mphi[static_cast<std::size_t>(iy) * nx + ix] != 0;
                if (in_u != in_phi) ++diff;
            }
        match.sym_diff_area = diff * h * h;
        match.area_pass = match.sym_diff_area <= tol.area_tol_fraction * node_box.area();

        LevelSetExtraction ex = extract_level_set(u, t);
        if (!ex.system.empty()) {
            if (phi.systems[j].empty()) {
                match.covered_fraction = 0.0;
            } else {
                SegmentGrid g(phi.systems[j], tol.match_dist_tol);
                long total = 0, covered = 0;
                for (const auto& c : ex.system.curves())
                    for (const auto& p : c.points()) {
                        ++total;
                        if (g.distance_within(p, tol.match_dist_tol) <= tol.match_dist_tol)
                            ++covered;
                    }
                match.covered_fraction =
                    total > 0 ? static_cast<double>(covered) / total : 1.0;
            }
        }
        match.cover_pass = match.covered_fraction >= tol.cover_fraction;
        verdict.level_matches.push_back(match);
    }

    verdict.is_member = verdict.conditions_pass();
    for (const auto& m : verdict.level_matches)
        if (!m.area_pass || !m.cover_pass) verdict.is_member = false;
    return verdict;
}

EnergyReport family_energy_G(const LevelFamily& phi, const ElasticaParams& params) {
    phi.validate();
    params.validate();
    EnergyReport rep;
    double total = 0.0;
    for (std::size_t j = 0; j < phi.slab_count(); ++j) {
        EnergySplit e = phi.systems[j].energy_split(params);
        rep.levels.push_back({static_cast<int>(j), phi.thresholds[j],
                              phi.systems[j].total_trace_length(), e.curvature_term,
                              e.total()});
        total += phi.slab_width(j) * e.total();
    }
    rep.total = total;
    return rep;
}

CandidateRanking compare_candidates(const std::vector<LevelFamily>& candidates,
                                    const GridFunction& u, const ElasticaParams& params,
                                    const NestingTolerances& tol) {
    if (candidates.empty())
        throw ValidationError("compare_candidates: need at least one candidate");
    CandidateRanking ranking;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        CandidateRanking::Entry e;
        e.index = static_cast<int>(i);
        e.verdict = check_membership(candidates[i], u, tol);
        e.member = e.verdict.is_member;
        e.energy = family_energy_G(candidates[i], params).total;
        ranking.entries.push_back(std::move(e));
    }
    std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                     [](const auto& a, const auto& b) {
                         if (a.member != b.member) return a.member;
                         return a.energy < b.energy;
                     });
    if (ranking.entries.empty() || !ranking.entries.front().member)
        throw NoValidCandidate("compare_candidates: no candidate is a member of A(u)");
    ranking.best_index = ranking.entries.front().index;
    return ranking;
}

void Tabulated1D::validate() const {
    if (ts.size() != values.size() || ts.size() < 2)
        throw ValidationError("Tabulated1D: need two or more samples");
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!(ts[i] > ts[i - 1]))
            throw ValidationError("Tabulated1D: ts must be strictly increasing");
}

double Tabulated1D::integral() const { return integral_on(ts.front(), ts.back()); }

double Tabulated1D::integral_on(double a, double b) const {
    if (!(b > a)) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        double s0 = ts[i], s1 = ts[i + 1];
        double lo = std::max(a, s0), hi = std::min(b, s1);
        if (!(hi > lo)) continue;
        double f0 = values[i], f1 = values[i + 1];
        auto lerp = [&](double x) { return f0 + (f1 - f0) * (x - s0) / (s1 - s0); };
        acc += (hi - lo) * 0.5 * (lerp(lo) + lerp(hi));
    }
    return acc;
}

DyadicAverages dyadic_average(const Tabulated1D& f, int depth) {
    f.validate();
    if (depth < 0 || depth > 20)
        throw ValidationError("dyadic_average: depth must be in [0, 20]");
    DyadicAverages out;
    out.depth = depth;
    const double w = std::ldexp(1.0, -depth);
    long k_min = static_cast<long>(std::floor(f.ts.front() / w));
    long k_max = static_cast<long>(std::ceil(f.ts.back() / w)) - 1;
    for (long k = k_min; k <= k_max; ++k) {
        double a = k * w, b = (k + 1) * w;
        out.values[k] = f.integral_on(a, b) / w;
    }
    return out;
}

}  // namespace elastica
