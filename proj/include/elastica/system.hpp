#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/geometry.hpp"

namespace elastica {

// Finite family of closed curves with per-curve integer multiplicities.
// Pointwise multiplicity emerges from coincident traces.
class CurveSystem {
  public:
    CurveSystem() = default;  // the empty system (Phi(t) = empty set)

    static CurveSystem from_parts(std::vector<Curve> curves, std::vector<int> multiplicities);
    static CurveSystem single(Curve c, int multiplicity = 1);

    bool empty() const { return curves_.empty(); }
    std::size_t size() const { return curves_.size(); }
    const std::vector<Curve>& curves() const { return curves_; }
    const Curve& curve(std::size_t i) const { return curves_[i]; }
    const std::vector<int>& multiplicities() const { return mults_; }
    int multiplicity(std::size_t i) const { return mults_[i]; }

    BBox bbox() const;
    double total_trace_length() const;
    // Median vertex spacing across all curves; used for tolerance defaults.
    double median_spacing() const;

    // Sum over curves of multiplicity * W(curve).
    EnergySplit energy_split(const ElasticaParams& params) const;
    double energy(const ElasticaParams& params) const;

  private:
    std::vector<Curve> curves_;
    std::vector<int> mults_;
};

enum class ContactClass { disjoint, tangential_contact, crossing };

std::string to_string(ContactClass c);

struct ContactWitness {
    Vec2 point;
    int curve_a = 0;   // index in system a
    int curve_b = 0;   // index in system b
    double angle = 0.0;     // acute angle between segment lines, radians
    double distance = 0.0;  // closest approach of the witnessing pair
};

struct ContactReport {
    ContactClass classification = ContactClass::disjoint;
    std::vector<ContactWitness> witnesses;
};

// Uniform hash grid over the segments of a system, for proximity queries.
class SegmentGrid {
  public:
    SegmentGrid() = default;
    explicit SegmentGrid(const CurveSystem& system, double cell_hint = 0.0);

    bool valid() const { return !segs_.empty(); }
    // Distance from p to the trace, exact if <= cap, otherwise > cap
    // (returns +inf when nothing lies within cap).
    double distance_within(const Vec2& p, double cap) const;

    struct Seg {
        Vec2 a, b;
        int curve;
        int index;
    };
    const std::vector<Seg>& segments() const { return segs_; }
    std::vector<int> segments_near(const Vec2& p, double radius) const;

  private:
    std::vector<Seg> segs_;
    std::vector<std::vector<int>> cells_;
    BBox box_;
    double cell_ = 1.0;
    int nx_ = 0, ny_ = 0;
    int cell_index(int ix, int iy) const { return iy * nx_ + ix; }
};

// Total winding index of `point` with respect to the system (signed angle
// sums, multiplicity-weighted). Throws PointOnTrace when the point lies
// within dist_tol of the trace.
int winding_index(const Vec2& point, const CurveSystem& system, double dist_tol = 1e-9);

// True iff the winding index is odd (Int of the system).
bool interior_membership(const Vec2& point, const CurveSystem& system,
                         double dist_tol = 1e-9);

double distance_to_trace(const Vec2& point, const CurveSystem& system);

// Row-major parity mask of the interior on an nx x ny cell grid over bbox
// (cell centers). Equivalent to interior_membership at every center but
// computed by per-row crossing accumulation.
std::vector<std::uint8_t> rasterize_interior(const CurveSystem& system, const BBox& bbox,
                                             int nx, int ny);

// 8-neighbourhood dilation, `rounds` cells.
void dilate_mask(std::vector<std::uint8_t>& mask, int nx, int ny, int rounds = 1);

// Area of the interior by rasterization on a resolution x resolution grid.
// Cells whose center lies within boundary_tol of a row crossing count as
// boundary and are excluded.
double interior_area(const CurveSystem& system, const BBox& bbox, int resolution,
                     double boundary_tol = 0.0);

struct ContactTolerances {
    double dist_tol = 0.0;   // 0 = auto: 2 x median sample spacing
    double angle_tol = 0.15; // radians
};

// Worst contact classification between two systems (or within one when
// a and b are the same object), with one witness per proximate run.
ContactReport classify_contact(const CurveSystem& a, const CurveSystem& b,
                               double dist_tol, double angle_tol);
ContactReport classify_contact(const CurveSystem& a, const CurveSystem& b,
                               const ContactTolerances& tol = {});

}  // namespace elastica
