#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qtorus/geometry.hpp"

namespace qtorus {

/// Closed simple polygon with lattice vertices. The vertex list is the
/// boundary cycle; the closing edge back to the first vertex is implicit.
class Polygon {
public:
    explicit Polygon(std::vector<LatticePoint> vertices) : verts_(std::move(vertices)) {
        if (verts_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
        for (std::size_t i = 0; i < verts_.size(); ++i)
            if (verts_[i] == verts_[(i + 1) % verts_.size()])
                throw std::invalid_argument("polygon has a zero-length edge");
        check_simple();
    }

    const std::vector<LatticePoint>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    LatticePoint edge_start(std::size_t i) const { return verts_[i]; }
    LatticePoint edge_end(std::size_t i) const { return verts_[(i + 1) % verts_.size()]; }

    PLPath boundary_loop() const {
        std::vector<RatPoint> v;
        v.reserve(verts_.size() + 1);
        for (const auto& p : verts_) v.push_back(to_rat(p));
        v.push_back(to_rat(verts_.front()));
        return PLPath(std::move(v));
    }

private:
    // Non-adjacent edges must not meet; adjacent edges only at the shared vertex.
    void check_simple() const {
        const std::size_t n = verts_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
                Segment si(to_rat(edge_start(i)), to_rat(edge_end(i)));
                Segment sj(to_rat(edge_start(j)), to_rat(edge_end(j)));
                std::optional<SegmentHit> hit;
                try {
                    hit = segment_intersection(si, sj);
                } catch (const std::domain_error&) {
                    throw std::invalid_argument("non-simple polygon: overlapping edges");
                }
                if (!hit) continue;
                if (!adjacent) throw std::invalid_argument("non-simple polygon: edges cross");
                const RatPoint shared = to_rat(j == i + 1 ? verts_[j] : verts_[0]);
                if (!(hit->point == shared))
                    throw std::invalid_argument("non-simple polygon: adjacent edges cross");
            }
        }
    }

    std::vector<LatticePoint> verts_;
};

inline bool point_on_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    if (!cross(b - a, p - a).is_zero()) return false;
    const Rat lox = a.x < b.x ? a.x : b.x;
    const Rat hix = a.x < b.x ? b.x : a.x;
    const Rat loy = a.y < b.y ? a.y : b.y;
    const Rat hiy = a.y < b.y ? b.y : a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

inline bool on_boundary(const Polygon& poly, const LatticePoint& p) {
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (point_on_segment(to_rat(p), to_rat(poly.edge_start(i)), to_rat(poly.edge_end(i))))
            return true;
    return false;
}

/// Strict interior test by even-odd ray crossing, exact arithmetic.
/// The point must not lie on the boundary.
inline bool strictly_inside(const Polygon& poly, const LatticePoint& p) {
    bool inside = false;
    const Rat px(p.x), py(p.y);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RatPoint a = to_rat(poly.edge_start(i));
        const RatPoint b = to_rat(poly.edge_end(i));
        // Edge straddles the horizontal line through p (half-open in y).
        if ((a.y > py) == (b.y > py)) continue;
        // x-coordinate of the edge at height p.y, compared exactly.
        const Rat xhit = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
        if (px < xhit) inside = !inside;
    }
    return inside;
}

struct LatticeCount {
    std::vector<LatticePoint> interior;
    std::vector<LatticePoint> boundary;
};

/// Exact enumeration of interior and boundary lattice points by a
/// bounding-box scan.
inline LatticeCount lattice_points(const Polygon& poly) {
    std::int64_t xlo = poly.vertices()[0].x, xhi = xlo;
    std::int64_t ylo = poly.vertices()[0].y, yhi = ylo;
    for (const auto& v : poly.vertices()) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
    }
    LatticeCount out;
    for (std::int64_t x = xlo; x <= xhi; ++x) {
        for (std::int64_t y = ylo; y <= yhi; ++y) {
            const LatticePoint p{x, y};
            if (on_boundary(poly, p))
                out.boundary.push_back(p);
            else if (strictly_inside(poly, p))
                out.interior.push_back(p);
        }
    }
    return out;
}

/// Area by lattice-point counting: I + B/2 - 1. Agrees with the absolute
/// shoelace area for every simple lattice polygon.
inline Rat pick_area(const Polygon& poly) {
    const LatticeCount c = lattice_points(poly);
    return Rat(static_cast<std::int64_t>(c.interior.size())) +
           Rat(static_cast<std::int64_t>(c.boundary.size()), 2) - Rat(1);
}

}  // namespace qtorus
