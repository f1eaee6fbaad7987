#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/rational.hpp"

namespace qtorus {

/// Orientation calibration for signed areas between paths: the signed area
/// S(p1, p2) is kappa times the shoelace area of the closed loop p1 * p2^-1
/// (anticlockwise positive). kappa = +1 reproduces the area-phase multiset
/// {3/2, 1/2, -1/2} of the rerouted (1,2)/(2,1) loops against the straight
/// (3,3) path; see calibration_self_check() in quantum_plane.hpp.
inline constexpr int kappa_area_sign = +1;

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }

    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b) {
    return a.x * b.y - a.y * b.x;
}

struct RatPoint {
    Rat x;
    Rat y;

    friend bool operator==(const RatPoint&, const RatPoint&) = default;
    friend auto operator<=>(const RatPoint&, const RatPoint&) = default;

    RatPoint operator+(const RatPoint& o) const { return {x + o.x, y + o.y}; }
    RatPoint operator-(const RatPoint& o) const { return {x - o.x, y - o.y}; }

    bool is_lattice() const { return x.is_integer() && y.is_integer(); }
    LatticePoint to_lattice() const {
        if (!is_lattice()) throw std::domain_error("point is not a lattice point");
        return {x.num(), y.num()};
    }

    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline RatPoint to_rat(const LatticePoint& p) { return {Rat(p.x), Rat(p.y)}; }

inline Rat cross(const RatPoint& a, const RatPoint& b) { return a.x * b.y - a.y * b.x; }

/// Piecewise-linear path: ordered vertex list with lattice endpoints.
/// Zero-length segments are normalized away on construction; interior
/// vertices may have rational coordinates.
class PLPath {
public:
    explicit PLPath(std::vector<RatPoint> vertices) : verts_(std::move(vertices)) {
        if (verts_.empty()) throw std::invalid_argument("path needs at least one vertex");
        normalize();
        if (!verts_.front().is_lattice() || !verts_.back().is_lattice())
            throw std::invalid_argument("path endpoints must be lattice points");
    }

    const std::vector<RatPoint>& vertices() const { return verts_; }
    std::size_t segment_count() const { return verts_.size() - 1; }

    const RatPoint& start() const { return verts_.front(); }
    const RatPoint& end() const { return verts_.back(); }

    /// Lift endpoint of the torus loop: last vertex as a lattice point.
    LatticePoint endpoint() const { return verts_.back().to_lattice(); }
    /// Homotopy class of the loop: endpoint minus start point.
    LatticePoint displacement() const {
        return verts_.back().to_lattice() - verts_.front().to_lattice();
    }

    bool is_closed() const { return verts_.front() == verts_.back(); }
    /// A path with at most one segment (the straight lifts p = (m,n)).
    bool is_straight() const { return verts_.size() <= 2; }

    RatPoint segment_start(std::size_t i) const { return verts_[i]; }
    RatPoint segment_dir(std::size_t i) const { return verts_[i + 1] - verts_[i]; }

    /// Point at local fraction f in [0,1] along segment i.
    RatPoint at(std::size_t i, const Rat& f) const {
        const RatPoint d = segment_dir(i);
        return {verts_[i].x + f * d.x, verts_[i].y + f * d.y};
    }

private:
    void normalize() {
        std::vector<RatPoint> out;
        out.reserve(verts_.size());
        for (const auto& v : verts_)
            if (out.empty() || !(out.back() == v)) out.push_back(v);
        verts_ = std::move(out);
    }

    std::vector<RatPoint> verts_;
};

/// Straight lift of the torus loop with homotopy class (m,n).
inline PLPath straight(std::int64_t m, std::int64_t n) {
    if (m == 0 && n == 0) return PLPath({{Rat(0), Rat(0)}});
    return PLPath({{Rat(0), Rat(0)}, {Rat(m), Rat(n)}});
}

inline PLPath path_reverse(const PLPath& p) {
    std::vector<RatPoint> v(p.vertices().rbegin(), p.vertices().rend());
    return PLPath(std::move(v));
}

inline PLPath path_translate(const PLPath& p, const LatticePoint& v) {
    std::vector<RatPoint> out;
    out.reserve(p.vertices().size());
    for (const auto& w : p.vertices()) out.push_back(w + to_rat(v));
    return PLPath(std::move(out));
}

inline PLPath path_concat(const PLPath& a, const PLPath& b) {
    if (!(a.end() == b.start()))
        throw std::domain_error("cannot concatenate: end of first path != start of second");
    std::vector<RatPoint> out = a.vertices();
    out.insert(out.end(), b.vertices().begin() + 1, b.vertices().end());
    return PLPath(std::move(out));
}

/// Shoelace (winding-weighted) area of a closed PL loop.
/// Anticlockwise simple loops give positive values.
inline Rat shoelace_area(const PLPath& loop) {
    if (!loop.is_closed()) throw std::domain_error("not a closed loop");
    Rat twice(0);
    const auto& v = loop.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) twice += cross(v[i], v[i + 1]);
    return twice / Rat(2);
}

/// Signed area enclosed between two paths sharing start and end points.
/// Computed as kappa * shoelace(p1 * p2^-1); this form satisfies the
/// composition laws S(p1,p3) = S(p1,p2) + S(p2,p3) and
/// S(p1 p2, p3 p4) = S(p1,p3) + S(p2,p4) exactly.
inline Rat signed_area_between(const PLPath& p1, const PLPath& p2) {
    if (!(p1.start() == p2.start()) || !(p1.end() == p2.end()))
        throw std::domain_error("signed area requires paths with common endpoints");
    std::vector<RatPoint> loop = p1.vertices();
    const auto& rv = p2.vertices();
    for (auto it = rv.rbegin(); it != rv.rend(); ++it)
        if (!(loop.back() == *it)) loop.push_back(*it);
    if (!(loop.back() == loop.front())) loop.push_back(loop.front());
    return Rat(kappa_area_sign) * shoelace_area(PLPath(std::move(loop)));
}

struct Segment {
    RatPoint a;
    RatPoint b;

    Segment(RatPoint a_, RatPoint b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) throw std::invalid_argument("zero-length segment");
    }

    RatPoint dir() const { return b - a; }

    RatPoint at(const Rat& t) const {
        const RatPoint d = dir();
        return {a.x + t * d.x, a.y + t * d.y};
    }

    /// Parameter of a point already known to lie on the segment's line.
    Rat param_of(const RatPoint& p) const {
        const RatPoint d = dir();
        return d.x.is_zero() ? (p.y - a.y) / d.y : (p.x - a.x) / d.x;
    }
};

struct SegmentHit {
    RatPoint point;
    Rat along_a;       // local parameter on the first segment, in [0,1]
    Rat along_b;       // local parameter on the second segment, in [0,1]
    bool transversal;  // direction vectors have nonzero cross product
};

/// Unique crossing of two segments, if any. Collinear segments that share
/// more than one point are rejected: the configuration has no well-defined
/// crossing. A parallel endpoint-to-endpoint touch is returned with
/// transversal = false.
inline std::optional<SegmentHit> segment_intersection(const Segment& s1, const Segment& s2) {
    const RatPoint d1 = s1.dir();
    const RatPoint d2 = s2.dir();
    const Rat denom = cross(d1, d2);
    const RatPoint w = s2.a - s1.a;

    if (denom.is_zero()) {
        if (!cross(d1, w).is_zero()) return std::nullopt;  // parallel, distinct lines
        // Collinear: project onto the common direction and compare 1D ranges.
        const Rat c2a = s1.param_of(s2.a);
        const Rat c2b = s1.param_of(s2.b);
        const Rat lo2 = c2a < c2b ? c2a : c2b;
        const Rat hi2 = c2a < c2b ? c2b : c2a;
        const Rat lo = Rat(0) > lo2 ? Rat(0) : lo2;
        const Rat hi = Rat(1) < hi2 ? Rat(1) : hi2;
        if (lo > hi) return std::nullopt;
        if (lo < hi) throw std::domain_error("non-transversal overlap");
        // Single shared point (endpoint touch).
        const RatPoint p = s1.at(lo);
        return SegmentHit{p, lo, s2.param_of(p), false};
    }

    const Rat r = cross(w, d2) / denom;
    const Rat u = cross(w, d1) / denom;
    if (r < Rat(0) || r > Rat(1) || u < Rat(0) || u > Rat(1)) return std::nullopt;
    return SegmentHit{s1.at(r), r, u, true};
}

}  // namespace qtorus
