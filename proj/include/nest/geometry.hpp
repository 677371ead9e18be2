#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nest {

/// Geometric tolerance in instance length units. All equality, collinearity
/// and sidedness tests are done against this value.
inline constexpr double kEpsGeom = 1e-9;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateGeometry : Error { using Error::Error; };
struct InvalidGeometry : Error { using Error::Error; };
struct InvalidWindow : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct InvalidInstance : Error { using Error::Error; };
struct InfeasibleInstance : Error { using Error::Error; };
struct BackendError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator-() const { return {-x, -y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

/// Twice the signed area of triangle (a,b,c); > 0 for a counter-clockwise turn.
inline double orient(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a);
}

inline bool points_equal(const Point& a, const Point& b, double eps = kEpsGeom) {
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

class Polygon;
inline double signed_area(const Polygon& poly);

/// Simple polygon with a counter-clockwise boundary. Construction normalizes
/// the vertex list (drops duplicate and collinear vertices) and validates
/// simplicity and orientation; an invalid boundary throws.
class Polygon {
  public:
    Polygon() = default;

    explicit Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
        normalize();
        validate();
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }

    Point vertex_cyclic(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    bool is_convex(double eps = kEpsGeom) const {
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) < -eps)
                return false;
        }
        return true;
    }

    Polygon translated(const Point& t) const {
        std::vector<Point> v = vertices_;
        for (auto& p : v) p = p + t;
        return Polygon(std::move(v));
    }

    /// Point reflection through the origin; the boundary stays counter-clockwise.
    Polygon negated() const {
        std::vector<Point> v;
        v.reserve(vertices_.size());
        for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) v.push_back(-*it);
        return Polygon(std::move(v));
    }

    void bounding_box(Point& lo, Point& hi) const {
        lo = hi = vertices_.front();
        for (const auto& p : vertices_) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
    }

  private:
    std::vector<Point> vertices_;

    void normalize() {
        for (const auto& p : vertices_)
            if (!p.finite()) throw InvalidGeometry("polygon vertex is not finite");
        // drop consecutive duplicates
        std::vector<Point> out;
        for (const auto& p : vertices_) {
            if (out.empty() || !points_equal(out.back(), p)) out.push_back(p);
        }
        while (out.size() > 1 && points_equal(out.front(), out.back())) out.pop_back();
        // drop collinear middle vertices until stable
        bool changed = true;
        while (changed && out.size() >= 3) {
            changed = false;
            std::vector<Point> next;
            const std::size_t n = out.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Point& prev = out[(i + n - 1) % n];
                const Point& cur = out[i];
                const Point& nxt = out[(i + 1) % n];
                if (std::abs(orient(prev, cur, nxt)) <= kEpsGeom &&
                    dot(cur - prev, nxt - cur) > 0.0) {
                    changed = true;  // straight-through vertex
                    continue;
                }
                next.push_back(cur);
            }
            out = std::move(next);
        }
        vertices_ = std::move(out);
    }

    void validate() {
        if (vertices_.size() < 3)
            throw InvalidGeometry("polygon needs at least 3 distinct vertices");
        const double area2 = twice_signed_area();
        if (std::abs(area2) <= kEpsGeom)
            throw DegenerateGeometry("polygon is degenerate (zero area)");
        if (area2 < 0.0) std::reverse(vertices_.begin(), vertices_.end());
        if (!is_simple()) throw InvalidGeometry("polygon boundary self-intersects");
    }

    double twice_signed_area() const {
        double s = 0.0;
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) s += cross(vertices_[i], vertices_[(i + 1) % n]);
        return s;
    }

    bool is_simple() const {
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                // skip edges sharing a vertex
                if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
                if (segments_properly_intersect(vertices_[i], vertices_[(i + 1) % n],
                                                vertices_[j], vertices_[(j + 1) % n]))
                    return false;
            }
        }
        return true;
    }

    static bool segments_properly_intersect(const Point& a, const Point& b, const Point& c,
                                            const Point& d) {
        const double d1 = orient(c, d, a);
        const double d2 = orient(c, d, b);
        const double d3 = orient(a, b, c);
        const double d4 = orient(a, b, d);
        return ((d1 > kEpsGeom && d2 < -kEpsGeom) || (d1 < -kEpsGeom && d2 > kEpsGeom)) &&
               ((d3 > kEpsGeom && d4 < -kEpsGeom) || (d3 < -kEpsGeom && d4 > kEpsGeom));
    }
};

/// Shoelace signed area; positive iff the boundary is counter-clockwise.
inline double signed_area(const Polygon& poly) {
    if (poly.size() < 3) throw DegenerateGeometry("signed_area: fewer than 3 vertices");
    double s = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return 0.5 * s;
}

/// Shoelace on a raw CCW/CW vertex ring (no Polygon validation).
inline double signed_area(const std::vector<Point>& ring) {
    double s = 0.0;
    const std::size_t n = ring.size();
    if (n < 3) return 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
    return 0.5 * s;
}

/// One convex part of a piece; `part_index` is the 1-based index f within the piece.
struct ConvexPart {
    Polygon polygon;
    int part_index = 1;

    ConvexPart() = default;
    ConvexPart(Polygon p, int index) : polygon(std::move(p)), part_index(index) {
        if (!polygon.is_convex()) throw InvalidGeometry("convex part is not convex");
    }
};

/// Closed real interval with a distinguished EMPTY value.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = false;

    Interval() = default;
    Interval(double l, double h) : lo(l), hi(h) {
        if (l > h) throw Error("interval lo > hi");
    }

    static Interval make_empty() {
        Interval iv;
        iv.empty = true;
        return iv;
    }

    double width() const { return empty ? 0.0 : hi - lo; }
    bool contains(double v, double eps = kEpsGeom) const {
        return !empty && v >= lo - eps && v <= hi + eps;
    }

    Interval operator+(const Interval& o) const {
        if (empty || o.empty) return make_empty();
        return Interval(lo + o.lo, hi + o.hi);
    }

    /// Intersection; empty when the intervals are separated by more than eps.
    Interval intersect(const Interval& o, double eps = kEpsGeom) const {
        if (empty || o.empty) return make_empty();
        const double l = std::max(lo, o.lo);
        const double h = std::min(hi, o.hi);
        if (l > h + eps) return make_empty();
        return Interval(std::min(l, h), std::max(l, h));
    }
};

// ---------------------------------------------------------------------------
// point / segment / polygon predicates
// ---------------------------------------------------------------------------

/// True iff p is strictly inside the convex CCW polygon (boundary excluded,
/// within eps).
inline bool point_strictly_inside_convex(const Point& p, const Polygon& poly,
                                         double eps = kEpsGeom) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(poly[i], poly[(i + 1) % n], p) <= eps) return false;
    }
    return true;
}

/// True iff p is inside or on the boundary of the convex CCW polygon.
inline bool point_in_convex(const Point& p, const Polygon& poly, double eps = kEpsGeom) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orient(poly[i], poly[(i + 1) % n], p) < -eps) return false;
    }
    return true;
}

namespace detail {
inline void project_onto_axis(const Polygon& poly, const Point& axis, double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (const auto& v : poly.vertices()) {
        const double d = dot(v, axis);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
}
}  // namespace detail

/// True iff the interiors of two convex polygons intersect (separating-axis
/// test). Touching boundaries do not count as overlap.
inline bool polygons_overlap(const Polygon& p, const Polygon& q, double eps = kEpsGeom) {
    if (!p.is_convex() || !q.is_convex())
        throw InvalidGeometry("polygons_overlap expects convex inputs");
    const auto test_axes = [&](const Polygon& poly) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point e = poly[(i + 1) % n] - poly[i];
            const Point axis{-e.y, e.x};  // outward-independent normal
            const double len = std::hypot(axis.x, axis.y);
            if (len <= eps) continue;
            const Point unit{axis.x / len, axis.y / len};
            double plo, phi, qlo, qhi;
            detail::project_onto_axis(p, unit, plo, phi);
            detail::project_onto_axis(q, unit, qlo, qhi);
            if (phi <= qlo + eps || qhi <= plo + eps) return true;  // separated or touching
        }
        return false;
    };
    if (test_axes(p) || test_axes(q)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// convex clipping
// ---------------------------------------------------------------------------

/// Half-plane {p : cross(b-a, p-a) >= -eps}, i.e. the closed left side of the
/// directed line a->b. Clips a convex ring (Sutherland-Hodgman step).
inline std::vector<Point> clip_ring_left_of(const std::vector<Point>& ring, const Point& a,
                                            const Point& b, double eps = kEpsGeom) {
    std::vector<Point> out;
    const std::size_t n = ring.size();
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = ring[i];
        const Point& nxt = ring[(i + 1) % n];
        const double dc = orient(a, b, cur);
        const double dn = orient(a, b, nxt);
        if (dc >= -eps) out.push_back(cur);
        if ((dc > eps && dn < -eps) || (dc < -eps && dn > eps)) {
            const double t = dc / (dc - dn);
            out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
        }
    }
    return out;
}

/// Intersection of two convex polygons as a raw ring (possibly empty or
/// degenerate); callers decide whether to promote to Polygon.
inline std::vector<Point> convex_intersection_ring(const Polygon& p, const Polygon& q,
                                                   double eps = kEpsGeom) {
    std::vector<Point> ring(p.vertices().begin(), p.vertices().end());
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n && !ring.empty(); ++i) {
        ring = clip_ring_left_of(ring, q[i], q[(i + 1) % n], eps);
    }
    return ring;
}

inline double convex_intersection_area(const Polygon& p, const Polygon& q,
                                       double eps = kEpsGeom) {
    const auto ring = convex_intersection_ring(p, q, eps);
    return ring.size() < 3 ? 0.0 : std::abs(signed_area(ring));
}

/// Moves every edge of a convex polygon inward by `margin`; returns an empty
/// ring when the polygon collapses.
inline std::vector<Point> shrink_convex(const Polygon& poly, double margin,
                                        double eps = kEpsGeom) {
    std::vector<Point> ring(poly.vertices().begin(), poly.vertices().end());
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n && !ring.empty(); ++i) {
        const Point a = poly[i];
        const Point b = poly[(i + 1) % n];
        const Point e = b - a;
        const double len = std::hypot(e.x, e.y);
        if (len <= eps) continue;
        const Point inward{-e.y / len, e.x / len};  // left normal of CCW edge
        ring = clip_ring_left_of(ring, a + inward * margin, b + inward * margin, eps);
    }
    if (ring.size() < 3 || std::abs(signed_area(ring)) <= eps) ring.clear();
    return ring;
}

// ---------------------------------------------------------------------------
// convex decomposition (triangulate, then merge while convex)
// ---------------------------------------------------------------------------

namespace detail {

inline bool point_in_triangle(const Point& p, const Point& a, const Point& b, const Point& c,
                              double eps) {
    return orient(a, b, p) >= -eps && orient(b, c, p) >= -eps && orient(c, a, p) >= -eps;
}

/// Ear-clipping triangulation of a simple CCW polygon. Returns triangles as
/// index triples into the input vertex list.
inline std::vector<std::array<int, 3>> ear_clip(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::array<int, 3>> tris;
    int guard = 0;
    while (idx.size() > 3) {
        const int m = static_cast<int>(idx.size());
        bool clipped = false;
        for (int k = 0; k < m; ++k) {
            const int ip = idx[(k + m - 1) % m];
            const int ic = idx[k];
            const int in = idx[(k + 1) % m];
            const Point &a = pts[ip], &b = pts[ic], &c = pts[in];
            if (orient(a, b, c) <= kEpsGeom) continue;  // reflex or flat corner
            bool ear = true;
            for (int j : idx) {
                if (j == ip || j == ic || j == in) continue;
                if (point_in_triangle(pts[j], a, b, c, -kEpsGeom)) {
                    ear = false;
                    break;
                }
            }
            if (!ear) continue;
            tris.push_back({ip, ic, in});
            idx.erase(idx.begin() + k);
            clipped = true;
            break;
        }
        if (!clipped) {
            if (++guard > 2) throw InvalidGeometry("triangulation failed; polygon not simple?");
            // tolerate slightly flat ears on retry
            for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
                const int m2 = static_cast<int>(idx.size());
                const int ip = idx[(k + m2 - 1) % m2];
                const int ic = idx[k];
                const int in = idx[(k + 1) % m2];
                if (orient(pts[ip], pts[ic], pts[in]) > -kEpsGeom) {
                    tris.push_back({ip, ic, in});
                    idx.erase(idx.begin() + k);
                    break;
                }
            }
        }
    }
    tris.push_back({idx[0], idx[1], idx[2]});
    return tris;
}

struct Face {
    std::vector<int> ring;  // vertex indices, CCW
    bool alive = true;
};

inline bool merge_preserves_convexity(const std::vector<Point>& pts, const std::vector<int>& ring) {
    const int n = static_cast<int>(ring.size());
    for (int i = 0; i < n; ++i) {
        if (orient(pts[ring[i]], pts[ring[(i + 1) % n]], pts[ring[(i + 2) % n]]) < -kEpsGeom)
            return false;
    }
    return true;
}

/// Joins two faces sharing the directed edge (u,v) in `a` / (v,u) in `b`,
/// dropping collinear joints.
inline std::vector<int> merge_rings(const std::vector<Point>& pts, const std::vector<int>& a,
                                    const std::vector<int>& b, int u, int v) {
    std::vector<int> out;
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    int sa = -1, sb = -1;
    for (int i = 0; i < na; ++i)
        if (a[i] == u && a[(i + 1) % na] == v) sa = i;
    for (int i = 0; i < nb; ++i)
        if (b[i] == v && b[(i + 1) % nb] == u) sb = i;
    if (sa < 0 || sb < 0) return out;
    for (int i = (sa + 1) % na; i != sa; i = (i + 1) % na) out.push_back(a[i]);
    out.push_back(a[sa]);  // ends at u
    // splice b's chain from u..v exclusive of shared edge
    for (int i = (sb + 2) % nb; i != sb; i = (i + 1) % nb) out.push_back(b[i]);
    // remove collinear joints
    std::vector<int> cleaned;
    const int n = static_cast<int>(out.size());
    for (int i = 0; i < n; ++i) {
        const Point& prev = pts[out[(i + n - 1) % n]];
        const Point& cur = pts[out[i]];
        const Point& nxt = pts[out[(i + 1) % n]];
        if (std::abs(orient(prev, cur, nxt)) <= kEpsGeom && dot(cur - prev, nxt - cur) > 0.0)
            continue;
        cleaned.push_back(out[i]);
    }
    return cleaned;
}

}  // namespace detail

/// Steiner-point-free convex partition: ear-clip triangulation followed by a
/// deterministic greedy merge of adjacent faces while the union stays convex
/// (Hertel-Mehlhorn style). Lowest-index faces are merged first.
inline std::vector<ConvexPart> convex_decompose(const Polygon& polygon) {
    if (polygon.is_convex()) return {ConvexPart(polygon, 1)};

    const std::vector<Point>& pts = polygon.vertices();
    auto tris = detail::ear_clip(pts);
    std::vector<detail::Face> faces;
    faces.reserve(tris.size());
    for (const auto& t : tris) faces.push_back({{t[0], t[1], t[2]}, true});

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t fi = 0; fi < faces.size() && !merged; ++fi) {
            if (!faces[fi].alive) continue;
            for (std::size_t fj = fi + 1; fj < faces.size() && !merged; ++fj) {
                if (!faces[fj].alive) continue;
                const auto& ra = faces[fi].ring;
                const auto& rb = faces[fj].ring;
                const int na = static_cast<int>(ra.size());
                for (int e = 0; e < na && !merged; ++e) {
                    const int u = ra[e], v = ra[(e + 1) % na];
                    const int nb = static_cast<int>(rb.size());
                    bool shared = false;
                    for (int e2 = 0; e2 < nb; ++e2)
                        if (rb[e2] == v && rb[(e2 + 1) % nb] == u) shared = true;
                    if (!shared) continue;
                    auto joined = detail::merge_rings(pts, ra, rb, u, v);
                    if (joined.size() >= 3 && detail::merge_preserves_convexity(pts, joined)) {
                        faces[fi].ring = std::move(joined);
                        faces[fj].alive = false;
                        merged = true;
                    }
                }
            }
        }
    }

    std::vector<ConvexPart> parts;
    int index = 1;
    for (const auto& f : faces) {
        if (!f.alive) continue;
        std::vector<Point> ring;
        ring.reserve(f.ring.size());
        for (int i : f.ring) ring.push_back(pts[i]);
        parts.emplace_back(Polygon(std::move(ring)), index++);
    }
    return parts;
}

// ---------------------------------------------------------------------------
// convex Minkowski sum / no-fit polygon
// ---------------------------------------------------------------------------

namespace detail {
/// Rotates the vertex ring so it starts at the smallest-y vertex (ties broken
/// by smallest x).
inline std::vector<Point> rotate_to_lowest(const std::vector<Point>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[best].y - kEpsGeom ||
            (std::abs(v[i].y - v[best].y) <= kEpsGeom && v[i].x < v[best].x - kEpsGeom))
            best = i;
    }
    std::vector<Point> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[(best + i) % v.size()]);
    return out;
}
}  // namespace detail

/// Minkowski sum of two convex counter-clockwise polygons by edge merging.
/// Both boundaries are rotated so the first vertex has the smallest
/// y-coordinate, then edges are interleaved by the sign of the cross product
/// of the two candidate edge vectors.
inline Polygon convex_minkowski_sum(const Polygon& boundary_a, const Polygon& boundary_b) {
    if (!boundary_a.is_convex() || !boundary_b.is_convex())
        throw InvalidGeometry("convex_minkowski_sum expects convex inputs");
    const auto a = detail::rotate_to_lowest(boundary_a.vertices());
    const auto b = detail::rotate_to_lowest(boundary_b.vertices());
    const std::size_t n = a.size(), m = b.size();
    std::vector<Point> sum;
    sum.reserve(n + m);
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        sum.push_back(a[i % n] + b[j % m]);
        const Point ea = a[(i + 1) % n] - a[i % n];
        const Point eb = b[(j + 1) % m] - b[j % m];
        const double theta = ea.x * eb.y - eb.x * ea.y;
        if (theta >= -kEpsGeom) ++i;
        if (theta <= kEpsGeom) ++j;
    }
    return Polygon(std::move(sum));  // normalization drops collinear repeats
}

/// Convex no-fit polygon of the orbiting part relative to the static part:
/// static ⊕ -(orbiting - orbiting_ref). Coordinates are relative to the
/// static piece's reference point.
inline Polygon convex_nfp(const ConvexPart& static_part, const ConvexPart& orbiting_part,
                          const Point& orbiting_ref) {
    const Polygon moved = orbiting_part.polygon.translated(-orbiting_ref);
    return convex_minkowski_sum(static_part.polygon, moved.negated());
}

}  // namespace nest
