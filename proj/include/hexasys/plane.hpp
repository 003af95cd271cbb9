#pragma once

#include <array>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <variant>

#include "hexasys/errors.hpp"
#include "hexasys/rational.hpp"

// Exact planar geometry of the decorated hexagon, in the sheared frame
// X = (sqrt(3)/2) * x_euclidean, Y = y_euclidean.  In this frame every
// quantity of the construction is rational: the hexagon is
//   H = { |p0| <= 1, |p1| <= 1, |p2| <= 1 }
// for the three linear forms
//   p0 = Y,   p1 = -X - Y/2,   p2 = X - Y/2,
// with p0 + p1 + p2 = 0 identically.  pk is the signed coordinate of the
// orthogonal projection onto the k-th decoration axis, measured in Euclidean
// units, so lengths derived from the forms are metrically honest.

namespace hexasys {

struct PlanePoint {
    Rational x;  // sheared X
    Rational y;

    PlanePoint() = default;
    PlanePoint(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const PlanePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const PlanePoint& o) const { return !(*this == o); }

    PlanePoint operator+(const PlanePoint& o) const { return {x + o.x, y + o.y}; }
    PlanePoint operator-(const PlanePoint& o) const { return {x - o.x, y - o.y}; }
};

/// Direction in the sheared frame.  Nonzero by contract.
struct Direction {
    Rational dx;
    Rational dy;

    Direction() = default;
    Direction(Rational vx, Rational vy) : dx(std::move(vx)), dy(std::move(vy)) {}

    bool is_zero() const { return dx == 0 && dy == 0; }

    bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
    bool operator!=(const Direction& o) const { return !(*this == o); }

    /// Canonical representative of the oriented ray: coprime integer entries,
    /// orientation preserved.  Orientation must not be erased here: a billiard
    /// state and its reversal are distinct states.
    Direction reduced() const {
        Int n1 = num(dx), n2 = num(dy);
        Int d1 = den(dx), d2 = den(dy);
        // scale by lcm of denominators, then divide by gcd of numerators
        Int l = d1 / boost::multiprecision::gcd(d1, d2) * d2;
        Int a = n1 * (l / d1);
        Int b = n2 * (l / d2);
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(a),
                                           boost::multiprecision::abs(b));
        if (g == 0) return {Rational(0), Rational(0)};
        return {Rational(a / g), Rational(b / g)};
    }
};

/// One of the six hexagon edges, supported on { p_axis = sign }.
/// The three sign = -1 edges bound l1-type sectors, the three sign = +1
/// edges bound degenerate sectors (each contains a decoration tip).
struct EdgeId {
    int axis;  // 0, 1, 2
    int sign;  // +1 or -1

    bool operator==(const EdgeId& o) const { return axis == o.axis && sign == o.sign; }
    bool operator!=(const EdgeId& o) const { return !(*this == o); }
};

inline std::array<EdgeId, 6> all_edges() {
    return {EdgeId{0, 1}, EdgeId{0, -1}, EdgeId{1, 1},
            EdgeId{1, -1}, EdgeId{2, 1}, EdgeId{2, -1}};
}

/// Hexagon name in the tiling: tile (a, b) has center a*e1 + b*e2 with
/// e1 = (3/2, 1) and e2 = (0, 2) in the sheared frame.
struct TileName {
    long long a = 0;
    long long b = 0;

    bool operator==(const TileName& o) const { return a == o.a && b == o.b; }
    bool operator!=(const TileName& o) const { return !(*this == o); }
};

/// Signed coordinate of the orthogonal projection of `p` onto axis k.
inline Rational project(const PlanePoint& p, int k) {
    switch (k) {
        case 0: return p.y;
        case 1: return -p.x - p.y / 2;
        default: return p.x - p.y / 2;
    }
}

/// Derivative of the projection form along a direction.
inline Rational dproject(const Direction& w, int k) {
    switch (k) {
        case 0: return w.dy;
        case 1: return -w.dx - w.dy / 2;
        default: return w.dx - w.dy / 2;
    }
}

inline bool in_hexagon(const PlanePoint& p) {
    for (int k = 0; k < 3; ++k) {
        Rational v = project(p, k);
        if (v > 1 || v < -1) return false;
    }
    return true;
}

inline bool on_edge(const PlanePoint& p, const EdgeId& e) {
    return in_hexagon(p) && project(p, e.axis) == e.sign;
}

/// Vertices in cyclic order: (1,0), (1/2,1), (-1/2,1), (-1,0), (-1/2,-1), (1/2,-1).
inline std::array<PlanePoint, 6> hexagon_vertices() {
    return {PlanePoint{1, 0},
            PlanePoint{Rational(1, 2), 1},
            PlanePoint{Rational(-1, 2), 1},
            PlanePoint{-1, 0},
            PlanePoint{Rational(-1, 2), -1},
            PlanePoint{Rational(1, 2), -1}};
}

/// Endpoints of an edge: the two vertices where the edge form equals its sign.
inline std::pair<PlanePoint, PlanePoint> edge_endpoints(const EdgeId& e) {
    PlanePoint a, b;
    bool have_a = false;
    for (const auto& v : hexagon_vertices()) {
        if (project(v, e.axis) == e.sign) {
            if (!have_a) {
                a = v;
                have_a = true;
            } else {
                b = v;
            }
        }
    }
    return {a, b};
}

/// Dual vector g_k of axis k: dproject(g_k, k) = 1 and g_k is the sheared
/// image of the Euclidean unit normal u_k, so q - 2 (p_k(q) - s) g_k is the
/// Euclidean reflection across { p_k = s } expressed in sheared coordinates.
inline Direction axis_dual(int k) {
    switch (k) {
        case 0: return {Rational(0), Rational(1)};
        case 1: return {Rational(-3, 4), Rational(-1, 2)};
        default: return {Rational(3, 4), Rational(-1, 2)};
    }
}

/// Linear part of the Euclidean reflection across the edge line, in the
/// sheared frame.  Depends only on the edge axis; exact involution of
/// determinant -1.
inline Direction reflect_direction(const Direction& w, const EdgeId& e) {
    Direction g = axis_dual(e.axis);
    Rational c = 2 * dproject(w, e.axis);
    return {w.dx - c * g.dx, w.dy - c * g.dy};
}

struct EdgeHit {
    EdgeId edge;
    PlanePoint point;
    Rational t;
};

struct VertexHit {
    PlanePoint point;
    Rational t;
};

using RayCast = std::variant<EdgeHit, VertexHit>;

/// Casts the ray origin + t*w (t > 0) to the hexagon boundary.
/// Preconditions: origin in H, and the ray immediately enters the open
/// interior.  Returns the exit edge/point/parameter, or VertexHit when two
/// boundary forms are reached simultaneously (no geodesic through a vertex).
inline RayCast ray_exit(const PlanePoint& origin, const Direction& w) {
    if (w.is_zero()) throw BadRay("zero direction");
    if (!in_hexagon(origin)) throw PointOutsideHexagon();

    Rational best_t;
    int hits = 0;
    int best_axis = -1;
    int best_sign = 0;
    for (int k = 0; k < 3; ++k) {
        Rational pk = project(origin, k);
        Rational dk = dproject(w, k);
        if (dk == 0) {
            if (pk == 1 || pk == -1) throw BadRay("ray runs along an edge");
            continue;
        }
        int target = dk > 0 ? 1 : -1;
        if (pk == target) throw BadRay("ray leaves the hexagon immediately");
        Rational tk = (Rational(target) - pk) / dk;  // > 0
        if (best_axis < 0 || tk < best_t) {
            best_t = tk;
            best_axis = k;
            best_sign = target;
            hits = 1;
        } else if (tk == best_t) {
            ++hits;
        }
    }
    PlanePoint hit{origin.x + best_t * w.dx, origin.y + best_t * w.dy};
    if (hits > 1) return VertexHit{hit, best_t};
    return EdgeHit{EdgeId{best_axis, best_sign}, hit, best_t};
}

// Tiling lattice, sheared frame: e1 = (3/2, 1), e2 = (0, 2).
inline PlanePoint lattice_e1() { return {Rational(3, 2), Rational(1)}; }
inline PlanePoint lattice_e2() { return {Rational(0), Rational(2)}; }

/// v_{a,b} = a e1 + b e2 as a sheared direction (unreduced).
inline Direction lattice_direction(long long a, long long b) {
    return {Rational(3 * a, 2), Rational(a + 2 * b)};
}

inline PlanePoint tile_center(const TileName& t) {
    return {Rational(3 * t.a, 2), Rational(t.a + 2 * t.b)};
}

/// Inverts center = a e1 + b e2.  Throws NotALatticeCenter.
inline TileName tile_of(const PlanePoint& center) {
    Rational a = center.x * Rational(2, 3);
    Rational b = (center.y - a) / 2;
    if (!is_integer(a) || !is_integer(b))
        throw NotALatticeCenter("(" + rational_to_string(center.x) + ", " +
                                rational_to_string(center.y) + ")");
    return TileName{to_int64(a), to_int64(b)};
}

/// Affine isometry of the tiling (sheared coordinates, exact).
struct AffineMap {
    // q |-> M q + t
    Rational m00{1}, m01{0}, m10{0}, m11{1};
    Rational tx{0}, ty{0};

    static AffineMap identity() { return {}; }

    /// Euclidean reflection across the supporting line of edge e.
    static AffineMap edge_reflection(const EdgeId& e) {
        Direction g = axis_dual(e.axis);
        // row vector of the form p_k
        Rational f0, f1;
        switch (e.axis) {
            case 0: f0 = 0; f1 = 1; break;
            case 1: f0 = -1; f1 = Rational(-1, 2); break;
            default: f0 = 1; f1 = Rational(-1, 2); break;
        }
        AffineMap r;
        r.m00 = 1 - 2 * g.dx * f0;
        r.m01 = -2 * g.dx * f1;
        r.m10 = -2 * g.dy * f0;
        r.m11 = 1 - 2 * g.dy * f1;
        r.tx = 2 * Rational(e.sign) * g.dx;
        r.ty = 2 * Rational(e.sign) * g.dy;
        return r;
    }

    PlanePoint apply(const PlanePoint& q) const {
        return {m00 * q.x + m01 * q.y + tx, m10 * q.x + m11 * q.y + ty};
    }

    Direction apply_linear(const Direction& w) const {
        return {m00 * w.dx + m01 * w.dy, m10 * w.dx + m11 * w.dy};
    }

    /// Composition this(other(q)): apply `other` first, then `this`.
    AffineMap compose(const AffineMap& o) const {
        AffineMap r;
        r.m00 = m00 * o.m00 + m01 * o.m10;
        r.m01 = m00 * o.m01 + m01 * o.m11;
        r.m10 = m10 * o.m00 + m11 * o.m10;
        r.m11 = m10 * o.m01 + m11 * o.m11;
        PlanePoint t = apply({o.tx, o.ty});
        r.tx = t.x;
        r.ty = t.y;
        return r;
    }
};

/// Sheared -> Euclidean conversion (rendering and Crofton quadrature only).
inline std::pair<double, double> to_euclidean(const PlanePoint& p) {
    return {to_double(p.x) * 2.0 / std::sqrt(3.0), to_double(p.y)};
}

inline std::pair<double, double> to_euclidean(const Direction& w) {
    return {to_double(w.dx) * 2.0 / std::sqrt(3.0), to_double(w.dy)};
}

}  // namespace hexasys
