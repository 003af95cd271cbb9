#pragma once

#include <array>
#include <span>
#include <vector>

#include "hexasys/plane.hpp"

// Length functional of the decorated hexagon: a curve is measured by the
// Lebesgue measure of its three axis projections clipped to the marked unit
// segments.  For a straight chord the projection onto axis k sweeps the
// interval [min pk, max pk]; its clip against [0, 1] is the axis
// contribution.  Chords realize the distance, so chord_length doubles as the
// pseudo-metric on point pairs.

namespace hexasys {

/// Subset of the three projection axes, as a bitmask.
struct AxisSet {
    unsigned mask = 0;

    bool contains(int k) const { return (mask >> k) & 1u; }
    void insert(int k) { mask |= (1u << k); }
    int size() const {
        return static_cast<int>(contains(0)) + static_cast<int>(contains(1)) +
               static_cast<int>(contains(2));
    }
    bool empty() const { return mask == 0; }

    bool operator==(const AxisSet& o) const { return mask == o.mask; }
};

struct AxisInterval {
    Rational lo{0};
    Rational hi{0};

    Rational length() const { return hi - lo; }
};

/// Per-axis clipped projection intervals of a chord and their total measure.
struct ChordContribution {
    std::array<AxisInterval, 3> per_axis;
    Rational total{0};

    Rational axis_length(int k) const { return per_axis[static_cast<size_t>(k)].length(); }
};

/// Clipped-projection length of the straight segment [p, q].  Exact.
inline ChordContribution chord_length(const PlanePoint& p, const PlanePoint& q) {
    if (!in_hexagon(p) || !in_hexagon(q)) throw PointOutsideHexagon();
    ChordContribution c;
    for (int k = 0; k < 3; ++k) {
        Rational a = project(p, k);
        Rational b = project(q, k);
        if (a > b) std::swap(a, b);
        Rational lo = a < 0 ? Rational(0) : a;
        Rational hi = b > 1 ? Rational(1) : b;
        if (hi < lo) lo = hi = 0;  // empty clip
        c.per_axis[static_cast<size_t>(k)] = {lo, hi};
        c.total += hi - lo;
    }
    return c;
}

/// Sum of chord lengths over consecutive pairs (clipped variation per smooth
/// piece; agrees with the image-measure definition on curves with monotone
/// projections, which covers every geodesic chord).
inline Rational polyline_length(std::span<const PlanePoint> points) {
    if (points.size() < 2) throw Error("polyline needs at least 2 points");
    Rational total{0};
    for (size_t i = 0; i + 1 < points.size(); ++i)
        total += chord_length(points[i], points[i + 1]).total;
    return total;
}

inline Rational polyline_length(const std::vector<PlanePoint>& points) {
    return polyline_length(std::span<const PlanePoint>(points));
}

/// Axes whose projection value lies in the open interval (0, 1).  Size 2 on
/// l1 sectors, 1 on degenerate sectors, smaller on the boundary lines.
inline AxisSet active_axes(const PlanePoint& x) {
    if (!in_hexagon(x)) throw PointOutsideHexagon();
    AxisSet s;
    for (int k = 0; k < 3; ++k) {
        Rational v = project(x, k);
        if (v > 0 && v < 1) s.insert(k);
    }
    return s;
}

/// Degenerate local norm F_x(v) = sum over active axes of |dpk(v)|.
/// Nonnegative, 1-homogeneous, symmetric; vanishes exactly on directions
/// annihilating all active forms.
inline Rational local_norm(const PlanePoint& x, const Direction& v) {
    AxisSet a = active_axes(x);
    Rational n{0};
    for (int k = 0; k < 3; ++k)
        if (a.contains(k)) n += abs(dproject(v, k));
    return n;
}

}  // namespace hexasys
