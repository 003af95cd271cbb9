#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hexasys/plane.hpp"
#include "hexasys/pseudometric.hpp"

// Folded geodesic flow on the doubled hexagon.  The sphere is two copies of
// H glued along the boundary; geodesics project to billiard trajectories in
// H.  Both copies carry the identical decoration, so chord lengths are always
// measured against H's own axes and the only extra state is which copy
// (sheet) the trajectory currently traverses.  Closure is detected by exact
// state recurrence; unfolding through edge-line reflections is a pure
// analysis map.

namespace hexasys {

enum class Sheet { Down, Up };

inline Sheet flip(Sheet s) { return s == Sheet::Down ? Sheet::Up : Sheet::Down; }

/// State on the boundary: point strictly inside an edge, direction pointing
/// into the hexagon, current sheet.  Directions are stored reduced so that
/// operator== is exact geodesic identity.
struct BilliardState {
    EdgeId edge{0, -1};
    PlanePoint point;
    Direction dir;
    Sheet sheet = Sheet::Down;

    bool operator==(const BilliardState& o) const {
        return edge == o.edge && point == o.point && dir == o.dir && sheet == o.sheet;
    }
    bool operator!=(const BilliardState& o) const { return !(*this == o); }
};

/// Validates edge membership (strict interior) and inward direction.
inline BilliardState make_state(const EdgeId& e, PlanePoint point, Direction dir, Sheet sheet) {
    if (!on_edge(point, e)) throw BadRay("state point not on its edge");
    for (int k = 0; k < 3; ++k) {
        if (k == e.axis) continue;
        Rational v = project(point, k);
        if (v == 1 || v == -1) throw BadRay("state point at a vertex");
    }
    if (sign(dproject(dir, e.axis)) * e.sign >= 0) throw BadRay("direction not inward");
    return BilliardState{e, std::move(point), dir.reduced(), sheet};
}

/// Canonical launch: bottom edge {p0 = -1}, sheet Down.
inline BilliardState make_bottom_start(const Rational& x, const Direction& dir) {
    if (!(x > Rational(-1, 2) && x < Rational(1, 2)))
        throw BadRay("start parameter outside the open bottom edge");
    return make_state(EdgeId{0, -1}, PlanePoint{x, -1}, dir, Sheet::Down);
}

struct Chord {
    PlanePoint from;
    PlanePoint to;
    ChordContribution contrib;
    Sheet sheet;      // sheet the chord is traversed on
    EdgeId exit_edge; // edge hit at the far endpoint
};

struct StepOk {
    Chord chord;
    BilliardState next;
};

using StepResult = std::variant<StepOk, VertexHit>;

/// One bounce: cast the ray, measure the chord, reflect the direction across
/// the hit edge, flip the sheet.
inline StepResult step(const BilliardState& s) {
    RayCast rc = ray_exit(s.point, s.dir);
    if (std::holds_alternative<VertexHit>(rc)) return std::get<VertexHit>(rc);
    const EdgeHit& hit = std::get<EdgeHit>(rc);
    Chord chord{s.point, hit.point, chord_length(s.point, hit.point), s.sheet, hit.edge};
    BilliardState next{hit.edge, hit.point,
                       reflect_direction(s.dir, hit.edge).reduced(), flip(s.sheet)};
    return StepOk{std::move(chord), std::move(next)};
}

enum class TrajectoryOutcome { Closed, VertexHit, BudgetExhausted };

struct Trajectory {
    BilliardState start;
    std::vector<Chord> chords;
    TrajectoryOutcome outcome = TrajectoryOutcome::BudgetExhausted;
    Rational total_length{0};
    std::optional<PlanePoint> vertex_point;

    bool closed() const { return outcome == TrajectoryOutcome::Closed; }
};

/// Iterates step() until exact recurrence of the start state, a vertex hit,
/// or the chord budget runs out.  The flow is invertible, so the first
/// repeated state is necessarily the start.
inline Trajectory trace(const BilliardState& start, int max_chords) {
    if (max_chords < 1) throw Error("max_chords must be >= 1");
    Trajectory traj;
    traj.start = start;
    BilliardState cur = start;
    for (int i = 0; i < max_chords; ++i) {
        StepResult r = step(cur);
        if (std::holds_alternative<VertexHit>(r)) {
            traj.outcome = TrajectoryOutcome::VertexHit;
            traj.vertex_point = std::get<VertexHit>(r).point;
            return traj;
        }
        StepOk& ok = std::get<StepOk>(r);
        traj.total_length += ok.chord.contrib.total;
        traj.chords.push_back(std::move(ok.chord));
        cur = ok.next;
        if (cur == start) {
            traj.outcome = TrajectoryOutcome::Closed;
            return traj;
        }
    }
    traj.outcome = TrajectoryOutcome::BudgetExhausted;
    return traj;
}

struct UnfoldResult {
    std::vector<PlanePoint> polyline;   // chords straightened; exactly collinear
    std::vector<TileName> tiles;        // tile visited by each chord
    std::vector<AffineMap> transforms;  // isometry folding chord i onto H
};

/// Straightens the folded trajectory: chord i is mapped by the composition of
/// the first i edge-line reflections.  Unfolded points are exactly collinear
/// and the i-th tile is the image of H's center under that composition.
inline UnfoldResult unfold(const Trajectory& t) {
    if (t.chords.empty()) throw Error("unfold needs at least one chord");
    UnfoldResult u;
    AffineMap acc = AffineMap::identity();
    u.polyline.push_back(t.chords.front().from);
    for (const Chord& c : t.chords) {
        u.transforms.push_back(acc);
        u.tiles.push_back(tile_of(acc.apply(PlanePoint{0, 0})));
        u.polyline.push_back(acc.apply(c.to));
        acc = acc.compose(AffineMap::edge_reflection(c.exit_edge));
    }
    return u;
}

/// Closed geodesic bookkeeping: unfolded displacement r * v_{a,b} with
/// (a, b) coprime and r > 0, plus the per-chord per-axis length certificate.
struct ClosedGeodesicRecord {
    long long a = 0;
    long long b = 0;
    Rational x;       // start parameter on the bottom edge (sheared X)
    Rational r;
    int chords = 0;
    Rational length;
    std::vector<TileName> tiles;
    std::vector<std::array<Rational, 3>> certificate;
};

inline ClosedGeodesicRecord classify(const Trajectory& t) {
    if (!t.closed()) throw NotClosed();
    UnfoldResult u = unfold(t);
    PlanePoint d = u.polyline.back() - u.polyline.front();
    // invert displacement = r * (a e1 + b e2)
    Rational ra = d.x * Rational(2, 3);
    Rational rb = (d.y - ra) / 2;
    Int l = boost::multiprecision::lcm(den(ra), den(rb));
    Int m1 = num(ra) * (l / den(ra));
    Int m2 = num(rb) * (l / den(rb));
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(m1),
                                       boost::multiprecision::abs(m2));
    if (g == 0) throw Error("closed trajectory with zero displacement");

    ClosedGeodesicRecord rec;
    rec.a = (m1 / g).convert_to<long long>();
    rec.b = (m2 / g).convert_to<long long>();
    rec.r = Rational(g, l);
    rec.x = t.start.point.x;
    rec.chords = static_cast<int>(t.chords.size());
    rec.length = t.total_length;
    rec.tiles = std::move(u.tiles);
    rec.certificate.reserve(t.chords.size());
    for (const Chord& c : t.chords)
        rec.certificate.push_back(
            {c.contrib.axis_length(0), c.contrib.axis_length(1), c.contrib.axis_length(2)});
    return rec;
}

/// Certificate table: one row (three axis contributions) per chord.
/// Rows sum to the recorded length exactly.
inline const std::vector<std::array<Rational, 3>>& length_certificate(
    const ClosedGeodesicRecord& rec) {
    Rational sum{0};
    for (const auto& row : rec.certificate) sum += row[0] + row[1] + row[2];
    if (sum != rec.length) throw Error("certificate rows do not sum to the length");
    return rec.certificate;
}

/// A diamond crossing: a bounce on a { p_m = -1 } edge where the entering
/// chord carried axis j from a nonpositive level and the leaving chord drops
/// axis l back below zero.  The two clipped contributions then sum to
/// p_j(B) + p_l(B) = -p_m(B) = 1 exactly.
struct DiamondCrossing {
    size_t bounce;   // index of the chord ending at this bounce
    int entry_axis;  // axis measured on the entering chord
    int exit_axis;   // axis measured on the leaving chord
    Rational sum;
};

inline std::vector<DiamondCrossing> diamond_crossings(const Trajectory& t) {
    std::vector<DiamondCrossing> out;
    const size_t n = t.chords.size();
    if (n < 2) return out;
    const size_t last = t.closed() ? n : n - 1;  // wrap through the closure bounce
    for (size_t i = 0; i < last; ++i) {
        const Chord& in = t.chords[i];
        const Chord& outc = t.chords[(i + 1) % n];
        const EdgeId& e = in.exit_edge;
        if (e.sign != -1) continue;
        int j = (e.axis + 1) % 3;
        int l = (e.axis + 2) % 3;
        for (auto [ja, la] : {std::pair{j, l}, std::pair{l, j}}) {
            if (project(in.from, ja) <= 0 && project(outc.to, la) <= 0) {
                out.push_back(DiamondCrossing{
                    i, ja, la,
                    in.contrib.axis_length(ja) + outc.contrib.axis_length(la)});
            }
        }
    }
    return out;
}

}  // namespace hexasys
