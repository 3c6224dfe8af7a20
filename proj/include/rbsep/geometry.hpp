#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbsep/rational.hpp"

namespace rbsep {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct TooFewPoints : std::runtime_error {
    TooFewPoints() : std::runtime_error("at least three input points are required") {}
};
struct EmptyColorClass : std::runtime_error {
    explicit EmptyColorClass(const std::string& what) : std::runtime_error(what) {}
};
struct PointInsideHull : std::runtime_error {
    PointInsideHull() : std::runtime_error("tangent query point lies inside the hull") {}
};
struct KeyCollision : std::runtime_error {
    KeyCollision() : std::runtime_error("duplicate key; input should have been normalized") {}
};
struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& what) : std::runtime_error(what) {}
};
/// Raised when a degeneracy slips past a reduced-verification normalize()
/// (large inputs skip the quadratic checks); callers regenerate or renormalize.
struct DegeneratePosition : std::runtime_error {
    explicit DegeneratePosition(const std::string& what) : std::runtime_error(what) {}
};
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// ---------------------------------------------------------------------------
// Core types
// ---------------------------------------------------------------------------

enum class Color { Red, Blue };

inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }
inline Color other_color(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct ColoredPoint {
    int id = -1;  // index into the original input
    Rational x;
    Rational y;
    Color color = Color::Blue;

    Point pos() const { return Point{x, y}; }
};

/// Non-vertical line y = slope * x + intercept. Vertical candidates are ruled
/// out by normalization, so every line of interest fits this form.
struct Line {
    Rational slope;
    Rational intercept;

    Rational eval(const Rational& x) const { return slope * x + intercept; }

    friend bool operator==(const Line& a, const Line& b) {
        return a.slope == b.slope && a.intercept == b.intercept;
    }
};

enum class SideOfLine { Below = -1, On = 0, Above = 1 };

inline SideOfLine side_of(const Line& l, const Point& p) {
    const int s = sign(p.y - (l.slope * p.x + l.intercept));
    return s < 0 ? SideOfLine::Below : (s > 0 ? SideOfLine::Above : SideOfLine::On);
}

/// Sign of the cross product (b-a) x (c-a): positive for a left turn.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

/// Line through two points with distinct x coordinates.
inline Line line_through(const Point& a, const Point& b) {
    if (a.x == b.x) throw DegeneratePosition("line through points with equal x would be vertical");
    Rational slope = (b.y - a.y) / (b.x - a.x);
    return Line{slope, a.y - slope * a.x};
}

/// x coordinate where two non-parallel lines cross.
inline Rational intersection_x(const Line& a, const Line& b) {
    if (a.slope == b.slope) throw DegeneratePosition("intersecting parallel lines");
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

inline Point intersection_point(const Line& a, const Line& b) {
    Rational x = intersection_x(a, b);
    return Point{x, a.eval(x)};
}

// ---------------------------------------------------------------------------
// Duality: p = (a,b) <-> line y = ax - b; line y = ax + b <-> point (a,-b).
// A point above a line maps to a dual line below the dual point.
// ---------------------------------------------------------------------------

inline Line dual_of_point(const Point& p) { return Line{p.x, -p.y}; }
inline Line dual_of_point(const ColoredPoint& p) { return Line{p.x, -p.y}; }
inline Point dual_of_line(const Line& l) { return Point{l.slope, -l.intercept}; }

enum class QuadrantLabel { North, East, South, West };

inline const char* quadrant_name(QuadrantLabel q) {
    switch (q) {
        case QuadrantLabel::North: return "North";
        case QuadrantLabel::East: return "East";
        case QuadrantLabel::South: return "South";
        default: return "West";
    }
}

inline QuadrantLabel opposite_quadrant(QuadrantLabel q) {
    switch (q) {
        case QuadrantLabel::North: return QuadrantLabel::South;
        case QuadrantLabel::East: return QuadrantLabel::West;
        case QuadrantLabel::South: return QuadrantLabel::North;
        default: return QuadrantLabel::East;
    }
}

// ---------------------------------------------------------------------------
// Normalization to general position
// ---------------------------------------------------------------------------

/// How thoroughly normalize() verifies general position.
///  - Full: O(n^2 log n) sweep over all dual crossings; certifies distinct
///    coordinates, no three collinear points and no two parallel point-pair
///    lines. The sweep algorithms require all of it.
///  - CoordinatesOnly: distinct x and y only; the O(n log n) algorithms need
///    nothing more, and the heavier ones detect trouble lazily.
///  - Auto: Full up to kFullCheckLimit points, CoordinatesOnly beyond.
enum class GeneralPositionCheck { Auto, Full, CoordinatesOnly };

inline constexpr std::size_t kFullCheckLimit = 2048;

struct NormalizeOptions {
    GeneralPositionCheck check = GeneralPositionCheck::Auto;
    int max_shear_attempts = 64;
};

struct PointSet {
    std::vector<ColoredPoint> points;
    Rational shear;  // 0 when the input was already in general position

    std::size_t size() const { return points.size(); }

    std::size_t count(Color c) const {
        std::size_t k = 0;
        for (const auto& p : points) k += (p.color == c);
        return k;
    }

    std::vector<ColoredPoint> of_color(Color c) const {
        std::vector<ColoredPoint> out;
        for (const auto& p : points)
            if (p.color == c) out.push_back(p);
        return out;
    }

    std::vector<Line> dual_lines(Color c) const {
        std::vector<Line> out;
        for (const auto& p : points)
            if (p.color == c) out.push_back(dual_of_point(p));
        return out;
    }

    void require_color(Color c) const {
        if (count(c) == 0)
            throw EmptyColorClass(std::string("query requires at least one ") + color_name(c) +
                                  " point");
    }
};

namespace detail {

// Shear with parameter e: x' = x + e*y, then y' = y + e*x'. Composing the two
// half-shears lets one recorded parameter fix duplicate x and duplicate y
// coordinates at once; the map is linear with determinant 1.
inline Point shear_point(const Point& p, const Rational& e) {
    Rational x = p.x + e * p.y;
    return Point{x, p.y + e * x};
}

inline Point unshear_point(const Point& p, const Rational& e) {
    Rational y = p.y - e * p.x;
    return Point{p.x - e * y, y};
}

inline bool distinct_coordinates(const std::vector<ColoredPoint>& pts) {
    std::vector<Rational> xs, ys;
    xs.reserve(pts.size());
    ys.reserve(pts.size());
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end() &&
           std::adjacent_find(ys.begin(), ys.end()) == ys.end();
}

// Sorts all pairwise dual-line crossings. A repeated x with distinct y means
// two point pairs span parallel lines; a repeated (x, y) means three dual
// lines meet, i.e. three input points are collinear. Requires distinct x.
inline bool pairwise_lines_generic(const std::vector<ColoredPoint>& pts) {
    const std::size_t n = pts.size();
    std::vector<Line> dual;
    dual.reserve(n);
    for (const auto& p : pts) dual.push_back(dual_of_point(p));
    std::vector<Rational> crossings;
    crossings.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            crossings.push_back(intersection_x(dual[i], dual[j]));
    std::sort(crossings.begin(), crossings.end());
    return std::adjacent_find(crossings.begin(), crossings.end()) == crossings.end();
}

inline bool in_general_position(const std::vector<ColoredPoint>& pts, bool full) {
    if (!distinct_coordinates(pts)) return false;
    if (full && !pairwise_lines_generic(pts)) return false;
    return true;
}

}  // namespace detail

/// Normalizes raw colored input to general position. If the input violates an
/// invariant, a deterministic shear with parameter eps = 1/(4*M^2+1) is
/// applied (M bounds the numerator/denominator magnitudes) and halved until
/// the invariants hold. The shear is recorded so separators can be mapped
/// back to the original frame.
inline PointSet normalize(const std::vector<ColoredPoint>& raw,
                          const NormalizeOptions& opts = {}) {
    if (raw.size() < 3) throw TooFewPoints();
    bool full = opts.check == GeneralPositionCheck::Full ||
                (opts.check == GeneralPositionCheck::Auto && raw.size() <= kFullCheckLimit);

    PointSet ps;
    ps.points = raw;
    ps.shear = 0;
    for (std::size_t i = 0; i < ps.points.size(); ++i) ps.points[i].id = raw[i].id >= 0 ? raw[i].id : int(i);

    if (detail::in_general_position(ps.points, full)) return ps;

    mpz_class bound = 1;
    for (const auto& p : raw) {
        bound = std::max(bound, mpz_class(abs(p.x.get_num())));
        bound = std::max(bound, mpz_class(p.x.get_den()));
        bound = std::max(bound, mpz_class(abs(p.y.get_num())));
        bound = std::max(bound, mpz_class(p.y.get_den()));
    }
    Rational eps = make_rational(mpz_class(1), mpz_class(4 * bound * bound + 1));

    for (int attempt = 0; attempt < opts.max_shear_attempts; ++attempt) {
        PointSet candidate;
        candidate.shear = eps;
        candidate.points.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Point q = detail::shear_point(raw[i].pos(), eps);
            candidate.points.push_back(
                ColoredPoint{raw[i].id >= 0 ? raw[i].id : int(i), q.x, q.y, raw[i].color});
        }
        if (detail::in_general_position(candidate.points, full)) return candidate;
        eps /= 2;
    }
    throw DegeneratePosition("normalization failed to reach general position");
}

/// Maps a point of the normalized frame back to original coordinates.
inline Point shear_back(const Point& p, const Rational& shear) {
    if (shear == 0) return p;
    return detail::unshear_point(p, shear);
}

/// Maps a line of the normalized frame back to original coordinates by
/// transforming two of its points. Returns nullopt when the original-frame
/// line is vertical (possible when the input had duplicate x coordinates).
inline std::optional<Line> shear_back(const Line& l, const Rational& shear) {
    if (shear == 0) return l;
    Point a = shear_back(Point{Rational(0), l.eval(Rational(0))}, shear);
    Point b = shear_back(Point{Rational(1), l.eval(Rational(1))}, shear);
    if (a.x == b.x) return std::nullopt;
    return line_through(a, b);
}

}  // namespace rbsep
