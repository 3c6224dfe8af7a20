#pragma once

#include <optional>
#include <vector>

#include "rbsep/geometry.hpp"

namespace rbsep {

enum class RegionKind { Halfplane, Strip, Wedge, DoubleWedge };
enum class Objective { MinRed, MinBlue, MinTotal };
enum class HalfplaneSide { Above, Below };

inline const char* objective_name(Objective o) {
    switch (o) {
        case Objective::MinRed: return "red";
        case Objective::MinBlue: return "blue";
        default: return "total";
    }
}

/// Region assignment W_B described by one or two lines. For two-line kinds
/// l1 has the smaller slope (strip: l1 is the lower of the parallel pair;
/// equal lines give the zero-width strip). blue_region lists the quadrants
/// assigned to blue: one for a wedge, two opposite ones for a double wedge.
struct Separator {
    RegionKind kind = RegionKind::Halfplane;
    Line l1;
    std::optional<Line> l2;
    std::vector<QuadrantLabel> blue_region;
    HalfplaneSide side = HalfplaneSide::Above;

    static Separator halfplane(Line l, HalfplaneSide side) {
        Separator s;
        s.kind = RegionKind::Halfplane;
        s.l1 = std::move(l);
        s.side = side;
        return s;
    }

    static Separator strip(Line lower, Line upper) {
        if (lower.slope != upper.slope) throw InternalError("strip lines must be parallel");
        if (lower.intercept > upper.intercept) std::swap(lower, upper);
        Separator s;
        s.kind = RegionKind::Strip;
        s.l1 = std::move(lower);
        s.l2 = std::move(upper);
        s.blue_region = {QuadrantLabel::East};
        return s;
    }

    static Separator wedge(Line a, Line b, QuadrantLabel blue) {
        if (a.slope == b.slope) throw InternalError("wedge lines must cross");
        if (a.slope > b.slope) std::swap(a, b);
        Separator s;
        s.kind = RegionKind::Wedge;
        s.l1 = std::move(a);
        s.l2 = std::move(b);
        s.blue_region = {blue};
        return s;
    }

    static Separator double_wedge(Line a, Line b, QuadrantLabel blue) {
        if (a.slope == b.slope) throw InternalError("double wedge lines must cross");
        if (a.slope > b.slope) std::swap(a, b);
        Separator s;
        s.kind = RegionKind::DoubleWedge;
        s.l1 = std::move(a);
        s.l2 = std::move(b);
        s.blue_region = {blue, opposite_quadrant(blue)};
        return s;
    }

    bool is_bowtie() const {
        return kind == RegionKind::DoubleWedge &&
               (blue_region[0] == QuadrantLabel::East || blue_region[0] == QuadrantLabel::West);
    }
};

/// Quadrant of a point strictly off both lines of an ordered pair
/// (slope(l1) < slope(l2)).
inline QuadrantLabel quadrant_of(SideOfLine s1, SideOfLine s2) {
    if (s1 == SideOfLine::Above)
        return s2 == SideOfLine::Above ? QuadrantLabel::North : QuadrantLabel::East;
    return s2 == SideOfLine::Above ? QuadrantLabel::West : QuadrantLabel::South;
}

struct ClassificationResult {
    Separator separator;
    long k_red = 0;
    long k_blue = 0;
    long k = 0;
    std::vector<int> red_outliers;   // ids of red points strictly inside W_B
    std::vector<int> blue_outliers;  // ids of blue points strictly inside W_R
};

/// Direct outlier count from the region geometry. Points on a separator line
/// are never outliers; for all others membership in W_B is a strict side
/// test. This is the semantic every algorithm and the oracle share.
inline ClassificationResult evaluate_separator(const std::vector<ColoredPoint>& pts,
                                               const Separator& sep) {
    ClassificationResult res;
    res.separator = sep;
    for (const auto& p : pts) {
        const SideOfLine s1 = side_of(sep.l1, p.pos());
        if (s1 == SideOfLine::On) continue;
        SideOfLine s2 = SideOfLine::On;
        if (sep.l2) {
            s2 = side_of(*sep.l2, p.pos());
            if (s2 == SideOfLine::On) continue;
        }
        bool in_blue = false;
        switch (sep.kind) {
            case RegionKind::Halfplane:
                in_blue = (s1 == SideOfLine::Above) == (sep.side == HalfplaneSide::Above);
                break;
            case RegionKind::Strip:
                in_blue = s1 == SideOfLine::Above && s2 == SideOfLine::Below;
                break;
            case RegionKind::Wedge:
            case RegionKind::DoubleWedge: {
                const QuadrantLabel q = quadrant_of(s1, s2);
                in_blue = false;
                for (QuadrantLabel b : sep.blue_region) in_blue |= (b == q);
                break;
            }
        }
        if (p.color == Color::Red && in_blue) res.red_outliers.push_back(p.id);
        if (p.color == Color::Blue && !in_blue) res.blue_outliers.push_back(p.id);
    }
    res.k_red = long(res.red_outliers.size());
    res.k_blue = long(res.blue_outliers.size());
    res.k = res.k_red + res.k_blue;
    return res;
}

inline ClassificationResult evaluate_separator(const PointSet& ps, const Separator& sep) {
    return evaluate_separator(ps.points, sep);
}

/// Objective value with the paper's constraint semantics: minimizing red
/// outliers requires zero blue outliers and vice versa; MinTotal is
/// unconstrained.
inline bool satisfies_constraint(const ClassificationResult& r, Objective obj) {
    if (obj == Objective::MinRed) return r.k_blue == 0;
    if (obj == Objective::MinBlue) return r.k_red == 0;
    return true;
}

inline long objective_value(const ClassificationResult& r, Objective obj) {
    switch (obj) {
        case Objective::MinRed: return r.k_red;
        case Objective::MinBlue: return r.k_blue;
        default: return r.k;
    }
}

inline PointSet swap_colors(const PointSet& ps) {
    PointSet out = ps;
    for (auto& p : out.points) p.color = other_color(p.color);
    return out;
}

}  // namespace rbsep
