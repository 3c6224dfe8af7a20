#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/separator.hpp"

namespace rbsep {

/// Region family the exhaustive search ranges over.
enum class RegionConstraint {
    Halfplane,
    Strip,
    AnyWedge,
    WedgeEast,
    WedgeWest,
    WedgeNorth,
    WedgeSouth,
    AnyDoubleWedge,
    Bowtie,
    Hourglass,
};

struct OracleOptions {
    std::size_t cap = 64;         // refuse larger instances
    bool force_naive = false;     // skip the arrangement-walk variant
};

namespace oracle_detail {

struct Candidate {
    bool valid = false;
    long value = 0;
    long k_blue = 0;
    Separator sep;
};

inline void offer(Candidate& best, const PointSet& ps, const Separator& sep, Objective obj) {
    ClassificationResult r = evaluate_separator(ps, sep);
    if (!satisfies_constraint(r, obj)) return;
    const long value = objective_value(r, obj);
    if (best.valid && (value > best.value || (value == best.value && r.k_blue >= best.k_blue)))
        return;
    best.valid = true;
    best.value = value;
    best.k_blue = r.k_blue;
    best.sep = sep;
}

inline std::vector<Line> all_pair_lines(const PointSet& ps) {
    std::vector<Line> lines;
    const auto& pts = ps.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            lines.push_back(line_through(pts[i].pos(), pts[j].pos()));
    return lines;
}

inline std::vector<QuadrantLabel> wedge_labels(RegionConstraint rc) {
    switch (rc) {
        case RegionConstraint::WedgeEast: return {QuadrantLabel::East};
        case RegionConstraint::WedgeWest: return {QuadrantLabel::West};
        case RegionConstraint::WedgeNorth: return {QuadrantLabel::North};
        case RegionConstraint::WedgeSouth: return {QuadrantLabel::South};
        default:
            return {QuadrantLabel::North, QuadrantLabel::East, QuadrantLabel::South,
                    QuadrantLabel::West};
    }
}

inline std::vector<QuadrantLabel> double_wedge_labels(RegionConstraint rc) {
    switch (rc) {
        case RegionConstraint::Bowtie: return {QuadrantLabel::East};
        case RegionConstraint::Hourglass: return {QuadrantLabel::North};
        default: return {QuadrantLabel::East, QuadrantLabel::North};
    }
}

/// Fully naive enumeration over the canonical candidate families: all lines
/// through two input points, paired with a second such line (wedges) or a
/// parallel line through an input point (strips). Every feasible separator
/// is evaluated by direct strict side tests.
inline Candidate naive_best(const PointSet& ps, RegionConstraint rc, Objective obj) {
    Candidate best;
    const std::vector<Line> lines = all_pair_lines(ps);

    if (rc == RegionConstraint::Halfplane) {
        for (const Line& l : lines) {
            offer(best, ps, Separator::halfplane(l, HalfplaneSide::Above), obj);
            offer(best, ps, Separator::halfplane(l, HalfplaneSide::Below), obj);
        }
        return best;
    }

    if (rc == RegionConstraint::Strip) {
        for (const Line& l : lines) {
            for (const auto& p : ps.points) {
                Line partner{l.slope, p.y - l.slope * p.x};
                offer(best, ps, Separator::strip(l, partner), obj);
            }
        }
        return best;
    }

    const bool wedge = rc == RegionConstraint::AnyWedge || rc == RegionConstraint::WedgeEast ||
                       rc == RegionConstraint::WedgeWest || rc == RegionConstraint::WedgeNorth ||
                       rc == RegionConstraint::WedgeSouth;
    const auto labels = wedge ? wedge_labels(rc) : double_wedge_labels(rc);

    // Cache strict side signs per candidate line; the pair loop then runs on
    // plain integers.
    const std::size_t n = ps.size();
    std::vector<std::vector<std::int8_t>> sides(lines.size(), std::vector<std::int8_t>(n));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t p = 0; p < n; ++p)
            sides[i][p] = std::int8_t(
                sign(ps.points[p].y - lines[i].eval(ps.points[p].x)));

    long best_value = 0, best_k_blue = 0;
    std::size_t best_i = 0, best_j = 0;
    QuadrantLabel best_label = QuadrantLabel::North;
    bool found = false;
    long quadrant_red[4], quadrant_blue[4];
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].slope == lines[j].slope) continue;
            const bool i_first = lines[i].slope < lines[j].slope;
            for (int q = 0; q < 4; ++q) quadrant_red[q] = quadrant_blue[q] = 0;
            long blue_strict = 0;
            for (std::size_t p = 0; p < n; ++p) {
                const int s1 = sides[i][p], s2 = sides[j][p];
                if (s1 == 0 || s2 == 0) continue;
                const SideOfLine a = (i_first ? s1 : s2) > 0 ? SideOfLine::Above : SideOfLine::Below;
                const SideOfLine b = (i_first ? s2 : s1) > 0 ? SideOfLine::Above : SideOfLine::Below;
                const int q = int(quadrant_of(a, b));
                if (ps.points[p].color == Color::Red) ++quadrant_red[q];
                else {
                    ++quadrant_blue[q];
                    ++blue_strict;
                }
            }
            for (QuadrantLabel lead : labels) {
                long k_red = quadrant_red[int(lead)];
                long k_blue = blue_strict - quadrant_blue[int(lead)];
                if (!wedge) {
                    const QuadrantLabel opp = opposite_quadrant(lead);
                    k_red += quadrant_red[int(opp)];
                    k_blue -= quadrant_blue[int(opp)];
                }
                const long k = k_red + k_blue;
                if (obj == Objective::MinRed && k_blue != 0) continue;
                if (obj == Objective::MinBlue && k_red != 0) continue;
                const long value = obj == Objective::MinRed ? k_red
                                   : obj == Objective::MinBlue ? k_blue
                                                               : k;
                if (found && (value > best_value ||
                              (value == best_value && k_blue >= best_k_blue)))
                    continue;
                found = true;
                best_value = value;
                best_k_blue = k_blue;
                best_i = i;
                best_j = j;
                best_label = lead;
            }
        }
    if (found) {
        Separator sep = wedge ? Separator::wedge(lines[best_i], lines[best_j], best_label)
                              : Separator::double_wedge(lines[best_i], lines[best_j], best_label);
        offer(best, ps, sep, obj);
        if (!best.valid) throw InternalError("oracle: integer and exact evaluation disagree");
    }
    return best;
}

Candidate walk_best(const PointSet& ps, RegionConstraint rc, Objective obj);  // oracle_walk.hpp

}  // namespace oracle_detail

/// Exhaustive reference optimum over the constrained region family.
/// Uses the O(n^4) arrangement walk above the naive-enumeration size range.
ClassificationResult brute_force_best(const PointSet& ps, RegionConstraint rc, Objective obj,
                                      const OracleOptions& opts = {});

}  // namespace rbsep

#include "rbsep/oracle_walk.hpp"

namespace rbsep {

inline ClassificationResult brute_force_best(const PointSet& ps, RegionConstraint rc,
                                             Objective obj, const OracleOptions& opts) {
    if (ps.size() > opts.cap)
        throw InstanceTooLarge("oracle cap " + std::to_string(opts.cap) + " exceeded (n = " +
                               std::to_string(ps.size()) + ")");
    const bool wedge_family = rc != RegionConstraint::Halfplane && rc != RegionConstraint::Strip;
    oracle_detail::Candidate best;
    if (wedge_family && !opts.force_naive && ps.size() > 14)
        best = oracle_detail::walk_best(ps, rc, obj);
    else
        best = oracle_detail::naive_best(ps, rc, obj);
    if (!best.valid) throw InternalError("oracle: no feasible separator in candidate family");
    return evaluate_separator(ps, best.sep);
}

}  // namespace rbsep
