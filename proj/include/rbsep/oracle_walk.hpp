#pragma once

#include <array>
#include <vector>

#include "rbsep/arrangement.hpp"
#include "rbsep/geometry.hpp"
#include "rbsep/oracle.hpp"
#include "rbsep/separator.hpp"

namespace rbsep {
namespace oracle_detail {

// Exhaustive wedge / double-wedge optimum by walking candidate vertices of
// the dual arrangement. Both bounding lines of a canonical optimum pass
// through input points, so both dual points are arrangement vertices. Two
// nested depth-first walks move them; each step flips a single input point
// across one line, so the per-quadrant counters update in O(1), for O(n^4)
// total. Candidates are all vertex pairs (a superset of the bichromatic
// vertices, which costs nothing extra and keeps one-color corner cases
// covered).
class WedgeWalkOracle {
public:
    WedgeWalkOracle(const PointSet& ps, RegionConstraint rc, Objective obj)
        : ps_(ps), obj_(obj) {
        wedge_ = rc == RegionConstraint::AnyWedge || rc == RegionConstraint::WedgeEast ||
                 rc == RegionConstraint::WedgeWest || rc == RegionConstraint::WedgeNorth ||
                 rc == RegionConstraint::WedgeSouth;
        labels_ = wedge_ ? wedge_labels(rc) : double_wedge_labels(rc);
        std::vector<Line> duals;
        std::vector<Color> colors;
        for (const auto& p : ps.points) {
            duals.push_back(dual_of_point(p));
            colors.push_back(p.color);
        }
        arr_ = build_arrangement(duals, colors, ArrangementOptions{false, std::nullopt});
    }

    Candidate run() {
        const std::size_t n = ps_.size();
        side1_.assign(n, 0);
        side2_.assign(n, 0);
        for (auto& row : tally_) row.fill(0);
        for (std::size_t p = 0; p < n; ++p) {
            side1_[p] = side_at(0, int(p));
            side2_[p] = side_at(0, int(p));
            bump(p, +1);
        }
        dfs_walk_counts(
            arr_, 0, [&](int s) { inner_pass(s); },
            [&](int from, int to) { outer_move(from, to); });
        return best_;
    }

private:
    // Side of input point p relative to the primal line dual to vertex v:
    // p above dual(v) iff the dual line of p passes below v.
    int side_at(int v, int p) const {
        const Point& vp = arr_.vertices[v].p;
        const auto& pt = ps_.points[p];
        return sign(vp.y - (pt.x * vp.x - pt.y));
    }

    void bump(std::size_t p, int delta) {
        tally_[ps_.points[p].color == Color::Red ? 0 : 1][idx(side1_[p], side2_[p])] += delta;
    }

    static std::size_t idx(int s1, int s2) { return std::size_t(s1 + 1) * 3 + std::size_t(s2 + 1); }

    // The two vertices share one dual line; the other two lines swap their
    // incidence: the departed vertex's second point comes off the line, the
    // arrived vertex's second point lands on it.
    void relocate(std::vector<int>& side, int from, int to, bool is_side1) {
        const auto& u = arr_.vertices[from];
        const auto& v = arr_.vertices[to];
        int shared = (u.a == v.a || u.a == v.b) ? u.a : u.b;
        int left = u.a == shared ? u.b : u.a;
        int met = v.a == shared ? v.b : v.a;
        update(side, left, side_at(to, left), is_side1);
        update(side, met, 0, is_side1);
    }

    void update(std::vector<int>& side, int p, int value, bool is_side1) {
        bump(std::size_t(p), -1);
        (void)is_side1;
        side[std::size_t(p)] = value;
        bump(std::size_t(p), +1);
    }

    void outer_move(int from, int to) {
        relocate(side1_, from, to, true);
        outer_vertex_ = to;
    }

    void inner_pass(int outer_vertex) {
        outer_vertex_ = outer_vertex;
        evaluate(outer_vertex, 0);
        dfs_walk_counts(
            arr_, 0, [&](int t) { if (t != 0) evaluate(outer_vertex_, t); },
            [&](int from, int to) { relocate(side2_, from, to, false); });
    }

    void evaluate(int s, int t) {
        if (s == t) return;
        const Point& sp = arr_.vertices[s].p;
        const Point& tp = arr_.vertices[t].p;
        if (sp.x == tp.x) return;  // parallel primal lines; strips live elsewhere
        const bool s_first = sp.x < tp.x;
        long red_in_quadrant[4] = {0, 0, 0, 0};
        long blue_in_quadrant[4] = {0, 0, 0, 0};
        long blue_strict_total = 0;
        for (int s1 = -1; s1 <= 1; s1 += 2)
            for (int s2 = -1; s2 <= 1; s2 += 2) {
                const QuadrantLabel q =
                    s_first ? quadrant_of(s1 > 0 ? SideOfLine::Above : SideOfLine::Below,
                                          s2 > 0 ? SideOfLine::Above : SideOfLine::Below)
                            : quadrant_of(s2 > 0 ? SideOfLine::Above : SideOfLine::Below,
                                          s1 > 0 ? SideOfLine::Above : SideOfLine::Below);
                red_in_quadrant[int(q)] += tally_[0][idx(s1, s2)];
                blue_in_quadrant[int(q)] += tally_[1][idx(s1, s2)];
                blue_strict_total += tally_[1][idx(s1, s2)];
            }
        for (QuadrantLabel lead : labels_) {
            long k_red = red_in_quadrant[int(lead)];
            long k_blue = blue_strict_total - blue_in_quadrant[int(lead)];
            if (!wedge_) {
                const QuadrantLabel opp = opposite_quadrant(lead);
                k_red += red_in_quadrant[int(opp)];
                k_blue -= blue_in_quadrant[int(opp)];
            }
            const long k = k_red + k_blue;
            if (obj_ == Objective::MinRed && k_blue != 0) continue;
            if (obj_ == Objective::MinBlue && k_red != 0) continue;
            const long value = obj_ == Objective::MinRed ? k_red
                               : obj_ == Objective::MinBlue ? k_blue
                                                            : k;
            if (best_.valid &&
                (value > best_.value || (value == best_.value && k_blue >= best_.k_blue)))
                continue;
            best_.valid = true;
            best_.value = value;
            best_.k_blue = k_blue;
            Line l1{sp.x, -sp.y};
            Line l2{tp.x, -tp.y};
            best_.sep = wedge_ ? Separator::wedge(l1, l2, lead)
                               : Separator::double_wedge(l1, l2, lead);
        }
    }

    const PointSet& ps_;
    Objective obj_;
    bool wedge_ = true;
    std::vector<QuadrantLabel> labels_;
    Arrangement arr_;
    std::vector<int> side1_, side2_;
    std::array<std::array<long, 9>, 2> tally_{};
    Candidate best_;
    int outer_vertex_ = 0;
};

inline Candidate walk_best(const PointSet& ps, RegionConstraint rc, Objective obj) {
    WedgeWalkOracle walker(ps, rc, obj);
    return walker.run();
}

}  // namespace oracle_detail
}  // namespace rbsep
