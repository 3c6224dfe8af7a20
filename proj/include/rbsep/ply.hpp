#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/rational.hpp"

namespace rbsep {

enum class PlyObjective { Min, Max };

// ---------------------------------------------------------------------------
// 1D: weighted intervals over the extended line
// ---------------------------------------------------------------------------

struct Interval1D {
    ExtRational lo = ExtRational::neg_inf();
    ExtRational hi = ExtRational::pos_inf();
    bool lo_closed = false;  // finite ends only
    bool hi_closed = false;

    bool contains(const Rational& x) const {
        ExtRational e(x);
        if (e < lo || hi < e) return false;
        if (e == lo && !lo_closed) return false;
        if (e == hi && !hi_closed) return false;
        return true;
    }
};

/// Forbidden set of one point: at most two disjoint intervals sharing one
/// weight and owner.
struct ForbiddenRegion1D {
    std::vector<Interval1D> intervals;
    long weight = 1;
    int owner = -1;

    static ForbiddenRegion1D everything(int owner, long weight = 1) {
        ForbiddenRegion1D r;
        r.intervals.push_back(Interval1D{});
        r.weight = weight;
        r.owner = owner;
        return r;
    }

    bool contains(const Rational& x) const {
        for (const auto& iv : intervals)
            if (iv.contains(x)) return true;
        return false;
    }
};

struct PlyResult1D {
    long ply = 0;
    Rational witness;          // finite representative of the optimal cell
    ExtRational cell_lo = ExtRational::neg_inf();  // optimal cell bounds
    ExtRational cell_hi = ExtRational::pos_inf();
    bool point_cell = false;   // cell is the single point witness
    std::vector<int> owners;   // owners of regions covering the witness
};

inline PlyResult1D extreme_ply_1d(const std::vector<ForbiddenRegion1D>& regions,
                                  PlyObjective objective) {
    struct Delta {
        long starts = 0;          // total weight of intervals opening here
        long ends = 0;            // total weight of intervals closing here
        long starts_closed = 0;   // closed-start weight (covers the point)
        long ends_open = 0;       // open-end weight (does not cover the point)
    };
    std::map<Rational, Delta> events;
    long initial = 0;  // weight covering the leftmost gap
    for (const auto& region : regions) {
        for (const auto& iv : region.intervals) {
            if (!(iv.lo < iv.hi)) throw InternalError("ply: empty interval");
            if (iv.lo.is_neg_inf()) initial += region.weight;
            else {
                auto& d = events[iv.lo.value];
                d.starts += region.weight;
                if (iv.lo_closed) d.starts_closed += region.weight;
            }
            if (iv.hi.is_finite()) {
                auto& d = events[iv.hi.value];
                d.ends += region.weight;
                if (!iv.hi_closed) d.ends_open += region.weight;
            }
        }
    }

    PlyResult1D best;
    bool have = false;
    auto consider = [&](long value, ExtRational lo, ExtRational hi, bool point) {
        const bool better = !have || (objective == PlyObjective::Min ? value < best.ply
                                                                     : value > best.ply);
        if (!better) return;
        have = true;
        best.ply = value;
        best.point_cell = point;
        best.cell_lo = lo;
        best.cell_hi = hi;
        best.witness = point ? lo.value : interval_representative(lo, hi);
    };

    long gap_weight = initial;
    ExtRational prev = ExtRational::neg_inf();
    for (const auto& [x, d] : events) {
        consider(gap_weight, prev, ExtRational(x), false);
        // At the point itself: everything covering the left gap except open
        // ends that stop here, plus closed starts that begin here.
        consider(gap_weight - d.ends_open + d.starts_closed, ExtRational(x), ExtRational(x),
                 true);
        gap_weight += d.starts - d.ends;
        prev = ExtRational(x);
    }
    consider(gap_weight, prev, ExtRational::pos_inf(), false);

    best.owners.clear();
    long recount = 0;
    for (const auto& region : regions)
        if (region.contains(best.witness)) {
            recount += region.weight;
            best.owners.push_back(region.owner);
        }
    if (recount != best.ply) throw InternalError("ply 1d: witness recount mismatch");
    return best;
}

inline PlyResult1D min_ply_1d(const std::vector<ForbiddenRegion1D>& regions) {
    return extreme_ply_1d(regions, PlyObjective::Min);
}

// ---------------------------------------------------------------------------
// 2D: open axis-aligned rectangles, sweep by x with a segment tree over the
// y skeleton. ply(v) = s(v) + opt(ply(c1), ply(c2)).
// ---------------------------------------------------------------------------

struct Rect2D {
    ExtRational x_lo = ExtRational::neg_inf();
    ExtRational x_hi = ExtRational::pos_inf();
    ExtRational y_lo = ExtRational::neg_inf();
    ExtRational y_hi = ExtRational::pos_inf();

    bool contains(const Rational& x, const Rational& y) const {
        ExtRational ex(x), ey(y);
        return x_lo < ex && ex < x_hi && y_lo < ey && ey < y_hi;
    }
};

/// Constant-complexity forbidden set of one point: up to four open rectangles.
struct ForbiddenRegion2D {
    std::vector<Rect2D> rects;
    long weight = 1;
    int owner = -1;

    static ForbiddenRegion2D everything(int owner, long weight = 1) {
        ForbiddenRegion2D r;
        r.rects.push_back(Rect2D{});
        r.weight = weight;
        r.owner = owner;
        return r;
    }

    bool contains(const Rational& x, const Rational& y) const {
        for (const auto& rc : rects)
            if (rc.contains(x, y)) return true;
        return false;
    }
};

struct PlyResult2D {
    long ply = 0;
    Rational x;
    Rational y;
    ExtRational cell_x_lo = ExtRational::neg_inf(), cell_x_hi = ExtRational::pos_inf();
    ExtRational cell_y_lo = ExtRational::neg_inf(), cell_y_hi = ExtRational::pos_inf();
    bool point_cell_x = false;
    bool point_cell_y = false;
    std::vector<int> owners;
};

namespace detail {

// Segment tree over the alternating gap/point leaf skeleton of the y axis.
class StabbingTree {
public:
    StabbingTree(std::size_t leaves, PlyObjective obj) : obj_(obj) {
        size_ = 1;
        while (size_ < leaves) size_ *= 2;
        cover_.assign(2 * size_, 0);
        best_.assign(2 * size_, 0);
        leaf_.assign(2 * size_, 0);
        // Padding leaves must never win.
        const long sentinel = std::numeric_limits<long>::max() / 4;
        for (std::size_t i = 0; i < size_; ++i) {
            leaf_[size_ + i] = i;
            if (i >= leaves) best_[size_ + i] = obj == PlyObjective::Min ? sentinel : -sentinel;
        }
        for (std::size_t v = size_ - 1; v >= 1; --v) pull(v);
    }

    void add(std::size_t lo, std::size_t hi, long w) {  // inclusive leaf range
        if (lo > hi) return;
        add(1, 0, size_ - 1, lo, hi, w);
    }

    long best() const { return best_[1]; }
    std::size_t best_leaf() const { return leaf_[1]; }

private:
    void pull(std::size_t v) {
        const long l = best_[2 * v], r = best_[2 * v + 1];
        const bool take_left = obj_ == PlyObjective::Min ? l <= r : l >= r;
        best_[v] = cover_[v] + (take_left ? l : r);
        leaf_[v] = take_left ? leaf_[2 * v] : leaf_[2 * v + 1];
    }

    void add(std::size_t v, std::size_t node_lo, std::size_t node_hi, std::size_t lo,
             std::size_t hi, long w) {
        if (hi < node_lo || node_hi < lo) return;
        if (lo <= node_lo && node_hi <= hi) {
            cover_[v] += w;
            if (v >= size_) best_[v] = cover_[v];
            else pull(v);
            return;
        }
        const std::size_t mid = node_lo + (node_hi - node_lo) / 2;
        add(2 * v, node_lo, mid, lo, hi, w);
        add(2 * v + 1, mid + 1, node_hi, lo, hi, w);
        pull(v);
    }

    PlyObjective obj_;
    std::size_t size_ = 1;
    std::vector<long> cover_;
    std::vector<long> best_;
    std::vector<std::size_t> leaf_;
};

}  // namespace detail

/// Optimum-ply point over weighted open rectangles; O(n log n).
/// Ties break toward the lexicographically smallest (x, y) cell.
inline PlyResult2D extreme_ply_2d(const std::vector<ForbiddenRegion2D>& regions,
                                  PlyObjective objective) {
    // y skeleton
    std::vector<Rational> ys;
    for (const auto& region : regions)
        for (const auto& rc : region.rects) {
            if (!(rc.x_lo < rc.x_hi) || !(rc.y_lo < rc.y_hi))
                throw InternalError("ply 2d: empty rectangle");
            if (rc.y_lo.is_finite()) ys.push_back(rc.y_lo.value);
            if (rc.y_hi.is_finite()) ys.push_back(rc.y_hi.value);
        }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    const std::size_t m = ys.size();
    const std::size_t n_leaves = 2 * m + 1;  // gap, point, gap, ..., point, gap

    auto y_index = [&](const Rational& v) {
        return std::size_t(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
    };
    // leaf of point ys[i] = 2i+1; gap left of ys[i] = 2i; rightmost gap = 2m.
    auto leaf_range = [&](const Rect2D& rc) -> std::pair<std::size_t, std::size_t> {
        std::size_t lo = rc.y_lo.is_neg_inf() ? 0 : 2 * y_index(rc.y_lo.value) + 2;
        std::size_t hi = rc.y_hi.is_pos_inf() ? 2 * m : 2 * y_index(rc.y_hi.value);
        return {lo, hi};
    };
    auto leaf_bounds = [&](std::size_t leaf, ExtRational& lo, ExtRational& hi, bool& point) {
        if (leaf % 2 == 1) {  // point leaf
            lo = hi = ExtRational(ys[leaf / 2]);
            point = true;
            return;
        }
        point = false;
        lo = leaf == 0 ? ExtRational::neg_inf() : ExtRational(ys[leaf / 2 - 1]);
        hi = leaf == 2 * m ? ExtRational::pos_inf() : ExtRational(ys[leaf / 2]);
    };

    struct Event {
        std::size_t lo, hi;  // leaf range
        long weight;         // signed
    };
    std::map<Rational, std::vector<Event>> starts, ends;
    detail::StabbingTree tree(n_leaves, objective);
    for (const auto& region : regions)
        for (const auto& rc : region.rects) {
            auto [lo, hi] = leaf_range(rc);
            if (lo > hi) continue;  // degenerate y extent
            if (rc.x_lo.is_neg_inf()) tree.add(lo, hi, region.weight);
            else starts[rc.x_lo.value].push_back(Event{lo, hi, region.weight});
            if (rc.x_hi.is_finite()) ends[rc.x_hi.value].push_back(Event{lo, hi, region.weight});
        }

    std::vector<Rational> xs;
    for (const auto& [x, _] : starts) xs.push_back(x);
    for (const auto& [x, _] : ends) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    PlyResult2D best;
    bool have = false;
    auto consider = [&](ExtRational x_lo, ExtRational x_hi, bool x_point) {
        const long value = tree.best();
        const bool better = !have || (objective == PlyObjective::Min ? value < best.ply
                                                                     : value > best.ply);
        if (!better) return;
        have = true;
        best.ply = value;
        best.cell_x_lo = x_lo;
        best.cell_x_hi = x_hi;
        best.point_cell_x = x_point;
        best.x = x_point ? x_lo.value : interval_representative(x_lo, x_hi);
        leaf_bounds(tree.best_leaf(), best.cell_y_lo, best.cell_y_hi, best.point_cell_y);
        best.y = best.point_cell_y ? best.cell_y_lo.value
                                   : interval_representative(best.cell_y_lo, best.cell_y_hi);
    };

    ExtRational prev = ExtRational::neg_inf();
    for (const Rational& x : xs) {
        consider(prev, ExtRational(x), false);
        if (auto it = ends.find(x); it != ends.end())
            for (const Event& e : it->second) tree.add(e.lo, e.hi, -e.weight);
        consider(ExtRational(x), ExtRational(x), true);
        if (auto it = starts.find(x); it != starts.end())
            for (const Event& e : it->second) tree.add(e.lo, e.hi, e.weight);
        prev = ExtRational(x);
    }
    consider(prev, ExtRational::pos_inf(), false);

    best.owners.clear();
    long recount = 0;
    for (const auto& region : regions)
        if (region.contains(best.x, best.y)) {
            recount += region.weight;
            best.owners.push_back(region.owner);
        }
    if (recount != best.ply) throw InternalError("ply 2d: witness recount mismatch");
    return best;
}

}  // namespace rbsep
