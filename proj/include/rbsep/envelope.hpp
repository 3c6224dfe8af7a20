#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/rational.hpp"

namespace rbsep {

enum class EnvelopeKind { Upper, Lower };

/// Piecewise-linear envelope (pointwise max or min) of a set of lines.
/// Pieces run left to right; slopes strictly increase along an upper
/// envelope and strictly decrease along a lower one. breakpoints[i] is the
/// x where pieces[i] hands over to pieces[i+1].
struct Envelope {
    EnvelopeKind kind = EnvelopeKind::Upper;
    std::vector<Line> pieces;
    std::vector<Rational> breakpoints;

    std::size_t piece_index(const Rational& x) const {
        return std::upper_bound(breakpoints.begin(), breakpoints.end(), x) - breakpoints.begin();
    }

    Rational eval(const Rational& x) const { return pieces[piece_index(x)].eval(x); }

    Point point_at(const Rational& x) const { return Point{x, eval(x)}; }

    const Line& line_at(const Rational& x) const { return pieces[piece_index(x)]; }

    /// Slope of the leftmost / rightmost (unbounded) piece.
    const Rational& left_slope() const { return pieces.front().slope; }
    const Rational& right_slope() const { return pieces.back().slope; }
};

/// Builds the envelope in O(n log n) by slope-sort plus an incremental chain.
/// Lines sharing a slope are pre-reduced to the dominant one, so the input
/// does not strictly need distinct slopes.
inline Envelope build_envelope(std::vector<Line> lines, EnvelopeKind kind) {
    if (lines.empty()) throw InternalError("build_envelope: no lines");
    const bool upper = kind == EnvelopeKind::Upper;
    std::sort(lines.begin(), lines.end(), [&](const Line& a, const Line& b) {
        if (a.slope != b.slope) return upper ? a.slope < b.slope : a.slope > b.slope;
        return upper ? a.intercept < b.intercept : a.intercept > b.intercept;
    });
    // Among equal slopes only the last (dominant) survives.
    std::vector<Line> filtered;
    for (const Line& l : lines) {
        if (!filtered.empty() && filtered.back().slope == l.slope) filtered.back() = l;
        else filtered.push_back(l);
    }

    Envelope env;
    env.kind = kind;
    for (const Line& l : filtered) {
        while (!env.pieces.empty()) {
            Rational x = intersection_x(l, env.pieces.back());
            if (env.pieces.size() >= 2 && x <= env.breakpoints.back()) {
                env.pieces.pop_back();
                env.breakpoints.pop_back();
                continue;
            }
            env.pieces.push_back(l);
            env.breakpoints.push_back(std::move(x));
            break;
        }
        if (env.pieces.empty()) env.pieces.push_back(l);
    }
    return env;
}

namespace detail {

// d(x) = env(x) - l(x) for an upper envelope, l(x) - env(x) for a lower one;
// convex piecewise-linear either way, with piece slopes strictly increasing.
inline Rational envelope_gap_slope(const Envelope& e, const Line& l, std::size_t piece) {
    return e.kind == EnvelopeKind::Upper ? Rational(e.pieces[piece].slope - l.slope)
                                         : Rational(l.slope - e.pieces[piece].slope);
}

inline Rational envelope_gap_value(const Envelope& e, const Line& l, const Rational& x) {
    return e.kind == EnvelopeKind::Upper ? Rational(e.eval(x) - l.eval(x))
                                         : Rational(l.eval(x) - e.eval(x));
}

// Root of the gap function inside pieces [lo, hi), given that the sign of the
// gap at the left edge of the range differs from the sign at the right edge.
// The gap is strictly monotone over the range.
inline Rational envelope_gap_root(const Envelope& e, const Line& l, std::size_t lo,
                                  std::size_t hi, bool increasing) {
    // Find the first piece whose right-end gap has reached zero.
    std::size_t a = lo, b = hi - 1;  // root lies in piece within [a, b]
    while (a < b) {
        std::size_t mid = a + (b - a) / 2;
        const int s = sign(envelope_gap_value(e, l, e.breakpoints[mid]));
        const bool reached = increasing ? s >= 0 : s <= 0;
        if (reached) b = mid;
        else a = mid + 1;
    }
    return intersection_x(e.pieces[a], l);
}

}  // namespace detail

/// X coordinates (ascending) where the line crosses the envelope: 0, 1 or 2
/// of them. A line tangent at a single point reports that point once.
/// O(log n) by binary search over the convex gap function.
inline std::vector<Rational> envelope_intersections(const Envelope& e, const Line& l) {
    const std::size_t m = e.pieces.size();
    // First piece with gap slope >= 0 and first with > 0 (slopes increase).
    auto slope_at = [&](std::size_t i) { return detail::envelope_gap_slope(e, l, i); };
    std::size_t neg_end = [&] {
        std::size_t lo = 0, hi = m;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (sign(slope_at(mid)) >= 0) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    }();
    std::size_t pos_start = [&] {
        std::size_t lo = neg_end, hi = m;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (sign(slope_at(mid)) > 0) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    }();

    std::vector<Rational> out;
    if (pos_start == 0) {
        // Gap strictly increasing everywhere: exactly one crossing.
        out.push_back(detail::envelope_gap_root(e, l, 0, m, true));
        return out;
    }
    if (neg_end == m) {
        // Strictly decreasing everywhere: exactly one crossing.
        out.push_back(detail::envelope_gap_root(e, l, 0, m, false));
        return out;
    }
    if (neg_end == 0 && pos_start == m) {
        // Single piece parallel to l: constant gap, no transversal crossing.
        return out;
    }

    // Minimum of the gap sits between the decreasing and the increasing
    // part (a piece parallel to l may lie flat in between; either of its
    // ends then attains the minimum).
    const Rational& x_min =
        neg_end > 0 ? e.breakpoints[neg_end - 1] : e.breakpoints[pos_start - 1];
    const int min_sign = sign(detail::envelope_gap_value(e, l, x_min));
    if (min_sign > 0) return out;
    if (min_sign == 0) {
        out.push_back(x_min);
        return out;
    }
    if (neg_end > 0) out.push_back(detail::envelope_gap_root(e, l, 0, neg_end, false));
    if (pos_start < m) out.push_back(detail::envelope_gap_root(e, l, pos_start, m, true));
    return out;
}

}  // namespace rbsep
