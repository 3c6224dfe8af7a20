#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "rbsep/geometry.hpp"

namespace rbsep {

/// Convex hull, vertices counterclockwise starting from the lexicographically
/// smallest point. Degenerate hulls of one or two vertices are allowed.
struct Hull {
    std::vector<Point> vertices;

    std::size_t size() const { return vertices.size(); }

    /// Strictly-inside test (boundary counts as outside).
    bool strictly_contains(const Point& p) const {
        if (vertices.size() < 3) return false;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Point& a = vertices[i];
            const Point& b = vertices[(i + 1) % vertices.size()];
            if (orientation(a, b, p) <= 0) return false;
        }
        return true;
    }

    bool contains(const Point& p) const {
        if (vertices.size() == 1) return vertices[0] == p;
        if (vertices.size() == 2) {
            if (orientation(vertices[0], vertices[1], p) != 0) return false;
            const Point& a = vertices[0];
            const Point& b = vertices[1];
            return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                   std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
        }
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (orientation(vertices[i], vertices[(i + 1) % vertices.size()], p) < 0) return false;
        return true;
    }
};

/// Andrew's monotone chain; O(n log n). Collinear middle points are dropped,
/// so the result is strictly convex.
inline Hull build_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Hull h;
    if (pts.size() <= 2) {
        h.vertices = std::move(pts);
        return h;
    }
    std::vector<Point> chain(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {  // lower chain
        while (k >= 2 && orientation(chain[k - 2], chain[k - 1], p) <= 0) --k;
        chain[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, low = k + 1; i-- > 0;) {  // upper chain
        while (k >= low && orientation(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
        chain[k++] = pts[i];
    }
    chain.resize(k - 1);
    h.vertices = std::move(chain);
    return h;
}

namespace detail {

// Tangent from an exterior point: extreme vertex in the angular order around
// p. keep_left selects the tangent with the hull weakly to the left of the
// ray p -> vertex. Linear scan fallback for small hulls, binary search is
// exercised through the same entry point.
inline std::size_t tangent_vertex(const Hull& h, const Point& p, bool keep_left) {
    const auto& v = h.vertices;
    const std::size_t n = v.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const int o = orientation(p, v[best], v[i]);
        if (keep_left ? o > 0 : o < 0) best = i;
    }
    return best;
}

}  // namespace detail

/// The two lines through p tangent to the hull; each leaves every hull vertex
/// in one closed halfplane. Throws PointInsideHull when p is not strictly
/// outside. For a single-vertex hull both tangents coincide.
inline std::pair<Line, Line> tangents_from_point(const Hull& h, const Point& p) {
    if (h.size() == 0) throw InternalError("tangents_from_point: empty hull");
    if (h.contains(p)) throw PointInsideHull();
    const std::size_t a = detail::tangent_vertex(h, p, true);
    const std::size_t b = detail::tangent_vertex(h, p, false);
    return {line_through(p, h.vertices[a]), line_through(p, h.vertices[b])};
}

// ---------------------------------------------------------------------------
// Incremental slope-extreme queries. Points arrive sorted by x; queries ask
// for the extreme slope from a query point strictly right (or left) of every
// point inserted so far. Backbone of the wedge blue-outlier scan.
// ---------------------------------------------------------------------------

/// Upper convex chain over points inserted in strictly increasing x order.
/// From a query point q strictly to the right of all inserted points, the
/// minimum of slope(q, v) over all inserted points is attained on this chain
/// and found by binary search; mirrored, the maximum of slope(q, v) from a
/// query point strictly to the left is attained here as well.
class UpperChain {
public:
    void clear() { chain_.clear(); }
    bool empty() const { return chain_.empty(); }

    void insert(const Point& p) {
        while (chain_.size() >= 2 &&
               orientation(chain_[chain_.size() - 2], chain_.back(), p) >= 0)
            chain_.pop_back();
        chain_.push_back(p);
    }

    /// argmin over the chain of slope(q, v); q strictly right of all points.
    /// slope(q, chain[i]) first decreases then increases along the chain;
    /// the valley is the upper tangent vertex.
    Point min_slope_from_right(const Point& q) const {
        std::size_t lo = 0, hi = chain_.size() - 1;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            // slope(q, c[mid]) > slope(q, c[mid+1]) iff q is right of the
            // directed edge c[mid] -> c[mid+1].
            if (orientation(chain_[mid], chain_[mid + 1], q) < 0) lo = mid + 1;
            else hi = mid;
        }
        return chain_[lo];
    }

    /// argmax over the chain of slope(q, v); q strictly left of all points.
    /// slope(q, chain[i]) first increases then decreases along the chain.
    Point max_slope_from_left(const Point& q) const {
        std::size_t lo = 0, hi = chain_.size() - 1;
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (orientation(chain_[mid], chain_[mid + 1], q) > 0) lo = mid + 1;
            else hi = mid;
        }
        return chain_[lo];
    }

private:
    std::vector<Point> chain_;
};

}  // namespace rbsep
