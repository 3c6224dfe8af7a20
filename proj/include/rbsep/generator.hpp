#pragma once

#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/separator.hpp"

namespace rbsep {

/// Random colored integer points, distinct as pairs, at least one of each
/// color. Deterministic for a given engine state.
inline std::vector<ColoredPoint> random_colored_points(std::mt19937_64& rng, std::size_t n,
                                                       long coord_range) {
    std::uniform_int_distribution<long> coord(0, coord_range - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::set<std::pair<long, long>> seen;
    std::vector<ColoredPoint> pts;
    while (pts.size() < n) {
        long x = coord(rng), y = coord(rng);
        if (!seen.insert({x, y}).second) continue;
        Color c = coin(rng) ? Color::Blue : Color::Red;
        pts.push_back(ColoredPoint{int(pts.size()), make_rational(x), make_rational(y), c});
    }
    // Guarantee both classes.
    bool has_red = false, has_blue = false;
    for (const auto& p : pts) (p.color == Color::Red ? has_red : has_blue) = true;
    if (!has_red) pts.front().color = Color::Red;
    if (!has_blue) pts.back().color = Color::Blue;
    return pts;
}

inline PointSet random_instance(unsigned seed, std::size_t n, long coord_range,
                                const NormalizeOptions& opts = {}) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        auto pts = random_colored_points(rng, n, coord_range);
        try {
            return normalize(pts, opts);
        } catch (const DegeneratePosition&) {
            if (attempt > 200) throw;
        }
    }
}

// ---------------------------------------------------------------------------
// Planted separable instances (k = 0 achievable for the given region kind)
// ---------------------------------------------------------------------------

namespace detail {

inline ColoredPoint sample_point(std::mt19937_64& rng, Color c,
                                 const std::function<bool(const Point&)>& inside,
                                 std::set<std::pair<std::string, std::string>>& seen) {
    std::uniform_int_distribution<long> num(-4096, 4096);
    std::uniform_int_distribution<long> den(1, 64);
    for (int i = 0; i < 100000; ++i) {
        Point p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
        if (!inside(p)) continue;
        if (!seen.insert({to_fraction_string(p.x), to_fraction_string(p.y)}).second) continue;
        return ColoredPoint{-1, p.x, p.y, c};
    }
    throw InternalError("planting: region rejection sampling failed");
}

}  // namespace detail

/// Builds an instance that some separator of the given kind classifies
/// perfectly. Blue points go strictly inside the planted W_B, red points
/// strictly inside W_R; normalization preserves both (the shear is linear).
inline PointSet planted_separable_instance(unsigned seed, RegionKind kind, bool bowtie,
                                           std::size_t n_blue, std::size_t n_red) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-8, 8);
    std::uniform_int_distribution<int> coin(0, 1);

    Rational s1 = make_rational(-3 * 8 + small(rng), 8);   // roughly -3
    Rational s2 = make_rational(3 * 8 + small(rng), 8);    // roughly +3
    Rational c1 = make_rational(small(rng));
    Rational c2 = make_rational(small(rng));
    Line l1{s1, c1};
    Line l2{s2, c2};

    std::function<bool(const Point&)> blue_in, red_in;
    switch (kind) {
        case RegionKind::Halfplane: {
            bool above = coin(rng);
            blue_in = [=](const Point& p) {
                return side_of(l1, p) == (above ? SideOfLine::Above : SideOfLine::Below);
            };
            red_in = [=](const Point& p) {
                return side_of(l1, p) == (above ? SideOfLine::Below : SideOfLine::Above);
            };
            break;
        }
        case RegionKind::Strip: {
            Line lower{s1, c1 - 10};
            Line upper{s1, c1 + 10};
            blue_in = [=](const Point& p) {
                return side_of(lower, p) == SideOfLine::Above &&
                       side_of(upper, p) == SideOfLine::Below;
            };
            red_in = [=](const Point& p) {
                return side_of(lower, p) == SideOfLine::Below ||
                       side_of(upper, p) == SideOfLine::Above;
            };
            break;
        }
        case RegionKind::Wedge: {
            int pick = std::uniform_int_distribution<int>(0, 3)(rng);
            QuadrantLabel blue_q = static_cast<QuadrantLabel>(pick);
            auto quad = [=](const Point& p) -> std::optional<QuadrantLabel> {
                SideOfLine a = side_of(l1, p), b = side_of(l2, p);
                if (a == SideOfLine::On || b == SideOfLine::On) return std::nullopt;
                return quadrant_of(a, b);
            };
            blue_in = [=](const Point& p) {
                auto q = quad(p);
                return q && *q == blue_q;
            };
            red_in = [=](const Point& p) {
                auto q = quad(p);
                return q && *q != blue_q;
            };
            break;
        }
        case RegionKind::DoubleWedge: {
            QuadrantLabel qa = bowtie ? QuadrantLabel::East : QuadrantLabel::North;
            QuadrantLabel qb = opposite_quadrant(qa);
            auto quad = [=](const Point& p) -> std::optional<QuadrantLabel> {
                SideOfLine a = side_of(l1, p), b = side_of(l2, p);
                if (a == SideOfLine::On || b == SideOfLine::On) return std::nullopt;
                return quadrant_of(a, b);
            };
            blue_in = [=](const Point& p) {
                auto q = quad(p);
                return q && (*q == qa || *q == qb);
            };
            red_in = [=](const Point& p) {
                auto q = quad(p);
                return q && *q != qa && *q != qb;
            };
            break;
        }
    }

    std::vector<ColoredPoint> pts;
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < n_blue; ++i)
        pts.push_back(detail::sample_point(rng, Color::Blue, blue_in, seen));
    for (std::size_t i = 0; i < n_red; ++i)
        pts.push_back(detail::sample_point(rng, Color::Red, red_in, seen));
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i].id = int(i);
    return normalize(pts);
}

}  // namespace rbsep
