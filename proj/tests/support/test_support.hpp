#pragma once

#include <random>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/rational.hpp"

namespace rbsep::test {

inline Rational random_rational(std::mt19937_64& rng, long num_range = 200, long den_range = 20) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    return make_rational(num(rng), den(rng));
}

inline Point random_point(std::mt19937_64& rng) {
    return Point{random_rational(rng), random_rational(rng)};
}

inline Line random_line(std::mt19937_64& rng) {
    return Line{random_rational(rng, 50, 10), random_rational(rng, 100, 10)};
}

/// Lines with pairwise distinct slopes.
inline std::vector<Line> random_distinct_slope_lines(std::mt19937_64& rng, std::size_t n) {
    std::vector<Line> lines;
    while (lines.size() < n) {
        Line l = random_line(rng);
        bool fresh = true;
        for (const auto& m : lines) fresh &= (m.slope != l.slope);
        if (fresh) lines.push_back(l);
    }
    return lines;
}

/// Exhaustive general-position verdict: distinct coordinates, no three
/// collinear, no two point-pair lines parallel (or vertical).
inline bool brute_force_general_position(const std::vector<ColoredPoint>& pts) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (pts[i].x == pts[j].x || pts[i].y == pts[j].y) return false;
            for (std::size_t k = j + 1; k < n; ++k)
                if (orientation(pts[i].pos(), pts[j].pos(), pts[k].pos()) == 0) return false;
        }
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            slopes.push_back((pts[j].y - pts[i].y) / (pts[j].x - pts[i].x));
    std::sort(slopes.begin(), slopes.end());
    return std::adjacent_find(slopes.begin(), slopes.end()) == slopes.end();
}

}  // namespace rbsep::test
