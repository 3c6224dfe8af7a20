#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rbsep/arrangement.hpp"
#include "support/test_support.hpp"

using namespace rbsep;

TEST_CASE("two crossing lines: counts", "[arrangement]") {
    std::vector<Line> lines = {Line{make_rational(1), make_rational(0)},
                               Line{make_rational(-1), make_rational(1)}};
    Arrangement arr = build_arrangement(lines);
    CHECK(arr.interior_vertex_count() == 1);
    // each line splits into two rays: 4 unbounded edges, 8 half-edges
    CHECK(arr.line_edge_count() == 4);
    std::size_t line_half_edges = 0;
    for (const auto& he : arr.half_edges) line_half_edges += he.line >= 0;
    CHECK(line_half_edges == 8);
    CHECK(arr.bounded_complex_face_count() == 4);
    CHECK(arr.unbounded_face_count() == 4);
    auto pairing = outer_faces_and_antipodal_pairs(arr);
    CHECK(pairing.pairs.size() == 2);
}

TEST_CASE("three generic lines: counts", "[arrangement]") {
    std::vector<Line> lines = {Line{make_rational(1), make_rational(0)},
                               Line{make_rational(-1), make_rational(1)},
                               Line{make_rational(3), make_rational(-2)}};
    Arrangement arr = build_arrangement(lines);
    CHECK(arr.interior_vertex_count() == 3);
    CHECK(arr.bounded_complex_face_count() == 7);  // 1 + 3 + 3
    std::size_t bounded = 0;
    for (const auto& f : arr.faces) bounded += (!f.outer && !f.unbounded);
    CHECK(bounded == 1);
}

TEST_CASE("random arrangements satisfy the closed-form counts", "[arrangement]") {
    std::mt19937_64 rng(67);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 2 + rng() % 19;
        auto lines = test::random_distinct_slope_lines(rng, n);
        Arrangement arr;
        try {
            arr = build_arrangement(lines);
        } catch (const DegeneratePosition&) {
            continue;  // concurrent triple in the random draw
        }
        CHECK(arr.interior_vertex_count() == n * (n - 1) / 2);
        CHECK(arr.line_edge_count() == n * n);
        CHECK(arr.bounded_complex_face_count() == 1 + n + n * (n - 1) / 2);
        CHECK(arr.unbounded_face_count() == 2 * n);
        auto pairing = outer_faces_and_antipodal_pairs(arr);
        CHECK(pairing.pairs.size() == n);
        for (const auto& [a, b] : pairing.pairs) {
            CHECK(a.line_start == b.line_start);
            CHECK(a.line_end == b.line_end);
            CHECK(a.face != b.face);
        }
    }
}

TEST_CASE("n = 20 random lines: 190 vertices, 211 faces", "[arrangement]") {
    std::mt19937_64 rng(71);
    for (;;) {
        auto lines = test::random_distinct_slope_lines(rng, 20);
        try {
            Arrangement arr = build_arrangement(lines);
            CHECK(arr.interior_vertex_count() == 190);
            CHECK(arr.bounded_complex_face_count() == 211);
            break;
        } catch (const DegeneratePosition&) {
        }
    }
}

TEST_CASE("outer chain total complexity stays linear", "[arrangement]") {
    std::mt19937_64 rng(73);
    for (std::size_t n : {8, 16, 32, 64}) {
        auto lines = test::random_distinct_slope_lines(rng, n);
        Arrangement arr;
        try {
            arr = build_arrangement(lines);
        } catch (const DegeneratePosition&) {
            continue;
        }
        auto chains = outer_face_chains(arr);
        std::size_t total_edges = 0;
        for (const auto& c : chains) total_edges += c.edge_lines.size();
        CHECK(total_edges <= 8 * n);  // zone-of-box linearity, generous constant
        // every line supports some unbounded edge exactly twice as a chain end
        std::map<int, int> start_end_uses;
        for (const auto& c : chains) {
            ++start_end_uses[c.line_start];
            ++start_end_uses[c.line_end];
        }
        for (auto [line, uses] : start_end_uses) CHECK(uses == 4);
    }
}

TEST_CASE("antipodal chains agree with the face geometry", "[arrangement]") {
    std::mt19937_64 rng(79);
    auto lines = test::random_distinct_slope_lines(rng, 10);
    Arrangement arr = build_arrangement(lines);
    auto chains = outer_face_chains(arr);
    CHECK(chains.size() == 20);
    for (const auto& c : chains) {
        REQUIRE(c.points.size() == c.edge_lines.size() + 1);
        // every chain edge lies on its supporting line
        for (std::size_t e = 0; e < c.edge_lines.size(); ++e) {
            const Line& l = arr.lines[c.edge_lines[e]].line;
            CHECK(side_of(l, c.points[e]) == SideOfLine::On);
            CHECK(side_of(l, c.points[e + 1]) == SideOfLine::On);
        }
    }
}

TEST_CASE("dfs walk visits every vertex once via adjacent steps", "[arrangement]") {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 20; ++round) {
        const std::size_t n = 3 + rng() % 10;
        std::vector<Line> lines;
        std::vector<Color> colors;
        for (auto& l : test::random_distinct_slope_lines(rng, n)) {
            lines.push_back(l);
            colors.push_back(rng() % 2 ? Color::Red : Color::Blue);
        }
        Arrangement arr;
        try {
            arr = build_arrangement(lines, colors, ArrangementOptions{false, std::nullopt});
        } catch (const DegeneratePosition&) {
            continue;
        }

        // Counter: number of red lines strictly below the current vertex,
        // maintained through O(1) per-step updates.
        auto below_count = [&](int v) {
            long c = 0;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (colors[i] != Color::Red) continue;
                const Point& p = arr.vertices[v].p;
                c += lines[i].eval(p.x) < p.y;
            }
            return c;
        };
        auto line_below = [&](int line, int v) {
            const Point& p = arr.vertices[v].p;
            return lines[line].eval(p.x) < p.y;
        };

        long counter = 0;
        int current = -1;
        std::size_t visits = 0, moves = 0;
        dfs_walk_counts(
            arr, 0,
            [&](int v) {
                if (current == -1) counter = below_count(v);
                ++visits;
                CHECK(counter == below_count(v));  // recount oracle
                current = v;
            },
            [&](int from, int to) {
                ++moves;
                const auto& u = arr.vertices[from];
                const auto& v = arr.vertices[to];
                const int shared = (u.a == v.a || u.a == v.b) ? u.a : u.b;
                const int left = u.a == shared ? u.b : u.a;
                const int met = v.a == shared ? v.b : v.a;
                // 'left' leaves the vertex: recompute its side; 'met' lands on it
                if (colors[left] == Color::Red) {
                    counter += line_below(left, to) ? 1 : 0;
                    counter -= line_below(left, from) ? 1 : 0;  // was On: contributes 0
                }
                if (colors[met] == Color::Red) {
                    counter -= line_below(met, from) ? 1 : 0;
                    counter += line_below(met, to) ? 1 : 0;  // lands On: contributes 0
                }
                current = to;
            });
        CHECK(visits == arr.interior_vertex_count());
        CHECK(moves <= 2 * 2 * arr.interior_vertex_count());
    }
}
