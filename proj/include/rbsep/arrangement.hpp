#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rbsep/geometry.hpp"
#include "rbsep/rational.hpp"

namespace rbsep {

struct ArrangementOptions {
    bool build_dcel = true;
    std::optional<Rational> half_width;  // reuse a box computed over a superset
};

/// Line arrangement clipped to the box [-W, W]^2. The box strictly contains
/// every pairwise crossing, and no input line passes through a box corner.
/// Interior vertices, per-line orderings and (optionally) a DCEL with faces
/// are available; faces touching the box are the clipped unbounded faces.
struct Arrangement {
    struct LineEntry {
        Line line;
        Color color = Color::Blue;
    };
    struct InteriorVertex {
        Point p;
        int a = -1, b = -1;        // crossing lines, a < b
        int pos_a = -1, pos_b = -1;  // positions within along_line
    };
    struct HalfEdge {
        int origin = -1;  // node id
        int twin = -1;
        int next = -1;
        int line = -1;  // -1 for box edges
        int face = -1;
    };
    struct Face {
        int first_edge = -1;
        bool outer = false;      // the region outside the box
        bool unbounded = false;  // clipped unbounded face (touches the box)
    };

    std::vector<LineEntry> lines;
    Rational half_width;

    std::vector<InteriorVertex> vertices;      // pairwise crossings
    std::vector<std::vector<int>> along_line;  // per line, vertex ids by x

    bool has_dcel = false;
    std::vector<Point> nodes;  // DCEL vertices: interior, then boundary, then corners
    std::vector<HalfEdge> half_edges;
    std::vector<Face> faces;

    std::size_t interior_vertex_count() const { return vertices.size(); }

    std::size_t line_edge_count() const {  // non-box edges
        std::size_t c = 0;
        for (const auto& he : half_edges)
            if (he.line >= 0) ++c;
        return c / 2;
    }

    std::size_t bounded_complex_face_count() const {  // everything inside the box
        std::size_t c = 0;
        for (const auto& f : faces) c += !f.outer;
        return c;
    }

    std::size_t unbounded_face_count() const {
        std::size_t c = 0;
        for (const auto& f : faces) c += f.unbounded && !f.outer;
        return c;
    }

    /// CCW boundary of a face: (vertex, supporting line of the edge leaving
    /// it; -1 for box edges).
    std::vector<std::pair<Point, int>> face_cycle(int face) const {
        std::vector<std::pair<Point, int>> cycle;
        const int start = faces[face].first_edge;
        int h = start;
        do {
            cycle.emplace_back(nodes[half_edges[h].origin], half_edges[h].line);
            h = half_edges[h].next;
        } while (h != start);
        return cycle;
    }
};

namespace detail {

// Perimeter parameter of a boundary point, counterclockwise from the
// bottom-left corner.
inline Rational perimeter_param(const Point& p, const Rational& w) {
    if (p.y == -w) return p.x + w;                  // bottom, left to right
    if (p.x == w) return 3 * w + p.y;               // right, bottom to top
    if (p.y == w) return 5 * w - p.x;               // top, right to left
    if (p.x == -w) return 7 * w - p.y;              // left, top to bottom
    throw InternalError("perimeter_param: point not on box");
}

// CCW angular order starting just above the +x direction.
inline bool direction_less(const std::pair<Rational, Rational>& a,
                           const std::pair<Rational, Rational>& b) {
    auto half = [](const std::pair<Rational, Rational>& d) {
        return (sign(d.second) > 0 || (sign(d.second) == 0 && sign(d.first) > 0)) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(a.first * b.second - a.second * b.first) > 0;
}

}  // namespace detail

/// Smallest usable box half-width for a line set: twice the extent of all
/// pairwise crossings, nudged so no line passes through a box corner.
inline Rational arrangement_half_width(const std::vector<Line>& lines) {
    Rational extent(1);
    auto grow = [&](const Rational& v) {
        if (v > extent) extent = v;
        if (-v > extent) extent = -v;
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        grow(lines[i].intercept);  // keeps single lines inside the box
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Rational x = intersection_x(lines[i], lines[j]);
            grow(x);
            grow(lines[i].eval(x));
        }
    }
    Rational w = 2 * extent + 1;
    auto corner_hit = [&](const Rational& cand) {
        for (const auto& l : lines) {
            if (l.eval(cand) == cand || l.eval(cand) == -cand) return true;
            if (l.eval(-cand) == cand || l.eval(-cand) == -cand) return true;
        }
        return false;
    };
    while (corner_hit(w)) w += 1;
    return w;
}

inline Arrangement build_arrangement(const std::vector<Line>& input_lines,
                                     const std::vector<Color>& colors,
                                     const ArrangementOptions& opts = {}) {
    if (input_lines.size() != colors.size())
        throw InternalError("build_arrangement: color count mismatch");
    Arrangement arr;
    const std::size_t n = input_lines.size();
    arr.lines.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        arr.lines.push_back(Arrangement::LineEntry{input_lines[i], colors[i]});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (input_lines[i].slope == input_lines[j].slope)
                throw DegeneratePosition("arrangement: parallel lines");

    arr.half_width = opts.half_width ? *opts.half_width : arrangement_half_width(input_lines);

    // Interior vertices and per-line orderings.
    arr.along_line.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Point p = intersection_point(input_lines[i], input_lines[j]);
            if (!(abs(p.x) < arr.half_width && abs(p.y) < arr.half_width))
                throw InternalError("arrangement: crossing outside box");
            const int id = int(arr.vertices.size());
            arr.vertices.push_back(Arrangement::InteriorVertex{std::move(p), int(i), int(j)});
            arr.along_line[i].push_back(id);
            arr.along_line[j].push_back(id);
        }
    for (std::size_t i = 0; i < n; ++i) {
        auto& vec = arr.along_line[i];
        std::sort(vec.begin(), vec.end(), [&](int a, int b) {
            if (arr.vertices[a].p.x != arr.vertices[b].p.x)
                return arr.vertices[a].p.x < arr.vertices[b].p.x;
            return a < b;  // concurrent crossings (same point) get a stable order
        });
        for (std::size_t k = 0; k < vec.size(); ++k) {
            auto& v = arr.vertices[vec[k]];
            (v.a == int(i) ? v.pos_a : v.pos_b) = int(k);
        }
        for (std::size_t k = 1; k < vec.size(); ++k)
            if (arr.vertices[vec[k - 1]].p.x == arr.vertices[vec[k]].p.x &&
                !(arr.vertices[vec[k - 1]].p == arr.vertices[vec[k]].p))
                throw DegeneratePosition("arrangement: distinct crossings share x on a line");
    }

    if (!opts.build_dcel) return arr;
    arr.has_dcel = true;
    const Rational& w = arr.half_width;

    // DCEL nodes: interior vertices, per-line box crossings, box corners.
    arr.nodes.reserve(arr.vertices.size() + 2 * n + 4);
    for (const auto& v : arr.vertices) arr.nodes.push_back(v.p);
    std::vector<std::pair<int, int>> line_ends(n, {-1, -1});  // node ids, left/right on line
    for (std::size_t i = 0; i < n; ++i) {
        const Line& l = input_lines[i];
        std::vector<Point> hits;
        Rational yl = l.eval(-w), yr = l.eval(w);
        if (abs(yl) < w) hits.push_back(Point{-w, yl});
        if (abs(yr) < w) hits.push_back(Point{w, yr});
        if (l.slope != 0) {
            Rational xb = (-w - l.intercept) / l.slope, xt = (w - l.intercept) / l.slope;
            if (abs(xb) < w) hits.push_back(Point{xb, -w});
            if (abs(xt) < w) hits.push_back(Point{xt, w});
        }
        if (hits.size() != 2) throw InternalError("arrangement: line must cross the box twice");
        if (hits[1].x < hits[0].x) std::swap(hits[0], hits[1]);
        line_ends[i].first = int(arr.nodes.size());
        arr.nodes.push_back(hits[0]);
        line_ends[i].second = int(arr.nodes.size());
        arr.nodes.push_back(hits[1]);
    }
    const int corner0 = int(arr.nodes.size());
    arr.nodes.push_back(Point{-w, -w});
    arr.nodes.push_back(Point{w, -w});
    arr.nodes.push_back(Point{w, w});
    arr.nodes.push_back(Point{-w, w});

    // Half-edge soup: line segments then box perimeter segments.
    auto add_edge_pair = [&](int u, int v, int line) {
        const int h = int(arr.half_edges.size());
        arr.half_edges.push_back(Arrangement::HalfEdge{u, h + 1, -1, line, -1});
        arr.half_edges.push_back(Arrangement::HalfEdge{v, h, -1, line, -1});
        return h;
    };
    for (std::size_t i = 0; i < n; ++i) {
        int prev = line_ends[i].first;
        for (int vid : arr.along_line[i]) {
            add_edge_pair(prev, vid, int(i));
            prev = vid;
        }
        add_edge_pair(prev, line_ends[i].second, int(i));
    }
    {
        std::vector<std::pair<Rational, int>> boundary;
        for (std::size_t i = 0; i < n; ++i) {
            boundary.emplace_back(detail::perimeter_param(arr.nodes[line_ends[i].first], w),
                                  line_ends[i].first);
            boundary.emplace_back(detail::perimeter_param(arr.nodes[line_ends[i].second], w),
                                  line_ends[i].second);
        }
        for (int c = 0; c < 4; ++c)
            boundary.emplace_back(detail::perimeter_param(arr.nodes[corner0 + c], w),
                                  corner0 + c);
        std::sort(boundary.begin(), boundary.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t k = 0; k < boundary.size(); ++k) {
            const int u = boundary[k].second;
            const int v = boundary[(k + 1) % boundary.size()].second;
            add_edge_pair(u, v, -1);
        }
    }

    // next pointers: CCW rings of outgoing half-edges around every node.
    std::vector<std::vector<int>> ring(arr.nodes.size());
    for (std::size_t h = 0; h < arr.half_edges.size(); ++h)
        ring[arr.half_edges[h].origin].push_back(int(h));
    auto direction = [&](int h) {
        const Point& a = arr.nodes[arr.half_edges[h].origin];
        const Point& b = arr.nodes[arr.half_edges[arr.half_edges[h].twin].origin];
        return std::pair<Rational, Rational>(b.x - a.x, b.y - a.y);
    };
    for (auto& r : ring) {
        std::sort(r.begin(), r.end(), [&](int h1, int h2) {
            return detail::direction_less(direction(h1), direction(h2));
        });
        const std::size_t m = r.size();
        for (std::size_t k = 0; k < m; ++k) {
            // next of the half-edge arriving along twin(r[k]) is the CW
            // neighbour of r[k] in the CCW ring.
            arr.half_edges[arr.half_edges[r[k]].twin].next = r[(k + m - 1) % m];
        }
    }

    // Face orbits.
    for (std::size_t h = 0; h < arr.half_edges.size(); ++h) {
        if (arr.half_edges[h].face != -1) continue;
        const int face = int(arr.faces.size());
        arr.faces.push_back(Arrangement::Face{int(h), false, false});
        int cur = int(h);
        do {
            arr.half_edges[cur].face = face;
            if (arr.half_edges[cur].line < 0) arr.faces[face].unbounded = true;
            cur = arr.half_edges[cur].next;
        } while (cur != int(h));
    }
    // The outer face is the one left of a clockwise perimeter edge; find the
    // box half-edge whose twin's face is inside: bottom edge traversed in -x
    // direction has the outside on its left.
    for (std::size_t h = 0; h < arr.half_edges.size(); ++h) {
        const auto& he = arr.half_edges[h];
        if (he.line >= 0) continue;
        const Point& a = arr.nodes[he.origin];
        const Point& b = arr.nodes[arr.half_edges[he.twin].origin];
        if (a.y == -w && b.y == -w && b.x < a.x) {
            arr.faces[he.face].outer = true;
            arr.faces[he.face].unbounded = false;
            break;
        }
    }
    return arr;
}

inline Arrangement build_arrangement(const std::vector<Line>& lines,
                                     const ArrangementOptions& opts = {}) {
    return build_arrangement(lines, std::vector<Color>(lines.size(), Color::Blue), opts);
}

// ---------------------------------------------------------------------------
// Outer faces and antipodal pairing
// ---------------------------------------------------------------------------

/// Boundary chain of one clipped unbounded face: the maximal run of non-box
/// edges, in CCW face order. points has one more entry than edge_lines; the
/// first and last point lie on the box.
struct OuterFaceChain {
    int face = -1;
    std::vector<Point> points;
    std::vector<int> edge_lines;
    int line_start = -1;  // supporting line of the first chain edge
    int line_end = -1;    // supporting line of the last chain edge
};

struct AntipodalPairing {
    std::vector<std::pair<OuterFaceChain, OuterFaceChain>> pairs;
};

inline std::vector<OuterFaceChain> outer_face_chains(const Arrangement& arr) {
    if (!arr.has_dcel) throw InternalError("outer_face_chains: DCEL not built");
    std::vector<OuterFaceChain> chains;
    for (std::size_t f = 0; f < arr.faces.size(); ++f) {
        if (arr.faces[f].outer || !arr.faces[f].unbounded) continue;
        // Gather the orbit, then rotate it so it starts just after a box edge.
        std::vector<int> orbit;
        const int start = arr.faces[f].first_edge;
        int h = start;
        do {
            orbit.push_back(h);
            h = arr.half_edges[h].next;
        } while (h != start);
        const std::size_t m = orbit.size();
        std::size_t begin = m;
        for (std::size_t k = 0; k < m; ++k) {
            if (arr.half_edges[orbit[k]].line >= 0 &&
                arr.half_edges[orbit[(k + m - 1) % m]].line < 0) {
                begin = k;
                break;
            }
        }
        if (begin == m) throw InternalError("outer chain: no line edges on face");
        OuterFaceChain chain;
        chain.face = int(f);
        for (std::size_t k = 0; k < m; ++k) {
            const int he = orbit[(begin + k) % m];
            if (arr.half_edges[he].line < 0) break;
            chain.points.push_back(arr.nodes[arr.half_edges[he].origin]);
            chain.edge_lines.push_back(arr.half_edges[he].line);
        }
        const int last = orbit[(begin + chain.edge_lines.size() - 1) % m];
        chain.points.push_back(arr.nodes[arr.half_edges[arr.half_edges[last].twin].origin]);
        chain.line_start = chain.edge_lines.front();
        chain.line_end = chain.edge_lines.back();
        chains.push_back(std::move(chain));
    }
    return chains;
}

/// Pairs the clipped unbounded faces whose unbounded edges share the same two
/// supporting lines. Each chain of a pair is oriented to start on the same
/// supporting line.
inline AntipodalPairing outer_faces_and_antipodal_pairs(const Arrangement& arr) {
    std::vector<OuterFaceChain> chains = outer_face_chains(arr);
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_support;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        auto key = std::minmax(chains[i].line_start, chains[i].line_end);
        by_support[{key.first, key.second}].push_back(i);
    }
    AntipodalPairing out;
    for (auto& [key, idx] : by_support) {
        if (idx.size() != 2) throw InternalError("antipodal pairing: support pair not doubled");
        OuterFaceChain a = chains[idx[0]];
        OuterFaceChain b = chains[idx[1]];
        if (a.line_start != b.line_start) {
            std::reverse(b.points.begin(), b.points.end());
            std::reverse(b.edge_lines.begin(), b.edge_lines.end());
            std::swap(b.line_start, b.line_end);
        }
        out.pairs.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Depth-first vertex walk
// ---------------------------------------------------------------------------

/// Visits every interior vertex once, moving only between vertices adjacent
/// along a line, announcing each traversal. Backtracking re-announces the
/// reversed move so per-step counter updates stay consistent with the
/// current vertex.
///   visit(v)        - vertex v entered for the first time
///   move(from, to)  - one edge traversed (both directions reported)
inline void dfs_walk_counts(const Arrangement& arr, int seed,
                            const std::function<void(int)>& visit,
                            const std::function<void(int, int)>& move) {
    if (arr.vertices.empty()) return;
    std::vector<char> seen(arr.vertices.size(), 0);
    auto neighbors = [&](int v) {
        std::vector<int> out;
        const auto& vert = arr.vertices[v];
        for (int side = 0; side < 2; ++side) {
            const int line = side == 0 ? vert.a : vert.b;
            const int pos = side == 0 ? vert.pos_a : vert.pos_b;
            const auto& vec = arr.along_line[line];
            if (pos > 0) out.push_back(vec[pos - 1]);
            if (pos + 1 < int(vec.size())) out.push_back(vec[pos + 1]);
        }
        return out;
    };
    struct Frame {
        int vertex;
        std::vector<int> nbrs;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    seen[seed] = 1;
    visit(seed);
    stack.push_back(Frame{seed, neighbors(seed)});
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next >= top.nbrs.size()) {
            const int child = top.vertex;
            stack.pop_back();
            if (!stack.empty()) move(child, stack.back().vertex);  // backtrack
            continue;
        }
        const int nxt = top.nbrs[top.next++];
        if (seen[nxt]) continue;
        seen[nxt] = 1;
        move(top.vertex, nxt);
        visit(nxt);
        stack.push_back(Frame{nxt, neighbors(nxt)});
    }
}

}  // namespace rbsep
