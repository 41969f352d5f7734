#include "orthoradial/oracle.hpp"

#include <algorithm>
#include <functional>

namespace orthoradial {

namespace {

// Independent separation test: faces adjacent across non-cycle edges, seeded
// from the central face; the cycle is essential when the outer face is not
// reached, and clockwise when the central face sits on its right.
struct BruteSides {
    bool essential;
    bool central_right;
};

BruteSides brute_sides(const PlaneGraph& g, const std::vector<DartId>& cycle) {
    std::vector<char> on_cycle(g.edge_count(), 0);
    for (DartId d : cycle)
        on_cycle[edge_of(d)] = 1;
    std::vector<char> reached(g.face_count(), 0);
    std::vector<FaceId> stack = {g.central_face()};
    reached[g.central_face()] = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face(f).boundary)
            if (!on_cycle[edge_of(d)] && !reached[g.face_of(twin(d))]) {
                reached[g.face_of(twin(d))] = 1;
                stack.push_back(g.face_of(twin(d)));
            }
    }
    bool essential = !reached[g.outer_face()];
    bool central_right = reached[g.face_of(cycle.front())];
    return {essential, central_right};
}

} // namespace

std::vector<EssentialCycle> brute_cycles(const PlaneGraph& graph, int bound) {
    require(graph.edge_count() <= bound, ErrorCode::BoundExceeded,
            "graph too large for the brute-force cycle oracle");

    // Exhaustive DFS over vertex sequences anchored at the smallest cycle
    // vertex; an undirected cycle is kept once, when its second vertex id is
    // below its last (two-edge cycles once by edge id order).
    std::vector<EssentialCycle> result;
    std::vector<DartId> path;
    std::vector<char> visited(graph.vertex_count(), 0);

    std::function<void(VertexId, VertexId)> grow = [&](VertexId anchor, VertexId at) {
        for (DartId d : graph.darts_at(at)) {
            VertexId w = graph.head(d);
            if (w == anchor && !path.empty()) {
                bool canonical = path.size() == 1 ? edge_of(path.front()) < edge_of(d)
                                                  : graph.head(path.front()) < at;
                if (!canonical)
                    continue;
                std::vector<DartId> cycle = path;
                cycle.push_back(d);
                BruteSides sides = brute_sides(graph, cycle);
                if (sides.essential)
                    result.push_back({sides.central_right ? cycle : reversed_path(cycle)});
                continue;
            }
            if (w < anchor || visited[w])
                continue;
            visited[w] = 1;
            path.push_back(d);
            grow(anchor, w);
            path.pop_back();
            visited[w] = 0;
        }
    };
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        visited[v] = 1;
        grow(v, v);
        visited[v] = 0;
    }

    auto key = [&](const EssentialCycle& c) {
        int k = static_cast<int>(c.darts.size());
        int best = 0;
        for (int i = 1; i < k; ++i)
            if (graph.tail(c.darts[i]) < graph.tail(c.darts[best]))
                best = i;
        std::vector<int> seq;
        for (int i = 0; i < k; ++i)
            seq.push_back(graph.tail(c.darts[(best + i) % k]));
        return seq;
    };
    std::sort(result.begin(), result.end(), [&](const EssentialCycle& a, const EssentialCycle& b) {
        if (a.darts.size() != b.darts.size())
            return a.darts.size() < b.darts.size();
        return key(a) < key(b);
    });
    return result;
}

namespace {

// Axis-aligned run of an edge in cylinder coordinates.
struct Segment {
    bool horizontal;
    std::int64_t fixed;  // layer for horizontal runs, column for vertical ones
    std::int64_t from;   // westmost column / lowest layer
    std::int64_t length;
};

Segment segment_of(const Drawing& drawing, const PlaneGraph& g, EdgeId e) {
    auto geom = drawing.edge[e];
    auto tail = drawing.vertex[g.tail(2 * e)];
    auto head = drawing.vertex[g.head(2 * e)];
    switch (geom.dir) {
    case Direction::Right: return {true, tail.layer, tail.column, geom.length};
    case Direction::Left: return {true, tail.layer, head.column, geom.length};
    case Direction::Up: return {false, tail.column, tail.layer, geom.length};
    case Direction::Down: return {false, tail.column, head.layer, geom.length};
    }
    return {};
}

enum class Meet { None, Point, Overlap };

// Intersection of [a, a+al] with [b, b+bl] on a line, or on a circle of
// circumference K when wrap is set.  Reports a single shared point through
// `point`.
Meet meet_1d(std::int64_t a, std::int64_t al, std::int64_t b, std::int64_t bl, bool wrap,
             std::int64_t K, std::int64_t* point) {
    Meet best = Meet::None;
    for (int shift = wrap ? -1 : 0; shift <= (wrap ? 1 : 0); ++shift) {
        std::int64_t b0 = b + shift * K;
        std::int64_t lo = std::max(a, b0);
        std::int64_t hi = std::min(a + al, b0 + bl);
        if (lo < hi)
            return Meet::Overlap;
        if (lo == hi) {
            best = Meet::Point;
            if (point)
                *point = lo;
        }
    }
    return best;
}

bool share_vertex_at(const Drawing& drawing, const PlaneGraph& g, EdgeId a, EdgeId b,
                     std::int64_t column, std::int64_t layer, std::int64_t K) {
    for (VertexId v : {g.tail(2 * a), g.head(2 * a)})
        for (VertexId w : {g.tail(2 * b), g.head(2 * b)}) {
            if (v != w)
                continue;
            auto c = drawing.vertex[v];
            if (((c.column - column) % K + K) % K == 0 && c.layer == layer)
                return true;
        }
    return false;
}

} // namespace

GeometryReport check_drawing(const Drawing& drawing, const Representation& rep) {
    const PlaneGraph& g = rep.graph();
    const std::int64_t K = drawing.circumference;
    GeometryReport report;

    // Directions, lengths and coordinate deltas per edge; layers must stay
    // positive (the center is not part of the grid).
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto geom = drawing.edge[e];
        bool ok = geom.length > 0;
        if (rep.directions_available() && rep.direction(2 * e) != geom.dir)
            ok = false;
        auto tail = drawing.vertex[g.tail(2 * e)];
        auto head = drawing.vertex[g.head(2 * e)];
        if (tail.layer < 1 || head.layer < 1)
            ok = false;
        std::int64_t dc = 0, dl = 0;
        switch (geom.dir) {
        case Direction::Right: dc = geom.length; break;
        case Direction::Left: dc = -geom.length; break;
        case Direction::Up: dl = geom.length; break;
        case Direction::Down: dl = -geom.length; break;
        }
        if (((tail.column + dc - head.column) % K + K) % K != 0 || tail.layer + dl != head.layer)
            ok = false;
        if (!ok)
            report.direction_mismatches.push_back(e);
    }

    // Angular order and corner sizes at each vertex: the drawn directions
    // must reproduce the stored angle assignment exactly.
    {
        std::vector<Direction> dirs(g.dart_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            dirs[2 * e] = drawing.edge[e].dir;
            dirs[2 * e + 1] = opposite(drawing.edge[e].dir);
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            bool ok = true;
            int total = 0;
            for (DartId d : g.darts_at(v)) {
                DartId nxt = g.cw_next(d);
                int gap;
                if (nxt == d) {
                    gap = 4;
                } else {
                    gap = ((static_cast<int>(dirs[nxt]) - static_cast<int>(dirs[d])) % 4 + 4) % 4;
                    if (gap == 0)
                        ok = false;
                }
                if (rep.angle(twin(nxt)) != gap * 90)
                    ok = false;
                total += gap;
            }
            if (total != 4)
                ok = false;
            if (!ok)
                report.angle_mismatches.push_back(v);
        }
    }

    // Pairwise disjointness in the cylinder metric: two edge runs may only
    // meet in a grid point occupied by a vertex they share.
    for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            Segment sa = segment_of(drawing, g, a);
            Segment sb = segment_of(drawing, g, b);
            bool crossing = false;
            if (sa.horizontal && sb.horizontal) {
                if (sa.fixed == sb.fixed) {
                    std::int64_t col = 0;
                    Meet m = meet_1d(sa.from, sa.length, sb.from, sb.length, true, K, &col);
                    if (m == Meet::Overlap)
                        crossing = true;
                    else if (m == Meet::Point)
                        crossing = !share_vertex_at(drawing, g, a, b, col, sa.fixed, K);
                }
            } else if (!sa.horizontal && !sb.horizontal) {
                if (((sa.fixed - sb.fixed) % K + K) % K == 0) {
                    std::int64_t layer = 0;
                    Meet m = meet_1d(sa.from, sa.length, sb.from, sb.length, false, K, &layer);
                    if (m == Meet::Overlap)
                        crossing = true;
                    else if (m == Meet::Point)
                        crossing = !share_vertex_at(drawing, g, a, b, sa.fixed, layer, K);
                }
            } else {
                const Segment& h = sa.horizontal ? sa : sb;
                const Segment& vert = sa.horizontal ? sb : sa;
                std::int64_t col_offset = ((vert.fixed - h.from) % K + K) % K;
                bool col_hit = col_offset <= h.length;
                bool layer_hit = h.fixed >= vert.from && h.fixed <= vert.from + vert.length;
                if (col_hit && layer_hit)
                    crossing = !share_vertex_at(drawing, g, a, b, vert.fixed, h.fixed, K);
            }
            if (crossing)
                report.crossings.push_back({a, b});
        }

    report.ok = report.crossings.empty() && report.angle_mismatches.empty() &&
                report.direction_mismatches.empty();
    return report;
}

EquivalenceReport exhaustive_equivalence(const PlaneGraph& graph, int bound) {
    require(graph.edge_count() <= bound, ErrorCode::BoundExceeded,
            "graph too large for the exhaustive equivalence sweep");

    // Corner tuples per vertex that satisfy Condition 1.
    std::vector<std::vector<std::vector<int>>> per_vertex(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        switch (graph.degree(v)) {
        case 1: per_vertex[v] = {{360}}; break;
        case 2: per_vertex[v] = {{90, 270}, {180, 180}, {270, 90}}; break;
        case 3: per_vertex[v] = {{90, 90, 180}, {90, 180, 90}, {180, 90, 90}}; break;
        case 4: per_vertex[v] = {{90, 90, 90, 90}}; break;
        default: fail(ErrorCode::InternalInvariantBroken, "unexpected vertex degree");
        }
    }

    EquivalenceReport report;
    std::vector<int> choice(graph.vertex_count(), 0);
    std::vector<int> angles(graph.dart_count(), 0);
    while (true) {
        ++report.assignments;
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            const auto& corners = per_vertex[v][choice[v]];
            const auto& ring = graph.darts_at(v);
            for (size_t i = 0; i < ring.size(); ++i) {
                // The corner between ring[i] and its clockwise successor is
                // the angle entry of the dart entering v from that successor.
                DartId nxt = graph.cw_next(ring[i]);
                angles[twin(nxt)] = corners[i];
            }
        }
        Representation rep(graph, angles);
        if (rep.conditions12_hold()) {
            ++report.cond2_survivors;
            ValidityReport validity = validate(rep);
            if (validity.valid) {
                try {
                    Drawing drawing = draw(rep);
                    GeometryReport geometry = check_drawing(drawing, rep);
                    if (!geometry.ok)
                        report.failures.push_back("valid assignment drew unsoundly");
                    else
                        ++report.valid_drawn;
                } catch (const Error& e) {
                    report.failures.push_back(std::string("valid assignment failed to draw: ") +
                                              e.what());
                }
            } else if (validity.invalid()) {
                try {
                    (void)draw(rep);
                    report.failures.push_back("invalid assignment produced a drawing");
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::NotValid)
                        ++report.invalid_rejected;
                    else
                        report.failures.push_back(std::string("unexpected draw error: ") +
                                                  e.what());
                }
            } else {
                report.failures.push_back("validation inconclusive during the sweep");
            }
        }
        int v = 0;
        while (v < graph.vertex_count() && ++choice[v] == static_cast<int>(per_vertex[v].size())) {
            choice[v] = 0;
            ++v;
        }
        if (v == graph.vertex_count())
            break;
    }
    report.ok = report.failures.empty();
    return report;
}

} // namespace orthoradial
