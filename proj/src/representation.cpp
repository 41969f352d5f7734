#include "orthoradial/representation.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace orthoradial {

const char* direction_name(Direction d) {
    switch (d) {
    case Direction::Right: return "right";
    case Direction::Down: return "down";
    case Direction::Left: return "left";
    case Direction::Up: return "up";
    }
    return "?";
}

int OrthoRadialRepresentation::expected_face_rot(FaceKind kind) {
    switch (kind) {
    case FaceKind::Regular: return 4;
    case FaceKind::Outer:
    case FaceKind::Central: return 0;
    case FaceKind::OuterAndCentral: return -4;
    }
    return 0;
}

OrthoRadialRepresentation::OrthoRadialRepresentation(PlaneGraph graph, std::vector<int> angles)
    : graph_(std::move(graph)), angles_(std::move(angles)) {
    require(static_cast<int>(angles_.size()) == graph_.dart_count(), ErrorCode::SemanticError,
            "angle assignment must cover every dart exactly once");
    for (DartId d = 0; d < graph_.dart_count(); ++d) {
        int a = angles_[d];
        require(a == 90 || a == 180 || a == 270 || a == 360, ErrorCode::SemanticError,
                "angle out of domain {90,180,270,360} at dart of edge " +
                    graph_.vertex_name(graph_.tail(d)) + ">" + graph_.vertex_name(graph_.head(d)));
        require(a != 360 || graph_.degree(graph_.head(d)) == 1, ErrorCode::SemanticError,
                "angle 360 is only allowed at degree-1 vertices");
    }
    check_conditions();
    if (conditions12_hold())
        compute_directions();
}

void OrthoRadialRepresentation::check_conditions() {
    // Condition 1: the angles around each vertex sum to 360.  angle(d) is the
    // corner at head(d), so summing over incoming darts covers each corner
    // exactly once.
    std::vector<int> sum(graph_.vertex_count(), 0);
    for (DartId d = 0; d < graph_.dart_count(); ++d)
        sum[graph_.head(d)] += angles_[d];
    for (VertexId v = 0; v < graph_.vertex_count(); ++v)
        if (sum[v] != 360)
            cond1_.push_back({v, sum[v]});

    // Condition 2: face rotation is 4 / 0 / -4 by kind.
    for (const Face& f : graph_.faces()) {
        int rot = 0;
        for (DartId d : f.boundary)
            rot += 2 - angles_[d] / 90;
        int expected = expected_face_rot(f.kind);
        if (rot != expected)
            cond2_.push_back({f.id, rot, expected});
    }
}

void OrthoRadialRepresentation::compute_directions() {
    // BFS over darts from the reference dart.  Transitions: the twin flips
    // the direction; following a turn adds its rotation.  Conditions 1-2 make
    // the result path-independent mod 4, which the BFS asserts on every
    // non-tree transition.
    directions_.assign(graph_.dart_count(), -1);
    std::queue<DartId> queue;
    directions_[graph_.reference_dart()] = 0;
    queue.push(graph_.reference_dart());
    auto visit = [&](DartId d, int dir) {
        if (directions_[d] < 0) {
            directions_[d] = static_cast<int8_t>(dir);
            queue.push(d);
        } else {
            require(directions_[d] == dir, ErrorCode::InternalInvariantBroken,
                    "direction assignment is inconsistent mod 4");
        }
    };
    while (!queue.empty()) {
        DartId d = queue.front();
        queue.pop();
        int dir = directions_[d];
        visit(twin(d), (dir + 2) % 4);
        for (DartId out : graph_.darts_at(graph_.head(d)))
            visit(out, ((dir + rot_pair(*this, d, out)) % 4 + 4) % 4);
    }
}

Direction OrthoRadialRepresentation::direction(DartId d) const {
    require(directions_available(), ErrorCode::PreconditionsUnchecked,
            "directions need Conditions 1-2 to hold");
    return static_cast<Direction>(directions_[d]);
}

int rot_pair(const Representation& rep, DartId d_in, DartId d_out) {
    const PlaneGraph& g = rep.graph();
    require(g.head(d_in) == g.tail(d_out), ErrorCode::NotIncident,
            "rot_pair darts do not share a vertex");
    // The angle locally to the right of the turn is the clockwise sweep from
    // d_out to twin(d_in), i.e. the sum of the stored corners in between.  An
    // empty sweep (u-turn) is the full 360.
    if (d_out == twin(d_in))
        return -2;
    int angle = 0;
    DartId g_cur = d_out;
    while (g_cur != twin(d_in)) {
        DartId nxt = g.cw_next(g_cur);
        // Corner between g_cur and its clockwise successor is stored on the
        // dart entering the vertex whose face walk continues with g_cur.
        angle += rep.angle(twin(nxt));
        g_cur = nxt;
    }
    return 2 - angle / 90;
}

int rot_path(const Representation& rep, std::span<const DartId> path) {
    require(!path.empty() && is_dart_chain(rep.graph(), path), ErrorCode::NotAPath,
            "rot_path requires a non-empty dart chain");
    int rot = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        rot += rot_pair(rep, path[i], path[i + 1]);
    return rot;
}

int rot_cycle(const Representation& rep, std::span<const DartId> cycle) {
    require(is_closed_chain(rep.graph(), cycle), ErrorCode::NotClosed,
            "rot_cycle requires a closed dart chain");
    std::vector<char> used(rep.graph().dart_count(), 0);
    for (DartId d : cycle) {
        require(!used[d], ErrorCode::NotClosed, "closed walk uses a directed edge twice");
        used[d] = 1;
    }
    int rot = rot_path(rep, cycle);
    rot += rot_pair(rep, cycle.back(), cycle.front());
    return rot;
}

Direction edge_direction(const Representation& rep, DartId d) {
    return rep.direction(d);
}

std::vector<int> angles_from_directions(const PlaneGraph& graph,
                                        std::span<const Direction> dir) {
    assert(static_cast<int>(dir.size()) == graph.dart_count());
    std::vector<int> angles(graph.dart_count(), 0);
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        int total = 0;
        for (DartId g_cur : graph.darts_at(v)) {
            DartId nxt = graph.cw_next(g_cur);
            int gap;
            if (nxt == g_cur) {
                gap = 4; // degree-1 vertex: the single corner is the full turn
            } else {
                gap = (static_cast<int>(dir[nxt]) - static_cast<int>(dir[g_cur])) % 4;
                if (gap < 0)
                    gap += 4;
                require(gap != 0, ErrorCode::InternalInvariantBroken,
                        "two darts at one vertex share a direction");
            }
            angles[twin(nxt)] = gap * 90;
            total += gap;
        }
        require(total == 4, ErrorCode::InternalInvariantBroken,
                "dart directions do not follow the clockwise rotation order at " +
                    graph.vertex_name(v));
    }
    return angles;
}

Representation representation_from_directions(const DirectedGraphSpec& spec,
                                               std::vector<DartId>* edge_darts) {
    const int n = static_cast<int>(spec.vertex_names.size());

    // Parallel indices by occurrence order per unordered vertex pair.
    std::vector<int> parallel(spec.edges.size(), 0);
    for (size_t i = 0; i < spec.edges.size(); ++i) {
        const auto& e = spec.edges[i];
        for (size_t j = 0; j < i; ++j) {
            const auto& f = spec.edges[j];
            bool same = (f.tail == e.tail && f.head == e.head) ||
                        (f.tail == e.head && f.head == e.tail);
            if (same)
                parallel[i] = std::max(parallel[i], parallel[j] + 1);
        }
    }

    RawGraph raw;
    raw.vertex_names = spec.vertex_names;
    raw.rotation.resize(n);
    // Collect per-vertex slots with their bearings, then order them clockwise
    // (bearing value order: right, down, left, up).
    std::vector<std::vector<std::pair<int, RawGraph::Slot>>> slots(n);
    for (size_t i = 0; i < spec.edges.size(); ++i) {
        const auto& e = spec.edges[i];
        slots[e.tail].push_back({static_cast<int>(e.dir), {e.head, parallel[i]}});
        slots[e.head].push_back({static_cast<int>(opposite(e.dir)), {e.tail, parallel[i]}});
    }
    for (int v = 0; v < n; ++v) {
        std::sort(slots[v].begin(), slots[v].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < slots[v].size(); ++i)
            require(slots[v][i].first != slots[v][i - 1].first,
                    ErrorCode::InternalInvariantBroken,
                    "two edges point the same way at " + spec.vertex_names[v]);
        for (const auto& [bearing, slot] : slots[v])
            raw.rotation[v].push_back(slot);
    }

    auto dart_ref = [&](int edge_index, bool along) {
        const auto& e = spec.edges[edge_index];
        RawGraph::DartRef ref;
        ref.tail = along ? e.tail : e.head;
        ref.head = along ? e.head : e.tail;
        ref.parallel = parallel[edge_index];
        return ref;
    };
    raw.outer = dart_ref(spec.outer_edge, spec.outer_along);
    raw.central = dart_ref(spec.central_edge, spec.central_along);
    raw.reference = dart_ref(spec.reference_edge, spec.reference_along);
    raw.outer_and_central = spec.outer_and_central;

    PlaneGraph graph = build_plane_graph(raw);

    std::vector<Direction> dir(graph.dart_count(), Direction::Right);
    if (edge_darts)
        edge_darts->assign(spec.edges.size(), kInvalidId);
    for (size_t i = 0; i < spec.edges.size(); ++i) {
        const auto& e = spec.edges[i];
        DartId d = graph.find_dart(e.tail, e.head, parallel[i]);
        require(d != kInvalidId, ErrorCode::InternalInvariantBroken, "edge lost in rebuild");
        dir[d] = e.dir;
        dir[twin(d)] = opposite(e.dir);
        if (edge_darts)
            (*edge_darts)[i] = d;
    }
    std::vector<int> angles = angles_from_directions(graph, dir);
    return Representation(std::move(graph), std::move(angles));
}

} // namespace orthoradial
