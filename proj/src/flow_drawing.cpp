#include "orthoradial/flow_drawing.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace orthoradial {

namespace {

void require_rectangular(const Representation& rep) {
    require(is_rectangular(rep), ErrorCode::NotRectangular,
            "the metrics step needs a rectangular representation");
}

} // namespace

Networks build_networks(const Representation& rect) {
    require_rectangular(rect);
    const PlaneGraph& g = rect.graph();

    Networks n;
    // N_ver nodes: regular faces only.
    n.vertical.face_node.assign(g.face_count(), -1);
    for (const Face& f : g.faces())
        if (f.kind == FaceKind::Regular) {
            n.vertical.face_node[f.id] = n.vertical.node_count++;
            n.vertical.node_face.push_back(f.id);
        }
    // N_rad nodes: all faces.
    n.radial.face_node.assign(g.face_count(), -1);
    for (const Face& f : g.faces()) {
        n.radial.face_node[f.id] = n.radial.node_count++;
        n.radial.node_face.push_back(f.id);
    }

    n.vertical.arc_of_edge.assign(g.edge_count(), -1);
    n.radial.arc_of_edge.assign(g.edge_count(), -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        DartId d = 2 * e;
        Direction dir = rect.direction(d);
        if (dir == Direction::Down || dir == Direction::Left) {
            d = twin(d);
            dir = opposite(dir);
        }
        if (dir == Direction::Up) {
            // Arc from the face left of the upward dart to the one right of
            // it; both are regular, since the outer and central faces of a
            // rectangular representation have horizontal boundaries only.
            int from = n.vertical.face_node[g.face_of(twin(d))];
            int to = n.vertical.face_node[g.face_of(d)];
            require(from >= 0 && to >= 0, ErrorCode::InternalInvariantBroken,
                    "vertical edge touches the outer or central face");
            n.vertical.arc_of_edge[e] = static_cast<int>(n.vertical.arcs.size());
            n.vertical.arcs.push_back({from, to, e});
        } else {
            // Horizontal edge, clockwise dart d: arc from the face below
            // (right of d) to the face above.
            int from = n.radial.face_node[g.face_of(d)];
            int to = n.radial.face_node[g.face_of(twin(d))];
            n.radial.arc_of_edge[e] = static_cast<int>(n.radial.arcs.size());
            n.radial.arcs.push_back({from, to, e});
        }
    }
    // The special arc: outer face to central face; its flow is the
    // circumference of the grid.
    n.radial.arcs.push_back(
        {n.radial.face_node[g.outer_face()], n.radial.face_node[g.central_face()], kInvalidId});
    return n;
}

namespace {

// Plain BFS max-flow; instances are desk scale.
struct MaxFlow {
    struct Edge {
        int to;
        std::int64_t cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj;

    explicit MaxFlow(int n) : adj(n) {}

    void add(int from, int to, std::int64_t cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    std::int64_t run(int s, int t) {
        std::int64_t total = 0;
        while (true) {
            std::vector<std::pair<int, int>> parent(adj.size(), {-1, -1});
            std::queue<int> queue;
            queue.push(s);
            parent[s] = {s, 0};
            while (!queue.empty() && parent[t].first < 0) {
                int v = queue.front();
                queue.pop();
                for (size_t i = 0; i < adj[v].size(); ++i) {
                    const Edge& e = adj[v][i];
                    if (e.cap > 0 && parent[e.to].first < 0) {
                        parent[e.to] = {v, static_cast<int>(i)};
                        queue.push(e.to);
                    }
                }
            }
            if (parent[t].first < 0)
                return total;
            std::int64_t push = INT64_MAX;
            for (int v = t; v != s;) {
                auto [u, i] = parent[v];
                push = std::min(push, adj[u][i].cap);
                v = u;
            }
            for (int v = t; v != s;) {
                auto [u, i] = parent[v];
                adj[u][i].cap -= push;
                adj[adj[u][i].to][adj[u][i].rev].cap += push;
                v = u;
            }
            total += push;
        }
    }

    std::vector<char> reachable(int s) const {
        std::vector<char> seen(adj.size(), 0);
        std::queue<int> queue;
        queue.push(s);
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const Edge& e : adj[v])
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    queue.push(e.to);
                }
        }
        return seen;
    }
};

} // namespace

std::variant<Circulation, InfeasibilityCertificate> feasible_circulation(const FlowNetwork& n) {
    // Standard reduction of lower bounds to max-flow: each arc's lower bound
    // becomes node excess routed from a super source to a super sink.  Any
    // feasible circulation here needs at most |arcs| units per arc, so a
    // capacity of |arcs|+1 stands in for infinity and keeps every forward
    // residual positive (the certificate extraction depends on that).
    const int source = n.node_count, sink = n.node_count + 1;
    const std::int64_t capacity = static_cast<std::int64_t>(n.arcs.size()) + 1;
    std::vector<std::int64_t> excess(n.node_count, 0);
    MaxFlow mf(n.node_count + 2);
    std::vector<int> slot(n.arcs.size());
    for (size_t i = 0; i < n.arcs.size(); ++i) {
        const auto& arc = n.arcs[i];
        excess[arc.to] += 1;
        excess[arc.from] -= 1;
        slot[i] = static_cast<int>(mf.adj[arc.from].size());
        mf.add(arc.from, arc.to, capacity);
    }
    std::int64_t need = 0;
    for (int v = 0; v < n.node_count; ++v) {
        if (excess[v] > 0) {
            mf.add(source, v, excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            mf.add(v, sink, -excess[v]);
        }
    }

    if (mf.run(source, sink) == need) {
        Circulation c;
        c.flow.resize(n.arcs.size());
        for (size_t i = 0; i < n.arcs.size(); ++i) {
            const auto& e = mf.adj[n.arcs[i].from][slot[i]];
            c.flow[i] = 1 + (capacity - e.cap);
        }
        return c;
    }

    // Infeasible: the nodes reachable from the super source in the residual
    // graph have no outgoing arcs (arc capacities never saturate) and at
    // least one incoming arc.
    std::vector<char> seen = mf.reachable(source);
    InfeasibilityCertificate cert;
    for (int v = 0; v < n.node_count; ++v)
        if (seen[v])
            cert.faces.push_back(n.node_face[v]);
    require(!cert.faces.empty(), ErrorCode::InternalInvariantBroken,
            "infeasible circulation without a violating set");
    return cert;
}

namespace {

// Simple cycles peeled off the boundary of a face region, walked with the
// region to the right.  The region taken is everything not reachable from
// `outside_seed` without entering `inside` (so holes of the set are filled).
std::vector<std::vector<DartId>> region_boundary_cycles(const PlaneGraph& g,
                                                        const std::vector<char>& inside,
                                                        FaceId outside_seed) {
    std::vector<char> outside(g.face_count(), 0);
    std::queue<FaceId> queue;
    if (!inside[outside_seed]) {
        outside[outside_seed] = 1;
        queue.push(outside_seed);
    }
    while (!queue.empty()) {
        FaceId f = queue.front();
        queue.pop();
        for (DartId d : g.face(f).boundary) {
            FaceId other = g.face_of(twin(d));
            if (!inside[other] && !outside[other]) {
                outside[other] = 1;
                queue.push(other);
            }
        }
    }

    std::vector<std::vector<DartId>> out_darts(g.vertex_count());
    for (DartId d = 0; d < g.dart_count(); ++d)
        if (!outside[g.face_of(d)] && outside[g.face_of(twin(d))])
            out_darts[g.tail(d)].push_back(d);

    std::vector<std::vector<DartId>> cycles;
    std::vector<int> pos_of(g.vertex_count(), -1);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        std::vector<DartId> stack;
        VertexId at = start;
        pos_of[at] = 0;
        while (!out_darts[at].empty()) {
            DartId d = out_darts[at].back();
            out_darts[at].pop_back();
            stack.push_back(d);
            at = g.head(d);
            if (pos_of[at] >= 0) {
                std::vector<DartId> cycle(stack.begin() + pos_of[at], stack.end());
                stack.resize(pos_of[at]);
                for (DartId c : cycle)
                    pos_of[g.tail(c)] = -1;
                pos_of[at] = static_cast<int>(stack.size());
                cycles.push_back(std::move(cycle));
            } else {
                pos_of[at] = static_cast<int>(stack.size());
            }
        }
        pos_of[at] = -1;
    }
    return cycles;
}

} // namespace

std::pair<EssentialCycle, MonotoneKind> certificate_to_monotone_cycle(
    const Representation& rect, const InfeasibilityCertificate& certificate) {
    const PlaneGraph& g = rect.graph();
    std::vector<char> inside(g.face_count(), 0);
    for (FaceId f : certificate.faces)
        inside[f] = 1;

    // Outermost boundary first (seen from the outer face); if the essential
    // cycle there is not increasing, the innermost boundary is decreasing.
    struct Attempt {
        FaceId seed;
        MonotoneKind kind;
    };
    for (const Attempt& attempt : {Attempt{g.outer_face(), MonotoneKind::Increasing},
                                   Attempt{g.central_face(), MonotoneKind::Decreasing}}) {
        for (auto& cycle : region_boundary_cycles(g, inside, attempt.seed)) {
            CycleSides sides = cycle_sides(g, cycle);
            if (!sides.essential)
                continue;
            EssentialCycle essential{sides.clockwise ? std::move(cycle) : reversed_path(cycle)};
            CycleClass cls = classify_cycle(labeling(rect, essential));
            if (cls == CycleClass::Increasing && attempt.kind == MonotoneKind::Increasing)
                return {std::move(essential), MonotoneKind::Increasing};
            if (cls == CycleClass::Decreasing && attempt.kind == MonotoneKind::Decreasing)
                return {std::move(essential), MonotoneKind::Decreasing};
        }
    }
    fail(ErrorCode::InternalInvariantBroken,
         "infeasibility certificate does not bound a monotone cycle");
}

Drawing assign_coordinates(const Representation& rect, const Circulation& vertical,
                           const Circulation& radial, const Networks& networks) {
    require_rectangular(rect);
    const PlaneGraph& g = rect.graph();

    Drawing drawing;
    drawing.circumference = radial.flow.back(); // the outer-to-central arc
    drawing.edge.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        DartId d = 2 * e;
        Direction dir = rect.direction(d);
        int arc = is_horizontal(dir) ? networks.radial.arc_of_edge[e]
                                     : networks.vertical.arc_of_edge[e];
        drawing.edge[e] = {dir, is_horizontal(dir) ? radial.flow[arc] : vertical.flow[arc]};
    }

    // Spanning-tree propagation from the tail of the reference dart; columns
    // stay raw integers during the sweep and are reduced modulo the
    // circumference afterwards, so that closure is asserted exactly.
    const std::int64_t K = drawing.circumference;
    std::vector<Drawing::Coord> raw(g.vertex_count());
    std::vector<char> placed(g.vertex_count(), 0);
    VertexId root = g.tail(g.reference_dart());
    raw[root] = {0, 0};
    placed[root] = 1;
    std::queue<VertexId> queue;
    queue.push(root);
    auto step = [&](Drawing::Coord at, DartId d) {
        std::int64_t len = drawing.edge[edge_of(d)].length;
        switch (rect.direction(d)) {
        case Direction::Right: at.column += len; break;
        case Direction::Left: at.column -= len; break;
        case Direction::Up: at.layer += len; break;
        case Direction::Down: at.layer -= len; break;
        }
        return at;
    };
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (DartId d : g.darts_at(v)) {
            Drawing::Coord coord = step(raw[v], d);
            VertexId w = g.head(d);
            if (!placed[w]) {
                placed[w] = 1;
                raw[w] = coord;
                queue.push(w);
            } else {
                require(raw[w].layer == coord.layer && (raw[w].column - coord.column) % K == 0,
                        ErrorCode::InconsistentClosure,
                        "flows do not close up around a cycle");
            }
        }
    }

    std::int64_t min_layer = INT64_MAX;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        min_layer = std::min(min_layer, raw[v].layer);
    drawing.vertex.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        drawing.vertex[v] = {((raw[v].column % K) + K) % K, raw[v].layer - min_layer + 1};
    return drawing;
}

Drawing draw(const Representation& rep, const ValidateOptions& options) {
    RectangulationResult rect = rectangulate(rep, options); // validates the input
    Networks networks = build_networks(rect.rect);
    auto ver = feasible_circulation(networks.vertical);
    auto rad = feasible_circulation(networks.radial);
    require(std::holds_alternative<Circulation>(ver), ErrorCode::InternalInvariantBroken,
            "a valid rectangular representation must have a feasible vertical circulation");
    require(std::holds_alternative<Circulation>(rad), ErrorCode::InternalInvariantBroken,
            "the radial network always has a feasible circulation");
    Drawing full = assign_coordinates(rect.rect, std::get<Circulation>(ver),
                                      std::get<Circulation>(rad), networks);

    // Restrict to the original graph: original vertices keep their
    // coordinates; every input edge is recovered from its fragment chain,
    // which is collinear because split vertices are straight.
    const PlaneGraph& g = rep.graph();
    const PlaneGraph& rg = rect.rect.graph();
    Drawing out;
    out.circumference = full.circumference;
    out.vertex.assign(full.vertex.begin(), full.vertex.begin() + g.vertex_count());
    out.edge.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId at = g.tail(2 * e);
        EdgeId prev = kInvalidId;
        Direction dir = Direction::Right;
        std::int64_t length = 0;
        while (at != g.head(2 * e) || prev == kInvalidId) {
            DartId next = kInvalidId;
            for (DartId d : rg.darts_at(at))
                if (rect.edge_origin[edge_of(d)] == e && edge_of(d) != prev)
                    next = d;
            require(next != kInvalidId, ErrorCode::InternalInvariantBroken,
                    "fragment chain does not reconnect the original edge");
            if (prev == kInvalidId)
                dir = rect.rect.direction(next);
            else
                require(rect.rect.direction(next) == dir, ErrorCode::InternalInvariantBroken,
                        "split-edge fragments are not collinear");
            length += full.edge[edge_of(next)].length;
            prev = edge_of(next);
            at = rg.head(next);
        }
        out.edge[e] = {dir, length};
    }
    return out;
}

Representation extract_representation(const PlaneGraph& graph, const Drawing& drawing) {
    std::vector<Direction> dir(graph.dart_count());
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        dir[2 * e] = drawing.edge[e].dir;
        dir[2 * e + 1] = opposite(drawing.edge[e].dir);
    }
    return Representation(graph, angles_from_directions(graph, dir));
}

} // namespace orthoradial
