#include "orthoradial/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <random>

namespace orthoradial {

namespace {

// Canonical enumeration of all vertex-simple cycles: DFS paths anchored at
// the smallest vertex of the cycle.  Each undirected cycle is produced once:
// length >= 3 closes only when the second vertex is smaller than the last,
// length-2 cycles (parallel edges) only with increasing edge ids.
struct CycleEnumerator {
    const PlaneGraph& graph;
    std::int64_t budget;
    std::int64_t step_budget;
    std::vector<char> on_path;
    std::vector<DartId> path;
    std::vector<std::vector<DartId>> out;

    CycleEnumerator(const PlaneGraph& g, std::int64_t cap)
        : graph(g), budget(cap), step_budget(cap * 64) {
        on_path.assign(g.vertex_count(), 0);
    }

    void run() {
        for (VertexId v = 0; v < graph.vertex_count(); ++v) {
            on_path[v] = 1;
            extend(v, v);
            on_path[v] = 0;
        }
    }

    void extend(VertexId anchor, VertexId at) {
        require(--step_budget >= 0, ErrorCode::CycleLimitExceeded,
                "simple cycle search exceeded the configured cap");
        for (DartId d : graph.darts_at(at)) {
            VertexId w = graph.head(d);
            if (w == anchor && !path.empty()) {
                if (path.size() == 1) {
                    // two parallel edges
                    if (edge_of(path[0]) < edge_of(d))
                        emit(d);
                } else if (graph.head(path[0]) < at) {
                    emit(d);
                }
                continue;
            }
            if (w < anchor || on_path[w])
                continue;
            on_path[w] = 1;
            path.push_back(d);
            extend(anchor, w);
            path.pop_back();
            on_path[w] = 0;
        }
    }

    void emit(DartId closing) {
        require(--budget >= 0, ErrorCode::CycleLimitExceeded,
                "simple cycle enumeration exceeded the configured cap");
        std::vector<DartId> cycle = path;
        cycle.push_back(closing);
        out.push_back(std::move(cycle));
    }
};

} // namespace

std::vector<EssentialCycle> enumerate_essential_cycles(const PlaneGraph& graph,
                                                       const EnumerationLimits& limits) {
    CycleEnumerator enumerator(graph, limits.max_cycles);
    enumerator.run();

    std::vector<EssentialCycle> result;
    for (auto& darts : enumerator.out) {
        CycleSides sides = cycle_sides(graph, darts);
        if (!sides.essential)
            continue;
        if (!sides.clockwise)
            darts = reversed_path(darts);
        result.push_back({std::move(darts)});
    }

    // Deterministic order regardless of enumeration internals: by length,
    // then by the rotated-minimal vertex sequence.
    auto key = [&](const EssentialCycle& c) {
        int k = static_cast<int>(c.darts.size());
        int best = 0;
        for (int i = 1; i < k; ++i)
            if (graph.tail(c.darts[i]) < graph.tail(c.darts[best]))
                best = i;
        std::vector<int> seq;
        seq.reserve(k);
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

std::vector<DartId> elementary_path_impl(const PlaneGraph& graph, const EssentialCycle& cycle,
                                         std::uint64_t seed, bool shuffle) {
    std::vector<char> on_cycle_vertex(graph.vertex_count(), 0);
    std::vector<char> on_cycle_edge(graph.edge_count(), 0);
    for (DartId d : cycle.darts) {
        on_cycle_vertex[graph.tail(d)] = 1;
        on_cycle_edge[edge_of(d)] = 1;
    }

    VertexId s = graph.reference_head();
    if (on_cycle_vertex[s])
        return {};

    // BFS from s avoiding the cycle's edges and stopping at the first cycle
    // vertex.  Everything reached before first contact lies in the exterior
    // of C because s does (the reference dart borders the outer face).  The
    // path must not start by re-traversing the reference edge: that u-turn
    // has no well-defined side and would shift the labels by 4.
    std::vector<DartId> parent(graph.vertex_count(), kInvalidId);
    std::vector<char> seen(graph.vertex_count(), 0);
    std::mt19937_64 rng(seed);
    std::queue<VertexId> queue;
    seen[s] = 1;
    queue.push(s);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        std::vector<DartId> order = graph.darts_at(v);
        if (shuffle)
            std::shuffle(order.begin(), order.end(), rng);
        for (DartId d : order) {
            if (on_cycle_edge[edge_of(d)] || d == twin(graph.reference_dart()))
                continue;
            VertexId w = graph.head(d);
            if (seen[w])
                continue;
            seen[w] = 1;
            parent[w] = d;
            if (on_cycle_vertex[w]) {
                std::vector<DartId> path;
                for (DartId back = d; back != kInvalidId; back = parent[graph.tail(back)])
                    path.push_back(back);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push(w);
        }
    }
    fail(ErrorCode::InternalInvariantBroken,
         "no elementary path found in a connected graph");
}

} // namespace

std::vector<DartId> elementary_path(const PlaneGraph& graph, const EssentialCycle& cycle) {
    return elementary_path_impl(graph, cycle, 0, false);
}

std::vector<DartId> elementary_path_randomized(const PlaneGraph& graph,
                                               const EssentialCycle& cycle,
                                               std::uint64_t seed) {
    return elementary_path_impl(graph, cycle, seed, true);
}

int CycleLabeling::label_of(DartId d) const {
    for (size_t i = 0; i < cycle.darts.size(); ++i)
        if (cycle.darts[i] == d)
            return labels[i];
    fail(ErrorCode::NotOnContainer, "dart is not on the labeled cycle");
}

CycleLabeling labeling_via_path(const Representation& rep, const EssentialCycle& cycle,
                                std::span<const DartId> connecting_path) {
    require(rep.conditions12_hold(), ErrorCode::PreconditionsUnchecked,
            "labelings need Conditions 1-2 to hold");
    const PlaneGraph& g = rep.graph();

    // Rotation of reference dart + path, then fold in the cycle prefix dart
    // by dart.  The labels telescope: consecutive labels differ by the
    // rotation at the shared vertex.
    int rot = 0;
    DartId last = g.reference_dart();
    for (DartId d : connecting_path) {
        rot += rot_pair(rep, last, d);
        last = d;
    }
    VertexId arrival = g.head(last);

    int k = static_cast<int>(cycle.darts.size());
    int start = -1;
    for (int i = 0; i < k; ++i)
        if (g.tail(cycle.darts[i]) == arrival)
            start = i;
    require(start >= 0, ErrorCode::NotOnContainer, "connecting path does not reach the cycle");

    CycleLabeling out;
    out.cycle = cycle;
    out.labels.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        DartId d = cycle.darts[(start + i) % k];
        rot += rot_pair(rep, last, d);
        out.labels[(start + i) % k] = rot;
        last = d;
    }

    if (rep.directions_available()) {
        for (int i = 0; i < k; ++i) {
            int parity = ((out.labels[i] % 4) + 4) % 4;
            require(parity == static_cast<int>(rep.direction(out.cycle.darts[i])),
                    ErrorCode::InternalInvariantBroken,
                    "label parity disagrees with the dart direction");
        }
    }
    return out;
}

CycleLabeling labeling(const Representation& rep, const EssentialCycle& cycle) {
    return labeling_via_path(rep, cycle, elementary_path(rep.graph(), cycle));
}

std::vector<DartId> subgraph_face_boundary(const PlaneGraph& graph,
                                           std::span<const DartId> subgraph_darts,
                                           FaceId seed_face) {
    std::vector<char> in_subgraph(graph.edge_count(), 0);
    for (DartId d : subgraph_darts)
        in_subgraph[edge_of(d)] = 1;

    // Faces of G merge into one face of H when connected across edges not in
    // H.  Collect the region containing the seed face, then walk its border.
    std::vector<char> in_region(graph.face_count(), 0);
    std::queue<FaceId> queue;
    in_region[seed_face] = 1;
    queue.push(seed_face);
    while (!queue.empty()) {
        FaceId f = queue.front();
        queue.pop();
        for (DartId d : graph.face(f).boundary) {
            if (in_subgraph[edge_of(d)])
                continue;
            FaceId other = graph.face_of(twin(d));
            if (!in_region[other]) {
                in_region[other] = 1;
                queue.push(other);
            }
        }
    }

    auto is_boundary = [&](DartId d) {
        return in_subgraph[edge_of(d)] && in_region[graph.face_of(d)] &&
               !in_region[graph.face_of(twin(d))];
    };
    DartId start = kInvalidId;
    int boundary_count = 0;
    for (DartId d = 0; d < graph.dart_count(); ++d)
        if (is_boundary(d)) {
            ++boundary_count;
            if (start == kInvalidId)
                start = d;
        }
    if (start == kInvalidId)
        return {};

    // Trace the face of H by skipping darts of removed edges in the rotation;
    // this orders the boundary as a closed walk with the region to the right.
    std::vector<DartId> walk;
    DartId d = start;
    do {
        walk.push_back(d);
        DartId g_cur = graph.ccw_next(twin(d));
        while (!in_subgraph[edge_of(g_cur)])
            g_cur = graph.ccw_next(g_cur);
        d = g_cur;
    } while (d != start && static_cast<int>(walk.size()) <= boundary_count);
    require(d == start && static_cast<int>(walk.size()) == boundary_count,
            ErrorCode::InternalInvariantBroken,
            "subgraph face boundary is not a single closed walk");
    return walk;
}

IntersectionReport labels_at_intersection_check(const Representation& rep,
                                                const EssentialCycle& c1,
                                                const EssentialCycle& c2) {
    const PlaneGraph& g = rep.graph();

    std::vector<DartId> union_darts = c1.darts;
    union_darts.insert(union_darts.end(), c2.darts.begin(), c2.darts.end());
    std::vector<DartId> central_boundary =
        subgraph_face_boundary(g, union_darts, g.central_face());
    std::vector<char> on_central(g.vertex_count(), 0);
    for (DartId d : central_boundary)
        on_central[g.tail(d)] = 1;

    std::vector<DartId> out1(g.vertex_count(), kInvalidId), in1(g.vertex_count(), kInvalidId);
    std::vector<DartId> out2(g.vertex_count(), kInvalidId), in2(g.vertex_count(), kInvalidId);
    for (DartId d : c1.darts)
        out1[g.tail(d)] = d, in1[g.head(d)] = d;
    for (DartId d : c2.darts)
        out2[g.tail(d)] = d, in2[g.head(d)] = d;

    CycleLabeling l1 = labeling(rep, c1);
    CycleLabeling l2 = labeling(rep, c2);

    std::vector<char> central_dart(g.dart_count(), 0);
    for (DartId d : central_boundary)
        central_dart[d] = 1;

    IntersectionReport report;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!on_central[v] || out1[v] == kInvalidId || out2[v] == kInvalidId)
            continue;
        // Common vertex of both cycles on the central face of the union:
        // compare the incoming labels continued onto the outgoing dart that
        // bounds that central face (one of the two outgoing cycle darts
        // does; with the other continuation the turns of the two cycles can
        // differ by a full angle when their passages nest at v).
        DartId vw = central_dart[out1[v]] ? out1[v] : out2[v];
        if (!central_dart[vw])
            continue;
        long lhs = l1.label_of(in1[v]) + rot_pair(rep, in1[v], vw);
        long rhs = l2.label_of(in2[v]) + rot_pair(rep, in2[v], vw);
        IntersectionCheck check{v, lhs, rhs, false, lhs == rhs};
        report.checks.push_back(check);
        report.all_ok = report.all_ok && check.ok;

        if (out1[v] == out2[v]) {
            long a = l1.label_of(vw);
            long b = l2.label_of(vw);
            IntersectionCheck shared{v, a, b, true, a == b};
            report.checks.push_back(shared);
            report.all_ok = report.all_ok && shared.ok;
        }
    }
    require(!report.checks.empty(), ErrorCode::NoCommonCentralFaceVertex,
            "cycles share no vertex on the central face of their union");
    return report;
}

} // namespace orthoradial
