#include "orthoradial/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

namespace orthoradial {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonPlanarRotation: return "NonPlanarRotation";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::BadReferenceDart: return "BadReferenceDart";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::AmbiguousEndpoint: return "AmbiguousEndpoint";
    case ErrorCode::NotOnContainer: return "NotOnContainer";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::PreconditionsUnchecked: return "PreconditionsUnchecked";
    case ErrorCode::CycleLimitExceeded: return "CycleLimitExceeded";
    case ErrorCode::NoCommonCentralFaceVertex: return "NoCommonCentralFaceVertex";
    case ErrorCode::NotACandidate: return "NotACandidate";
    case ErrorCode::PortOccupied: return "PortOccupied";
    case ErrorCode::InternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::InconsistentClosure: return "InconsistentClosure";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    }
    return "UnknownError";
}

int RawGraph::add_vertex(std::string name) {
    vertex_names.push_back(std::move(name));
    rotation.emplace_back();
    return static_cast<int>(vertex_names.size()) - 1;
}

namespace {

// Resolves a (tail, head, parallel) triple against the dart table built by
// pairing rotation slots.
DartId resolve_dart_ref(const RawGraph::DartRef& ref,
                        const std::map<std::tuple<int, int, int>, DartId>& dart_by_ref,
                        const char* what) {
    auto it = dart_by_ref.find({ref.tail, ref.head, ref.parallel});
    require(it != dart_by_ref.end(), ErrorCode::SemanticError,
            std::string(what) + " designation names a dart that does not exist");
    return it->second;
}

} // namespace

PlaneGraph build_plane_graph(const RawGraph& raw) {
    const int n = static_cast<int>(raw.vertex_names.size());
    require(n > 0, ErrorCode::SemanticError, "graph has no vertices");
    require(static_cast<int>(raw.rotation.size()) == n, ErrorCode::SemanticError,
            "rotation table does not cover every vertex");

    PlaneGraph g;
    g.vertex_names_ = raw.vertex_names;
    g.darts_at_.resize(n);

    // Pair up the two endpoint slots of every edge.  Slot (u, v, k) matches
    // slot (v, u, k); unmatched or doubly matched slots mean the rotation
    // lists are not an involution.
    std::map<std::tuple<int, int, int>, DartId> dart_by_ref;
    for (VertexId u = 0; u < n; ++u) {
        require(static_cast<int>(raw.rotation[u].size()) <= 4, ErrorCode::DegreeExceeded,
                "vertex " + raw.vertex_names[u] + " has degree > 4");
        for (const RawGraph::Slot& slot : raw.rotation[u]) {
            require(slot.neighbor >= 0 && slot.neighbor < n, ErrorCode::SemanticError,
                    "rotation of " + raw.vertex_names[u] + " names an unknown vertex");
            require(slot.neighbor != u, ErrorCode::SemanticError,
                    "self-loops are not supported (vertex " + raw.vertex_names[u] + ")");
            auto key = std::make_tuple(u, slot.neighbor, slot.parallel);
            require(!dart_by_ref.count(key), ErrorCode::SemanticError,
                    "duplicate rotation slot at " + raw.vertex_names[u]);
            DartId d = kInvalidId;
            auto mate = dart_by_ref.find({slot.neighbor, u, slot.parallel});
            if (mate != dart_by_ref.end()) {
                d = twin(mate->second);
                require(g.dart_tail_[d] == kInvalidId, ErrorCode::SemanticError,
                        "edge slot matched twice between " + raw.vertex_names[u] + " and " +
                            raw.vertex_names[slot.neighbor]);
            } else {
                d = static_cast<DartId>(g.dart_tail_.size());
                g.dart_tail_.push_back(kInvalidId);
                g.dart_tail_.push_back(kInvalidId);
                g.parallel_.push_back(slot.parallel);
                g.parallel_.push_back(slot.parallel);
            }
            g.dart_tail_[d] = u;
            dart_by_ref[key] = d;
            g.darts_at_[u].push_back(d);
        }
    }
    for (DartId d = 0; d < static_cast<int>(g.dart_tail_.size()); ++d)
        require(g.dart_tail_[d] != kInvalidId, ErrorCode::SemanticError,
                "rotation lists leave an edge slot unmatched");
    require(!g.dart_tail_.empty(), ErrorCode::SemanticError, "graph has no edges");

    // cw/ccw successor around the tail vertex.
    g.cw_next_.assign(g.dart_tail_.size(), kInvalidId);
    g.ccw_next_.assign(g.dart_tail_.size(), kInvalidId);
    for (VertexId v = 0; v < n; ++v) {
        const auto& ring = g.darts_at_[v];
        const int deg = static_cast<int>(ring.size());
        for (int i = 0; i < deg; ++i) {
            g.cw_next_[ring[i]] = ring[(i + 1) % deg];
            g.ccw_next_[ring[i]] = ring[(i + deg - 1) % deg];
        }
    }

    // Connectivity.
    {
        std::vector<char> seen(n, 0);
        std::queue<VertexId> queue;
        queue.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (DartId d : g.darts_at_[v]) {
                VertexId w = g.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push(w);
                }
            }
        }
        require(reached == n, ErrorCode::Disconnected, "graph is not connected");
    }

    // Face tracing: each dart lies on exactly one face, with the face to its
    // right; the successor of d is ccw-next after twin(d) at head(d).
    g.face_of_.assign(g.dart_tail_.size(), kInvalidId);
    for (DartId start = 0; start < static_cast<int>(g.dart_tail_.size()); ++start) {
        if (g.face_of_[start] != kInvalidId)
            continue;
        Face face;
        face.id = static_cast<FaceId>(g.faces_.size());
        DartId d = start;
        do {
            assert(g.face_of_[d] == kInvalidId);
            g.face_of_[d] = face.id;
            face.boundary.push_back(d);
            d = g.next_on_face(d);
        } while (d != start);
        g.faces_.push_back(std::move(face));
    }

    const int euler = n - g.edge_count() + g.face_count();
    require(euler == 2, ErrorCode::NonPlanarRotation,
            "rotation system is not planar (V-E+F = " + std::to_string(euler) + ")");

    // Designations.
    DartId outer_dart = resolve_dart_ref(raw.outer, dart_by_ref, "outer");
    DartId central_dart = resolve_dart_ref(raw.central, dart_by_ref, "central");
    g.outer_face_ = g.face_of_[outer_dart];
    g.central_face_ = g.face_of_[central_dart];
    if (g.outer_face_ == g.central_face_) {
        require(raw.outer_and_central, ErrorCode::SemanticError,
                "outer and central designations coincide without the outer-and-central flag");
        g.faces_[g.outer_face_].kind = FaceKind::OuterAndCentral;
    } else {
        require(!raw.outer_and_central, ErrorCode::SemanticError,
                "outer-and-central flag set but the designated faces differ");
        g.faces_[g.outer_face_].kind = FaceKind::Outer;
        g.faces_[g.central_face_].kind = FaceKind::Central;
    }

    g.reference_dart_ = resolve_dart_ref(raw.reference, dart_by_ref, "reference");
    require(g.face_of_[twin(g.reference_dart_)] == g.outer_face_, ErrorCode::BadReferenceDart,
            "reference dart must have the outer face locally to its left");

    return g;
}

DartId PlaneGraph::find_dart(VertexId tail_v, VertexId head_v, int parallel) const {
    for (DartId d : darts_at_[tail_v])
        if (head(d) == head_v && parallel_[d] == parallel)
            return d;
    return kInvalidId;
}

bool is_dart_chain(const PlaneGraph& graph, std::span<const DartId> darts) {
    for (size_t i = 0; i + 1 < darts.size(); ++i)
        if (graph.head(darts[i]) != graph.tail(darts[i + 1]))
            return false;
    return true;
}

bool is_closed_chain(const PlaneGraph& graph, std::span<const DartId> darts) {
    return !darts.empty() && is_dart_chain(graph, darts) &&
           graph.head(darts.back()) == graph.tail(darts.front());
}

bool is_vertex_simple_cycle(const PlaneGraph& graph, std::span<const DartId> darts) {
    if (!is_closed_chain(graph, darts))
        return false;
    std::vector<char> seen(graph.vertex_count(), 0);
    for (DartId d : darts) {
        VertexId v = graph.tail(d);
        if (seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<DartId> reversed_path(std::span<const DartId> darts) {
    std::vector<DartId> out;
    out.reserve(darts.size());
    for (auto it = darts.rbegin(); it != darts.rend(); ++it)
        out.push_back(twin(*it));
    return out;
}

namespace {

int find_unique_position(const PlaneGraph& graph, std::span<const DartId> container,
                         SeqRef ref, bool as_tail) {
    int pos = -1;
    if (ref.kind == SeqRef::Kind::Dart) {
        for (size_t i = 0; i < container.size(); ++i) {
            if (container[i] == ref.dart) {
                // Faces never repeat a dart; other containers should not
                // either since each directed edge is used at most once.
                require(pos < 0, ErrorCode::AmbiguousEndpoint, "dart occurs twice on container");
                pos = static_cast<int>(i);
            }
        }
        require(pos >= 0, ErrorCode::NotOnContainer, "dart endpoint not on container");
    } else {
        for (size_t i = 0; i < container.size(); ++i) {
            VertexId v = as_tail ? graph.tail(container[i]) : graph.head(container[i]);
            if (v == ref.vertex) {
                require(pos < 0, ErrorCode::AmbiguousEndpoint,
                        "vertex endpoint occurs more than once on container");
                pos = static_cast<int>(i);
            }
        }
        require(pos >= 0, ErrorCode::NotOnContainer, "vertex endpoint not on container");
    }
    return pos;
}

} // namespace

std::vector<DartId> subpath(const PlaneGraph& graph, std::span<const DartId> container,
                            bool cyclic, SeqRef from, SeqRef to) {
    require(!container.empty(), ErrorCode::NotOnContainer, "empty container");
    assert(is_dart_chain(graph, container));

    // "from" names the first dart (by dart or by its tail vertex), "to" the
    // last dart (by dart or by its head vertex).  Note subpath(C, e, e) is
    // the single-edge path while the vertex form subpath(C, v, v) resolves
    // to start = stop + 1 and therefore wraps around the whole cycle.
    const int size = static_cast<int>(container.size());
    const int start = find_unique_position(graph, container, from, /*as_tail=*/true);
    const int stop = find_unique_position(graph, container, to, /*as_tail=*/false);

    std::vector<DartId> out;
    if (start <= stop) {
        for (int i = start; i <= stop; ++i)
            out.push_back(container[i]);
    } else {
        require(cyclic, ErrorCode::NotOnContainer, "endpoints out of order on a path");
        for (int i = start; i < size; ++i)
            out.push_back(container[i]);
        for (int i = 0; i <= stop; ++i)
            out.push_back(container[i]);
    }
    return out;
}

CycleSides cycle_sides(const PlaneGraph& graph, std::span<const DartId> cycle) {
    require(is_closed_chain(graph, cycle), ErrorCode::NotACycle,
            "cycle_sides requires a closed dart chain");
    require(is_vertex_simple_cycle(graph, cycle), ErrorCode::NotSimple,
            "cycle_sides requires a simple cycle");

    std::vector<char> on_cycle(graph.dart_count(), 0);
    for (DartId d : cycle) {
        on_cycle[d] = 1;
        on_cycle[twin(d)] = 1;
    }

    // Dual BFS that never crosses the cycle: the right side of the cycle
    // darts seeds the interior, the left side the exterior.  By the Jordan
    // curve property this reaches every face exactly once.
    enum : int8_t { kUnset = -1, kExterior = 0, kInterior = 1 };
    std::vector<int8_t> side(graph.face_count(), kUnset);
    std::queue<FaceId> queue;
    auto seed = [&](FaceId f, int8_t s) {
        require(side[f] == kUnset || side[f] == s, ErrorCode::NotSimple,
                "cycle does not separate the plane");
        if (side[f] == kUnset) {
            side[f] = s;
            queue.push(f);
        }
    };
    for (DartId d : cycle) {
        seed(graph.face_of(d), kInterior);
        seed(graph.face_of(twin(d)), kExterior);
    }
    while (!queue.empty()) {
        FaceId f = queue.front();
        queue.pop();
        for (DartId d : graph.face(f).boundary) {
            if (on_cycle[d])
                continue;
            FaceId other = graph.face_of(twin(d));
            require(side[other] == kUnset || side[other] == side[f], ErrorCode::NotSimple,
                    "cycle sides are inconsistent");
            if (side[other] == kUnset) {
                side[other] = side[f];
                queue.push(other);
            }
        }
    }
    for (int8_t s : side) {
        assert(s != kUnset);
        (void)s;
    }

    CycleSides result;
    result.interior.assign(side.begin(), side.end());
    result.essential = side[graph.central_face()] != side[graph.outer_face()];
    result.clockwise = side[graph.outer_face()] == kExterior;
    return result;
}

} // namespace orthoradial
