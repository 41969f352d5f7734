#include "orthoradial/rectangulation.hpp"

#include <algorithm>
#include <cassert>

#include "orthoradial/cycles.hpp"

namespace orthoradial {

namespace {

// Mutable edge-list view of a representation.  Augmentations edit the list
// and rebuild; directions carry over, angles are re-derived, faces re-traced.
// `origin` tracks, per edge slot, the input edge it is a fragment of.
struct Workspace {
    DirectedGraphSpec spec;
    std::vector<EdgeId> origin;

    static Workspace from(const Representation& rep, std::vector<EdgeId> edge_origin) {
        const PlaneGraph& g = rep.graph();
        Workspace w;
        w.spec.vertex_names = g.vertex_names();
        w.origin = std::move(edge_origin);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            DartId d = 2 * e;
            w.spec.edges.push_back({g.tail(d), g.head(d), rep.direction(d)});
        }
        auto designate = [&](DartId dart, int& edge, bool& along) {
            edge = edge_of(dart);
            along = (dart % 2) == 0;
        };
        designate(g.face(g.outer_face()).boundary.front(), w.spec.outer_edge,
                  w.spec.outer_along);
        designate(g.face(g.central_face()).boundary.front(), w.spec.central_edge,
                  w.spec.central_along);
        designate(g.reference_dart(), w.spec.reference_edge, w.spec.reference_along);
        w.spec.outer_and_central = g.outer_face() == g.central_face();
        return w;
    }

    int add_vertex() {
        int id = static_cast<int>(spec.vertex_names.size());
        spec.vertex_names.push_back("aux" + std::to_string(id));
        return id;
    }

    int add_edge(VertexId tail, VertexId head, Direction dir, EdgeId orig = kInvalidId) {
        spec.edges.push_back({tail, head, dir});
        origin.push_back(orig);
        return static_cast<int>(spec.edges.size()) - 1;
    }

    // Splits spec edge `index` at a fresh vertex; both fragments keep the
    // origin.  Designations naming the reversed dart move to the second
    // fragment, whose tail is the old head.
    VertexId split_edge(int index) {
        VertexId z = add_vertex();
        DirectedEdgeSpec old = spec.edges[index];
        int second = add_edge(z, old.head, old.dir, origin[index]);
        spec.edges[index] = {old.tail, z, old.dir};
        auto remap = [&](int& edge, bool along) {
            if (edge == index && !along)
                edge = second;
        };
        remap(spec.outer_edge, spec.outer_along);
        remap(spec.central_edge, spec.central_along);
        remap(spec.reference_edge, spec.reference_along);
        return z;
    }
};

struct Rebuilt {
    Representation rep;
    std::vector<EdgeId> origin; // per edge id of rep.graph()
};

// Builds the workspace and reorders the origin list to the edge ids of the
// new graph.
Rebuilt rebuild(const Workspace& w) {
    std::vector<DartId> edge_darts;
    Representation rep = representation_from_directions(w.spec, &edge_darts);
    std::vector<EdgeId> origin(rep.graph().edge_count(), kInvalidId);
    for (size_t i = 0; i < edge_darts.size(); ++i)
        origin[edge_of(edge_darts[i])] = w.origin[i];
    return {std::move(rep), std::move(origin)};
}

int corner_angle(const Representation& rep, FaceId f, int corner) {
    const Face& face = rep.graph().face(f);
    return rep.angle(face.boundary[corner]);
}

// Free port check: no dart at `v` leaves in direction `dir`.
bool port_free(const Representation& rep, VertexId v, Direction dir) {
    for (DartId d : rep.graph().darts_at(v))
        if (rep.direction(d) == dir)
            return false;
    return true;
}

// Whether some corner of face f at vertex z spans the given bearing, i.e. an
// edge inserted at z in that direction would land inside f.
bool face_corner_contains(const Representation& rep, FaceId f, VertexId z, Direction bearing) {
    const PlaneGraph& g = rep.graph();
    const Face& face = g.face(f);
    for (size_t i = 0; i < face.boundary.size(); ++i) {
        DartId d = face.boundary[i];
        if (g.head(d) != z)
            continue;
        DartId next = face.boundary[(i + 1) % face.boundary.size()];
        // The corner spans clockwise from `next` to twin(d).
        int from = static_cast<int>(rep.direction(next));
        int width = rep.angle(d) / 90;
        for (int k = 1; k < width; ++k)
            if ((from + k) % 4 == static_cast<int>(bearing))
                return true;
    }
    return false;
}

// Direction of the inserted edge: it continues the edge entering the left
// turn.  A 360 corner (degree-1 vertex) counts as two left turns with a cap
// edge in between; resolving its second turn continues that cap, one quarter
// turn left of the incoming dart.
Direction insertion_direction(const Representation& rep, const LeftTurn& turn) {
    DartId incoming = rep.graph().face(turn.face).boundary[turn.corner_index];
    Direction dir = rep.direction(incoming);
    return rep.angle(incoming) == 360 ? turned(dir, -1) : dir;
}

Rebuilt augment_impl(const Representation& rep, std::vector<EdgeId> edge_origin,
                     const LeftTurn& turn, const AugmentTarget& target) {
    const PlaneGraph& g = rep.graph();
    const Face& face = g.face(turn.face);
    DartId incoming = face.boundary[turn.corner_index];
    VertexId u = g.head(incoming);
    Direction insert_dir = insertion_direction(rep, turn);
    require(rep.angle(incoming) >= 270, ErrorCode::NotACandidate,
            "augmentation requires a left turn at the chosen corner");
    require(port_free(rep, u, insert_dir), ErrorCode::PortOccupied,
            "the port continuing the incoming edge at u is taken");

    Workspace w = Workspace::from(rep, std::move(edge_origin));
    VertexId z;
    if (target.kind == AugmentTarget::Kind::SplitEdge) {
        auto cands = candidates(rep, turn);
        require(std::find(cands.begin(), cands.end(), target.candidate) != cands.end(),
                ErrorCode::NotACandidate, "target dart is not a candidate of this left turn");
        z = w.split_edge(edge_of(target.candidate));
    } else {
        z = target.vertex;
        require(port_free(rep, z, opposite(insert_dir)), ErrorCode::PortOccupied,
                "no free port facing u at the target vertex");
        require(face_corner_contains(rep, turn.face, z, opposite(insert_dir)),
                ErrorCode::NotACandidate,
                "the free port of the target vertex does not open into the face");
    }
    w.add_edge(u, z, insert_dir);

    Rebuilt out = rebuild(w);
    require(out.rep.conditions12_hold(), ErrorCode::InternalInvariantBroken,
            "augmentation broke Conditions 1-2");
    return out;
}

std::vector<EdgeId> identity_origin(const Representation& rep) {
    std::vector<EdgeId> origin(rep.graph().edge_count());
    for (EdgeId e = 0; e < rep.graph().edge_count(); ++e)
        origin[e] = e;
    return origin;
}

} // namespace

std::optional<LeftTurn> find_left_turn(const Representation& rep) {
    const PlaneGraph& g = rep.graph();
    for (const Face& f : g.faces()) {
        if (f.kind != FaceKind::Regular)
            continue;
        const int n = static_cast<int>(f.boundary.size());
        for (int i = 0; i < n; ++i) {
            if (corner_angle(rep, f.id, i) < 270)
                continue;
            // Only resolve left turns whose next two turns are right turns;
            // one always exists while any regular face has a left turn.
            int rights = 0;
            for (int j = 1; j < n; ++j) {
                int a = corner_angle(rep, f.id, (i + j) % n);
                if (a == 180)
                    continue;
                if (a != 90)
                    rights = -1;
                else
                    ++rights;
                if (rights == 2 || rights < 0)
                    break;
            }
            if (rights == 2)
                return LeftTurn{f.id, i, g.head(f.boundary[i])};
        }
    }
    return std::nullopt;
}

namespace {

// Candidate walk around the face.  Besides the rot-2 edges it also yields
// the conceptual cap slots of degree-1 vertices (a 360 corner counts as two
// left turns with an edge in between, and that edge can be a candidate);
// those are resolved by connecting to the vertex directly.
struct CandidateSlot {
    bool is_cap;
    DartId dart;     // prefix-2 edge on the face, or the dart entering the cap
    VertexId vertex; // cap owner for is_cap
};

std::vector<CandidateSlot> candidate_slots(const Representation& rep, const LeftTurn& turn) {
    const PlaneGraph& g = rep.graph();
    const Face& f = g.face(turn.face);
    const int n = static_cast<int>(f.boundary.size());
    std::vector<CandidateSlot> out;
    int prefix = 0;
    for (int j = 1; j < n; ++j) {
        DartId e = f.boundary[(turn.corner_index + j) % n];
        if (j > 1) {
            DartId before = f.boundary[(turn.corner_index + j - 1) % n];
            if (rep.angle(before) == 360 && prefix - 1 == 2)
                out.push_back({true, before, g.head(before)});
            prefix += 2 - rep.angle(before) / 90;
        }
        if (prefix == 2)
            out.push_back({false, e, kInvalidId});
    }
    return out;
}

} // namespace

std::vector<DartId> candidates(const Representation& rep, const LeftTurn& turn) {
    std::vector<DartId> out;
    for (const CandidateSlot& slot : candidate_slots(rep, turn))
        if (!slot.is_cap)
            out.push_back(slot.dart);
    return out;
}

Representation augment(const Representation& rep, const LeftTurn& turn,
                       const AugmentTarget& target) {
    return augment_impl(rep, identity_origin(rep), turn, target).rep;
}

int count_left_turns(const Representation& rep) {
    int count = 0;
    for (const Face& f : rep.graph().faces()) {
        if (f.kind != FaceKind::Regular)
            continue;
        for (DartId d : f.boundary) {
            if (rep.angle(d) == 270)
                count += 1;
            else if (rep.angle(d) == 360)
                count += 2;
        }
    }
    return count;
}

bool is_rectangular(const Representation& rep) {
    if (!rep.conditions12_hold())
        return false;
    for (const Face& f : rep.graph().faces()) {
        if (f.kind == FaceKind::OuterAndCentral)
            return false;
        for (DartId d : f.boundary) {
            int a = rep.angle(d);
            if (f.kind == FaceKind::Regular ? a >= 270 : a != 180)
                return false;
        }
    }
    return true;
}

namespace {

bool report_has_kind(const ValidityReport& report, MonotoneKind kind) {
    for (const auto& cert : report.monotone_cycles)
        if (cert.kind == kind)
            return true;
    return false;
}

struct StepInternal {
    Rebuilt rebuilt;
    RectangulationStep log;
};

StepInternal resolve_impl(const Representation& rep, const std::vector<EdgeId>& edge_origin,
                          const LeftTurn& turn, const ValidateOptions& options) {
    const PlaneGraph& g = rep.graph();
    Direction dir = insertion_direction(rep, turn);
    auto slots = candidate_slots(rep, turn);
    require(!slots.empty(), ErrorCode::InternalInvariantBroken,
            "a left turn on a rot-4 face always has a candidate");

    RectangulationStep log;
    log.vertex = turn.vertex;
    log.vertical = !is_horizontal(dir);

    auto attempt = [&](const CandidateSlot& slot) {
        AugmentTarget target = slot.is_cap ? AugmentTarget::at_vertex(slot.vertex)
                                           : AugmentTarget::split(slot.dart);
        return augment_impl(rep, edge_origin, turn, target);
    };

    if (log.vertical) {
        // Case 1: continuing a vertical edge into the first candidate always
        // keeps the representation valid; no validation retries.
        return {attempt(slots.front()), log};
    }

    // Case 2: try the candidates in face order, keep the first valid
    // augmentation.
    std::vector<ValidityReport> reports;
    for (const CandidateSlot& slot : slots) {
        Rebuilt rebuilt = attempt(slot);
        ValidityReport report = validate(rebuilt.rep, options);
        require(!report.inconclusive, ErrorCode::CycleLimitExceeded,
                "cycle cap hit while validating an augmentation");
        ++log.candidates_tried;
        if (report.valid) {
            log.used_vertex_fallback = slot.is_cap;
            log.fallback_vertex = slot.is_cap ? slot.vertex : kInvalidId;
            return {std::move(rebuilt), log};
        }
        reports.push_back(std::move(report));
    }

    // Every candidate introduces a monotone cycle.  The first one never
    // yields an increasing cycle and the last never a decreasing one; this
    // holds for both insertion directions, since mirroring the cylinder
    // flips the kinds and the candidate order together.  Some consecutive
    // pair therefore fails decreasing-then-increasing, and the new edge can
    // attach directly to an endpoint between them.
    auto endpoint_after = [&](const CandidateSlot& s) {
        return s.is_cap ? s.vertex : g.head(s.dart);
    };
    auto endpoint_before = [&](const CandidateSlot& s) {
        return s.is_cap ? s.vertex : g.tail(s.dart);
    };
    for (size_t k = 0; k + 1 < slots.size(); ++k) {
        if (!report_has_kind(reports[k], MonotoneKind::Decreasing) ||
            !report_has_kind(reports[k + 1], MonotoneKind::Increasing))
            continue;
        for (VertexId z : {endpoint_after(slots[k]), endpoint_before(slots[k + 1])}) {
            if (z == turn.vertex || !port_free(rep, z, opposite(dir)) ||
                !face_corner_contains(rep, turn.face, z, opposite(dir)))
                continue;
            Rebuilt rebuilt = augment_impl(rep, edge_origin, turn, AugmentTarget::at_vertex(z));
            ValidityReport report = validate(rebuilt.rep, options);
            if (!report.valid)
                continue;
            log.used_vertex_fallback = true;
            log.fallback_vertex = z;
            return {std::move(rebuilt), log};
        }
    }
    fail(ErrorCode::InternalInvariantBroken,
         "no valid augmentation found for a left turn in a valid representation");
}

// The workspace with the central triangle hooked below the given dart.
Workspace hook_central_triangle(const Representation& rep,
                                const std::vector<EdgeId>& edge_origin, DartId central_hook) {
    Workspace w = Workspace::from(rep, edge_origin);
    VertexId z = w.split_edge(edge_of(central_hook));
    VertexId p1 = w.add_vertex(), p2 = w.add_vertex(), p3 = w.add_vertex();
    w.add_edge(z, p1, Direction::Down);
    int p12 = w.add_edge(p1, p2, Direction::Right);
    w.add_edge(p2, p3, Direction::Right);
    w.add_edge(p3, p1, Direction::Right);
    w.spec.central_edge = p12;
    w.spec.central_along = true;
    // The ring separates the central face from the outer one even when they
    // coincided before.
    w.spec.outer_and_central = false;
    return w;
}

// Labels of the freshly inserted central ring (constant along it); the
// insertion is sound only when they are zero.
int central_ring_label(const Rebuilt& rebuilt) {
    const PlaneGraph& g = rebuilt.rep.graph();
    EssentialCycle ring{g.face(g.central_face()).boundary};
    CycleLabeling l = labeling(rebuilt.rep, ring);
    return l.labels.front();
}

Rebuilt rectangulate_outer_central_impl(const Representation& rep,
                                        std::vector<EdgeId> edge_origin) {
    const PlaneGraph& g = rep.graph();

    // Hook for the central triangle: an east-pointing dart with the central
    // face to its right whose rotation level makes the inserted ring flat.
    // With essential cycles present that is exactly a label-0 dart of the
    // central boundary cycle.  Without them (outer = central) the level of
    // an east dart is not determined before the insertion, so the east darts
    // of the face are probed until the inserted ring carries label 0.
    Workspace with_central;
    bool hooked = false;
    if (g.outer_face() != g.central_face()) {
        EssentialCycle cycle = central_boundary_cycle(g);
        CycleLabeling l = labeling(rep, cycle);
        DartId central_hook = kInvalidId;
        for (size_t i = 0; i < cycle.darts.size(); ++i) {
            if (l.labels[i] != 0)
                continue;
            central_hook = cycle.darts[i];
            if (edge_of(central_hook) != edge_of(g.reference_dart()))
                break; // prefer a hook away from the reference edge
        }
        require(central_hook != kInvalidId, ErrorCode::InternalInvariantBroken,
                "no label-0 edge on the central boundary of a valid representation");
        with_central = hook_central_triangle(rep, edge_origin, central_hook);
        hooked = true;
    } else {
        for (DartId d : g.face(g.central_face()).boundary) {
            if (rep.direction(d) != Direction::Right)
                continue;
            Workspace probe = hook_central_triangle(rep, edge_origin, d);
            if (central_ring_label(rebuild(probe)) == 0) {
                with_central = std::move(probe);
                hooked = true;
                break;
            }
        }
    }
    require(hooked, ErrorCode::InternalInvariantBroken,
            "no hook position yields a flat central ring");
    Workspace w = std::move(with_central);

    // Split the current reference edge at m and enclose everything in the
    // new outer triangle; the new reference dart lies on it.
    {
        VertexId m = w.split_edge(w.spec.reference_edge);
        VertexId q1 = w.add_vertex(), q2 = w.add_vertex(), q3 = w.add_vertex();
        w.add_edge(m, q1, Direction::Up);
        int q12 = w.add_edge(q1, q2, Direction::Right);
        w.add_edge(q2, q3, Direction::Right);
        w.add_edge(q3, q1, Direction::Right);
        w.spec.outer_edge = q12;
        w.spec.outer_along = false;
        w.spec.reference_edge = q12;
        w.spec.reference_along = true;
        w.spec.outer_and_central = false;
    }

    Rebuilt out = rebuild(w);
    require(out.rep.conditions12_hold(), ErrorCode::InternalInvariantBroken,
            "triangle insertion broke Conditions 1-2");
    return out;
}

} // namespace

// The simple essential cycle bounding the central face: the boundary walk
// with doubly-traversed edges removed, decomposed into simple cycles at
// repeated vertices, of which exactly one separates center from outer face.
EssentialCycle central_boundary_cycle(const PlaneGraph& g) {
    const std::vector<DartId>& walk = g.face(g.central_face()).boundary;
    std::vector<char> both(g.edge_count(), 0);
    {
        std::vector<char> seen(g.dart_count(), 0);
        for (DartId d : walk)
            seen[d] = 1;
        for (DartId d : walk)
            if (seen[twin(d)])
                both[edge_of(d)] = 1;
    }

    // Remaining darts have matched in/out degrees at every vertex.  Peel off
    // vertex-simple cycles with a stack walk.
    std::vector<std::vector<DartId>> out_darts(g.vertex_count());
    int remaining = 0;
    for (DartId d : walk)
        if (!both[edge_of(d)]) {
            out_darts[g.tail(d)].push_back(d);
            ++remaining;
        }
    require(remaining > 0, ErrorCode::InternalInvariantBroken,
            "central face boundary carries no cycle");

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
                CycleSides sides = cycle_sides(g, cycle);
                if (sides.essential)
                    return {sides.clockwise ? cycle : reversed_path(cycle)};
            } else {
                pos_of[at] = static_cast<int>(stack.size());
            }
        }
        pos_of[at] = -1;
        require(stack.empty(), ErrorCode::InternalInvariantBroken,
                "central boundary decomposition left an open walk");
    }
    fail(ErrorCode::InternalInvariantBroken,
         "no essential cycle on the central face boundary");
}

Representation resolve_left_turn(const Representation& rep, const LeftTurn& turn,
                                 RectangulationStep* step, const ValidateOptions& options) {
    StepInternal internal = resolve_impl(rep, identity_origin(rep), turn, options);
    internal.log.left_turns_after = count_left_turns(internal.rebuilt.rep);
    if (step)
        *step = internal.log;
    return std::move(internal.rebuilt.rep);
}

Representation rectangulate_outer_central(const Representation& rep) {
    return rectangulate_outer_central_impl(rep, identity_origin(rep)).rep;
}

RectangulationResult rectangulate(const Representation& rep, const ValidateOptions& options) {
    {
        ValidityReport report = validate(rep, options);
        require(!report.inconclusive, ErrorCode::CycleLimitExceeded,
                "cycle cap hit while validating the input");
        if (!report.valid)
            throw NotValidError(std::move(report));
    }

    const int original_vertices = rep.graph().vertex_count();

    Rebuilt state = rectangulate_outer_central_impl(rep, identity_origin(rep));
    RectangulationResult result{state.rep, {}, {}, {}, {}};
    while (auto turn = find_left_turn(state.rep)) {
        StepInternal internal = resolve_impl(state.rep, state.origin, *turn, options);
        internal.log.left_turns_after = count_left_turns(internal.rebuilt.rep);
        result.steps.push_back(internal.log);
        state = std::move(internal.rebuilt);
    }

    require(is_rectangular(state.rep), ErrorCode::InternalInvariantBroken,
            "rectangulation finished with a non-rectangular face");

    for (VertexId v = original_vertices; v < state.rep.graph().vertex_count(); ++v)
        result.added_vertices.push_back(v);
    for (EdgeId e = 0; e < state.rep.graph().edge_count(); ++e)
        if (state.origin[e] == kInvalidId)
            result.added_edges.push_back(e);
    result.edge_origin = state.origin;
    result.rect = std::move(state.rep);
    return result;
}

} // namespace orthoradial
