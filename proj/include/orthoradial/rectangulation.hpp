#pragma once

#include <optional>
#include <vector>

#include "orthoradial/validity.hpp"

namespace orthoradial {

// A left turn on a regular face, identified by the face corner: the corner
// sits at head(boundary[corner_index]) between that dart and the next one.
struct LeftTurn {
    FaceId face;
    int corner_index;
    VertexId vertex;
};

// First left turn (corner angle 270 or 360) on a regular face whose next two
// turns along the face are right turns, or nothing when every regular face
// is a rectangle.
std::optional<LeftTurn> find_left_turn(const Representation& rep);

// Candidate target edges for resolving the left turn: the darts e on the
// face with rot(face[u, e]) = 2, in face order.  Splitting a candidate and
// inserting the new edge keeps Conditions 1-2 intact.
std::vector<DartId> candidates(const Representation& rep, const LeftTurn& turn);

struct AugmentTarget {
    enum class Kind { SplitEdge, ExistingVertex } kind = Kind::SplitEdge;
    DartId candidate = kInvalidId; // SplitEdge: a dart from candidates()
    VertexId vertex = kInvalidId;  // ExistingVertex: z with a free facing port

    static AugmentTarget split(DartId candidate) {
        return {Kind::SplitEdge, candidate, kInvalidId};
    }
    static AugmentTarget at_vertex(VertexId z) {
        return {Kind::ExistingVertex, kInvalidId, z};
    }
};

// The augmentation: inserts the edge u->z inside the face, pointing in the
// same direction as the face edge entering u; z is either a new vertex
// splitting the candidate edge or an existing vertex with a free port
// facing u.
Representation augment(const Representation& rep, const LeftTurn& turn,
                       const AugmentTarget& target);

// How one resolution step picked its augmentation; kept for diagnostics and
// the termination/progress assertions in tests.
struct RectangulationStep {
    VertexId vertex;
    bool vertical;                // case 1: the edge entering u is vertical
    int candidates_tried = 0;     // validations before success (case 2)
    bool used_vertex_fallback = false;
    VertexId fallback_vertex = kInvalidId;
    int left_turns_after = 0;
};

// Resolves one left turn, preserving validity; strictly decreases the number
// of left turns on regular faces.
Representation resolve_left_turn(const Representation& rep, const LeftTurn& turn,
                                 RectangulationStep* step = nullptr,
                                 const ValidateOptions& options = {});

// Provenance of the rectangulated instance relative to the input graph.
struct RectangulationResult {
    Representation rect;
    std::vector<VertexId> added_vertices;
    std::vector<EdgeId> added_edges;
    // Per edge of rect: the input edge it is a fragment of, or kInvalidId
    // for inserted helper edges.
    std::vector<EdgeId> edge_origin;
    std::vector<RectangulationStep> steps;
};

// Replaces the central and outer faces by inserted length-3 cycles so that
// neither makes any turns; the rest of the graph is untouched.  For inputs
// whose outer face is also central this is the step that separates them.
Representation rectangulate_outer_central(const Representation& rep);

// Full rectangulation: triangle insertion, then left-turn resolution until
// every face is a rectangle.  Requires a valid representation.
RectangulationResult rectangulate(const Representation& rep,
                                  const ValidateOptions& options = {});

// Number of left turns over all regular faces (a 360 corner counts twice).
int count_left_turns(const Representation& rep);

// The simple essential cycle bounding the central face, clockwise; requires
// the outer face to differ from the central one.
EssentialCycle central_boundary_cycle(const PlaneGraph& graph);

// True when every face of the representation is a rectangle.
bool is_rectangular(const Representation& rep);

} // namespace orthoradial
