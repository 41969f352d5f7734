#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "orthoradial/rectangulation.hpp"

namespace orthoradial {

// Circulation network over the faces of a rectangular representation.  Every
// arc has lower bound 1 and unbounded capacity; node demands are zero.
struct FlowNetwork {
    struct Arc {
        int from;                  // node indices
        int to;
        EdgeId crossed = kInvalidId; // graph edge the arc crosses; kInvalidId
                                     // for the outer-to-central arc of N_rad
    };

    int node_count = 0;
    std::vector<Arc> arcs;
    std::vector<FaceId> node_face; // node index -> face
    std::vector<int> face_node;    // face -> node index or -1
    std::vector<int> arc_of_edge;  // edge -> arc index or -1
};

// N_ver: one node per regular face, one arc per vertical edge from the face
// left of its upward dart to the face on the right.  N_rad: one node per
// face, one arc per horizontal edge from the face below (right of the
// clockwise dart) to the face above, plus one arc from the outer face to the
// central face whose flow is the circumference.
struct Networks {
    FlowNetwork vertical;
    FlowNetwork radial;
};

Networks build_networks(const Representation& rect);

struct Circulation {
    std::vector<std::int64_t> flow; // per arc, all >= 1
};

// A set of face nodes with an incoming arc but no outgoing arc: no feasible
// circulation can exist.
struct InfeasibilityCertificate {
    std::vector<FaceId> faces;
};

std::variant<Circulation, InfeasibilityCertificate> feasible_circulation(const FlowNetwork& n);

// Converts an infeasible-set certificate of N_ver into the monotone cycle it
// witnesses: the outermost boundary of the face set is increasing, or the
// innermost boundary decreasing.  The returned labeling is re-derived via
// the labeling engine.
std::pair<EssentialCycle, MonotoneKind> certificate_to_monotone_cycle(
    const Representation& rect, const InfeasibilityCertificate& certificate);

// Grid drawing: per-vertex (column, layer) on a K-column cylinder, layers
// counted from 1 upward, plus direction and length per edge (stated for the
// even dart 2e of each edge e).
struct Drawing {
    std::int64_t circumference = 0;
    struct Coord {
        std::int64_t column = 0;
        std::int64_t layer = 0;
    };
    struct EdgeGeometry {
        Direction dir = Direction::Right;
        std::int64_t length = 0;
    };
    std::vector<Coord> vertex;
    std::vector<EdgeGeometry> edge;
};

// Coordinates from feasible circulations: vertical and horizontal edge
// lengths are the flows on their arcs, positions spread from the tail of the
// reference dart at column 0 by spanning-tree propagation, layers shifted so
// the smallest is 1.
Drawing assign_coordinates(const Representation& rect, const Circulation& vertical,
                           const Circulation& radial, const Networks& networks);

// The whole Metrics step for a general valid representation: rectangulate,
// solve both networks, assign coordinates, then restrict the drawing to the
// original graph (helper edges dropped, split-edge chains merged).  Throws
// NotValid for representations that fail validation.
Drawing draw(const Representation& rep, const ValidateOptions& options = {});

// Reads the representation back off a drawing of the given graph.
Representation extract_representation(const PlaneGraph& graph, const Drawing& drawing);

} // namespace orthoradial
