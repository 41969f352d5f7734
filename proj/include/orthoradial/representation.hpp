#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orthoradial/plane_graph.hpp"

namespace orthoradial {

// Edge direction on the cylinder: right = clockwise, down = towards the
// center.  The value is the rotation from the reference dart mod 4.
enum class Direction : int8_t { Right = 0, Down = 1, Left = 2, Up = 3 };

inline Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}
inline Direction turned(Direction d, int rot) {
    return static_cast<Direction>(((static_cast<int>(d) + rot) % 4 + 4) % 4);
}
inline bool is_horizontal(Direction d) {
    return d == Direction::Right || d == Direction::Left;
}
const char* direction_name(Direction d);

struct Cond1Violation {
    VertexId vertex;
    int angle_sum;
};

struct Cond2Violation {
    FaceId face;
    int rot;
    int expected;
};

// Angle assignment per (dart, face) incidence.  angle(d) is the angle inside
// the face to the right of d, at head(d), from d to the next dart of that
// face.  Summing these per head vertex gives the angle sum around the vertex,
// so Condition 1 is a per-vertex sum over incoming darts.
class OrthoRadialRepresentation {
public:
    OrthoRadialRepresentation(PlaneGraph graph, std::vector<int> angles);

    const PlaneGraph& graph() const { return graph_; }
    int angle(DartId d) const { return angles_[d]; }
    const std::vector<int>& angles() const { return angles_; }

    const std::vector<Cond1Violation>& cond1_violations() const { return cond1_; }
    const std::vector<Cond2Violation>& cond2_violations() const { return cond2_; }
    bool conditions12_hold() const { return cond1_.empty() && cond2_.empty(); }

    // Direction of every dart, defined only when Conditions 1-2 hold.
    bool directions_available() const { return !directions_.empty(); }
    Direction direction(DartId d) const;

    // Expected face rotation per Condition 2.
    static int expected_face_rot(FaceKind kind);

private:
    PlaneGraph graph_;
    std::vector<int> angles_;
    std::vector<Cond1Violation> cond1_;
    std::vector<Cond2Violation> cond2_;
    std::vector<int8_t> directions_; // empty unless Conditions 1-2 hold

    void check_conditions();
    void compute_directions();
};

using Representation = OrthoRadialRepresentation;

// rot(uvw) = 2 - a/90 for the angle a locally to the right of the turn from
// d_in to d_out at head(d_in).  For the u-turn d_out == twin(d_in) the angle
// is the full 360 and the rotation -2.
int rot_pair(const Representation& rep, DartId d_in, DartId d_out);

// Sum of rotations at the internal vertices of a dart chain.
int rot_path(const Representation& rep, std::span<const DartId> path);

// Sum of rotations at all vertices of a closed chain.
int rot_cycle(const Representation& rep, std::span<const DartId> cycle);

// Direction of a dart; requires Conditions 1-2 (throws PreconditionsUnchecked
// otherwise).
Direction edge_direction(const Representation& rep, DartId d);

// Rebuilds the per-dart angles implied by an explicit direction assignment:
// the corner between rotation-consecutive darts is the clockwise bearing gap.
// Directions at a vertex must be pairwise distinct and honor the stored
// clockwise order.
std::vector<int> angles_from_directions(const PlaneGraph& graph,
                                        std::span<const Direction> dir);

// Assembles a representation from a directed edge list with explicit
// directions.  The rotation order at each vertex is derived from the
// bearings, the angles from the directions.  Designations name edges by index
// into the list; `along` picks the listed orientation, false its twin.
struct DirectedEdgeSpec {
    VertexId tail = kInvalidId;
    VertexId head = kInvalidId;
    Direction dir = Direction::Right;
};

struct DirectedGraphSpec {
    std::vector<std::string> vertex_names;
    std::vector<DirectedEdgeSpec> edges;
    int outer_edge = kInvalidId;
    bool outer_along = true;
    int central_edge = kInvalidId;
    bool central_along = true;
    int reference_edge = kInvalidId;
    bool reference_along = true;
    bool outer_and_central = false;
};

// If edge_darts is non-null it receives, per spec edge, the dart id of the
// listed orientation in the built graph.
Representation representation_from_directions(const DirectedGraphSpec& spec,
                                              std::vector<DartId>* edge_darts = nullptr);

} // namespace orthoradial
