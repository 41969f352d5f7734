#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orthoradial/error.hpp"

namespace orthoradial {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

inline constexpr int kInvalidId = -1;

// Darts are the two directed sides of an undirected edge: edge e owns darts
// 2e and 2e+1, which are twins of each other.
inline DartId twin(DartId d) { return d ^ 1; }
inline EdgeId edge_of(DartId d) { return d >> 1; }

enum class FaceKind { Regular, Outer, Central, OuterAndCentral };

struct Face {
    FaceId id = kInvalidId;
    FaceKind kind = FaceKind::Regular;
    // Boundary darts in traversal order, each with this face locally to its
    // right.  Regular and central faces come out clockwise, the outer face
    // counter-clockwise.
    std::vector<DartId> boundary;
};

// Builder input: vertex names plus, per vertex, the clockwise list of
// incident edges given as (neighbor, parallel index).  The parallel index
// pairs up the two endpoint slots of one edge; it is 0 unless several edges
// join the same vertex pair.
struct RawGraph {
    struct Slot {
        int neighbor = kInvalidId;
        int parallel = 0;
    };
    struct DartRef {
        int tail = kInvalidId;
        int head = kInvalidId;
        int parallel = 0;
    };

    std::vector<std::string> vertex_names;
    std::vector<std::vector<Slot>> rotation; // clockwise as seen in the drawing
    DartRef outer;                           // a dart with the outer face to its right
    DartRef central;                         // a dart with the central face to its right
    DartRef reference;                       // e* (outer face locally to its left)
    bool outer_and_central = false;

    int add_vertex(std::string name);
};

// Immutable 4-plane graph with rotation system, derived faces, and the
// outer/central/reference designations.  Construct via build_plane_graph.
class PlaneGraph {
public:
    int vertex_count() const { return static_cast<int>(darts_at_.size()); }
    int edge_count() const { return static_cast<int>(dart_tail_.size()) / 2; }
    int dart_count() const { return static_cast<int>(dart_tail_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    VertexId tail(DartId d) const { return dart_tail_[d]; }
    VertexId head(DartId d) const { return dart_tail_[twin(d)]; }
    int degree(VertexId v) const { return static_cast<int>(darts_at_[v].size()); }

    // Outgoing darts in clockwise order (drawing convention).
    const std::vector<DartId>& darts_at(VertexId v) const { return darts_at_[v]; }
    DartId cw_next(DartId d) const { return cw_next_[d]; }
    DartId ccw_next(DartId d) const { return ccw_next_[d]; }

    // Next dart of the face lying to the right of d.
    DartId next_on_face(DartId d) const { return ccw_next_[twin(d)]; }

    FaceId face_of(DartId d) const { return face_of_[d]; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }

    FaceId outer_face() const { return outer_face_; }
    FaceId central_face() const { return central_face_; }
    DartId reference_dart() const { return reference_dart_; }
    // Head of the reference dart, the base vertex s for elementary paths.
    VertexId reference_head() const { return head(reference_dart_); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const {
        return {tail(2 * e), head(2 * e)};
    }

    // Index distinguishing parallel edges between the same vertex pair; 0 for
    // the common simple case.
    int parallel_index(DartId d) const { return parallel_[d]; }
    DartId find_dart(VertexId tail, VertexId head, int parallel = 0) const;

    friend PlaneGraph build_plane_graph(const RawGraph& raw);

private:
    std::vector<std::string> vertex_names_;
    std::vector<VertexId> dart_tail_;
    std::vector<int> parallel_;
    std::vector<DartId> cw_next_;  // around the tail vertex
    std::vector<DartId> ccw_next_;
    std::vector<std::vector<DartId>> darts_at_;
    std::vector<FaceId> face_of_;
    std::vector<Face> faces_;
    FaceId outer_face_ = kInvalidId;
    FaceId central_face_ = kInvalidId;
    DartId reference_dart_ = kInvalidId;
};

// Derives faces by tracing, checks Euler's formula, degree bound,
// connectivity, and the designations.
PlaneGraph build_plane_graph(const RawGraph& raw);

// Endpoint of a subpath: either a dart or a vertex.  Vertex form is only
// allowed when the vertex occurs once on the container.
struct SeqRef {
    enum class Kind { Dart, Vertex } kind;
    DartId dart = kInvalidId;
    VertexId vertex = kInvalidId;

    static SeqRef at_dart(DartId d) { return {Kind::Dart, d, kInvalidId}; }
    static SeqRef at_vertex(VertexId v) { return {Kind::Vertex, kInvalidId, v}; }
};

// Inclusive directed subpath of a dart sequence.  With cyclic containers the
// subpath may wrap; subpath(C, e, e) is the single-edge path e, and the
// vertex form subpath(C, v, v) is the whole cycle starting at v.
std::vector<DartId> subpath(const PlaneGraph& graph, std::span<const DartId> container,
                            bool cyclic, SeqRef from, SeqRef to);

// Side partition induced by a simple cycle: interior is the side locally to
// the right of the cycle darts.
struct CycleSides {
    std::vector<int8_t> interior; // per face id, 1 = locally right of the cycle

    bool is_interior(FaceId f) const { return interior[f] != 0; }
    // Essential cycles separate the central face from the outer face;
    // orientation does not matter for this predicate.
    bool essential = false;
    // True when the cycle is directed clockwise, i.e. the outer face lies on
    // the exterior side.
    bool clockwise = false;
};

CycleSides cycle_sides(const PlaneGraph& graph, std::span<const DartId> cycle);

// Helpers shared by several modules.
bool is_dart_chain(const PlaneGraph& graph, std::span<const DartId> darts);
bool is_closed_chain(const PlaneGraph& graph, std::span<const DartId> darts);
bool is_vertex_simple_cycle(const PlaneGraph& graph, std::span<const DartId> darts);
std::vector<DartId> reversed_path(std::span<const DartId> darts);

} // namespace orthoradial
