#pragma once

#include <cstdint>
#include <vector>

#include "orthoradial/representation.hpp"

namespace orthoradial {

// Simple essential cycle, directed clockwise (central face in its interior).
struct EssentialCycle {
    std::vector<DartId> darts;
};

struct EnumerationLimits {
    // Cap on the number of simple cycles examined before giving up.
    std::int64_t max_cycles = 100000;
};

// All simple essential cycles of the graph, clockwise, in a deterministic
// order.  Enumeration is exponential in the worst case; the cap guards it.
std::vector<EssentialCycle> enumerate_essential_cycles(const PlaneGraph& graph,
                                                       const EnumerationLimits& limits = {});

// A path from the head s of the reference dart to the first vertex of C it
// can reach, intersecting C only at that endpoint and lying in the exterior
// of C.  Empty when s already lies on C.
std::vector<DartId> elementary_path(const PlaneGraph& graph, const EssentialCycle& cycle);

// As above but with the neighbor exploration order shuffled; used to confirm
// that labelings do not depend on the path choice.
std::vector<DartId> elementary_path_randomized(const PlaneGraph& graph,
                                               const EssentialCycle& cycle,
                                               std::uint64_t seed);

// Labels of every dart on an essential cycle: label(e) is the rotation of
// reference dart + connecting path + cycle prefix up to e.  Independent of
// the path choice.
struct CycleLabeling {
    EssentialCycle cycle;
    std::vector<int> labels; // parallel to cycle.darts

    int label_of(DartId d) const;
};

CycleLabeling labeling(const Representation& rep, const EssentialCycle& cycle);
CycleLabeling labeling_via_path(const Representation& rep, const EssentialCycle& cycle,
                                std::span<const DartId> connecting_path);

// Consistency of the labels of two essential cycles at their common vertices
// on the central face of the union subgraph: incoming labels plus the turn
// onto a common continuation agree, and shared darts there carry equal
// labels.
struct IntersectionCheck {
    VertexId vertex;
    long lhs;
    long rhs;
    bool shared_dart; // the compared object is a dart lying on both cycles
    bool ok;
};

struct IntersectionReport {
    std::vector<IntersectionCheck> checks;
    bool all_ok = true;
};

IntersectionReport labels_at_intersection_check(const Representation& rep,
                                                const EssentialCycle& c1,
                                                const EssentialCycle& c2);

// Boundary darts (region locally to the right) of the face-of-H that
// contains a given face of G, for the subgraph H made of the given darts.
// Used for the intersection checks and the alternative-cycle construction.
std::vector<DartId> subgraph_face_boundary(const PlaneGraph& graph,
                                           std::span<const DartId> subgraph_darts,
                                           FaceId seed_face);

} // namespace orthoradial
