#pragma once

#include <string>
#include <vector>

#include "orthoradial/flow_drawing.hpp"

namespace orthoradial {

// Brute-force re-implementations used only by tests and the oracle CLI
// subcommand.  Everything here is deliberately written against PlaneGraph
// alone, independent of the main enumeration and drawing code paths.

// All simple essential cycles by exhaustive vertex-sequence DFS with an
// independent separation test (dual search from the central face).  Bound on
// the edge count guards the exponential blowup.
std::vector<EssentialCycle> brute_cycles(const PlaneGraph& graph, int bound = 24);

// Geometric soundness of a drawing against its representation.
struct GeometryReport {
    struct Crossing {
        EdgeId a;
        EdgeId b;
    };
    std::vector<Crossing> crossings;
    std::vector<VertexId> angle_mismatches;    // rotation order or corner size off
    std::vector<EdgeId> direction_mismatches;  // drawn geometry disagrees with the
                                               // representation
    bool ok = true;
};

GeometryReport check_drawing(const Drawing& drawing, const Representation& rep);

// Executable form of the characterization: sweep every angle assignment that
// satisfies Condition 1, check Condition 2, and for each survivor confirm
// that validity and drawability coincide (with the drawing geometrically
// verified).
struct EquivalenceReport {
    long assignments = 0;
    long cond2_survivors = 0;
    long valid_drawn = 0;
    long invalid_rejected = 0;
    std::vector<std::string> failures;
    bool ok = true;
};

EquivalenceReport exhaustive_equivalence(const PlaneGraph& graph, int bound = 8);

} // namespace orthoradial
