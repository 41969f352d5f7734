#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orthoradial/representation.hpp"

namespace orthoradial::fixtures {

// Canonical instances used across the test suites.  Each builder returns a
// fresh representation; the expected validity is part of the fixture.
Representation triangle();          // 3-cycle drawn as a circle, valid
Representation square_oc();         // bare 4-cycle, outer = central, valid
Representation annulus();           // two concentric 4-cycles + 4 spokes, valid
Representation nested_triangles();  // two concentric triangles + 1 spoke, valid
Representation spiral_octagon();    // 8-cycle alternating right/down: monotone, invalid
Representation single_edge();       // one edge, two degree-1 vertices, valid
Representation path2();             // path of two edges, valid
Representation star4();             // degree-4 star, valid
Representation square_pendant();    // 4-cycle with a pendant edge, valid
Representation two_squares();       // two unit squares side by side, valid
Representation lface();             // L-shaped face, one left turn, valid
Representation uface();             // U-shaped face forcing horizontal insertions, valid
Representation cross_oc();          // plus-shaped face, several candidates, valid
Representation cylinder12();        // 3 rings x 4 columns grid, rectangular, valid
Representation helix_down();        // rectangular, middle cycle descends: invalid
Representation helix_up();          // rectangular, middle cycle ascends: invalid
Representation spiral_pair();       // two zigzag rings, twisted connectors, invalid

struct NamedFixture {
    std::string name;
    std::function<Representation()> build;
    bool valid;
    bool rectangular;
};

// All fixtures above, with their expected validity.
const std::vector<NamedFixture>& all();

// The subset used for exhaustive angle-assignment sweeps (small graphs plus
// the named acceptance fixtures).
const std::vector<NamedFixture>& exhaustive_set();

} // namespace orthoradial::fixtures
