#include "fixtures.hpp"

#include <map>
#include <stdexcept>

namespace orthoradial::fixtures {

namespace {

// Small builder: edges are named "tail>head" with an explicit direction; the
// rotation system and angles follow from the directions.
struct Builder {
    DirectedGraphSpec spec;
    std::map<std::string, int> index;

    int vertex(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end())
            return it->second;
        int id = static_cast<int>(spec.vertex_names.size());
        spec.vertex_names.push_back(name);
        index.emplace(name, id);
        return id;
    }

    int edge(const std::string& tail, const std::string& head, Direction dir) {
        spec.edges.push_back({vertex(tail), vertex(head), dir});
        return static_cast<int>(spec.edges.size()) - 1;
    }

    int find_edge(const std::string& tail, const std::string& head) const {
        int t = index.at(tail), h = index.at(head);
        for (size_t i = 0; i < spec.edges.size(); ++i)
            if (spec.edges[i].tail == t && spec.edges[i].head == h)
                return static_cast<int>(i);
        throw std::logic_error("fixture edge not found: " + tail + ">" + head);
    }

    // Designations by edge name; along=false picks the twin dart.
    Representation build(const std::string& outer_t, const std::string& outer_h, bool outer_along,
                         const std::string& central_t, const std::string& central_h,
                         bool central_along, const std::string& ref_t, const std::string& ref_h,
                         bool ref_along, bool oc = false) {
        spec.outer_edge = find_edge(outer_t, outer_h);
        spec.outer_along = outer_along;
        spec.central_edge = find_edge(central_t, central_h);
        spec.central_along = central_along;
        spec.reference_edge = find_edge(ref_t, ref_h);
        spec.reference_along = ref_along;
        spec.outer_and_central = oc;
        return representation_from_directions(spec);
    }
};

constexpr Direction E = Direction::Right;
constexpr Direction S = Direction::Down;
constexpr Direction W = Direction::Left;
constexpr Direction N = Direction::Up;

std::string num(const std::string& base, int i) { return base + std::to_string(i); }

} // namespace

Representation triangle() {
    Builder b;
    b.edge("a", "b", E);
    b.edge("b", "c", E);
    b.edge("c", "a", E);
    return b.build("a", "b", false, "a", "b", true, "a", "b", true);
}

Representation square_oc() {
    Builder b;
    b.edge("a", "b", E);
    b.edge("b", "c", N);
    b.edge("c", "d", W);
    b.edge("d", "a", S);
    // Outside of the square is both outer and central; reference on the top
    // edge pointing right.
    return b.build("a", "b", true, "a", "b", true, "c", "d", false, /*oc=*/true);
}

Representation annulus() {
    Builder b;
    for (int k = 1; k <= 4; ++k)
        b.edge(num("o", k), num("o", k % 4 + 1), E);
    for (int k = 1; k <= 4; ++k)
        b.edge(num("i", k), num("i", k % 4 + 1), E);
    for (int k = 1; k <= 4; ++k)
        b.edge(num("i", k), num("o", k), N);
    return b.build("o1", "o2", false, "i1", "i2", true, "o1", "o2", true);
}

Representation nested_triangles() {
    Builder b;
    for (int k = 1; k <= 3; ++k)
        b.edge(num("o", k), num("o", k % 3 + 1), E);
    for (int k = 1; k <= 3; ++k)
        b.edge(num("i", k), num("i", k % 3 + 1), E);
    b.edge("i1", "o1", N);
    return b.build("o1", "o2", false, "i1", "i2", true, "o1", "o2", true);
}

Representation spiral_octagon() {
    // Alternating right/down essential cycle: Conditions 1-2 hold but every
    // labeling is {0,1,...}, a decreasing cycle.
    Builder b;
    for (int k = 1; k <= 4; ++k) {
        b.edge(num("a", k), num("b", k), E);
        b.edge(num("b", k), num("a", k % 4 + 1), S);
    }
    return b.build("a1", "b1", false, "a1", "b1", true, "a1", "b1", true);
}

Representation single_edge() {
    Builder b;
    b.edge("u", "v", E);
    return b.build("u", "v", true, "u", "v", true, "u", "v", true, /*oc=*/true);
}

Representation path2() {
    Builder b;
    b.edge("u", "v", E);
    b.edge("v", "w", E);
    return b.build("u", "v", true, "u", "v", true, "u", "v", true, /*oc=*/true);
}

Representation star4() {
    Builder b;
    b.edge("x", "le", E);
    b.edge("x", "ls", S);
    b.edge("x", "lw", W);
    b.edge("x", "ln", N);
    return b.build("x", "le", true, "x", "le", true, "x", "le", true, /*oc=*/true);
}

Representation square_pendant() {
    Builder b;
    b.edge("a", "b", E);
    b.edge("b", "c", N);
    b.edge("c", "d", W);
    b.edge("d", "a", S);
    b.edge("a", "p", S);
    return b.build("a", "b", true, "a", "b", true, "c", "d", false, /*oc=*/true);
}

Representation two_squares() {
    Builder b;
    b.edge("a", "b", E);
    b.edge("b", "c", E);
    b.edge("c", "d", N);
    b.edge("d", "e", W);
    b.edge("e", "f", W);
    b.edge("f", "a", S);
    b.edge("e", "b", S);
    return b.build("a", "b", true, "a", "b", true, "d", "e", false, /*oc=*/true);
}

Representation lface() {
    Builder b;
    b.edge("p1", "p2", E);
    b.edge("p2", "p3", N);
    b.edge("p3", "p4", W);
    b.edge("p4", "p5", N);
    b.edge("p5", "p6", W);
    b.edge("p6", "p1", S);
    return b.build("p1", "p2", true, "p1", "p2", true, "p5", "p6", false, /*oc=*/true);
}

Representation uface() {
    Builder b;
    b.edge("q1", "q2", E);
    b.edge("q2", "q3", N);
    b.edge("q3", "q4", W);
    b.edge("q4", "q5", S);
    b.edge("q5", "q6", W);
    b.edge("q6", "q7", N);
    b.edge("q7", "q8", W);
    b.edge("q8", "q1", S);
    return b.build("q1", "q2", true, "q1", "q2", true, "q3", "q4", false, /*oc=*/true);
}

Representation cross_oc() {
    Builder b;
    b.edge("x1", "x2", E);
    b.edge("x2", "x3", N);
    b.edge("x3", "x4", E);
    b.edge("x4", "x5", N);
    b.edge("x5", "x6", W);
    b.edge("x6", "x7", N);
    b.edge("x7", "x8", W);
    b.edge("x8", "x9", S);
    b.edge("x9", "x10", W);
    b.edge("x10", "x11", S);
    b.edge("x11", "x12", E);
    b.edge("x12", "x1", S);
    return b.build("x1", "x2", true, "x1", "x2", true, "x7", "x8", false, /*oc=*/true);
}

Representation cylinder12() {
    Builder b;
    const char* ring[3] = {"t", "m", "c"};
    for (int r = 0; r < 3; ++r)
        for (int k = 1; k <= 4; ++k)
            b.edge(num(ring[r], k), num(ring[r], k % 4 + 1), E);
    for (int k = 1; k <= 4; ++k) {
        b.edge(num("m", k), num("t", k), N);
        b.edge(num("c", k), num("m", k), N);
    }
    return b.build("t1", "t2", false, "c1", "c2", true, "t1", "t2", true);
}

namespace {

Representation helix(Direction step, bool spokes_from_b_up) {
    // A flat outer ring t, a flat inner ring c, and a middle cycle that
    // alternates right with `step` (down or up).  Every face is a rectangle
    // but the middle cycle is monotone, so the representation is invalid.
    Builder b;
    for (int k = 1; k <= 4; ++k)
        b.edge(num("t", k), num("t", k % 4 + 1), E);
    for (int k = 1; k <= 4; ++k) {
        b.edge(num("a", k), num("b", k), E);
        b.edge(num("b", k), num("a", k % 4 + 1), step);
    }
    for (int k = 1; k <= 4; ++k)
        b.edge(num("c", k), num("c", k % 4 + 1), E);
    for (int k = 1; k <= 4; ++k) {
        if (spokes_from_b_up) {
            b.edge(num("b", k), num("t", k), N);
            b.edge(num("a", k), num("c", k), S);
        } else {
            b.edge(num("a", k), num("t", k), N);
            b.edge(num("b", k), num("c", k), S);
        }
    }
    return b.build("t1", "t2", false, "c1", "c2", true, "t1", "t2", true);
}

} // namespace

Representation helix_down() { return helix(S, /*spokes_from_b_up=*/true); }

Representation helix_up() { return helix(N, /*spokes_from_b_up=*/false); }

Representation spiral_pair() {
    // Two zigzag rings joined by two connectors at twisted positions; the
    // label offsets between the rings differ along the two channels.
    Builder b;
    for (int k = 1; k <= 4; ++k) {
        b.edge(num("a", k), num("b", k), E);
        b.edge(num("b", k), num("a", k % 4 + 1), S);
    }
    for (int k = 1; k <= 4; ++k) {
        b.edge(num("e", k), num("f", k), E);
        b.edge(num("f", k), num("e", k % 4 + 1), S);
    }
    b.edge("a1", "f2", S);
    b.edge("a3", "f4", S);
    return b.build("a1", "b1", false, "e1", "f1", true, "a1", "b1", true);
}

const std::vector<NamedFixture>& all() {
    static const std::vector<NamedFixture> fixtures = {
        {"triangle", triangle, true, false},
        {"square_oc", square_oc, true, false},
        {"annulus", annulus, true, true},
        {"nested_triangles", nested_triangles, true, false},
        {"spiral_octagon", spiral_octagon, false, false},
        {"single_edge", single_edge, true, false},
        {"path2", path2, true, false},
        {"star4", star4, true, false},
        {"square_pendant", square_pendant, true, false},
        {"two_squares", two_squares, true, false},
        {"lface", lface, true, false},
        {"uface", uface, true, false},
        {"cross_oc", cross_oc, true, false},
        {"cylinder12", cylinder12, true, true},
        {"helix_down", helix_down, false, true},
        {"helix_up", helix_up, false, true},
        {"spiral_pair", spiral_pair, false, false},
    };
    return fixtures;
}

const std::vector<NamedFixture>& exhaustive_set() {
    static const std::vector<NamedFixture> fixtures = {
        {"single_edge", single_edge, true, false},
        {"path2", path2, true, false},
        {"star4", star4, true, false},
        {"triangle", triangle, true, false},
        {"square_oc", square_oc, true, false},
        {"square_pendant", square_pendant, true, false},
        {"nested_triangles", nested_triangles, true, false},
        {"two_squares", two_squares, true, false},
        {"lface", lface, true, false},
        {"spiral_octagon", spiral_octagon, false, false},
        {"uface", uface, true, false},
        {"annulus", annulus, true, true},
    };
    return fixtures;
}

} // namespace orthoradial::fixtures
