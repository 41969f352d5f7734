#include <doctest.h>

#include "fixtures.hpp"
#include "orthoradial/oracle.hpp"

using namespace orthoradial;

TEST_CASE("the brute-force enumerator agrees with the main one on every fixture") {
    for (const auto& fixture : fixtures::all()) {
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        const PlaneGraph& g = rep.graph();
        auto main_cycles = enumerate_essential_cycles(g);
        auto oracle_cycles = brute_cycles(g, 24);
        REQUIRE(main_cycles.size() == oracle_cycles.size());
        for (size_t i = 0; i < main_cycles.size(); ++i)
            CHECK(main_cycles[i].darts == oracle_cycles[i].darts);
    }
}

TEST_CASE("brute-force counts on the named fixtures") {
    CHECK(brute_cycles(fixtures::triangle().graph()).size() == 1);
    CHECK(brute_cycles(fixtures::square_oc().graph()).size() == 0);
    CHECK(brute_cycles(fixtures::annulus().graph()).size() == 16);
}

TEST_CASE("the brute-force bound is enforced") {
    try {
        (void)brute_cycles(fixtures::annulus().graph(), 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundExceeded);
    }
}

TEST_CASE("produced drawings pass the geometric checker") {
    for (const auto& fixture : fixtures::all()) {
        if (!fixture.valid)
            continue;
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        GeometryReport report = check_drawing(draw(rep), rep);
        CHECK(report.ok);
        CHECK(report.crossings.empty());
        CHECK(report.angle_mismatches.empty());
        CHECK(report.direction_mismatches.empty());
    }
}

TEST_CASE("a hand-built annulus drawing passes the checker") {
    Representation rep = fixtures::annulus();
    const PlaneGraph& g = rep.graph();
    Drawing d;
    d.circumference = 4;
    d.vertex.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const std::string& name = g.vertex_name(v);
        std::int64_t column = name[1] - '1';
        d.vertex[v] = {column, name[0] == 'o' ? 2 : 1};
    }
    d.edge.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        d.edge[e] = {rep.direction(2 * e), 1};
    CHECK(check_drawing(d, rep).ok);
}

TEST_CASE("collapsing two vertices is reported as a crossing") {
    Representation rep = fixtures::annulus();
    Drawing d = draw(rep);
    // Force i1 onto i2: the ring edges now overlap.
    const PlaneGraph& g = rep.graph();
    VertexId i1 = kInvalidId, i2 = kInvalidId;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex_name(v) == "i1")
            i1 = v;
        if (g.vertex_name(v) == "i2")
            i2 = v;
    }
    d.vertex[i1] = d.vertex[i2];
    GeometryReport report = check_drawing(d, rep);
    CHECK(!report.ok);
    CHECK(!report.crossings.empty());
}

TEST_CASE("a flattened outer ring collides with the inner one") {
    Representation rep = fixtures::annulus();
    Drawing d = draw(rep);
    const PlaneGraph& g = rep.graph();
    std::int64_t inner = INT64_MAX;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        inner = std::min(inner, d.vertex[v].layer);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        d.vertex[v].layer = inner;
    GeometryReport report = check_drawing(d, rep);
    CHECK(!report.ok);
}

TEST_CASE("exhaustive equivalence on the triangle finds exactly the flat assignment") {
    EquivalenceReport report = exhaustive_equivalence(fixtures::triangle().graph());
    CHECK(report.ok);
    CHECK(report.assignments == 27);       // 3 corner splits per degree-2 vertex
    CHECK(report.cond2_survivors == 7);    // all-180 plus the six 90/180/270 shuffles
    CHECK(report.valid_drawn == 1);        // only the circle is drawable
    CHECK(report.invalid_rejected == 6);
}

TEST_CASE("exhaustive equivalence on the bare 4-cycle finds the unit square") {
    EquivalenceReport report = exhaustive_equivalence(fixtures::square_oc().graph());
    CHECK(report.ok);
    CHECK(report.assignments == 81);
    CHECK(report.cond2_survivors == 1);
    CHECK(report.valid_drawn == 1);
}

TEST_CASE("the spiral assignment survives conditions 1-2 but fails to draw") {
    Representation rep = fixtures::spiral_octagon();
    CHECK(rep.conditions12_hold());
    CHECK(!validate(rep).valid);
    CHECK_THROWS_AS((void)draw(rep), NotValidError);
    // The sweep over the octagon graph agrees on every assignment.
    EquivalenceReport report = exhaustive_equivalence(rep.graph());
    CHECK(report.ok);
    CHECK(report.invalid_rejected > 0);
    CHECK(report.valid_drawn > 0);
}

TEST_CASE("the equivalence sweep bound is enforced") {
    try {
        (void)exhaustive_equivalence(fixtures::annulus().graph(), 8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BoundExceeded);
    }
}
