#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "orthoradial/representation.hpp"

using namespace orthoradial;

namespace {

// All simple dart paths from `from`, up to a length cap.  Small fixtures
// only; used to exercise path-level identities exhaustively.
void all_paths_from(const PlaneGraph& g, VertexId from, size_t max_len,
                    std::vector<DartId>& path, std::vector<char>& used,
                    const std::function<void(const std::vector<DartId>&)>& sink) {
    for (DartId d : g.darts_at(from)) {
        VertexId w = g.head(d);
        if (used[w])
            continue;
        path.push_back(d);
        used[w] = 1;
        if (path.size() > 1)
            sink(path);
        if (path.size() < max_len)
            all_paths_from(g, w, max_len, path, used, sink);
        used[w] = 0;
        path.pop_back();
    }
}

void for_each_path(const PlaneGraph& g, size_t max_len,
                   const std::function<void(const std::vector<DartId>&)>& sink) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<DartId> path;
        std::vector<char> used(g.vertex_count(), 0);
        used[v] = 1;
        all_paths_from(g, v, max_len, path, used, sink);
    }
}

// Darts at the internal vertex x of a path that lie locally to the right of
// the path: those swept clockwise from the outgoing dart to the reversal of
// the incoming one.
std::vector<DartId> darts_right_of(const PlaneGraph& g, DartId d_in, DartId d_out) {
    std::vector<DartId> out;
    DartId cur = d_out;
    while (true) {
        cur = g.cw_next(cur);
        if (cur == twin(d_in) || cur == d_out)
            break;
        out.push_back(cur);
    }
    return out;
}

} // namespace

TEST_CASE("rotation of a turn follows 2 - a/90") {
    Representation square = fixtures::square_oc();
    const PlaneGraph& g = square.graph();
    FaceId regular = g.face(g.outer_face()).kind == FaceKind::Regular ? g.outer_face()
                                                                      : 1 - g.outer_face();
    const auto& c = g.face(regular).boundary;
    // Inside the square every turn is a right turn (a = 90).
    for (size_t i = 0; i < c.size(); ++i)
        CHECK(rot_pair(square, c[i], c[(i + 1) % 4]) == 1);
    // The outer-and-central side turns are 270.
    const auto& oc = g.face(g.outer_face() == regular ? g.central_face() : g.outer_face()).boundary;
    for (size_t i = 0; i < oc.size(); ++i)
        CHECK(rot_pair(square, oc[i], oc[(i + 1) % 4]) == -1);

    Representation tri = fixtures::triangle();
    const auto& tc = tri.graph().face(tri.graph().central_face()).boundary;
    for (size_t i = 0; i < tc.size(); ++i)
        CHECK(rot_pair(tri, tc[i], tc[(i + 1) % 3]) == 0);
}

TEST_CASE("u-turn at a degree-1 vertex rotates by -2") {
    Representation rep = fixtures::single_edge();
    const PlaneGraph& g = rep.graph();
    DartId d = g.reference_dart();
    CHECK(rep.angle(d) == 360);
    CHECK(rot_pair(rep, d, twin(d)) == -2);
}

TEST_CASE("rot_pair rejects non-incident darts") {
    Representation rep = fixtures::annulus();
    const PlaneGraph& g = rep.graph();
    DartId d = g.reference_dart();
    // A dart whose tail is not head(d).
    DartId other = kInvalidId;
    for (DartId cand = 0; cand < g.dart_count(); ++cand)
        if (g.tail(cand) != g.head(d))
            other = cand;
    try {
        (void)rot_pair(rep, d, other);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIncident);
    }
}

TEST_CASE("single-edge paths have rotation zero") {
    Representation rep = fixtures::annulus();
    for (DartId d = 0; d < rep.graph().dart_count(); ++d) {
        std::vector<DartId> p = {d};
        CHECK(rot_path(rep, p) == 0);
    }
}

TEST_CASE("reversing a path flips the rotation sign") {
    for (const auto& fixture : fixtures::all()) {
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        for_each_path(rep.graph(), 6, [&](const std::vector<DartId>& p) {
            std::vector<DartId> r = reversed_path(p);
            CHECK(rot_path(rep, r) == -rot_path(rep, p));
        });
    }
}

TEST_CASE("splitting a path at an edge splits its rotation") {
    Representation rep = fixtures::annulus();
    for_each_path(rep.graph(), 6, [&](const std::vector<DartId>& p) {
        int whole = rot_path(rep, p);
        for (size_t i = 0; i < p.size(); ++i) {
            std::vector<DartId> first(p.begin(), p.begin() + i + 1);
            std::vector<DartId> second(p.begin() + i, p.end());
            CHECK(whole == rot_path(rep, first) + rot_path(rep, second));
        }
    });
}

TEST_CASE("detours change the rotation by 2 depending on the side") {
    int checked = 0;
    for (const auto& fixture : fixtures::all()) {
        Representation rep = fixture.build();
        const PlaneGraph& g = rep.graph();
        for_each_path(g, 5, [&](const std::vector<DartId>& p) {
            for (size_t i = 0; i + 1 < p.size(); ++i) {
                DartId d_in = p[i], d_out = p[i + 1];
                std::vector<char> on_path(g.vertex_count(), 0);
                for (DartId d : p)
                    on_path[g.tail(d)] = 1;
                on_path[g.head(p.back())] = 1;
                std::vector<DartId> right = darts_right_of(g, d_in, d_out);
                for (DartId xy : g.darts_at(g.head(d_in))) {
                    if (xy == d_out || xy == twin(d_in) || on_path[g.head(xy)])
                        continue;
                    bool is_right = std::find(right.begin(), right.end(), xy) != right.end();
                    std::vector<DartId> first(p.begin(), p.begin() + i + 1);
                    first.push_back(xy);
                    std::vector<DartId> second = {twin(xy)};
                    second.insert(second.end(), p.begin() + i + 1, p.end());
                    int lhs = rot_path(rep, first) + rot_path(rep, second);
                    int rhs = rot_path(rep, p) + (is_right ? 2 : -2);
                    CHECK(lhs == rhs);
                    ++checked;
                }
            }
        });
    }
    CHECK(checked > 100);
}

TEST_CASE("face rotations meet Condition 2 on the basic fixtures") {
    Representation tri = fixtures::triangle();
    for (const Face& f : tri.graph().faces())
        CHECK(rot_cycle(tri, f.boundary) == 0);

    Representation square = fixtures::square_oc();
    for (const Face& f : square.graph().faces())
        CHECK(rot_cycle(square, f.boundary) ==
              (f.kind == FaceKind::Regular ? 4 : -4));

    Representation ann = fixtures::annulus();
    for (const Face& f : ann.graph().faces())
        CHECK(rot_cycle(ann, f.boundary) == (f.kind == FaceKind::Regular ? 4 : 0));
}

TEST_CASE("the reference dart points right and a right turn leads down") {
    for (const auto& fixture : fixtures::all()) {
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        REQUIRE(rep.conditions12_hold());
        DartId ref = rep.graph().reference_dart();
        CHECK(edge_direction(rep, ref) == Direction::Right);
        for (DartId out : rep.graph().darts_at(rep.graph().head(ref)))
            if (rot_pair(rep, ref, out) == 1)
                CHECK(edge_direction(rep, out) == Direction::Down);
    }
}

TEST_CASE("all darts of the triangle cycle point right") {
    Representation rep = fixtures::triangle();
    const auto& c = rep.graph().face(rep.graph().central_face()).boundary;
    for (DartId d : c)
        CHECK(edge_direction(rep, d) == Direction::Right);
}

TEST_CASE("rotations of any two connecting paths agree mod 4") {
    for (const auto& fixture : fixtures::all()) {
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        const PlaneGraph& g = rep.graph();
        if (g.edge_count() > 12)
            continue;
        // rot(reference + path) mod 4 must equal the direction of the last
        // dart, for every simple path starting at the reference head.
        std::vector<DartId> path;
        std::vector<char> used(g.vertex_count(), 0);
        used[g.reference_head()] = 1;
        int count = 0;
        std::function<void(const std::vector<DartId>&)> sink =
            [&](const std::vector<DartId>& p) {
                std::vector<DartId> whole = {g.reference_dart()};
                whole.insert(whole.end(), p.begin(), p.end());
                int rot = rot_path(rep, whole);
                CHECK(((rot % 4) + 4) % 4 == static_cast<int>(edge_direction(rep, p.back())));
                ++count;
            };
        // include length-1 paths as well
        for (DartId d : g.darts_at(g.reference_head())) {
            std::vector<DartId> p = {d};
            sink(p);
        }
        all_paths_from(g, g.reference_head(), 8, path, used, sink);
        CHECK(count > 0);
    }
}

TEST_CASE("directions are unavailable when Conditions 1-2 fail") {
    Representation tri = fixtures::triangle();
    const PlaneGraph& g = tri.graph();
    // Perturb one angle pair: 90/270 instead of 180/180 keeps sums at the
    // vertex but breaks the face rotation.
    std::vector<int> angles = tri.angles();
    DartId d = g.reference_dart();
    angles[d] = 90;
    angles[twin(d)] = 270;
    Representation broken(g, angles);
    CHECK(!broken.conditions12_hold());
    CHECK(!broken.cond2_violations().empty());
    try {
        (void)edge_direction(broken, d);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionsUnchecked);
    }
}

TEST_CASE("angles round-trip through the direction assignment") {
    for (const auto& fixture : fixtures::all()) {
        CAPTURE(fixture.name);
        Representation rep = fixture.build();
        const PlaneGraph& g = rep.graph();
        std::vector<Direction> dir;
        for (DartId d = 0; d < g.dart_count(); ++d)
            dir.push_back(rep.direction(d));
        CHECK(angles_from_directions(g, dir) == rep.angles());
    }
}
