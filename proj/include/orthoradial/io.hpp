#pragma once

#include <string>

#include "orthoradial/flow_drawing.hpp"

namespace orthoradial {

// Text format for instances (see README for the grammar):
//
//   orthoradial-instance v1
//   vertex NAME                     one line per vertex, in id order
//   rotation NAME: N1 N2 ...        clockwise neighbors; N#k for parallels
//   outer TAIL>HEAD[#k]             a dart with the outer face to its right
//   central TAIL>HEAD[#k]           a dart with the central face to its right
//   outer-and-central               only when the two faces coincide
//   reference TAIL>HEAD[#k]         e*, outer face locally to its left
//   angle TAIL>HEAD[#k] A           one line per dart, A in {90,180,270,360}
//   end
//
// A line starting with '#' is a comment; blank lines are ignored.  The
// serializer emits the canonical ordering above, so serialize(parse(x)) == x
// for canonical files.
Representation parse_instance(const std::string& text);
std::string serialize_instance(const Representation& rep);

// Drawing files:
//
//   orthoradial-drawing v1
//   circumference K
//   vertex NAME COLUMN LAYER
//   edge TAIL>HEAD[#k] DIRECTION LENGTH
//   end
struct DrawingDoc {
    std::vector<std::string> vertex_names;
    struct Vertex {
        std::int64_t column = 0;
        std::int64_t layer = 0;
    };
    struct Edge {
        int tail = kInvalidId;
        int head = kInvalidId;
        int parallel = 0;
        Direction dir = Direction::Right;
        std::int64_t length = 0;
    };
    std::int64_t circumference = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
};

DrawingDoc parse_drawing(const std::string& text);
std::string serialize_drawing(const DrawingDoc& doc);

DrawingDoc make_drawing_doc(const PlaneGraph& graph, const Drawing& drawing);

} // namespace orthoradial
