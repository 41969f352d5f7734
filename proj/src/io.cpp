#include "orthoradial/io.hpp"

#include <map>
#include <sstream>

namespace orthoradial {

namespace {

[[noreturn]] void syntax_error(int line, const std::string& message) {
    fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

[[noreturn]] void semantic_error(int line, const std::string& message) {
    fail(ErrorCode::SemanticError, "line " + std::to_string(line) + ": " + message);
}

struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows; // line no + tokens

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line[0] == '#')
                continue;
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string token;
            while (ls >> token)
                tokens.push_back(token);
            if (!tokens.empty())
                rows.push_back({number, std::move(tokens)});
        }
    }
};

// TAIL>HEAD or TAIL>HEAD#k
struct DartName {
    std::string tail, head;
    int parallel = 0;
};

DartName parse_dart_name(const std::string& token, int line) {
    size_t gt = token.find('>');
    if (gt == std::string::npos || gt == 0 || gt + 1 >= token.size())
        syntax_error(line, "expected TAIL>HEAD dart name, got '" + token + "'");
    DartName name;
    name.tail = token.substr(0, gt);
    std::string rest = token.substr(gt + 1);
    size_t hash = rest.find('#');
    if (hash != std::string::npos) {
        try {
            name.parallel = std::stoi(rest.substr(hash + 1));
        } catch (const std::exception&) {
            syntax_error(line, "bad parallel index in '" + token + "'");
        }
        rest = rest.substr(0, hash);
    }
    if (rest.empty())
        syntax_error(line, "expected TAIL>HEAD dart name, got '" + token + "'");
    name.head = rest;
    return name;
}

std::int64_t parse_integer(const std::string& token, int line) {
    try {
        size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size())
            throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        syntax_error(line, "expected an integer, got '" + token + "'");
    }
}

} // namespace

Representation parse_instance(const std::string& text) {
    Lines lines(text);
    size_t at = 0;
    auto have = [&]() { return at < lines.rows.size(); };
    auto peek = [&]() -> const std::vector<std::string>& { return lines.rows[at].second; };
    auto line_no = [&]() { return have() ? lines.rows[at].first : -1; };

    if (!have() || peek() != std::vector<std::string>{"orthoradial-instance", "v1"})
        syntax_error(line_no() < 0 ? 1 : line_no(), "expected header 'orthoradial-instance v1'");
    ++at;

    RawGraph raw;
    std::map<std::string, int> vertex_index;
    auto resolve_vertex = [&](const std::string& name, int line) {
        auto it = vertex_index.find(name);
        if (it == vertex_index.end())
            semantic_error(line, "unknown vertex '" + name + "'");
        return it->second;
    };
    auto resolve_ref = [&](const DartName& name, int line) {
        RawGraph::DartRef ref;
        ref.tail = resolve_vertex(name.tail, line);
        ref.head = resolve_vertex(name.head, line);
        ref.parallel = name.parallel;
        return ref;
    };

    bool saw_outer = false, saw_central = false, saw_reference = false, saw_end = false;
    std::map<std::tuple<int, int, int>, std::pair<int, int>> angle_lines; // -> (angle, line)

    for (; have(); ++at) {
        const auto& tokens = peek();
        int line = lines.rows[at].first;
        const std::string& kind = tokens[0];
        if (kind == "vertex") {
            if (tokens.size() != 2)
                syntax_error(line, "vertex takes exactly one name");
            if (vertex_index.count(tokens[1]))
                semantic_error(line, "duplicate vertex '" + tokens[1] + "'");
            vertex_index[tokens[1]] = raw.add_vertex(tokens[1]);
        } else if (kind == "rotation") {
            if (tokens.size() < 2 || tokens[1].back() != ':')
                syntax_error(line, "expected 'rotation NAME: ...'");
            std::string name = tokens[1].substr(0, tokens[1].size() - 1);
            int v = resolve_vertex(name, line);
            if (!raw.rotation[v].empty())
                semantic_error(line, "duplicate rotation for '" + name + "'");
            for (size_t i = 2; i < tokens.size(); ++i) {
                std::string token = tokens[i];
                int parallel = 0;
                size_t hash = token.find('#');
                if (hash != std::string::npos) {
                    parallel = static_cast<int>(parse_integer(token.substr(hash + 1), line));
                    token = token.substr(0, hash);
                }
                raw.rotation[v].push_back({resolve_vertex(token, line), parallel});
            }
        } else if (kind == "outer" || kind == "central" || kind == "reference") {
            if (tokens.size() != 2)
                syntax_error(line, kind + " takes exactly one dart");
            RawGraph::DartRef ref = resolve_ref(parse_dart_name(tokens[1], line), line);
            if (kind == "outer") {
                raw.outer = ref;
                saw_outer = true;
            } else if (kind == "central") {
                raw.central = ref;
                saw_central = true;
            } else {
                raw.reference = ref;
                saw_reference = true;
            }
        } else if (kind == "outer-and-central") {
            raw.outer_and_central = true;
        } else if (kind == "angle") {
            if (tokens.size() != 3)
                syntax_error(line, "expected 'angle TAIL>HEAD A'");
            DartName name = parse_dart_name(tokens[1], line);
            int value = static_cast<int>(parse_integer(tokens[2], line));
            if (value != 90 && value != 180 && value != 270 && value != 360)
                semantic_error(line, "angle must be one of 90, 180, 270, 360");
            auto key = std::make_tuple(resolve_vertex(name.tail, line),
                                       resolve_vertex(name.head, line), name.parallel);
            if (angle_lines.count(key))
                semantic_error(line, "duplicate angle for '" + tokens[1] + "'");
            angle_lines[key] = {value, line};
        } else if (kind == "end") {
            saw_end = true;
            ++at;
            break;
        } else {
            syntax_error(line, "unknown directive '" + kind + "'");
        }
    }
    if (!saw_end)
        syntax_error(lines.rows.empty() ? 1 : lines.rows.back().first, "missing 'end'");
    if (have())
        syntax_error(line_no(), "content after 'end'");
    if (!saw_outer || !saw_central || !saw_reference)
        fail(ErrorCode::SemanticError, "missing outer/central/reference designation");

    PlaneGraph graph = build_plane_graph(raw);

    std::vector<int> angles(graph.dart_count(), -1);
    for (const auto& [key, value] : angle_lines) {
        auto [tail, head, parallel] = key;
        DartId d = graph.find_dart(tail, head, parallel);
        if (d == kInvalidId)
            semantic_error(value.second, "angle names a dart that does not exist");
        angles[d] = value.first;
    }
    for (DartId d = 0; d < graph.dart_count(); ++d)
        if (angles[d] < 0)
            fail(ErrorCode::SemanticError,
                 "missing angle for dart " + graph.vertex_name(graph.tail(d)) + ">" +
                     graph.vertex_name(graph.head(d)));
    return Representation(std::move(graph), std::move(angles));
}

namespace {

std::string dart_name(const PlaneGraph& g, DartId d) {
    std::string s = g.vertex_name(g.tail(d)) + ">" + g.vertex_name(g.head(d));
    if (g.parallel_index(d) != 0)
        s += "#" + std::to_string(g.parallel_index(d));
    return s;
}

} // namespace

std::string serialize_instance(const Representation& rep) {
    const PlaneGraph& g = rep.graph();
    std::ostringstream out;
    out << "orthoradial-instance v1\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "vertex " << g.vertex_name(v) << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "rotation " << g.vertex_name(v) << ":";
        for (DartId d : g.darts_at(v)) {
            out << " " << g.vertex_name(g.head(d));
            if (g.parallel_index(d) != 0)
                out << "#" << g.parallel_index(d);
        }
        out << "\n";
    }
    out << "outer " << dart_name(g, g.face(g.outer_face()).boundary.front()) << "\n";
    out << "central " << dart_name(g, g.face(g.central_face()).boundary.front()) << "\n";
    if (g.outer_face() == g.central_face())
        out << "outer-and-central\n";
    out << "reference " << dart_name(g, g.reference_dart()) << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (DartId d : g.darts_at(v))
            out << "angle " << dart_name(g, d) << " " << rep.angle(d) << "\n";
    out << "end\n";
    return out.str();
}

DrawingDoc parse_drawing(const std::string& text) {
    Lines lines(text);
    size_t at = 0;
    auto have = [&]() { return at < lines.rows.size(); };
    auto line_no = [&]() { return have() ? lines.rows[at].first : 1; };

    if (!have() ||
        lines.rows[at].second != std::vector<std::string>{"orthoradial-drawing", "v1"})
        syntax_error(line_no(), "expected header 'orthoradial-drawing v1'");
    ++at;

    DrawingDoc doc;
    std::map<std::string, int> vertex_index;
    bool saw_k = false, saw_end = false;
    for (; have(); ++at) {
        const auto& tokens = lines.rows[at].second;
        int line = lines.rows[at].first;
        if (tokens[0] == "circumference") {
            if (tokens.size() != 2)
                syntax_error(line, "expected 'circumference K'");
            doc.circumference = parse_integer(tokens[1], line);
            if (doc.circumference <= 0)
                semantic_error(line, "circumference must be positive");
            saw_k = true;
        } else if (tokens[0] == "vertex") {
            if (tokens.size() != 4)
                syntax_error(line, "expected 'vertex NAME COLUMN LAYER'");
            if (vertex_index.count(tokens[1]))
                semantic_error(line, "duplicate vertex '" + tokens[1] + "'");
            vertex_index[tokens[1]] = static_cast<int>(doc.vertex_names.size());
            doc.vertex_names.push_back(tokens[1]);
            doc.vertices.push_back({parse_integer(tokens[2], line), parse_integer(tokens[3], line)});
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 4)
                syntax_error(line, "expected 'edge TAIL>HEAD DIRECTION LENGTH'");
            DartName name = parse_dart_name(tokens[1], line);
            DrawingDoc::Edge edge;
            auto it = vertex_index.find(name.tail);
            auto jt = vertex_index.find(name.head);
            if (it == vertex_index.end() || jt == vertex_index.end())
                semantic_error(line, "edge names an unknown vertex");
            edge.tail = it->second;
            edge.head = jt->second;
            edge.parallel = name.parallel;
            if (tokens[2] == "right")
                edge.dir = Direction::Right;
            else if (tokens[2] == "down")
                edge.dir = Direction::Down;
            else if (tokens[2] == "left")
                edge.dir = Direction::Left;
            else if (tokens[2] == "up")
                edge.dir = Direction::Up;
            else
                syntax_error(line, "unknown direction '" + tokens[2] + "'");
            edge.length = parse_integer(tokens[3], line);
            if (edge.length <= 0)
                semantic_error(line, "edge length must be positive");
            doc.edges.push_back(edge);
        } else if (tokens[0] == "end") {
            saw_end = true;
            ++at;
            break;
        } else {
            syntax_error(line, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!saw_end)
        syntax_error(lines.rows.empty() ? 1 : lines.rows.back().first, "missing 'end'");
    if (!saw_k)
        fail(ErrorCode::SemanticError, "missing circumference");
    return doc;
}

std::string serialize_drawing(const DrawingDoc& doc) {
    std::ostringstream out;
    out << "orthoradial-drawing v1\n";
    out << "circumference " << doc.circumference << "\n";
    for (size_t v = 0; v < doc.vertex_names.size(); ++v)
        out << "vertex " << doc.vertex_names[v] << " " << doc.vertices[v].column << " "
            << doc.vertices[v].layer << "\n";
    for (const auto& e : doc.edges) {
        out << "edge " << doc.vertex_names[e.tail] << ">" << doc.vertex_names[e.head];
        if (e.parallel != 0)
            out << "#" << e.parallel;
        out << " " << direction_name(e.dir) << " " << e.length << "\n";
    }
    out << "end\n";
    return out.str();
}

DrawingDoc make_drawing_doc(const PlaneGraph& graph, const Drawing& drawing) {
    DrawingDoc doc;
    doc.circumference = drawing.circumference;
    doc.vertex_names = graph.vertex_names();
    for (VertexId v = 0; v < graph.vertex_count(); ++v)
        doc.vertices.push_back({drawing.vertex[v].column, drawing.vertex[v].layer});
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        DartId d = 2 * e;
        doc.edges.push_back({graph.tail(d), graph.head(d), graph.parallel_index(d),
                             drawing.edge[e].dir, drawing.edge[e].length});
    }
    return doc;
}

} // namespace orthoradial
