#include "orthoradial/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthoradial/io.hpp"
#include "orthoradial/oracle.hpp"
#include "orthoradial/svg.hpp"

namespace orthoradial {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::SyntaxError, "cannot read input file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    require(file.good(), ErrorCode::SyntaxError, "cannot write output file " + path);
    file << content;
}

std::string describe_cycle(const Representation& rep, const CycleLabeling& labeling) {
    const PlaneGraph& g = rep.graph();
    std::ostringstream out;
    for (size_t i = 0; i < labeling.cycle.darts.size(); ++i) {
        DartId d = labeling.cycle.darts[i];
        if (i)
            out << " ";
        out << g.vertex_name(g.tail(d)) << ">" << g.vertex_name(g.head(d)) << "("
            << labeling.labels[i] << ")";
    }
    return out.str();
}

int print_validity(const Representation& rep, const ValidityReport& report, std::ostream& out) {
    const PlaneGraph& g = rep.graph();
    for (const auto& v : report.cond1_violations)
        out << "cond1-violation " << g.vertex_name(v.vertex) << " sum " << v.angle_sum << "\n";
    for (const auto& f : report.cond2_violations)
        out << "cond2-violation face " << f.face << " rot " << f.rot << " expected " << f.expected
            << "\n";
    for (const auto& cert : report.monotone_cycles)
        out << "monotone-cycle " << monotone_kind_name(cert.kind) << ": "
            << describe_cycle(rep, cert.labeling) << "\n";
    if (report.inconclusive) {
        out << "status inconclusive (cycle cap reached)\n";
        return 3;
    }
    out << "status " << (report.valid ? "valid" : "invalid") << "\n";
    return report.valid ? 0 : 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bend-free ortho-radial drawing toolkit"};
    app.require_subcommand(1);

    std::string input, output, view = "polar";
    std::int64_t max_cycles = 100000;
    if (const char* env = std::getenv("ORTHORADIAL_MAX_CYCLES"))
        max_cycles = std::atoll(env);
    int certificates = 10;
    std::uint64_t seed = 0;
    int bound = 24;

    auto add_common = [&](CLI::App* cmd, bool needs_view) {
        cmd->add_option("--input", input, "input file")->required();
        cmd->add_option("--output", output, "output file (default: stdout)");
        cmd->add_option("--max-cycles", max_cycles, "cap on enumerated simple cycles");
        cmd->add_option("--certificates", certificates, "monotone certificates to report");
        if (needs_view)
            cmd->add_option("--view", view, "polar or unrolled")
                ->check(CLI::IsMember({"polar", "unrolled"}));
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check Definition-1 validity");
    add_common(validate_cmd, false);
    CLI::App* rectangulate_cmd =
        app.add_subcommand("rectangulate", "augment until every face is a rectangle");
    add_common(rectangulate_cmd, false);
    CLI::App* draw_cmd = app.add_subcommand("draw", "compute a grid drawing");
    add_common(draw_cmd, true);
    bool draw_svg = false;
    draw_cmd->add_flag("--svg", draw_svg, "emit SVG instead of a drawing file");
    CLI::App* render_cmd = app.add_subcommand("render", "render a drawing file as SVG");
    render_cmd->add_option("--input", input, "drawing file")->required();
    render_cmd->add_option("--output", output, "output file (default: stdout)");
    render_cmd->add_option("--view", view, "polar or unrolled")
        ->check(CLI::IsMember({"polar", "unrolled"}));
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "run the brute-force cross checks");
    add_common(oracle_cmd, false);
    oracle_cmd->add_option("--seed", seed, "seed for the path-choice fuzzing");
    oracle_cmd->add_option("--bound", bound, "edge bound for the exhaustive sweeps");

    try {
        std::vector<const char*> argv = {"orthoradial"};
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    ValidateOptions options;
    options.max_cycles = max_cycles;
    options.max_certificates = certificates;
    SvgView svg_view = view == "polar" ? SvgView::Polar : SvgView::Unrolled;

    try {
        if (*validate_cmd) {
            Representation rep = parse_instance(read_file(input));
            std::ostringstream text;
            int code = print_validity(rep, validate(rep, options), text);
            write_output(output, text.str(), out);
            return code;
        }
        if (*rectangulate_cmd) {
            Representation rep = parse_instance(read_file(input));
            ValidityReport report = validate(rep, options);
            if (!report.valid) {
                std::ostringstream text;
                int code = print_validity(rep, report, text);
                write_output(output, text.str(), out);
                return code;
            }
            RectangulationResult result = rectangulate(rep, options);
            const PlaneGraph& rg = result.rect.graph();
            std::ostringstream text;
            for (VertexId v : result.added_vertices)
                text << "# added-vertex " << rg.vertex_name(v) << "\n";
            for (EdgeId e : result.added_edges)
                text << "# added-edge " << rg.vertex_name(rg.tail(2 * e)) << ">"
                     << rg.vertex_name(rg.head(2 * e)) << "\n";
            for (EdgeId e = 0; e < rg.edge_count(); ++e)
                if (result.edge_origin[e] != kInvalidId) {
                    EdgeId o = result.edge_origin[e];
                    const PlaneGraph& g = rep.graph();
                    text << "# fragment " << rg.vertex_name(rg.tail(2 * e)) << ">"
                         << rg.vertex_name(rg.head(2 * e)) << " of "
                         << g.vertex_name(g.tail(2 * o)) << ">" << g.vertex_name(g.head(2 * o))
                         << "\n";
                }
            text << serialize_instance(result.rect);
            write_output(output, text.str(), out);
            return 0;
        }
        if (*draw_cmd) {
            Representation rep = parse_instance(read_file(input));
            ValidityReport report = validate(rep, options);
            if (!report.valid) {
                std::ostringstream text;
                int code = print_validity(rep, report, text);
                write_output(output, text.str(), out);
                return code;
            }
            Drawing drawing = draw(rep, options);
            DrawingDoc doc = make_drawing_doc(rep.graph(), drawing);
            bool want_svg = draw_svg || draw_cmd->count("--view") > 0;
            write_output(output, want_svg ? render_svg(doc, svg_view) : serialize_drawing(doc),
                         out);
            return 0;
        }
        if (*render_cmd) {
            DrawingDoc doc = parse_drawing(read_file(input));
            write_output(output, render_svg(doc, svg_view), out);
            return 0;
        }
        if (*oracle_cmd) {
            Representation rep = parse_instance(read_file(input));
            const PlaneGraph& g = rep.graph();
            std::ostringstream text;
            bool ok = true;

            auto main_cycles = enumerate_essential_cycles(g, {max_cycles});
            auto oracle_cycles = brute_cycles(g, std::max(bound, g.edge_count()));
            bool same = main_cycles.size() == oracle_cycles.size();
            for (size_t i = 0; same && i < main_cycles.size(); ++i)
                same = main_cycles[i].darts == oracle_cycles[i].darts;
            text << "cycle-enumeration " << main_cycles.size() << " of " << oracle_cycles.size()
                 << (same ? " agree" : " DISAGREE") << "\n";
            ok = ok && same;

            if (rep.conditions12_hold()) {
                int fuzzed = 0;
                bool stable = true;
                for (const EssentialCycle& c : main_cycles) {
                    CycleLabeling base = labeling(rep, c);
                    for (std::uint64_t round = 1; round <= 3; ++round) {
                        auto path = elementary_path_randomized(g, c, seed * 97 + round);
                        stable = stable && labeling_via_path(rep, c, path).labels == base.labels;
                        ++fuzzed;
                    }
                }
                text << "labeling-fuzz " << fuzzed << (stable ? " stable" : " UNSTABLE") << "\n";
                ok = ok && stable;
            }

            if (g.edge_count() <= bound) {
                EquivalenceReport eq = exhaustive_equivalence(g, bound);
                text << "equivalence " << eq.assignments << " assignments, "
                     << eq.cond2_survivors << " survivors, " << eq.valid_drawn << " drawn, "
                     << eq.invalid_rejected << " rejected"
                     << (eq.ok ? "" : " WITH FAILURES") << "\n";
                for (const auto& failure : eq.failures)
                    text << "equivalence-failure " << failure << "\n";
                ok = ok && eq.ok;
            } else {
                text << "equivalence skipped (graph above bound)\n";
            }

            text << "oracle " << (ok ? "ok" : "FAILED") << "\n";
            write_output(output, text.str(), out);
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::SyntaxError:
        case ErrorCode::SemanticError:
        case ErrorCode::NonPlanarRotation:
        case ErrorCode::DegreeExceeded:
        case ErrorCode::BadReferenceDart:
        case ErrorCode::Disconnected:
            err << "parse error: " << e.what() << "\n";
            return 2;
        case ErrorCode::CycleLimitExceeded:
            err << "inconclusive: " << e.what() << "\n";
            return 3;
        case ErrorCode::NotValid:
            err << "invalid: " << e.what() << "\n";
            return 1;
        default:
            err << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}

} // namespace orthoradial
