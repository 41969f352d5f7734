#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orthoradial/cli.hpp"
#include "orthoradial/io.hpp"
#include "orthoradial/validity.hpp"

using namespace orthoradial;

#ifndef ORTHORADIAL_FIXTURE_DIR
#define ORTHORADIAL_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(ORTHORADIAL_FIXTURE_DIR) + "/" + name + ".ortho";
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("validate exits 0 on the triangle and 1 on the spiral with a certificate") {
    CliRun ok = run({"validate", "--input", fixture_path("triangle")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("status valid") != std::string::npos);

    CliRun bad = run({"validate", "--input", fixture_path("spiral_octagon")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("monotone-cycle decreasing") != std::string::npos);
    CHECK(bad.out.find("status invalid") != std::string::npos);
}

TEST_CASE("a tiny cycle cap makes validation inconclusive with exit 3") {
    CliRun run3 = run({"validate", "--input", fixture_path("annulus"), "--max-cycles", "3"});
    CHECK(run3.code == 3);
    CHECK(run3.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("the max-cycles environment variable mirrors the flag") {
    setenv("ORTHORADIAL_MAX_CYCLES", "3", 1);
    CliRun r = run({"validate", "--input", fixture_path("annulus")});
    unsetenv("ORTHORADIAL_MAX_CYCLES");
    CHECK(r.code == 3);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"frobnicate", "--input", "x"}).code == 2);
    std::string bad = std::string(ORTHORADIAL_FIXTURE_DIR) + "/../README.md";
    CHECK(run({"validate", "--input", "/nonexistent/file"}).code == 2);
}

TEST_CASE("rectangulate emits a parseable instance with provenance comments") {
    CliRun r = run({"rectangulate", "--input", fixture_path("triangle")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# added-vertex") != std::string::npos);
    CHECK(r.out.find("# fragment") != std::string::npos);
    Representation rect = parse_instance(r.out);
    CHECK(validate(rect).valid);
    CHECK(rect.graph().vertex_count() == 11);
}

TEST_CASE("draw writes a drawing file by default and svg with a view") {
    CliRun text = run({"draw", "--input", fixture_path("annulus")});
    REQUIRE(text.code == 0);
    DrawingDoc doc = parse_drawing(text.out);
    CHECK(doc.circumference == 5); // rectangulation adds the connector columns

    std::string svg_path = "cli_annulus_test.svg";
    CliRun svg = run({"draw", "--input", fixture_path("annulus"), "--view", "polar", "--output",
                      svg_path});
    CHECK(svg.code == 0);
    std::ifstream in(svg_path);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("<svg") != std::string::npos);
    std::remove(svg_path.c_str());
}

TEST_CASE("draw refuses invalid instances with exit 1") {
    CliRun r = run({"draw", "--input", fixture_path("helix_up")});
    CHECK(r.code == 1);
    CHECK(r.out.find("monotone-cycle") != std::string::npos);
}

TEST_CASE("render turns a drawing file into svg") {
    CliRun text = run({"draw", "--input", fixture_path("triangle")});
    REQUIRE(text.code == 0);
    std::string path = "cli_triangle_test.drawing";
    {
        std::ofstream out(path);
        out << text.out;
    }
    CliRun svg = run({"render", "--input", path, "--view", "unrolled"});
    CHECK(svg.code == 0);
    CHECK(svg.out.find("<svg") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("the oracle subcommand cross-checks a small fixture") {
    CliRun r = run({"oracle", "--input", fixture_path("triangle"), "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle ok") != std::string::npos);
    CHECK(r.out.find("agree") != std::string::npos);
}

TEST_CASE("the certificate cap limits the printed monotone cycles") {
    CliRun r = run({"validate", "--input", fixture_path("helix_down"), "--certificates", "1"});
    CHECK(r.code == 1);
    size_t count = 0;
    for (size_t pos = r.out.find("monotone-cycle"); pos != std::string::npos;
         pos = r.out.find("monotone-cycle", pos + 1))
        ++count;
    CHECK(count == 1);
}
