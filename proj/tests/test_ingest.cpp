#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gridset/ingest.hpp"
#include "gridset/report.hpp"

using namespace gridset;

namespace {

const char* kTinyCase = R"(function mpc = tiny
% a comment line
mpc.version = '2';
mpc.baseMVA = 100;
mpc.bus = [
    1  3  0 0 0 0 1 1 0 345 1 1.1 0.9;
    2  1  0 0 0 0 1 1 0 345 1 1.1 0.9;
    3  1  0 0 0 0 1 1 0 345 1 1.1 0.9; % trailing comment
];
mpc.branch = [
    1 2 0.01 0.05 0 0 0 0 0 0 1 -360 360;
    2 3 0.01 0.05 0 0 0 0 0 0 0 -360 360;
    2 3 0.01 0.05 0 0 0 0 0 0 1 -360 360;
];
)";

}  // namespace

TEST_CASE("matpower parsing with comments, duplicates, and status column") {
    CaseFile cf = parse_matpower(kTinyCase);
    CHECK(cf.buses.size() == 3);
    CHECK(cf.branches.size() == 3);  // raw rows, duplicate kept here
    Graph g = cf.graph();
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);  // dedup; out-of-service branch still counts
}

TEST_CASE("matpower missing blocks and bad rows") {
    CHECK_THROWS_AS(parse_matpower("mpc.bus = [\n1 1;\n];\n"), Error);
    CHECK_THROWS_AS(parse_matpower("mpc.branch = [\n1 2;\n];\n"), Error);
    try {
        parse_matpower("mpc.bus = [\n1 1;\nbogus;\n];\nmpc.branch = [\n1 1;\n];\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("matpower dangling branch endpoint") {
    const char* text =
        "mpc.bus = [\n1 1;\n2 1;\n];\nmpc.branch = [\n1 9 0 0 0 0 0 0 0 0 1;\n];\n";
    CHECK_THROWS_AS(parse_matpower(text), Error);
}

TEST_CASE("edge list parsing") {
    CaseFile cf = parse_edge_list("1 2\n2 3\n");
    CHECK(cf.buses.size() == 3);
    CHECK(cf.graph().num_edges() == 2);

    CaseFile c2 = parse_edge_list("# c\n5 7\n");
    CHECK(c2.buses.size() == 2);
    CHECK(c2.graph().num_edges() == 1);

    CaseFile c3 = parse_edge_list("1 1\n");
    CHECK(c3.buses.size() == 1);
    CHECK(c3.graph().num_edges() == 0);
    CHECK(c3.graph().num_vertices() == 1);

    CHECK_THROWS_AS(parse_edge_list("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("1\n"), ParseError);
}

TEST_CASE("report round-trip is bit-exact") {
    SolveReport r;
    r.solver = "bd";
    r.case_name = "case57";
    r.planar = false;
    r.exact = false;
    r.branch_width = 4;
    r.cardinality = 3;
    r.members = {4, 13, 57};
    r.removed_edges = {{13, 15}, {49, 50}};
    r.timings = {{"dp", 0.001234}, {"total", 1.5}};
    std::ostringstream os;
    write_report(os, r);
    std::istringstream is(os.str());
    SolveReport back = read_report(is);
    CHECK(back == r);
    std::ostringstream os2;
    write_report(os2, back);
    CHECK(os.str() == os2.str());
}

TEST_CASE("report version gate") {
    std::istringstream is("gridset-report v2\nsolver bd\n");
    CHECK_THROWS_AS(read_report(is), Error);
}
