#include "ntoric/report.hpp"

#include <doctest.h>

using namespace ntoric;

namespace {

const char* e12_doc = R"({"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],
                          "support":[[2,0,0],[0,3,0],[0,0,7]]})";

} // namespace

TEST_CASE("input parsing and round trip")
{
    InputSpec spec = parse_input(e12_doc);
    CHECK(spec.rank == 3);
    CHECK(spec.cone.size() == 3);
    CHECK(spec.support.size() == 3);
    CHECK(spec.delta_shell_cap == 64);

    std::string text = serialize_input(spec);
    InputSpec back = parse_input(text);
    CHECK(back.rank == spec.rank);
    CHECK(back.cone == spec.cone);
    CHECK(back.support == spec.support);
    CHECK(back.delta_shell_cap == spec.delta_shell_cap);
    CHECK(back.root == spec.root);
}

TEST_CASE("parse accepts the four-ray cone document")
{
    const char* doc = R"({"rank":3,
        "cone":[[1,0,0],[0,1,0],[1,0,1],[0,1,1]],
        "support":[[0,0,2],[1,0,1],[0,2,0],[1,2,-1]]})";
    InputSpec spec = parse_input(doc);
    CHECK(spec.cone.size() == 4);
}

TEST_CASE("parse rejects malformed documents")
{
    CHECK_THROWS_AS(parse_input("{"), input_error);
    CHECK_THROWS_AS(parse_input("[1,2]"), input_error);
    CHECK_THROWS_AS(parse_input(R"({"rank":3,"cone":[[1,0,0]],"support":[]})"), input_error);
    // wrong vector length
    CHECK_THROWS_AS(
        parse_input(R"({"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],"support":[[1,2]]})"),
        input_error);
    // non-convex cone
    CHECK_THROWS_AS(parse_input(R"({"rank":3,
        "cone":[[1,0,0],[-1,0,0],[0,1,0],[0,0,1]],"support":[[1,1,1]]})"),
                    input_error);
    // unknown field
    CHECK_THROWS_AS(parse_input(R"({"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],
        "support":[[1,1,1]],"extra":1})"),
                    input_error);
}

TEST_CASE("reports are byte-deterministic")
{
    InputSpec spec = parse_input(e12_doc);
    CHECK(cmd_report(spec) == cmd_report(spec));
    CHECK(cmd_fan(spec) == cmd_fan(spec));
    CHECK(cmd_graph(spec) == cmd_graph(spec));
}

TEST_CASE("report carries the expected headline values")
{
    InputSpec spec = parse_input(e12_doc);
    std::string rep = cmd_report(spec);
    CHECK(rep.find("\"pg_count\": \"1\"") != std::string::npos);
    CHECK(rep.find("\"bound\": \"1\"") != std::string::npos);
    CHECK(rep.find("\"delta\": \"0\"") != std::string::npos);
    CHECK(rep.find("\"normal\": true") != std::string::npos);
    CHECK(rep.find("\"qhs\": true") != std::string::npos);
    CHECK(rep.find("error") == std::string::npos);
}

TEST_CASE("dot export renders parallel edges")
{
    InputSpec spec = parse_input(R"({"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],
        "support":[[5,0,0],[2,2,0],[0,7,0],[0,0,10]]})");
    std::string dot = cmd_dot(spec);
    // the two nodes are joined by two parallel bamboos; every bamboo edge is
    // listed separately
    CHECK(dot.find("graph plumbing") != std::string::npos);
    size_t count = 0;
    for (size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1))
        ++count;
    CHECK(count >= 10);
}

TEST_CASE("rank-2 documents produce curve reports")
{
    InputSpec spec = parse_input(R"({"rank":2,"cone":[[1,0],[0,1]],
        "support":[[2,0],[0,3]]})");
    std::string inv = cmd_invariants(spec);
    CHECK(inv.find("\"branches\": \"1\"") != std::string::npos);
    CHECK(inv.find("\"multiplicity\": \"2\"") != std::string::npos);
    CHECK(inv.find("\"delta\": \"1\"") != std::string::npos);
    CHECK_THROWS_AS(cmd_seq(spec), hypothesis_error);
}
