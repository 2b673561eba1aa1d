#include <ntoric/ntoric.h>

#include <doctest.h>

#include <string>

namespace {

const char* e12_doc = R"({"rank":3,"cone":[[1,0,0],[0,1,0],[0,0,1]],
                          "support":[[2,0,0],[0,3,0],[0,0,7]]})";

std::string take(char* p)
{
    std::string s = p ? p : "";
    ntc_free(p);
    return s;
}

} // namespace

TEST_CASE("parse, query and free through the C interface")
{
    char* err = nullptr;
    ntc_diagram* d = ntc_diagram_parse(e12_doc, &err);
    REQUIRE(d != nullptr);
    CHECK(err == nullptr);

    char* out = nullptr;
    CHECK(ntc_report_json(d, &out, &err) == NTC_OK);
    std::string rep = take(out);
    CHECK(rep.find("\"pg_count\": \"1\"") != std::string::npos);

    CHECK(ntc_fan_json(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("\"rays\"") != std::string::npos);

    CHECK(ntc_graph_json(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("\"negative_definite\": true") != std::string::npos);

    CHECK(ntc_invariants_json(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("\"isolated\": true") != std::string::npos);

    CHECK(ntc_seq_json(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("\"bound\": \"1\"") != std::string::npos);

    CHECK(ntc_reduce_json(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("\"changed\": false") != std::string::npos);

    CHECK(ntc_graph_dot(d, &out, &err) == NTC_OK);
    CHECK(take(out).find("graph plumbing") != std::string::npos);

    CHECK(ntc_input_json(d, &out, &err) == NTC_OK);
    std::string text = take(out);
    ntc_diagram* d2 = ntc_diagram_parse(text.c_str(), &err);
    REQUIRE(d2 != nullptr);
    ntc_diagram_free(d2);

    ntc_diagram_free(d);
}

TEST_CASE("error reporting and status codes")
{
    char* err = nullptr;
    ntc_diagram* bad = ntc_diagram_parse("{not json", &err);
    CHECK(bad == nullptr);
    REQUIRE(err != nullptr);
    CHECK(take(err).find("malformed") != std::string::npos);

    // rank-2 documents cannot run the surface pipeline
    ntc_diagram* curve = ntc_diagram_parse(
        R"({"rank":2,"cone":[[1,0],[0,1]],"support":[[2,0],[0,3]]})", &err);
    REQUIRE(curve != nullptr);
    char* out = nullptr;
    CHECK(ntc_seq_json(curve, &out, &err) == NTC_EHYPOTHESIS);
    CHECK(out == nullptr);
    CHECK(take(err).size() > 0);
    ntc_diagram_free(curve);

    CHECK(ntc_report_json(nullptr, &out, &err) == NTC_EINPUT);
    take(err);

    CHECK(std::string(ntc_version()).find("ntoric") == 0);
}

TEST_CASE("options pass through the handle")
{
    char* err = nullptr;
    ntc_diagram* d = ntc_diagram_parse(e12_doc, &err);
    REQUIRE(d != nullptr);
    ntc_set_delta_shell_cap(d, 16);
    ntc_set_root(d, 0);
    char* out = nullptr;
    CHECK(ntc_input_json(d, &out, &err) == NTC_OK);
    std::string s = take(out);
    CHECK(s.find("\"delta_shell_cap\": 16") != std::string::npos);
    CHECK(s.find("\"root\": 0") != std::string::npos);
    ntc_diagram_free(d);
}
