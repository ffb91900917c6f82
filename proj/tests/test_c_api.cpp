// Exercises the shared-library C interface end to end, exactly as an
// external consumer (or the CLI) would: opaque handles, status codes,
// string ownership.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "coverideal.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    cvi_string_free(s);
    return out;
}

struct GraphHandle {
    cvi_graph* g = nullptr;
    ~GraphHandle() { cvi_graph_free(g); }
};
struct IdealHandle {
    cvi_ideal* i = nullptr;
    ~IdealHandle() { cvi_ideal_free(i); }
};

} // namespace

TEST_CASE("version and error strings are always available") {
    CHECK(std::strlen(cvi_version()) > 0);
    CHECK(cvi_last_error() != nullptr);
}

TEST_CASE("graph construction, info, and round trips") {
    GraphHandle g;
    REQUIRE(cvi_graph_from_spec(R"({"family":"cycle","n":4})", &g.g) == CVI_OK);
    json info = json::parse(take([&] {
        char* s = nullptr;
        REQUIRE(cvi_graph_info(g.g, &s) == CVI_OK);
        return s;
    }()));
    CHECK(info["vertices"] == 4);
    CHECK(info["edges"] == 4);
    CHECK(info["components"] == 1);
    CHECK(info["matching_number"] == 2);

    char* js = nullptr;
    REQUIRE(cvi_graph_to_json(g.g, &js) == CVI_OK);
    GraphHandle g2;
    REQUIRE(cvi_graph_from_json(take(js).c_str(), &g2.g) == CVI_OK);
    char* el = nullptr;
    REQUIRE(cvi_graph_to_edge_list(g2.g, &el) == CVI_OK);
    CHECK(take(el).find("x1 x2") != std::string::npos);

    GraphHandle comp;
    REQUIRE(cvi_graph_companion(g.g, 2, &comp.g) == CVI_OK);
    char* cj = nullptr;
    REQUIRE(cvi_graph_to_json(comp.g, &cj) == CVI_OK);
    CHECK(json::parse(take(cj))["vertices"].size() == 8);
}

TEST_CASE("ideal pipeline: cover, symbolic power, polarize, dual, betti, reg") {
    GraphHandle g;
    REQUIRE(cvi_graph_from_edge_list("x1 x2\nx2 x3\nx3 x1\nx1 x4\nx1 x5\nx2 x6\nx2 x7\nx3 x8\nx3 x9",
                                     &g.g) == CVI_OK);
    IdealHandle j, s2, pol, dual, edge;
    REQUIRE(cvi_cover_ideal(g.g, &j.i) == CVI_OK);
    REQUIRE(cvi_edge_ideal(g.g, &edge.i) == CVI_OK);
    REQUIRE(cvi_symbolic_power(g.g, 2, &s2.i) == CVI_OK);
    REQUIRE(cvi_ideal_polarize(s2.i, &pol.i) == CVI_OK);
    REQUIRE(cvi_ideal_dual(edge.i, &dual.i) == CVI_OK);

    char* r1 = nullptr;
    REQUIRE(cvi_ideal_render(j.i, &r1) == CVI_OK);
    CHECK(take(r1) == "(x1*x2*x3, x2*x3*x4*x5, x1*x3*x6*x7, x1*x2*x8*x9)");
    // Alexander dual of the edge ideal is the cover ideal.
    char* rj = nullptr;
    char* rd = nullptr;
    REQUIRE(cvi_ideal_to_json(j.i, &rj) == CVI_OK);
    REQUIRE(cvi_ideal_to_json(dual.i, &rd) == CVI_OK);
    CHECK(json::parse(take(rj)) == json::parse(take(rd)));

    long long reg_j = 0, reg_s2 = 0;
    REQUIRE(cvi_regularity(j.i, 2, 2, &reg_j) == CVI_OK);
    REQUIRE(cvi_regularity(s2.i, 2, 2, &reg_s2) == CVI_OK);
    CHECK(reg_j == 4);
    CHECK(reg_s2 == 9);

    char* bt = nullptr;
    REQUIRE(cvi_betti(j.i, 3, 1, &bt) == CVI_OK);
    std::string table = take(bt);
    CHECK(json::parse(table)["field"] == 3);
    char* rendered = nullptr;
    REQUIRE(cvi_betti_render(table.c_str(), &rendered) == CVI_OK);
    CHECK(take(rendered).find("total") != std::string::npos);

    IdealHandle sq, meet;
    REQUIRE(cvi_ideal_power(j.i, 2, &sq.i) == CVI_OK);
    REQUIRE(cvi_ideal_intersect(sq.i, s2.i, &meet.i) == CVI_OK);
    char* rs = nullptr;
    char* rm = nullptr;
    REQUIRE(cvi_ideal_to_json(sq.i, &rs) == CVI_OK);
    REQUIRE(cvi_ideal_to_json(meet.i, &rm) == CVI_OK);
    CHECK(json::parse(take(rs)) == json::parse(take(rm))); // J^2 inside J^(2)
}

TEST_CASE("checks return outcome reports and certificates validate") {
    GraphHandle p4;
    REQUIRE(cvi_graph_from_spec(R"({"family":"path","n":4})", &p4.g) == CVI_OK);
    IdealHandle j;
    REQUIRE(cvi_cover_ideal(p4.g, &j.i) == CVI_OK);

    char* rep = nullptr;
    REQUIRE(cvi_check("lq", nullptr, j.i, 2, 0, 0, 1, &rep) == CVI_OK);
    json lq = json::parse(take(rep));
    CHECK(lq["outcome"] == "certified");
    int valid = 0;
    REQUIRE(cvi_validate_certificate(lq["certificate"].dump().c_str(), &valid) == CVI_OK);
    CHECK(valid == 1);

    REQUIRE(cvi_check("vd", p4.g, nullptr, 2, 0, 0, 1, &rep) == CVI_OK);
    json vd = json::parse(take(rep));
    CHECK(vd["outcome"] == "certified");
    REQUIRE(cvi_validate_certificate(vd["certificate"].dump().c_str(), &valid) == CVI_OK);
    CHECK(valid == 1);

    REQUIRE(cvi_check("cwl", nullptr, j.i, 2, 0, 0, 1, &rep) == CVI_OK);
    CHECK(json::parse(take(rep))["value"] == true);
    REQUIRE(cvi_check("seqcm", p4.g, nullptr, 3, 0, 0, 1, &rep) == CVI_OK);
    CHECK(json::parse(take(rep))["value"] == true);

    // Budget exhaustion is a successful call with a budget-exceeded outcome.
    GraphHandle big;
    REQUIRE(cvi_graph_from_spec(
                R"({"family":"whisker","base":{"family":"cycle","n":6},
                    "vertices":["x1","x2","x3","x4","x5","x6"]})",
                &big.g) == CVI_OK);
    REQUIRE(cvi_check("vd", big.g, nullptr, 2, 1, 600, 1, &rep) == CVI_OK);
    CHECK(json::parse(take(rep))["outcome"] == "budget-exceeded");
}

TEST_CASE("error paths set status codes and messages") {
    CHECK(cvi_graph_from_json(nullptr, nullptr) == CVI_ERR_DOMAIN);
    cvi_graph* g = nullptr;
    CHECK(cvi_graph_from_json("{broken", &g) == CVI_ERR_IO);
    CHECK(std::strlen(cvi_last_error()) > 0);
    CHECK(cvi_graph_from_edge_list("a b c", &g) == CVI_ERR_IO);
    GraphHandle ok;
    REQUIRE(cvi_graph_from_spec(R"({"family":"path","n":3})", &ok.g) == CVI_OK);
    cvi_ideal* i = nullptr;
    CHECK(cvi_symbolic_power(ok.g, 0, &i) == CVI_ERR_DOMAIN);
    char* rep = nullptr;
    CHECK(cvi_check("nonsense", ok.g, nullptr, 2, 0, 0, 1, &rep) == CVI_ERR_DOMAIN);
    CHECK(cvi_check("lq", ok.g, nullptr, 2, 0, 0, 1, &rep) == CVI_ERR_DOMAIN);
}

TEST_CASE("verify runs a single suite through the C API") {
    char* out = nullptr;
    REQUIRE(cvi_verify("lem-2.9", 0, 0, 1, nullptr, &out) == CVI_OK);
    json suites = json::parse(take(out));
    REQUIRE(suites.size() == 1);
    CHECK(suites[0]["suite"] == "lem-2.9");
    CHECK(suites[0]["passed"] == true);
    CHECK(cvi_verify("no-such-suite", 0, 0, 1, nullptr, &out) == CVI_ERR_DOMAIN);
}
