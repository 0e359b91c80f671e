#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kcha/dga.hpp"
#include "kcha/parser.hpp"

using namespace kcha;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}
} // namespace

TEST_CASE("builtin trefoil matches the published presentation") {
    DGA dga = builtin_dga("rh_trefoil");
    CHECK(dga.chords_of_degree(0).size() == 2);
    CHECK(dga.chords_of_degree(1).size() == 6);
    CHECK(dga.chords_of_degree(2).size() == 4);

    CHECK(dga.differentials.at("b21") ==
          parse_expr("-a12 + lambda*mu^-3*a21", dga.symtab));
    CHECK(dga.differentials.at("c22") ==
          parse_expr("mu - 1 - Q*a21 + mu*a12*a21", dga.symtab));
    CHECK_FALSE(dga.has_degree2_differentials());
    REQUIRE(dga.aug_metadata.has_value());
}

TEST_CASE("builtin unknot has no degree-0 chords") {
    DGA dga = builtin_dga("unknot");
    CHECK(dga.chords_of_degree(0).empty());
    CHECK(dga.chords_of_degree(1).size() == 1);
    REQUIRE(dga.aug_metadata.has_value());
    CHECK(*dga.aug_metadata == parse_expr("1 - lambda - mu + lambda*mu*Q", dga.symtab));
}

TEST_CASE("unknown builtin name fails") {
    CHECK_THROWS_AS(builtin_dga("torus"), ValidationError);
}

TEST_CASE("builtin documents ship as byte-stable data files") {
    CHECK(slurp(std::string(KCHA_DATA_DIR) + "/rh_trefoil.json") ==
          builtin_dga_document("rh_trefoil"));
    CHECK(slurp(std::string(KCHA_DATA_DIR) + "/unknot.json") == builtin_dga_document("unknot"));
}

TEST_CASE("validation rejects structural violations") {
    // Differential on a degree-0 generator.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad", "generators": [{"name": "a", "degree": 0}],
                                 "differentials": {"a": "mu - 1"}})"),
                    ValidationError);
    // Undeclared chord in a differential.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad", "generators": [{"name": "c", "degree": 1}],
                                 "differentials": {"c": "mu - zz"}})"),
                    ParseError);
    // Degree-1 differential using a degree-1 chord.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad",
                                 "generators": [{"name": "b", "degree": 1}, {"name": "c", "degree": 1}],
                                 "differentials": {"b": "c", "c": "0"}})"),
                    ValidationError);
    // Degree out of range.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad", "generators": [{"name": "g", "degree": 3}],
                                 "differentials": {}})"),
                    ValidationError);
    // Duplicate generator names.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad",
                                 "generators": [{"name": "a", "degree": 0}, {"name": "a", "degree": 1}],
                                 "differentials": {"a": "0"}})"),
                    Error);
    // Reserved identifier.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad", "generators": [{"name": "mu", "degree": 0}],
                                 "differentials": {}})"),
                    Error);
    // Missing degree-1 differential.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad", "generators": [{"name": "b", "degree": 1}],
                                 "differentials": {}})"),
                    ValidationError);
    // Malformed JSON.
    CHECK_THROWS_AS(parse_dga("{"), ParseError);
}

TEST_CASE("degree-2 differentials are optional but checked when present") {
    DGA ok = parse_dga(R"({"name": "toy",
        "generators": [{"name": "a", "degree": 0}, {"name": "b", "degree": 1},
                       {"name": "e", "degree": 2}],
        "differentials": {"b": "mu - 1 - a", "e": "2*b"}})");
    CHECK(ok.has_degree2_differentials());

    // Degree-2 differential may not use a degree-2 chord.
    CHECK_THROWS_AS(parse_dga(R"({"name": "bad",
        "generators": [{"name": "b", "degree": 1}, {"name": "e", "degree": 2},
                       {"name": "f", "degree": 2}],
        "differentials": {"b": "0", "e": "f"}})"),
                    ValidationError);
}

TEST_CASE("render/parse round trip for DGA documents") {
    for (const char* name : {"rh_trefoil", "unknot"}) {
        DGA dga = builtin_dga(name);
        DGA again = parse_dga(render_dga(dga));
        CHECK(again.name == dga.name);
        CHECK(again.generators.size() == dga.generators.size());
        for (const auto& [gen, diff] : dga.differentials)
            CHECK(parse_expr(render(diff), dga.symtab) == again.differentials.at(gen));
    }
}

TEST_CASE("built-in DGAs pass validation explicitly") {
    for (const char* name : {"rh_trefoil", "unknot"}) {
        DGA dga = builtin_dga(name);
        CHECK_NOTHROW(dga_validate(dga));
    }
}
