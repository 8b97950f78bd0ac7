#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "dfhad/catalog.hpp"
#include "dfhad/constructions.hpp"
#include "dfhad/error.hpp"
#include "dfhad/serialize.hpp"
#include "oracles.hpp"

using namespace dfhad;

namespace {

ErrorCode parse_code(std::string_view text) {
    const auto e = oracle::error_of([&] { parse_family_document(text); });
    REQUIRE(e);
    return e->code();
}

}  // namespace

TEST_CASE("canonical family document") {
    CHECK(to_json(catalog_get("z5_H").family()) ==
          "{\"blocks\":[[[0]],[[1],[4]],[[0]],[[2],[3]]],\"group\":[5],\"kind\":\"H\"}\n");
    CHECK(to_json(catalog_get("z5_H").family(), {{"d1", false}, {"d2", true}}) ==
          "{\"blocks\":[[[0]],[[1],[4]],[[0]],[[2],[3]]],\"conditions\":{\"d1\":false,\"d2\":true},"
          "\"group\":[5],\"kind\":\"H\"}\n");
}

TEST_CASE("family documents round-trip") {
    std::vector<DifferenceFamily> fams = {catalog_get("z5_H").family(), catalog_get("z13_H_d3").family(),
                                          catalog_get("f9_H_spread").family(), paley_families(13, Kind::H2star),
                                          product_z5(catalog_get("z5_H").family())};
    for (const auto& f : fams) {
        const auto doc = parse_family_document(to_json(f));
        REQUIRE(std::holds_alternative<DifferenceFamily>(doc.payload));
        CHECK(std::get<DifferenceFamily>(doc.payload) == f);
        CHECK(to_json(std::get<DifferenceFamily>(doc.payload)) == to_json(f));
    }
    const auto b = catalog_get("z9_building").building();
    const auto doc = parse_family_document(to_json(b));
    REQUIRE(std::holds_alternative<BuildingFamily>(doc.payload));
    CHECK(std::get<BuildingFamily>(doc.payload) == b);
    CHECK(doc.kind == "building");
}

TEST_CASE("asserted conditions are carried through") {
    const auto doc = parse_family_document(
        R"({"blocks":[[[0]],[[1],[4]],[[0]],[[2],[3]]],"conditions":{"d1":false},"group":[5],"kind":"H"})");
    CHECK(doc.conditions.at("d1") == false);
}

TEST_CASE("malformed documents") {
    CHECK(parse_code("") == ErrorCode::ParseError);
    CHECK(parse_code("[1,2]") == ErrorCode::ParseError);
    CHECK(parse_code(R"({"group":[5]})") == ErrorCode::ParseError);
    CHECK(parse_code(R"({"blocks":[[[0.5]]],"group":[5]})") == ErrorCode::ParseError);
    CHECK(parse_code(R"({"blocks":[[[0]]],"group":[5],"kind":"H9"})") == ErrorCode::ParseError);
    CHECK(parse_code(R"({"blocks":[[[7]]],"group":[5]})") != ErrorCode::IoError);
    CHECK(parse_code(R"({"blocks":[[[1],[2]]],"group":[5]})") == ErrorCode::NotADifferenceFamily);
}

TEST_CASE("matrix text round-trip") {
    const auto m = SignMatrix::from_function(3, [](std::size_t i, std::size_t j) { return (i + j) % 2 ? -1 : 1; });
    const auto text = matrix_to_text(m);
    CHECK(text == "3\n+-+\n-+-\n+-+\n");
    CHECK(matrix_from_text(text) == m);
    for (const char* bad : {"", "2\n++\n", "2\n++\n+x\n", "2\n+++\n++\n", "x\n", "2\n++\n++\n++\n"}) {
        const auto e = oracle::error_of([&] { matrix_from_text(bad); });
        REQUIRE_MESSAGE(e, bad);
        CHECK(e->code() == ErrorCode::ParseError);
    }
}

TEST_CASE("file helpers") {
    const auto path = (std::filesystem::temp_directory_path() / "dfhad_serialize_test.txt").string();
    write_file(path, "abc\n");
    CHECK(read_file(path) == "abc\n");
    std::remove(path.c_str());
    const auto e = oracle::error_of([] { read_file("/nonexistent/dir/file"); });
    REQUIRE(e);
    CHECK(e->code() == ErrorCode::IoError);
}
