#include <doctest.h>

#include <filesystem>

#include "ifclone/facts/model_json.hpp"
#include "ifclone/facts/parser.hpp"

using namespace ifclone::facts;

TEST_CASE("model JSON round-trips to an identical model") {
    auto parsed = parse_source_tree({std::string(IFCLONE_FIXTURE_DIR) + "/mini_vuze"});
    nlohmann::json doc = model_to_json(parsed.model);
    CodeModel back = model_from_json(doc);
    CHECK(back == parsed.model);

    // and the serialization itself is stable
    CHECK(model_to_json(back).dump() == doc.dump());
}

TEST_CASE("empty model round-trips") {
    CodeModel model;
    CHECK(model_from_json(model_to_json(model)) == model);
}

TEST_CASE("dump and load through a file") {
    namespace fs = std::filesystem;
    auto parsed = parse_source_units(
        {SourceUnit{"A.java", "package p; interface A { void f(int[] xs); }"}});
    fs::path path = fs::temp_directory_path() / "ifclone_model_dump.json";
    dump_model_file(parsed.model, path.string());
    CodeModel back = load_model_file(path.string());
    CHECK(back == parsed.model);
    fs::remove(path);
}
