#include <doctest.h>

#include "ifclone/facts/resolve.hpp"

using namespace ifclone::facts;

namespace {

NameIndex index_of(std::initializer_list<const char*> names) {
    NameIndex idx;
    for (const char* n : names) idx.add(n);
    return idx;
}

} // namespace

TEST_CASE("explicit import wins") {
    NameIndex idx;
    TypeRef t = resolve_type("List<String>", {Import{"java.util.List", false, false}}, {"p"}, idx);
    CHECK(t.resolved_name == "java.util.List<String>");
    CHECK(t.raw_text == "List<String>");
    CHECK_FALSE(t.is_array);
}

TEST_CASE("primitives resolve to themselves") {
    NameIndex idx;
    TypeRef t = resolve_type("int", {}, {}, idx);
    CHECK(t.resolved_name == "int");
    CHECK(t.dimensions == 0);
}

TEST_CASE("varargs normalize to arrays of the java.lang type") {
    NameIndex idx;
    TypeRef t = resolve_type("String...", {}, {}, idx);
    CHECK(t.resolved_name == "java.lang.String");
    CHECK(t.is_array);
    CHECK(t.dimensions == 1);
    CHECK(t.raw_text == "String...");
}

TEST_CASE("same package beats other rules when declared in-model") {
    auto idx = index_of({"p.q.Widget", "other.Widget"});
    TypeRef t = resolve_type("Widget", {}, {"p", "q"}, idx);
    CHECK(t.resolved_name == "p.q.Widget");
}

TEST_CASE("wildcard imports resolve only against in-model names") {
    auto idx = index_of({"lib.Thing"});
    TypeRef hit = resolve_type("Thing", {Import{"lib", true, false}}, {"p"}, idx);
    CHECK(hit.resolved_name == "lib.Thing");
    TypeRef miss = resolve_type("Unknown", {Import{"lib", true, false}}, {"p"}, idx);
    CHECK(miss.resolved_name == "Unknown");
}

TEST_CASE("unique in-model simple name resolves; ambiguous stays simple") {
    auto idx = index_of({"a.Only"});
    CHECK(resolve_type("Only", {}, {"p"}, idx).resolved_name == "a.Only");

    auto dup = index_of({"a.Twice", "b.Twice"});
    CHECK(resolve_type("Twice", {}, {"p"}, dup).resolved_name == "Twice");
}

TEST_CASE("dotted names are taken as written") {
    NameIndex idx;
    CHECK(resolve_type("com.x.Foo", {}, {}, idx).resolved_name == "com.x.Foo");
}

TEST_CASE("arrays stack dimensions") {
    NameIndex idx;
    TypeRef t = resolve_type("int [ ] [ ]", {}, {}, idx);
    CHECK(t.resolved_name == "int");
    CHECK(t.dimensions == 2);
    CHECK(t.raw_text == "int[][]");
}

TEST_CASE("generic argument spacing canonicalizes identically") {
    NameIndex idx;
    Import imp{"java.util.Map", false, false};
    TypeRef spaced = resolve_type("Map < String , Integer >", {imp}, {}, idx);
    TypeRef tight = resolve_type("Map<String,Integer>", {imp}, {}, idx);
    CHECK(spaced.resolved_name == tight.resolved_name);
    CHECK(spaced.raw_text == tight.raw_text);
}

TEST_CASE("annotations and final are ignored in parameter types") {
    NameIndex idx;
    TypeRef t = resolve_type("final @NotNull String", {}, {}, idx);
    CHECK(t.resolved_name == "java.lang.String");
}
