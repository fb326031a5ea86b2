#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ifclone/errors.hpp"
#include "ifclone/facts/parser.hpp"

using namespace ifclone;
using facts::parse_source_tree;
using facts::parse_source_units;
using facts::SourceUnit;

namespace {

const facts::InterfaceDecl& only_interface(const facts::CodeModel& model) {
    REQUIRE(model.interfaces.size() == 1);
    return model.interfaces.begin()->second;
}

} // namespace

TEST_CASE("interface with two methods parses with size 2") {
    auto out = parse_source_units({SourceUnit{
        "A.java", "interface A { void foo(); int bar(int x); }"}});
    const auto& a = only_interface(out.model);
    CHECK(a.qualified_name == "A");
    CHECK(a.public_size() == 2);
    CHECK(a.signatures[0].name == "foo");
    CHECK(a.signatures[1].name == "bar");
    CHECK(a.signatures[1].param_types.size() == 1);
    CHECK(a.signatures[1].param_types[0].resolved_name == "int");
    CHECK_FALSE(a.flags.is_marker);
}

TEST_CASE("empty interface is a marker") {
    auto out = parse_source_units({SourceUnit{"M.java", "interface M {}"}});
    CHECK(only_interface(out.model).flags.is_marker);
}

TEST_CASE("package and imports are captured") {
    auto out = parse_source_units({SourceUnit{"A.java", R"(
package com.example.api;

import java.util.List;
import com.other.*;

public interface Store {
    List<String> names();
}
)"}});
    const auto& decl = only_interface(out.model);
    CHECK(decl.qualified_name == "com.example.api.Store");
    CHECK(decl.package_path == std::vector<std::string>{"com", "example", "api"});
    REQUIRE(decl.imports.size() == 2);
    CHECK(decl.imports[0].qualified == "java.util.List");
    CHECK_FALSE(decl.imports[0].wildcard);
    CHECK(decl.imports[1].qualified == "com.other");
    CHECK(decl.imports[1].wildcard);
    CHECK(decl.signatures[0].return_type.resolved_name == "java.util.List<String>");
}

TEST_CASE("class declarations capture hierarchy, fields and bodies") {
    auto out = parse_source_units({SourceUnit{"F.java", R"(
package p;

public abstract class Foo extends Base implements Alpha, Beta {
    private int counter;
    protected String label = "x";

    public int next(int step) {
        counter = counter + step;
        return counter;
    }

    abstract void pending();
}
)"},
                                   SourceUnit{"Alpha.java", "package p; interface Alpha {}"}});
    const auto& cls = out.model.classes.at("p.Foo");
    CHECK(cls.is_abstract);
    CHECK(cls.extends.name == "Base");
    CHECK(cls.extends.external); // Base is not in the model
    REQUIRE(cls.implements.size() == 2);
    CHECK(cls.implements[0].target_id == "p.Alpha");
    CHECK_FALSE(cls.implements[0].external);
    CHECK(cls.implements[1].external);
    REQUIRE(cls.fields.size() == 2);
    CHECK(cls.fields[0].name == "counter");
    CHECK(cls.fields[1].type.resolved_name == "java.lang.String");
    REQUIRE(cls.bodies.size() == 1); // abstract method has no body
    CHECK(cls.bodies[0].signature.name == "next");
    CHECK(cls.bodies[0].param_names == std::vector<std::string>{"step"});
}

TEST_CASE("body line spans are within the source unit") {
    std::string text = "class C {\n"            // line 1
                       "    void go() {\n"      // line 2
                       "        int a = 1;\n"   // line 3
                       "        use(a);\n"      // line 4
                       "    }\n"                // line 5
                       "}\n";
    auto out = parse_source_units({SourceUnit{"C.java", text}});
    const auto& body = out.model.classes.at("C").bodies.at(0);
    CHECK(body.start_line == 2);
    CHECK(body.end_line == 5);
    CHECK(body.body_text.find("int a = 1;") != std::string::npos);
}

TEST_CASE("interface default and static methods count and keep bodies") {
    auto out = parse_source_units({SourceUnit{"I.java", R"(
interface WithDefault {
    int base();

    default int doubled() {
        int v = base();
        return v * 2;
    }

    static WithDefault empty() {
        return null;
    }

    private int hidden() { return 1; }
}
)"}});
    const auto& decl = only_interface(out.model);
    CHECK(decl.public_size() == 3); // base, doubled, empty; hidden is private
    CHECK(decl.default_bodies.size() == 3);
}

TEST_CASE("nested and multiple types in one file all appear") {
    auto out = parse_source_units({SourceUnit{"Outer.java", R"(
package p;

public class Outer {
    public interface Inner {
        void ping();
    }

    static class Helper {
        void assist() { }
    }
}

enum Mode implements Labeled { FAST, SLOW(2), CAREFUL { }; int weight() { return 1; } }

interface Labeled { String label(); }
)"}});
    CHECK(out.model.interfaces.count("p.Outer.Inner") == 1);
    CHECK(out.model.interfaces.count("p.Labeled") == 1);
    CHECK(out.model.classes.count("p.Outer") == 1);
    CHECK(out.model.classes.count("p.Outer.Helper") == 1);
    const auto& mode = out.model.classes.at("p.Mode");
    REQUIRE(mode.implements.size() == 1);
    CHECK(mode.implements[0].target_id == "p.Labeled");
    CHECK(mode.bodies.size() == 1); // weight(), after the constant list
}

TEST_CASE("annotation declarations and generic methods do not confuse parsing") {
    auto out = parse_source_units({SourceUnit{"J.java", R"(
package p;

@interface Marker { String value() default ""; }

interface Repo {
    <T> java.util.List<T> fetch(T seed);

    int count();
}
)"}});
    REQUIRE(out.model.interfaces.count("p.Repo") == 1);
    const auto& repo = out.model.interfaces.at("p.Repo");
    CHECK(repo.public_size() == 2);
    CHECK(repo.signatures[0].name == "fetch");
    CHECK(repo.signatures[0].param_types.size() == 1);
}

TEST_CASE("varargs and arrays normalize into dimensions") {
    auto out = parse_source_units({SourceUnit{"V.java", R"(
interface V {
    void log(String... parts);
    int[] histogram(int bucket);
}
)"}});
    const auto& decl = only_interface(out.model);
    const auto& log = decl.signatures[0];
    CHECK(log.param_types[0].resolved_name == "java.lang.String");
    CHECK(log.param_types[0].is_array);
    CHECK(log.param_types[0].dimensions == 1);
    const auto& histogram = decl.signatures[1];
    CHECK(histogram.return_type.dimensions == 1);
}

TEST_CASE("sealed hierarchies, wildcard generics and constants parse cleanly") {
    auto out = parse_source_units({SourceUnit{"P.java", R"(
package probe;

import java.util.List;

public sealed interface Shape permits Circle, Square {
    double area();

    List<? extends Shape> children();

    int compare(List<String>[] buckets, int[] weights);
}

non-sealed class Square implements Shape {
    public double area() { return 1.0; }
}
)"},
                                   SourceUnit{"Q.java", R"(
package probe;

interface Mixed {
    int CONSTANT = 42;
    String NAME = "mixed";

    void act();

    @Deprecated
    default void legacy(int... codes) {
        act();
    }
}
)"}});
    const auto& shape = out.model.interfaces.at("probe.Shape");
    CHECK(shape.public_size() == 3);
    CHECK(shape.signatures[1].return_type.resolved_name == "java.util.List<?extends Shape>");
    CHECK(shape.signatures[2].param_types[0].resolved_name == "java.util.List<String>");
    CHECK(shape.signatures[2].param_types[0].dimensions == 1);

    const auto& mixed = out.model.interfaces.at("probe.Mixed");
    CHECK(mixed.public_size() == 2); // constants are fields, not signatures
    CHECK_FALSE(mixed.flags.is_marker);
    CHECK(mixed.signatures[1].param_types[0].dimensions == 1); // varargs

    const auto& square = out.model.classes.at("probe.Square");
    REQUIRE(square.implements.size() == 1);
    CHECK(square.implements[0].target_id == "probe.Shape");
}

TEST_CASE("hierarchy edges resolve through wildcard imports of modeled packages") {
    auto out = parse_source_units({
        SourceUnit{"A.java", "package api; public interface Listener { void on(int e); }"},
        SourceUnit{"C.java", R"(
package app;
import api.*;
public class Hub implements Listener {
    public void on(int e) { }
}
)"},
    });
    const auto& hub = out.model.classes.at("app.Hub");
    REQUIRE(hub.implements.size() == 1);
    CHECK(hub.implements[0].target_id == "api.Listener");
    CHECK_FALSE(hub.implements[0].external);
}

TEST_CASE("within one interface a signature never duplicates itself") {
    // tolerant parsing may see the same identity spelled two ways; only the
    // first declaration is kept
    auto out = parse_source_units({SourceUnit{"D.java", R"(
interface D {
    void f(String s);
    void f(java.lang.String t);
}
)"}});
    CHECK(only_interface(out.model).public_size() == 1);
}

TEST_CASE("an interface with only private methods counts as a marker") {
    auto out = parse_source_units(
        {SourceUnit{"P.java", "interface P { private int helper() { return 1; } }"}});
    const auto& decl = only_interface(out.model);
    CHECK(decl.public_size() == 0);
    CHECK(decl.flags.is_marker);
}

TEST_CASE("unbalanced file yields what was parsed before the breakage") {
    auto out = parse_source_units(
        {SourceUnit{"Broken.java", "interface Ok { void fine(); }\nclass Broken { void x() {"},
         SourceUnit{"Good.java", "interface Good { int g(); }"}});
    CHECK(out.model.interfaces.count("Ok") == 1);
    CHECK(out.model.interfaces.count("Good") == 1);
}

TEST_CASE("duplicate qualified names are kept and reported") {
    auto out = parse_source_units({SourceUnit{"A1.java", "package p; interface Dup { void a(); }"},
                                   SourceUnit{"A2.java", "package p; interface Dup { void b(); }"}});
    CHECK(out.model.interfaces.size() == 2);
    CHECK(out.model.interfaces.count("p.Dup") == 1);
    CHECK(out.model.interfaces.count("p.Dup#2") == 1);
    REQUIRE(out.warnings.size() == 1);
    CHECK(out.warnings[0].find("duplicate type name p.Dup") != std::string::npos);
}

TEST_CASE("parse_source_tree walks directories and flags errors") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ifclone_parser_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "sub");

    SUBCASE("empty directory raises NoSourceFound") {
        CHECK_THROWS_AS(parse_source_tree({dir.string()}), NoSourceFoundError);
    }

    SUBCASE("missing root raises IoError") {
        CHECK_THROWS_AS(parse_source_tree({(dir / "absent").string()}), IoError);
    }

    SUBCASE("discovered files parse into the model") {
        std::ofstream(dir / "sub" / "A.java") << "package s; interface A { void f(); }";
        std::ofstream(dir / "Ignored.txt") << "not java";
        auto out = parse_source_tree({dir.string()});
        CHECK(out.model.interfaces.count("s.A") == 1);
        CHECK(out.model.source_roots == std::vector<std::string>{dir.string()});
    }

    fs::remove_all(dir);
}

TEST_CASE("golden corpus parses completely") {
    auto out = parse_source_tree({std::string(IFCLONE_FIXTURE_DIR) + "/mini_vuze"});
    CHECK(out.warnings.empty());
    CHECK(out.model.interfaces.size() == 8); // 5 retained + marker + 2 test
    CHECK(out.model.classes.size() == 9);
    CHECK(out.model.interfaces.at("com.vuzelike.peer.PeerReadRequest").public_size() == 5);
    CHECK(out.model.interfaces.at("com.vuzelike.util.Taggable").flags.is_marker);
    CHECK(out.model.interfaces.at("com.vuzelike.tests.MockRequest").flags.is_test);
    CHECK(out.model.interfaces.at("com.vuzelike.scratch.ScratchHandler").flags.is_test);
    const auto& d = out.model.interfaces.at("com.vuzelike.disk2.DiskManagerReadRequest");
    REQUIRE(d.extends.size() == 1);
    CHECK(d.extends[0].target_id == "com.vuzelike.peer.PeerReadRequest");
}
