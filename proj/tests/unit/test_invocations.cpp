#include <doctest.h>

#include "ifclone/facts/invocations.hpp"
#include "ifclone/facts/parser.hpp"

using namespace ifclone::facts;

namespace {

CodeModel model_of(std::initializer_list<SourceUnit> units) {
    return parse_source_units(std::vector<SourceUnit>(units)).model;
}

} // namespace

TEST_CASE("field receiver produces one site") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java", "class C { A a; void run() { a.foo(); } }"},
    });
    REQUIRE(model.invocations.size() == 1);
    const auto& site = model.invocations[0];
    CHECK(site.client_class == "C");
    CHECK(site.interface_id == "A");
    CHECK(site.method_name == "foo");
    CHECK(site.arg_count == 0);
}

TEST_CASE("parameter and local receivers produce sites with arity") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { int take(int a, int b); void stop(); }"},
        SourceUnit{"C1.java", "class C1 { void fromParam(A a) { a.take(1, 2); } }"},
        SourceUnit{"C2.java", R"(
class C2 {
    void fromLocal() {
        A local = null;
        local.take(3, f(4, 5));
        local.stop();
    }
    int f(int x, int y) { return x + y; }
}
)"},
    });
    REQUIRE(model.invocations.size() == 3);
    CHECK(model.invocations[0].client_class == "C1");
    CHECK(model.invocations[0].arg_count == 2);
    CHECK(model.invocations[1].client_class == "C2");
    CHECK(model.invocations[1].method_name == "stop");
    CHECK(model.invocations[2].arg_count == 2); // nested call commas not counted
}

TEST_CASE("same call from two bodies of one class collapses to one site") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java",
                   "class C { A a; void r1() { a.foo(); } void r2() { a.foo(); } }"},
    });
    CHECK(model.invocations.size() == 1);
}

TEST_CASE("duplicate calls collapse to one site") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java", "class C { A a; void r() { a.foo(); a.foo(); a.foo(); } }"},
    });
    CHECK(model.invocations.size() == 1);
}

TEST_CASE("this calls and plain calls are not sites") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java", R"(
class C implements A {
    public void foo() { this.bar(); bar(); }
    void bar() { }
}
)"},
    });
    CHECK(model.invocations.empty());
}

TEST_CASE("chained member access is not a simple receiver") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { A next(); void foo(); }"},
        SourceUnit{"C.java", "class C { A a; void r() { a.next().foo(); } }"},
    });
    // a.next() is a site; .foo() hangs off an expression and is not
    REQUIRE(model.invocations.size() == 1);
    CHECK(model.invocations[0].method_name == "next");
}

TEST_CASE("non-interface receivers are ignored") {
    CodeModel model = model_of({
        SourceUnit{"B.java", "class B { void hit() { } }"},
        SourceUnit{"C.java", "class C { B b; void r() { b.hit(); } }"},
    });
    CHECK(model.invocations.empty());
}

TEST_CASE("for-each variables act as receivers") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java", R"(
class C {
    void all(java.util.List<A> items) {
        for (A item : items) {
            item.foo();
        }
    }
}
)"},
    });
    REQUIRE(model.invocations.size() == 1);
    CHECK(model.invocations[0].method_name == "foo");
}

TEST_CASE("nested interface receivers resolve through the outer type") {
    CodeModel model = model_of({
        SourceUnit{"Outer.java",
                   "package p; public class Outer { public interface Callback { void done(int c); } }"},
        SourceUnit{"User.java",
                   "package p; class User { Outer.Callback cb; void f() { cb.done(1); } }"},
        SourceUnit{"Far.java", R"(
package q;
import p.Outer;
class Far {
    void g(Outer.Callback direct) { direct.done(2); }
}
)"},
    });
    REQUIRE(model.invocations.size() == 2);
    CHECK(model.invocations[0].interface_id == "p.Outer.Callback");
    CHECK(model.invocations[1].interface_id == "p.Outer.Callback");
}

TEST_CASE("string and comment content never produces sites") {
    CodeModel model = model_of({
        SourceUnit{"A.java", "interface A { void foo(); }"},
        SourceUnit{"C.java", R"__(
class C {
    A a;
    void r() {
        String s = "a.foo()";
        // a.foo();
        /* a.foo(); */
        char c = ')';
    }
}
)__"},
    });
    CHECK(model.invocations.empty());
}
