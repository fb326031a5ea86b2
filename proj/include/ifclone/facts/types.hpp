#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ifclone::facts {

/// Ids are qualified type names ("com.example.Foo", "com.example.Outer.Inner").
using TypeId = std::string;

/// A declared type occurrence: the raw token text plus the best-effort
/// resolved qualified name. Array/varargs structure is normalized into
/// `dimensions`; generic arguments stay textual (canonicalized spacing).
struct TypeRef {
    std::string raw_text;      // canonicalized declared tokens, e.g. "List<String>[]"
    std::string resolved_name; // e.g. "java.util.List<String>"; excludes array suffix
    bool is_array = false;
    int dimensions = 0;

    bool operator==(const TypeRef&) const = default;
    auto operator<=>(const TypeRef&) const = default;
};

enum class Visibility : std::uint8_t { Public, Other };

struct MethodSignature {
    std::string name;
    TypeRef return_type;
    std::vector<TypeRef> param_types;
    Visibility visibility = Visibility::Public;

    bool operator==(const MethodSignature&) const = default;
};

struct InterfaceFlags {
    bool is_marker = false;
    bool is_test = false;
    bool is_library = false;

    bool operator==(const InterfaceFlags&) const = default;
};

/// One edge to a super-interface or implemented interface. Targets outside
/// the model keep their resolved name and are marked external.
struct TypeEdge {
    std::string name;     // resolved name of the target
    TypeId target_id;     // empty when external
    bool external = true;

    bool operator==(const TypeEdge&) const = default;
};

struct Import {
    std::string qualified; // "java.util.List" or package prefix for wildcards
    bool wildcard = false;
    bool is_static = false;

    bool operator==(const Import&) const = default;
};

/// A parsed method body: the signature, the raw text between the braces,
/// and where that text starts/ends in the source unit.
struct MethodBody {
    MethodSignature signature;
    std::vector<std::string> param_names; // parallel to signature.param_types
    std::string body_text;
    int start_line = 0; // 1-based line of the first body character
    int end_line = 0;   // 1-based line of the closing brace

    bool operator==(const MethodBody&) const = default;
};

struct InterfaceDecl {
    TypeId id;
    std::string qualified_name;
    std::vector<std::string> package_path;
    std::vector<MethodSignature> signatures; // as declared, all visibilities
    std::vector<TypeEdge> extends;
    InterfaceFlags flags;
    std::vector<MethodBody> default_bodies; // default/static methods with bodies
    std::string source_file;
    std::vector<Import> imports; // file context, kept for body analysis

    /// size(i): explicitly declared public signatures only.
    int public_size() const;

    bool operator==(const InterfaceDecl&) const = default;
};

struct FieldDecl {
    std::string name;
    TypeRef type;

    bool operator==(const FieldDecl&) const = default;
};

struct ClassDecl {
    TypeId id;
    std::string qualified_name;
    std::vector<std::string> package_path;
    std::vector<TypeEdge> implements; // direct only
    TypeEdge extends;                 // empty name when none
    std::vector<MethodBody> bodies;
    std::vector<FieldDecl> fields;
    bool is_test = false;
    bool is_abstract = false;
    std::string source_file;
    std::vector<Import> imports;

    bool operator==(const ClassDecl&) const = default;
};

/// A call `recv.m(a1..ak)` whose receiver's declared type resolves to a
/// modeled interface. Deduplicated per (class, interface, name, arity).
struct InvocationSite {
    TypeId client_class;
    TypeRef receiver_declared_type;
    TypeId interface_id; // the modeled interface the receiver resolved to
    std::string method_name;
    int arg_count = 0;

    bool operator==(const InvocationSite&) const = default;
    auto operator<=>(const InvocationSite&) const = default;
};

/// The immutable fact base for one analyzed source tree.
struct CodeModel {
    std::map<TypeId, InterfaceDecl> interfaces;
    std::map<TypeId, ClassDecl> classes;
    std::vector<InvocationSite> invocations;
    std::vector<std::string> source_roots;

    const InterfaceDecl* find_interface(const TypeId& id) const;
    const ClassDecl* find_class(const TypeId& id) const;

    /// Sum of size(i) over all interfaces.
    long total_declared_methods() const;

    /// Ids of all interfaces reachable from `id` by following extends edges
    /// downward (i.e. `id` plus every interface that extends it transitively).
    std::vector<TypeId> interface_descendants(const TypeId& id) const;

    /// Classes that implement `id` directly or transitively: via sub-interfaces
    /// and via class inheritance from an implementing class.
    std::vector<TypeId> implementation_closure(const TypeId& id) const;

    bool operator==(const CodeModel&) const = default;
};

} // namespace ifclone::facts
