#include "ifclone/facts/resolve.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ifclone/facts/lexer.hpp"

namespace ifclone::facts {

namespace {

const std::set<std::string>& java_lang_types() {
    static const std::set<std::string> names = {
        "AutoCloseable", "Boolean", "Byte", "CharSequence", "Character", "Class",
        "Cloneable", "Comparable", "Double", "Enum", "Error", "Exception", "Float",
        "Integer", "Iterable", "Long", "Math", "Number", "Object", "Process",
        "Record", "Runnable", "RuntimeException", "Short", "String", "StringBuffer",
        "StringBuilder", "System", "Thread", "Throwable", "Void",
    };
    return names;
}

bool is_primitive(const std::string& name) {
    static const std::set<std::string> prims = {
        "boolean", "byte", "char", "double", "float", "int", "long", "short", "void",
    };
    return prims.count(name) > 0;
}

std::string join_package(const std::vector<std::string>& package) {
    std::string out;
    for (const auto& seg : package) {
        if (!out.empty()) out += '.';
        out += seg;
    }
    return out;
}

bool ends_with_ident_char(const std::string& s) {
    if (s.empty()) return false;
    char c = s.back();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool starts_with_ident_char(const std::string& s) {
    if (s.empty()) return false;
    char c = s.front();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

/// Joins tokens with a space only where gluing them would merge identifiers
/// ("extends Number"), so every source spelling maps to one canonical string.
std::string render_tokens(const std::vector<Token>& toks, size_t begin, size_t end) {
    std::string out;
    for (size_t i = begin; i < end; ++i) {
        if (!out.empty() && ends_with_ident_char(out) && starts_with_ident_char(toks[i].text)) {
            out += ' ';
        }
        out += toks[i].text;
    }
    return out;
}

struct RawTypeParts {
    std::string base;      // dotted name as written
    std::string generics;  // "<...>" canonical, possibly empty
    int dimensions = 0;
    bool varargs = false;
};

/// Splits a declared type into base name, generic text and array structure.
/// Tolerates annotations and the `final` parameter modifier.
RawTypeParts split_raw(const std::string& raw) {
    RawTypeParts parts;
    std::vector<Token> toks = lex(raw);
    size_t i = 0;
    const size_t n = toks.size();

    auto skip_annotation = [&]() {
        // '@' Name ('.' Name)* ['(' balanced ')']
        ++i;
        if (i < n && toks[i].kind == TokenKind::Identifier) {
            ++i;
            while (i + 1 < n && toks[i].kind == TokenKind::Punct && toks[i].text == "." &&
                   toks[i + 1].kind == TokenKind::Identifier) {
                i += 2;
            }
        }
        if (i < n && toks[i].kind == TokenKind::Punct && toks[i].text == "(") {
            int depth = 0;
            while (i < n) {
                if (toks[i].text == "(") ++depth;
                else if (toks[i].text == ")" && --depth == 0) { ++i; break; }
                ++i;
            }
        }
    };

    while (i < n) {
        if (toks[i].kind == TokenKind::Punct && toks[i].text == "@") { skip_annotation(); continue; }
        if (toks[i].kind == TokenKind::Identifier && toks[i].text == "final") { ++i; continue; }
        break;
    }

    // dotted base name
    while (i < n && toks[i].kind == TokenKind::Identifier) {
        if (!parts.base.empty()) parts.base += '.';
        parts.base += toks[i].text;
        ++i;
        if (i + 1 < n && toks[i].kind == TokenKind::Punct && toks[i].text == "." &&
            toks[i + 1].kind == TokenKind::Identifier) {
            ++i;
            continue;
        }
        break;
    }

    if (i < n && toks[i].kind == TokenKind::Punct && toks[i].text == "<") {
        size_t begin = i;
        int depth = 0;
        while (i < n) {
            if (toks[i].text == "<") ++depth;
            else if (toks[i].text == ">" && --depth == 0) { ++i; break; }
            ++i;
        }
        parts.generics = render_tokens(toks, begin, i);
    }

    while (i < n) {
        if (i + 1 < n && toks[i].text == "[" && toks[i + 1].text == "]") {
            ++parts.dimensions;
            i += 2;
            continue;
        }
        if (i + 2 < n && toks[i].text == "." && toks[i + 1].text == "." && toks[i + 2].text == ".") {
            ++parts.dimensions;
            parts.varargs = true;
            i += 3;
            continue;
        }
        break;
    }
    return parts;
}

std::string resolve_base(const std::string& base,
                         const std::vector<Import>& imports,
                         const std::vector<std::string>& package,
                         const NameIndex& index) {
    if (base.empty() || is_primitive(base)) return base;

    // dotted: either already qualified, or a nested reference like
    // Outer.Inner whose head still needs resolution
    if (base.find('.') != std::string::npos) {
        if (index.contains(base)) return base;
        std::string pkg_local = join_package(package);
        if (!pkg_local.empty() && index.contains(pkg_local + "." + base)) {
            return pkg_local + "." + base;
        }
        size_t dot = base.find('.');
        std::string head = base.substr(0, dot);
        std::string tail = base.substr(dot);
        std::string resolved_head = resolve_base(head, imports, package, index);
        if (resolved_head != head && index.contains(resolved_head + tail)) {
            return resolved_head + tail;
        }
        return base;
    }

    for (const auto& imp : imports) {
        if (imp.wildcard || imp.is_static) continue;
        const std::string& q = imp.qualified;
        size_t dot = q.rfind('.');
        std::string last = (dot == std::string::npos) ? q : q.substr(dot + 1);
        if (last == base) return q;
    }

    std::string pkg = join_package(package);
    if (!pkg.empty() && index.contains(pkg + "." + base)) return pkg + "." + base;

    // wildcard imports resolve only against in-model names
    for (const auto& imp : imports) {
        if (!imp.wildcard || imp.is_static) continue;
        if (index.contains(imp.qualified + "." + base)) return imp.qualified + "." + base;
    }

    auto it = index.by_simple.find(base);
    if (it != index.by_simple.end() && it->second.size() == 1) return it->second.front();

    if (java_lang_types().count(base)) return "java.lang." + base;

    return base;
}

} // namespace

void NameIndex::add(const std::string& qualified_name) {
    if (qualified_name.empty()) return;
    if (!qualified.insert(qualified_name).second) return;
    size_t dot = qualified_name.rfind('.');
    std::string simple = (dot == std::string::npos) ? qualified_name : qualified_name.substr(dot + 1);
    auto& bucket = by_simple[simple];
    bucket.insert(std::lower_bound(bucket.begin(), bucket.end(), qualified_name), qualified_name);
}

bool NameIndex::contains(const std::string& qualified_name) const {
    return qualified.count(qualified_name) > 0;
}

NameIndex NameIndex::of(const CodeModel& model) {
    NameIndex index;
    for (const auto& [id, decl] : model.interfaces) index.add(decl.qualified_name);
    for (const auto& [id, decl] : model.classes) index.add(decl.qualified_name);
    return index;
}

std::string canonicalize_type_tokens(const std::string& raw) {
    std::vector<Token> toks = lex(raw);
    return render_tokens(toks, 0, toks.size());
}

TypeRef resolve_type(const std::string& raw,
                     const std::vector<Import>& imports,
                     const std::vector<std::string>& package,
                     const NameIndex& index) {
    RawTypeParts parts = split_raw(raw);

    TypeRef ref;
    ref.raw_text = parts.base + parts.generics;
    for (int d = 0; d < parts.dimensions; ++d) {
        if (parts.varargs && d == parts.dimensions - 1) ref.raw_text += "...";
        else ref.raw_text += "[]";
    }
    if (ref.raw_text.empty()) ref.raw_text = canonicalize_type_tokens(raw);

    ref.resolved_name = resolve_base(parts.base, imports, package, index) + parts.generics;
    ref.dimensions = parts.dimensions;
    ref.is_array = parts.dimensions > 0;
    return ref;
}

} // namespace ifclone::facts
