#include "ifclone/facts/parser.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ifclone/errors.hpp"
#include "ifclone/facts/invocations.hpp"
#include "ifclone/facts/lexer.hpp"
#include "ifclone/facts/resolve.hpp"

namespace fs = std::filesystem;

namespace ifclone::facts {

namespace {

// ---------------------------------------------------------------------------
// raw per-file facts, before cross-file resolution
// ---------------------------------------------------------------------------

struct RawParam {
    std::string type_text;
    std::string name;
};

struct RawMethod {
    std::string name;
    std::string return_text;
    std::vector<RawParam> params;
    Visibility visibility = Visibility::Public;
    bool has_body = false;
    std::string body_text;
    int body_start_line = 0;
    int body_end_line = 0;
};

struct RawField {
    std::string name;
    std::string type_text;
};

struct RawType {
    bool is_interface = false;
    std::string simple_name; // "Outer.Inner" for nested types
    bool is_abstract = false;
    std::vector<std::string> extends_texts;
    std::vector<std::string> implements_texts;
    std::vector<RawMethod> methods;
    std::vector<RawField> fields;
};

struct FileFacts {
    std::string path;
    std::vector<std::string> package;
    std::vector<Import> imports;
    std::vector<RawType> types;
};

bool is_modifier(const std::string& s) {
    static const std::set<std::string> mods = {
        "public", "protected", "private", "static", "final", "abstract", "default",
        "synchronized", "native", "strictfp", "transient", "volatile", "sealed",
    };
    return mods.count(s) > 0;
}

bool is_decl_keyword(const std::string& s) {
    return s == "class" || s == "interface" || s == "enum" || s == "record";
}

bool is_stmt_keyword(const std::string& s) {
    static const std::set<std::string> kws = {
        "return", "if", "else", "while", "for", "do", "switch", "case", "break",
        "continue", "throw", "try", "catch", "finally", "new", "instanceof",
        "synchronized", "assert", "yield", "this", "super", "extends", "implements",
        "throws", "package", "import", "var", "void",
    };
    return kws.count(s) > 0;
}

// ---------------------------------------------------------------------------
// island parser over the token stream
// ---------------------------------------------------------------------------

class FileParser {
public:
    FileParser(std::string_view text, std::string path)
        : text_(text), tokens_(lex(text)), facts_{} {
        facts_.path = std::move(path);
    }

    FileFacts run() {
        parse_header();
        while (!eof()) {
            if (!parse_one_top_level()) advance();
        }
        return std::move(facts_);
    }

private:
    std::string_view text_;
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    FileFacts facts_;

    bool eof() const { return pos_ >= tokens_.size(); }
    const Token& cur() const { return tokens_[pos_]; }
    const Token* peek(size_t ahead = 1) const {
        return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
    }
    void advance() { ++pos_; }

    bool at_punct(const char* p) const {
        return !eof() && cur().kind == TokenKind::Punct && cur().text == p;
    }
    bool at_ident(const char* word) const {
        return !eof() && cur().kind == TokenKind::Identifier && cur().text == word;
    }
    bool at_any_ident() const { return !eof() && cur().kind == TokenKind::Identifier; }

    /// Skip a balanced (...), {...}, [...] or <...> group starting at cur().
    void skip_balanced(const char* open, const char* close) {
        int depth = 0;
        while (!eof()) {
            if (cur().kind == TokenKind::Punct) {
                if (cur().text == open) ++depth;
                else if (cur().text == close && --depth == 0) { advance(); return; }
            }
            advance();
        }
    }

    void skip_annotation() {
        advance(); // '@'
        if (at_ident("interface")) return; // handled by caller as a declaration
        while (at_any_ident()) {
            advance();
            if (at_punct(".")) { advance(); continue; }
            break;
        }
        if (at_punct("(")) skip_balanced("(", ")");
    }

    std::string parse_dotted_name() {
        std::string out;
        while (at_any_ident()) {
            if (!out.empty()) out += '.';
            out += cur().text;
            advance();
            if (at_punct(".") && peek() && peek()->kind == TokenKind::Identifier) {
                advance();
                continue;
            }
            break;
        }
        return out;
    }

    void parse_header() {
        while (!eof()) {
            if (at_punct("@")) {
                size_t before = pos_;
                skip_annotation();
                if (at_ident("interface")) { pos_ = before; return; }
                continue;
            }
            if (at_ident("package")) {
                advance();
                std::string name = parse_dotted_name();
                std::stringstream ss(name);
                std::string seg;
                while (std::getline(ss, seg, '.')) facts_.package.push_back(seg);
                if (at_punct(";")) advance();
                continue;
            }
            if (at_ident("import")) {
                advance();
                Import imp;
                if (at_ident("static")) { imp.is_static = true; advance(); }
                imp.qualified = parse_dotted_name();
                if (at_punct(".")) {
                    advance();
                    if (at_punct("*")) { imp.wildcard = true; advance(); }
                }
                if (at_punct(";")) advance();
                if (!imp.qualified.empty()) facts_.imports.push_back(imp);
                continue;
            }
            return;
        }
    }

    bool parse_one_top_level() {
        std::set<std::string> mods;
        return parse_decl_or_skip("", mods);
    }

    /// Parse modifiers and, if a type declaration follows, the declaration.
    /// Returns false when nothing declaration-like was found at cur().
    bool parse_decl_or_skip(const std::string& enclosing, std::set<std::string>& mods) {
        while (!eof()) {
            if (at_punct("@")) {
                skip_annotation();
                if (at_ident("interface")) { // @interface: consume, not modeled
                    advance();
                    skip_annotation_decl();
                    return true;
                }
                continue;
            }
            if (at_any_ident() && is_modifier(cur().text)) {
                mods.insert(cur().text);
                advance();
                continue;
            }
            // "non-sealed" lexes as three tokens
            if (at_ident("non") && peek() && peek()->text == "-") {
                advance(); advance();
                if (at_ident("sealed")) advance();
                continue;
            }
            break;
        }
        if (at_any_ident() && is_decl_keyword(cur().text)) {
            parse_type_decl(enclosing, mods);
            return true;
        }
        return false;
    }

    void skip_annotation_decl() {
        // name, optional extends junk, then the balanced body
        while (!eof() && !at_punct("{") && !at_punct(";")) advance();
        if (at_punct("{")) skip_balanced("{", "}");
        else if (at_punct(";")) advance();
    }

    /// Type tokens at cur(): dotted name, optional generics, array dims,
    /// optional varargs. Returns the joined token text (resolver re-lexes it).
    std::string parse_type_text() {
        std::string out;
        auto append = [&](const std::string& t) {
            if (!out.empty()) out += ' ';
            out += t;
        };
        if (!at_any_ident()) return out;
        append(cur().text);
        advance();
        while (at_punct(".") && peek() && peek()->kind == TokenKind::Identifier) {
            append(".");
            append(peek()->text);
            advance();
            advance();
        }
        if (at_punct("<")) {
            int depth = 0;
            while (!eof()) {
                if (cur().kind == TokenKind::Punct && cur().text == "<") ++depth;
                if (cur().kind == TokenKind::Punct && cur().text == ">") {
                    append(cur().text);
                    advance();
                    if (--depth == 0) break;
                    continue;
                }
                append(cur().text);
                advance();
            }
        }
        while (at_punct("[") && peek() && peek()->text == "]") {
            append("[]");
            advance();
            advance();
        }
        if (at_punct(".") && peek() && peek()->text == "." && peek(2) && peek(2)->text == ".") {
            append("...");
            advance(); advance(); advance();
        }
        return out;
    }

    void parse_type_decl(const std::string& enclosing, const std::set<std::string>& mods) {
        std::string kw = cur().text;
        advance();
        if (!at_any_ident()) return;

        RawType decl;
        decl.is_interface = (kw == "interface");
        decl.simple_name = enclosing.empty() ? cur().text : enclosing + "." + cur().text;
        decl.is_abstract = mods.count("abstract") > 0 || decl.is_interface;
        advance();

        if (at_punct("<")) skip_balanced("<", ">"); // type parameters

        if (kw == "record" && at_punct("(")) skip_balanced("(", ")");

        while (!eof() && !at_punct("{") && !at_punct(";")) {
            if (at_ident("extends")) {
                advance();
                parse_type_list(decl.extends_texts);
                continue;
            }
            if (at_ident("implements")) {
                advance();
                parse_type_list(decl.implements_texts);
                continue;
            }
            if (at_ident("permits")) {
                advance();
                std::vector<std::string> ignored;
                parse_type_list(ignored);
                continue;
            }
            advance();
        }
        if (at_punct(";")) { advance(); facts_.types.push_back(std::move(decl)); return; }
        if (!at_punct("{")) { facts_.types.push_back(std::move(decl)); return; }
        advance(); // '{'

        if (kw == "enum") skip_enum_constants();
        parse_members(decl);
        facts_.types.push_back(std::move(decl));
    }

    void parse_type_list(std::vector<std::string>& out) {
        while (!eof()) {
            std::string t = parse_type_text();
            if (t.empty()) break;
            out.push_back(t);
            if (at_punct(",")) { advance(); continue; }
            break;
        }
    }

    /// Enum bodies open with a constant list, optionally with arguments and
    /// anonymous bodies, ended by ';' or the closing brace.
    void skip_enum_constants() {
        while (!eof()) {
            if (at_punct(";")) { advance(); return; }
            if (at_punct("}")) return; // constants only; parse_members sees '}'
            if (at_punct("(")) { skip_balanced("(", ")"); continue; }
            if (at_punct("{")) { skip_balanced("{", "}"); continue; }
            if (at_punct("@")) { skip_annotation(); continue; }
            advance();
        }
    }

    void parse_members(RawType& decl) {
        while (!eof()) {
            if (at_punct("}")) { advance(); return; }
            if (at_punct(";")) { advance(); continue; }

            std::set<std::string> mods;
            if (parse_decl_or_skip(decl.simple_name, mods)) continue;

            if (at_punct("{")) { skip_balanced("{", "}"); continue; } // initializer
            if (at_punct("<")) { skip_balanced("<", ">"); }           // generic method

            if (at_punct("}")) continue;
            if (!at_any_ident()) { recover_member(); continue; }

            // constructor: bare simple name followed by '('
            size_t last_dot = decl.simple_name.rfind('.');
            std::string own = last_dot == std::string::npos
                                  ? decl.simple_name
                                  : decl.simple_name.substr(last_dot + 1);
            if (cur().text == own && peek() && peek()->text == "(") {
                advance();
                std::vector<RawParam> params;
                parse_params(params);
                skip_to_body_or_semi(nullptr);
                continue;
            }

            if (is_stmt_keyword(cur().text) && !at_ident("void")) { recover_member(); continue; }

            std::string type_text = parse_type_text();
            if (type_text.empty()) { recover_member(); continue; }

            if (!at_any_ident()) { recover_member(); continue; }
            std::string member_name = cur().text;
            advance();

            if (at_punct("(")) {
                RawMethod m;
                m.name = member_name;
                m.return_text = type_text;
                parse_params(m.params);
                if (decl.is_interface) {
                    m.visibility = mods.count("private") ? Visibility::Other : Visibility::Public;
                } else {
                    m.visibility = mods.count("public") ? Visibility::Public : Visibility::Other;
                }
                skip_to_body_or_semi(&m);
                decl.methods.push_back(std::move(m));
                continue;
            }

            // field declarator(s); only the first carries the parsed type here
            RawField f;
            f.name = member_name;
            f.type_text = type_text;
            decl.fields.push_back(std::move(f));
            recover_member();
            continue;
        }
    }

    void parse_params(std::vector<RawParam>& out) {
        if (!at_punct("(")) return;
        advance();
        while (!eof() && !at_punct(")")) {
            while (at_punct("@")) skip_annotation();
            while (at_ident("final")) advance();
            if (at_punct(")")) break;
            RawParam p;
            p.type_text = parse_type_text();
            if (p.type_text.empty()) { // tolerate junk: skip to ',' or ')'
                while (!eof() && !at_punct(",") && !at_punct(")")) advance();
            } else {
                if (at_ident("this")) { // receiver parameter, not a real one
                    advance();
                    out.clear();
                } else if (at_any_ident()) {
                    p.name = cur().text;
                    advance();
                    while (at_punct("[") && peek() && peek()->text == "]") {
                        p.type_text += " []";
                        advance();
                        advance();
                    }
                    out.push_back(std::move(p));
                }
            }
            if (at_punct(",")) advance();
        }
        if (at_punct(")")) advance();
    }

    /// After a method's parameter list: consume throws clauses etc. until the
    /// body or the terminating ';'. Captures the body when present.
    void skip_to_body_or_semi(RawMethod* m) {
        while (!eof() && !at_punct("{") && !at_punct(";")) advance();
        if (at_punct(";")) { advance(); return; }
        if (!at_punct("{")) return;

        const Token& open = cur();
        skip_balanced("{", "}");
        if (m == nullptr) return;

        size_t close_offset = text_.size();
        int close_line = open.line;
        if (pos_ > 0 && pos_ - 1 < tokens_.size()) {
            const Token& close = tokens_[pos_ - 1];
            close_offset = close.offset;
            close_line = close.line;
        }
        size_t body_begin = open.offset + 1;
        if (close_offset >= body_begin) {
            m->has_body = true;
            m->body_text = std::string(text_.substr(body_begin, close_offset - body_begin));
            m->body_start_line = open.line;
            m->body_end_line = close_line;
        }
    }

    /// Skip an unrecognized member (field initializers, enum junk, stray
    /// tokens) up to and including the next top-level ';'.
    void recover_member() {
        while (!eof()) {
            if (at_punct(";")) { advance(); return; }
            if (at_punct("}")) return;
            if (at_punct("{")) { skip_balanced("{", "}"); continue; }
            if (at_punct("(")) { skip_balanced("(", ")"); continue; }
            if (at_punct("[")) { skip_balanced("[", "]"); continue; }
            advance();
        }
    }
};

// ---------------------------------------------------------------------------
// glob + test-name rules
// ---------------------------------------------------------------------------

bool glob_match(const std::string& pattern, const std::string& value) {
    size_t p = 0, v = 0, star = std::string::npos, match = 0;
    while (v < value.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == value[v])) {
            ++p;
            ++v;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            match = v;
        } else if (star != std::string::npos) {
            p = star + 1;
            v = ++match;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string simple_name_of(const std::string& qualified) {
    size_t dot = qualified.rfind('.');
    return dot == std::string::npos ? qualified : qualified.substr(dot + 1);
}

} // namespace

bool matches_test_name(const std::string& qualified_name,
                       const std::vector<std::string>& package_path,
                       const std::vector<std::string>& extra_patterns) {
    for (const auto& seg : package_path) {
        std::string low = to_lower(seg);
        if (low == "test" || low == "tests") return true;
    }
    std::string simple = simple_name_of(qualified_name);
    if (glob_match("Test*", simple) || glob_match("*Test", simple) ||
        glob_match("*Tests", simple)) {
        return true;
    }
    for (const auto& pat : extra_patterns) {
        if (glob_match(pat, simple) || glob_match(pat, qualified_name)) return true;
    }
    return false;
}

namespace {

// ---------------------------------------------------------------------------
// model assembly
// ---------------------------------------------------------------------------

std::string strip_generics(const std::string& name) {
    size_t lt = name.find('<');
    return lt == std::string::npos ? name : name.substr(0, lt);
}

TypeEdge make_edge(const std::string& type_text, const std::vector<Import>& imports,
                   const std::vector<std::string>& package, const NameIndex& index,
                   const std::set<std::string>& interface_ids,
                   const std::set<std::string>& class_ids) {
    TypeRef ref = resolve_type(type_text, imports, package, index);
    TypeEdge edge;
    edge.name = strip_generics(ref.resolved_name);
    if (interface_ids.count(edge.name) || class_ids.count(edge.name)) {
        edge.target_id = edge.name;
        edge.external = false;
    }
    return edge;
}

ParseOutcome assemble(std::vector<FileFacts> files, const ParseOptions& options,
                      std::vector<std::string> warnings,
                      std::vector<std::string> source_roots) {
    ParseOutcome outcome;
    outcome.warnings = std::move(warnings);
    CodeModel& model = outcome.model;
    model.source_roots = std::move(source_roots);

    std::sort(files.begin(), files.end(),
              [](const FileFacts& a, const FileFacts& b) { return a.path < b.path; });

    NameIndex index;
    struct Located {
        const FileFacts* file;
        const RawType* type;
        std::string qualified;
        std::string id;
    };
    std::vector<Located> located;
    std::set<std::string> used_ids;
    std::set<std::string> interface_ids;
    std::set<std::string> class_ids;

    for (const auto& file : files) {
        std::string pkg;
        for (const auto& seg : file.package) {
            if (!pkg.empty()) pkg += '.';
            pkg += seg;
        }
        for (const auto& type : file.types) {
            std::string qualified = pkg.empty() ? type.simple_name : pkg + "." + type.simple_name;
            std::string id = qualified;
            int suffix = 2;
            while (used_ids.count(id)) {
                id = qualified + "#" + std::to_string(suffix++);
                if (suffix == 3) {
                    outcome.warnings.push_back("duplicate type name " + qualified +
                                               " (second declaration kept as " + id + ")");
                }
            }
            used_ids.insert(id);
            index.add(qualified);
            (type.is_interface ? interface_ids : class_ids).insert(id);
            located.push_back(Located{&file, &type, qualified, id});
        }
    }

    auto resolve_in = [&](const std::string& text, const FileFacts& file) {
        return resolve_type(text, file.imports, file.package, index);
    };

    auto build_signature = [&](const RawMethod& m, const FileFacts& file) {
        MethodSignature sig;
        sig.name = m.name;
        sig.return_type = resolve_in(m.return_text, file);
        for (const auto& p : m.params) sig.param_types.push_back(resolve_in(p.type_text, file));
        sig.visibility = m.visibility;
        return sig;
    };

    auto build_body = [&](const RawMethod& m, const FileFacts& file) {
        MethodBody body;
        body.signature = build_signature(m, file);
        for (const auto& p : m.params) body.param_names.push_back(p.name);
        body.body_text = m.body_text;
        body.start_line = m.body_start_line;
        body.end_line = m.body_end_line;
        return body;
    };

    for (const auto& item : located) {
        const FileFacts& file = *item.file;
        const RawType& type = *item.type;
        if (type.is_interface) {
            InterfaceDecl decl;
            decl.id = item.id;
            decl.qualified_name = item.qualified;
            decl.package_path = file.package;
            decl.source_file = file.path;
            decl.imports = file.imports;
            for (const auto& t : type.extends_texts) {
                decl.extends.push_back(
                    make_edge(t, file.imports, file.package, index, interface_ids, class_ids));
            }
            std::set<std::string> seen_keys;
            for (const auto& m : type.methods) {
                MethodSignature sig = build_signature(m, file);
                std::string dedup_key = sig.name + "/" + std::to_string(sig.param_types.size());
                for (const auto& p : sig.param_types) dedup_key += "|" + p.resolved_name;
                if (!seen_keys.insert(dedup_key).second) continue; // overloading rules
                decl.signatures.push_back(sig);
                if (m.has_body) decl.default_bodies.push_back(build_body(m, file));
            }
            decl.flags.is_marker = decl.public_size() == 0;
            model.interfaces.emplace(decl.id, std::move(decl));
        } else {
            ClassDecl decl;
            decl.id = item.id;
            decl.qualified_name = item.qualified;
            decl.package_path = file.package;
            decl.source_file = file.path;
            decl.imports = file.imports;
            decl.is_abstract = type.is_abstract;
            decl.is_test =
                matches_test_name(item.qualified, file.package, options.test_name_patterns);
            if (!type.extends_texts.empty()) {
                decl.extends = make_edge(type.extends_texts.front(), file.imports, file.package,
                                         index, interface_ids, class_ids);
            }
            for (const auto& t : type.implements_texts) {
                decl.implements.push_back(
                    make_edge(t, file.imports, file.package, index, interface_ids, class_ids));
            }
            for (const auto& f : type.fields) {
                decl.fields.push_back(FieldDecl{f.name, resolve_in(f.type_text, file)});
            }
            for (const auto& m : type.methods) {
                if (!m.has_body) continue;
                decl.bodies.push_back(build_body(m, file));
            }
            model.classes.emplace(decl.id, std::move(decl));
        }
    }

    // test interfaces by implementer rule: every implementation is a test class
    for (auto& [id, decl] : model.interfaces) {
        decl.flags.is_test =
            matches_test_name(decl.qualified_name, decl.package_path, options.test_name_patterns);
        if (!decl.flags.is_test) {
            std::vector<TypeId> impls = model.implementation_closure(id);
            if (!impls.empty()) {
                decl.flags.is_test = std::all_of(impls.begin(), impls.end(), [&](const TypeId& c) {
                    const ClassDecl* cls = model.find_class(c);
                    return cls != nullptr && cls->is_test;
                });
            }
        }
    }

    std::set<InvocationSite> sites;
    for (const auto& [id, cls] : model.classes) {
        for (auto& site : extract_invocations(cls, model, index)) sites.insert(std::move(site));
    }
    model.invocations.assign(sites.begin(), sites.end());

    return outcome;
}

} // namespace

ParseOutcome parse_source_units(const std::vector<SourceUnit>& units,
                                const ParseOptions& options) {
    std::vector<FileFacts> files;
    std::vector<std::string> warnings;
    for (const auto& unit : units) {
        try {
            files.push_back(FileParser(unit.text, unit.path).run());
        } catch (const std::exception& e) {
            warnings.push_back("failed to parse " + unit.path + ": " + e.what());
        }
    }
    return assemble(std::move(files), options, std::move(warnings), {});
}

ParseOutcome parse_source_tree(const std::vector<std::string>& roots,
                               const ParseOptions& options) {
    std::vector<std::string> paths;
    for (const auto& root : roots) {
        std::error_code ec;
        fs::file_status st = fs::status(root, ec);
        if (ec || !fs::exists(st)) throw IoError("cannot read source root: " + root);
        if (fs::is_regular_file(st)) {
            if (fs::path(root).extension() == ".java") paths.push_back(root);
            continue;
        }
        fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
        if (ec) throw IoError("cannot read source root: " + root);
        for (const auto& entry : it) {
            if (entry.is_regular_file(ec) && entry.path().extension() == ".java") {
                paths.push_back(entry.path().string());
            }
        }
    }
    if (paths.empty()) {
        throw NoSourceFoundError("no source files found under the given roots");
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());

    std::vector<FileFacts> files;
    std::vector<std::string> warnings;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            warnings.push_back("unreadable file skipped: " + path);
            continue;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            files.push_back(FileParser(buffer.str(), path).run());
        } catch (const std::exception& e) {
            warnings.push_back("failed to parse " + path + ": " + e.what());
        }
    }
    std::vector<std::string> source_roots = roots;
    return assemble(std::move(files), options, std::move(warnings), std::move(source_roots));
}

} // namespace ifclone::facts
