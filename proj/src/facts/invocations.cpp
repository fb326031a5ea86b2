#include "ifclone/facts/invocations.hpp"

#include <map>
#include <set>

#include "ifclone/facts/lexer.hpp"

namespace ifclone::facts {

namespace {

std::string strip_generics(const std::string& name) {
    size_t lt = name.find('<');
    return lt == std::string::npos ? name : name.substr(0, lt);
}

bool is_stmt_keyword(const std::string& s) {
    static const std::set<std::string> kws = {
        "return", "if", "else", "while", "for", "do", "switch", "case", "break",
        "continue", "throw", "throws", "try", "catch", "finally", "new", "instanceof",
        "synchronized", "assert", "yield", "this", "super", "var", "final", "else",
        "extends", "implements", "class", "interface", "enum", "record",
    };
    return kws.count(s) > 0;
}

/// Try to read a type at `i`: dotted identifiers, optional <...>, optional
/// array brackets. Returns one-past-the-type, or `i` when no type is there.
size_t scan_type(const std::vector<Token>& toks, size_t i, std::string* text) {
    if (i >= toks.size() || toks[i].kind != TokenKind::Identifier) return i;
    if (is_stmt_keyword(toks[i].text)) return i;
    std::string out = toks[i].text;
    size_t j = i + 1;
    while (j + 1 < toks.size() && toks[j].kind == TokenKind::Punct && toks[j].text == "." &&
           toks[j + 1].kind == TokenKind::Identifier) {
        out += "." + toks[j + 1].text;
        j += 2;
    }
    if (j < toks.size() && toks[j].kind == TokenKind::Punct && toks[j].text == "<") {
        int depth = 0;
        size_t k = j;
        while (k < toks.size()) {
            const Token& t = toks[k];
            if (t.kind == TokenKind::Punct && t.text == "<") ++depth;
            else if (t.kind == TokenKind::Punct && t.text == ">") {
                if (--depth == 0) { ++k; break; }
            } else if (t.kind == TokenKind::Punct &&
                       (t.text == ";" || t.text == "{" || t.text == "}" || t.text == "(")) {
                return i; // not generics, a comparison chain
            }
            out += " " + t.text;
            ++k;
        }
        if (depth != 0) return i;
        out += " >";
        j = k;
    }
    while (j + 1 < toks.size() && toks[j].text == "[" && toks[j + 1].text == "]") {
        out += " []";
        j += 2;
    }
    if (text != nullptr) *text = out;
    return j;
}

/// Local variable declarations: `Type name` followed by '=', ';', ':' or ')'.
/// Covers plain locals, for-each variables and catch parameters.
std::map<std::string, std::string> scan_locals(const std::vector<Token>& toks) {
    std::map<std::string, std::string> locals;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].kind != TokenKind::Identifier) continue;
        if (i > 0 && toks[i - 1].kind == TokenKind::Punct &&
            (toks[i - 1].text == "." || toks[i - 1].text == ")")) {
            continue;
        }
        std::string type_text;
        size_t j = scan_type(toks, i, &type_text);
        if (j == i || j >= toks.size()) continue;
        if (toks[j].kind != TokenKind::Identifier || is_stmt_keyword(toks[j].text)) continue;
        const std::string& name = toks[j].text;
        if (j + 1 >= toks.size() || toks[j + 1].kind != TokenKind::Punct) continue;
        const std::string& after = toks[j + 1].text;
        if (after == "=" || after == ";" || after == ":" || after == ")") {
            locals.emplace(name, type_text);
        }
    }
    return locals;
}

int count_args(const std::vector<Token>& toks, size_t open_paren) {
    int paren = 0, bracket = 0, brace = 0;
    bool any = false;
    int commas = 0;
    for (size_t i = open_paren; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind != TokenKind::Punct) {
            any = true;
            continue;
        }
        if (t.text == "(") { ++paren; if (paren > 1) any = true; continue; }
        if (t.text == ")") {
            if (--paren == 0) break;
            any = true;
            continue;
        }
        if (t.text == "[") { ++bracket; any = true; continue; }
        if (t.text == "]") { --bracket; any = true; continue; }
        if (t.text == "{") { ++brace; any = true; continue; }
        if (t.text == "}") { --brace; any = true; continue; }
        if (t.text == "," && paren == 1 && bracket == 0 && brace == 0) {
            ++commas;
            continue;
        }
        any = true;
    }
    if (!any) return 0;
    return commas + 1;
}

} // namespace

std::vector<InvocationSite> extract_invocations(const ClassDecl& cls, const CodeModel& model) {
    return extract_invocations(cls, model, NameIndex::of(model));
}

std::vector<InvocationSite> extract_invocations(const ClassDecl& cls, const CodeModel& model,
                                                const NameIndex& index) {
    std::set<InvocationSite> sites;

    std::map<std::string, std::string> field_types;
    for (const auto& f : cls.fields) field_types.emplace(f.name, f.type.raw_text);

    for (const auto& body : cls.bodies) {
        std::vector<Token> toks = lex(body.body_text);

        std::map<std::string, std::string> scope = scan_locals(toks);
        for (size_t p = 0; p < body.param_names.size(); ++p) {
            if (p < body.signature.param_types.size() && !body.param_names[p].empty()) {
                scope.emplace(body.param_names[p], body.signature.param_types[p].raw_text);
            }
        }
        for (const auto& [name, type_text] : field_types) scope.emplace(name, type_text);

        for (size_t i = 0; i + 3 < toks.size(); ++i) {
            if (toks[i].kind != TokenKind::Identifier) continue;
            if (toks[i + 1].kind != TokenKind::Punct || toks[i + 1].text != ".") continue;
            if (toks[i + 2].kind != TokenKind::Identifier) continue;
            if (toks[i + 3].kind != TokenKind::Punct || toks[i + 3].text != "(") continue;
            // receiver must be a plain name, not the tail of a member chain
            if (i > 0 && toks[i - 1].kind == TokenKind::Punct &&
                (toks[i - 1].text == "." || toks[i - 1].text == ")" || toks[i - 1].text == "]")) {
                continue;
            }
            const std::string& receiver = toks[i].text;
            if (receiver == "this" || receiver == "super") continue;
            auto it = scope.find(receiver);
            if (it == scope.end()) continue;

            TypeRef declared = resolve_type(it->second, cls.imports, cls.package_path, index);
            if (declared.is_array) continue;
            const std::string target = strip_generics(declared.resolved_name);
            if (model.find_interface(target) == nullptr) continue;

            InvocationSite site;
            site.client_class = cls.id;
            site.receiver_declared_type = declared;
            site.interface_id = target;
            site.method_name = toks[i + 2].text;
            site.arg_count = count_args(toks, i + 3);
            sites.insert(std::move(site));
        }
    }
    return {sites.begin(), sites.end()};
}

} // namespace ifclone::facts
