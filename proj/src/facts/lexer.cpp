#include "ifclone/facts/lexer.hpp"

#include <cctype>

namespace ifclone::facts {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

} // namespace

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    out.reserve(text.size() / 4);
    size_t i = 0;
    int line = 1;
    const size_t n = text.size();

    auto push = [&](TokenKind k, size_t begin, size_t end, int at_line) {
        out.push_back(Token{k, std::string(text.substr(begin, end - begin)), at_line, begin});
    };

    while (i < n) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        // line comment
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        // block comment (not nested in Java)
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            i += 2;
            while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) {
                if (text[i] == '\n') ++line;
                ++i;
            }
            i = (i + 2 <= n) ? i + 2 : n;
            continue;
        }
        // text block """..."""
        if (c == '"' && i + 2 < n && text[i + 1] == '"' && text[i + 2] == '"') {
            size_t begin = i;
            int at = line;
            i += 3;
            while (i < n && !(text[i] == '"' && i + 1 < n && text[i + 1] == '"' &&
                              i + 2 < n && text[i + 2] == '"')) {
                if (text[i] == '\n') ++line;
                ++i;
            }
            i = (i + 3 <= n) ? i + 3 : n;
            push(TokenKind::String, begin, i, at);
            continue;
        }
        if (c == '"') {
            size_t begin = i++;
            while (i < n && text[i] != '"' && text[i] != '\n') {
                if (text[i] == '\\' && i + 1 < n) ++i;
                ++i;
            }
            if (i < n && text[i] == '"') ++i;
            push(TokenKind::String, begin, i, line);
            continue;
        }
        if (c == '\'') {
            size_t begin = i++;
            while (i < n && text[i] != '\'' && text[i] != '\n') {
                if (text[i] == '\\' && i + 1 < n) ++i;
                ++i;
            }
            if (i < n && text[i] == '\'') ++i;
            push(TokenKind::CharLit, begin, i, line);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t begin = i;
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            // fraction ".5" only when followed by a digit, so "1.foo()" still
            // yields a '.' token
            if (i < n && text[i] == '.' && i + 1 < n &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                ++i;
                while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
            }
            push(TokenKind::Number, begin, i, line);
            continue;
        }
        if (is_ident_start(c)) {
            size_t begin = i;
            while (i < n && is_ident_char(text[i])) ++i;
            push(TokenKind::Identifier, begin, i, line);
            continue;
        }
        push(TokenKind::Punct, i, i + 1, line);
        ++i;
    }
    return out;
}

} // namespace ifclone::facts
