#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ifclone::facts {

enum class TokenKind : int {
    Identifier,
    Punct,   // single-character operators and separators
    String,  // "..." or """...""" including quotes
    CharLit,
    Number,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;     // 1-based
    size_t offset = 0; // byte offset of the first character
};

/// Tolerant Java-ish lexer: comments and whitespace are skipped, literals
/// are kept as single tokens, everything operator-like comes out as
/// one-character Punct tokens (so "<" ">" can be balance-counted).
std::vector<Token> lex(std::string_view text);

} // namespace ifclone::facts
