#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "normcheck/dsl.hpp"

namespace normcheck::detail {

enum class Tok {
    Ident,
    Int,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Tilde,
    HoldsStar,
    End,
};

std::string_view describe(Tok t);

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
    int end_column = 1;
};

/// Splits source text into tokens. `#` starts a comment. Unknown characters
/// are reported and skipped. The result always ends with an End token.
std::vector<Token> lex(std::string_view text, const std::string& file, std::vector<ParseDiagnostic>& diags);

bool is_variable_name(std::string_view name);

} // namespace normcheck::detail
