#include "dsl_lexer.hpp"

#include <cctype>

namespace normcheck::detail {

std::string_view describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Tilde: return "'~'";
    case Tok::HoldsStar: return "'holds**'";
    case Tok::End: return "end of input";
    }
    return "?";
}

bool is_variable_name(std::string_view name) {
    return !name.empty() && (std::isupper(static_cast<unsigned char>(name[0])) || name[0] == '_');
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

std::vector<Token> lex(std::string_view text, const std::string& file, std::vector<ParseDiagnostic>& diags) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(text.substr(i, len)), line, col, col + static_cast<int>(len)});
        i += len;
        col += static_cast<int>(len);
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t n = 1;
            while (i + n < text.size() && ident_char(text[i + n])) ++n;
            if (text.substr(i, n) == "holds" && text.substr(i + n, 2) == "**") {
                push(Tok::HoldsStar, n + 2);
            } else {
                push(Tok::Ident, n);
            }
            continue;
        }
        if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
            std::size_t n = 1;
            while (i + n < text.size() && digit(text[i + n])) ++n;
            push(Tok::Int, n);
            continue;
        }
        switch (c) {
        case '(': push(Tok::LParen, 1); continue;
        case ')': push(Tok::RParen, 1); continue;
        case '{': push(Tok::LBrace, 1); continue;
        case '}': push(Tok::RBrace, 1); continue;
        case '[': push(Tok::LBracket, 1); continue;
        case ']': push(Tok::RBracket, 1); continue;
        case ',': push(Tok::Comma, 1); continue;
        case ';': push(Tok::Semi, 1); continue;
        case '~': push(Tok::Tilde, 1); continue;
        default: break;
        }
        diags.push_back({Severity::Error, {file, line, col, col + 1}, std::string("unexpected character '") + c + "'", "", {}});
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col, col});
    return out;
}

} // namespace normcheck::detail
