#pragma once

// Shared tokenizer for the formula front-ends (propositional formulas,
// first-order formulas, proof scripts).  Internal to the library.

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "twistset/errors.hpp"

namespace twistset::detail {

enum class Tok {
    ident,     // variable name
    integer,   // nonnegative integer literal
    lparen,
    rparen,
    dot,
    amp,       // &
    pipe,      // |
    arrow,     // ->
    darrow,    // =>
    iff,       // <->
    tilde,     // ~
    bang,      // !
    circ,      // O
    kw_in,
    eq,        // =
    kw_forall,
    kw_exists,
    kw_empty,
    hash,      // #
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::uint64_t value = 0;  // for integer
    int line = 1;
    int column = 1;
};

inline std::vector<Token> lex(const std::string& input, int line_no = 1) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = input.size();
    auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };

    while (i < n) {
        char c = input[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
            case '(': out.push_back({Tok::lparen, "(", 0, line_no, col(start)}); ++i; continue;
            case ')': out.push_back({Tok::rparen, ")", 0, line_no, col(start)}); ++i; continue;
            case '.': out.push_back({Tok::dot, ".", 0, line_no, col(start)}); ++i; continue;
            case '&': out.push_back({Tok::amp, "&", 0, line_no, col(start)}); ++i; continue;
            case '|': out.push_back({Tok::pipe, "|", 0, line_no, col(start)}); ++i; continue;
            case '~': out.push_back({Tok::tilde, "~", 0, line_no, col(start)}); ++i; continue;
            case '!': out.push_back({Tok::bang, "!", 0, line_no, col(start)}); ++i; continue;
            case '#': out.push_back({Tok::hash, "#", 0, line_no, col(start)}); ++i; continue;
            case '-':
                if (i + 1 < n && input[i + 1] == '>') {
                    out.push_back({Tok::arrow, "->", 0, line_no, col(start)});
                    i += 2;
                    continue;
                }
                throw parse_error("stray '-'", line_no, col(start));
            case '=':
                if (i + 1 < n && input[i + 1] == '>') {
                    out.push_back({Tok::darrow, "=>", 0, line_no, col(start)});
                    i += 2;
                    continue;
                }
                out.push_back({Tok::eq, "=", 0, line_no, col(start)});
                ++i;
                continue;
            case '<':
                if (i + 2 < n && input[i + 1] == '-' && input[i + 2] == '>') {
                    out.push_back({Tok::iff, "<->", 0, line_no, col(start)});
                    i += 3;
                    continue;
                }
                throw parse_error("stray '<'", line_no, col(start));
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) {
                v = v * 10 + static_cast<std::uint64_t>(input[i] - '0');
                ++i;
            }
            out.push_back({Tok::integer, input.substr(start, i - start), v, line_no, col(start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            std::string word = input.substr(start, i - start);
            Tok k = Tok::ident;
            if (word == "forall") k = Tok::kw_forall;
            else if (word == "exists") k = Tok::kw_exists;
            else if (word == "in") k = Tok::kw_in;
            else if (word == "empty") k = Tok::kw_empty;
            else if (word == "O") k = Tok::circ;
            out.push_back({k, word, 0, line_no, col(start)});
            continue;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", line_no, col(start));
    }
    out.push_back({Tok::end, "", 0, line_no, col(n)});
    return out;
}

// Small cursor over a token stream.
struct TokenCursor {
    const std::vector<Token>* toks;
    std::size_t pos = 0;

    const Token& peek() const { return (*toks)[pos]; }
    const Token& get() { return (*toks)[pos++]; }
    bool at(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos;
        return true;
    }
    Token expect(Tok k, const char* what) {
        if (!at(k)) {
            const Token& t = peek();
            throw parse_error(std::string("expected ") + what + ", got '" +
                                  (t.kind == Tok::end ? "<end>" : t.text) + "'",
                              t.line, t.column);
        }
        return get();
    }
};

}  // namespace twistset::detail
