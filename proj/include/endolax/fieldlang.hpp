#pragma once

// Recursive-descent parser for the field/polynomial expression language:
//
//   field    := comp (";" comp)*
//   comp     := "d" INT ":" poly
//   poly     := ["-"] term (("+"|"-") ["-"] term)*
//   term     := factor ("*" factor)*
//   factor   := primary ("^" NAT)*
//   primary  := RATIONAL | VAR | PARAM | "(" poly ")"
//   VAR      := "x" INT          RATIONAL := INT ["/" NAT]
//
// Whitespace is insignificant. Indices are 1-based. '/' is legal only inside
// a rational literal. Parameters are bound to rational values at parse time;
// names of the form x<digits> are reserved for variables.

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "endolax/fields.hpp"
#include "endolax/multipoly.hpp"

namespace endolax {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_),
          col(col_) {}
};

using ParamMap = std::map<std::string, Rational>;

namespace fieldlang_detail {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, colon, semicolon, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
        int l = line_, c0 = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::end, "", l, c0};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits += src_[pos_++];
                ++col_;
            }
            tok_ = {Tok::integer, digits, l, c0};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                name += src_[pos_++];
                ++col_;
            }
            tok_ = {Tok::ident, name, l, c0};
            return;
        }
        ++pos_;
        ++col_;
        switch (c) {
            case '+': tok_ = {Tok::plus, "+", l, c0}; return;
            case '-': tok_ = {Tok::minus, "-", l, c0}; return;
            case '*': tok_ = {Tok::star, "*", l, c0}; return;
            case '/': tok_ = {Tok::slash, "/", l, c0}; return;
            case '^': tok_ = {Tok::caret, "^", l, c0}; return;
            case '(': tok_ = {Tok::lparen, "(", l, c0}; return;
            case ')': tok_ = {Tok::rparen, ")", l, c0}; return;
            case ':': tok_ = {Tok::colon, ":", l, c0}; return;
            case ';': tok_ = {Tok::semicolon, ";", l, c0}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, c0);
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Tok::end, "", 1, 1};
};

class Parser {
public:
    Parser(const std::string& src, int nvars, const ParamMap& params)
        : lex_(src), nvars_(nvars), params_(params) {}

    MultiPoly parse_poly_document() {
        MultiPoly p = poly();
        expect_end();
        return p;
    }

    PolyVectorField parse_field_document() {
        PolyVectorField X(nvars_);
        std::vector<bool> seen(nvars_ + 1, false);
        component(X, seen);
        while (lex_.peek().kind == Tok::semicolon) {
            lex_.next();
            component(X, seen);
        }
        expect_end();
        return X;
    }

private:
    void expect_end() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::end) throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
    }

    void component(PolyVectorField& X, std::vector<bool>& seen) {
        Token t = lex_.next();
        int index = -1;
        if (t.kind == Tok::ident && t.text.size() > 1 && t.text[0] == 'd' &&
            std::all_of(t.text.begin() + 1, t.text.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            index = bounded_int(t.text.substr(1), t);
        } else if (t.kind == Tok::ident && t.text == "d" && lex_.peek().kind == Tok::integer) {
            Token num = lex_.next();
            index = bounded_int(num.text, num);
        } else {
            throw ParseError("expected component clause 'd<index>:'", t.line, t.col);
        }
        if (index < 1 || index > nvars_)
            throw ParseError("component index d" + std::to_string(index) + " out of range (n = " +
                                 std::to_string(nvars_) + ")",
                             t.line, t.col);
        if (seen[index]) throw ParseError("duplicate component clause d" + std::to_string(index), t.line, t.col);
        seen[index] = true;
        Token colon = lex_.next();
        if (colon.kind != Tok::colon) throw ParseError("expected ':' after component index", colon.line, colon.col);
        X[index] = poly();
    }

    MultiPoly poly() {
        MultiPoly acc = MultiPoly::zero(nvars_);
        bool negate = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.next();
            negate = true;
        }
        MultiPoly t = term();
        acc = negate ? acc - t : acc + t;
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.next().kind == Tok::minus;
            if (lex_.peek().kind == Tok::minus) {  // unary minus after a binary operator
                lex_.next();
                minus = !minus;
            }
            MultiPoly u = term();
            acc = minus ? acc - u : acc + u;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (lex_.peek().kind == Tok::star) {
            lex_.next();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = primary();
        while (lex_.peek().kind == Tok::caret) {
            lex_.next();
            Token e = lex_.next();
            if (e.kind != Tok::integer) throw ParseError("expected non-negative integer exponent", e.line, e.col);
            int exp = bounded_int(e.text, e);
            if (exp > 255) throw ParseError("exponent too large (max 255)", e.line, e.col);
            base = base.pow(static_cast<unsigned>(exp));
        }
        reject_division();
        return base;
    }

    MultiPoly primary() {
        Token t = lex_.next();
        switch (t.kind) {
            case Tok::integer: {
                Int num(t.text);
                if (lex_.peek().kind == Tok::slash) {
                    lex_.next();
                    Token d = lex_.next();
                    if (d.kind != Tok::integer)
                        throw ParseError("expected positive integer denominator", d.line, d.col);
                    Int den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.line, d.col);
                    return MultiPoly::constant(nvars_, Rational(num, den));
                }
                return MultiPoly::constant(nvars_, Rational(num));
            }
            case Tok::ident: {
                if (t.text.size() > 1 && t.text[0] == 'x' &&
                    std::all_of(t.text.begin() + 1, t.text.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    int index = bounded_int(t.text.substr(1), t);
                    if (index < 1 || index > nvars_)
                        throw ParseError("variable index x" + std::to_string(index) + " out of range (n = " +
                                             std::to_string(nvars_) + ")",
                                         t.line, t.col);
                    return MultiPoly::variable(nvars_, index);
                }
                auto it = params_.find(t.text);
                if (it == params_.end()) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
                return MultiPoly::constant(nvars_, it->second);
            }
            case Tok::lparen: {
                MultiPoly p = poly();
                Token close = lex_.next();
                if (close.kind != Tok::rparen) throw ParseError("expected ')'", close.line, close.col);
                return p;
            }
            default:
                throw ParseError("expected rational, variable, parameter, or '('", t.line, t.col);
        }
    }

    void reject_division() {
        const Token& t = lex_.peek();
        if (t.kind == Tok::slash)
            throw ParseError("division is only allowed inside rational literals", t.line, t.col);
    }

    int bounded_int(const std::string& digits, const Token& at) {
        if (digits.size() > 6) throw ParseError("integer too large", at.line, at.col);
        return std::stoi(digits);
    }

    Lexer lex_;
    int nvars_;
    const ParamMap& params_;
};

}  // namespace fieldlang_detail

inline MultiPoly parse_poly(const std::string& text, int nvars, const ParamMap& params = {}) {
    return fieldlang_detail::Parser(text, nvars, params).parse_poly_document();
}

inline PolyVectorField parse_field(const std::string& text, int nvars, const ParamMap& params = {}) {
    return fieldlang_detail::Parser(text, nvars, params).parse_field_document();
}

}  // namespace endolax
