#include "bidiff/parser.hpp"

#include <cctype>

namespace bidiff {

namespace {

enum class Tok { Number, Alpha, Beta, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; ++i_; return;
            case '-': current_ = {Tok::Minus, "-", start}; ++i_; return;
            case '*': current_ = {Tok::Star, "*", start}; ++i_; return;
            case '/': current_ = {Tok::Slash, "/", start}; ++i_; return;
            case '^': current_ = {Tok::Caret, "^", start}; ++i_; return;
            case '(': current_ = {Tok::LParen, "(", start}; ++i_; return;
            case ')': current_ = {Tok::RParen, ")", start}; ++i_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            current_ = {Tok::Number, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (src_.compare(i_, 5, "alpha") == 0) {
            current_ = {Tok::Alpha, "alpha", start};
            i_ += 5;
            return;
        }
        if (src_.compare(i_, 4, "beta") == 0) {
            current_ = {Tok::Beta, "beta", start};
            i_ += 4;
            return;
        }
        if (src_.compare(i_, 2, "\xce\xb1") == 0) {  // UTF-8 alpha
            current_ = {Tok::Alpha, "alpha", start};
            i_ += 2;
            return;
        }
        if (src_.compare(i_, 2, "\xce\xb2") == 0) {  // UTF-8 beta
            current_ = {Tok::Beta, "beta", start};
            i_ += 2;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token current_{Tok::End, "", 0};
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    BiPoly parse() {
        BiPoly p = expr();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return p;
    }

private:
    BiPoly expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        } else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        BiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc += term();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc *= factor();
            } else if (k == Tok::Slash) {
                Token slash = lex_.take();
                BiPoly divisor = factor();
                if (!divisor.is_constant())
                    throw ParseError("division by a non-constant (rational functions rejected)",
                                     slash.pos);
                if (divisor.is_zero()) throw ParseError("division by zero", slash.pos);
                acc = divisor.coeff(0, 0).inv() * acc;
            } else {
                return acc;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = atom();
        if (lex_.peek().kind != Tok::Caret) return base;
        Token caret = lex_.take();
        Token e = lex_.take();
        if (e.kind != Tok::Number)
            throw ParseError("exponent must be a nonnegative integer", caret.pos);
        long exp = std::stol(e.text);
        return base.pow(static_cast<int>(exp));
    }

    BiPoly atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return BiPoly(QElem(Rat(Int(t.text))));
            case Tok::Alpha:
                return BiPoly::alpha();
            case Tok::Beta:
                return BiPoly::beta();
            case Tok::LParen: {
                BiPoly inner = expr();
                Token close = lex_.take();
                if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
                return inner;
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.pos);
        }
    }

    Lexer lex_;
};

}  // namespace

BiPoly parse_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace bidiff
