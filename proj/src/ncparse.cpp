/*
   Copyright 2026 The nchess authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "nchess/ncparse.hpp"

#include <cctype>
#include <sstream>

namespace nchess {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class Parser {
   public:
    Parser(const std::string& text, int g, bool allow_h) : text_(text), g_(g), allow_h_(allow_h) {}

    NcPoly run() {
        NcPoly p = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected trailing input");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected '" + std::string(1, c) + "' (" + what + ")");
    }

    bool digit_next() {
        skip_ws();
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    unsigned long parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long>(advance() - '0');
            if (v > 1000000000UL) fail("number too large");
        }
        return v;
    }

    Rational parse_rational() {
        unsigned long num = parse_uint();
        if (peek() == '/') {
            advance();
            unsigned long den = parse_uint();
            if (den == 0) fail("zero denominator");
            return Rational(static_cast<long>(num), static_cast<long>(den));
        }
        return Rational(static_cast<long>(num));
    }

    bool var_next() {
        skip_ws();
        return peek() == 'x' || peek() == 'h';
    }

    NcPoly parse_var() {
        skip_ws();
        char kind = advance();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
        unsigned long idx = parse_uint();
        if (kind == 'h' && !allow_h_) fail("direction letters are not allowed here");
        if (idx < 1 || idx > static_cast<unsigned long>(g_)) fail("variable index out of range");
        Letter l{kind == 'h' ? LetterKind::H : LetterKind::X, static_cast<int>(idx)};
        return NcPoly::letter(g_, l);
    }

    NcPoly parse_factor() {
        skip_ws();
        NcPoly base(g_);
        if (peek() == 'T') {
            advance();
            expect('(', "involution argument");
            base = parse_expr().involution();
            expect(')', "closing involution");
        } else if (peek() == '(') {
            advance();
            base = parse_expr();
            expect(')', "closing parenthesis");
        } else if (var_next()) {
            base = parse_var();
        } else {
            fail("expected a variable, '(' or 'T('");
        }
        while (accept('^')) {
            unsigned long e = parse_uint();
            NcPoly powed = NcPoly::constant(g_, 1);
            for (unsigned long i = 0; i < e; ++i) powed = powed * base;
            base = powed;
        }
        return base;
    }

    NcPoly parse_term() {
        NcPoly acc = NcPoly::constant(g_, 1);
        bool have_factor = false;
        if (digit_next()) {
            acc = NcPoly::constant(g_, parse_rational());
            skip_ws();
            if (accept('*')) {
                acc = acc * parse_factor();
                have_factor = true;
            } else if (peek() == 'T' || peek() == '(' || var_next()) {
                acc = acc * parse_factor();  // juxtaposed coefficient
                have_factor = true;
            } else {
                return acc;  // bare rational term
            }
        } else {
            acc = parse_factor();
            have_factor = true;
        }
        while (have_factor && accept('*')) acc = acc * parse_factor();
        return acc;
    }

    NcPoly parse_expr() {
        skip_ws();
        NcPoly acc(g_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        NcPoly t = parse_term();
        acc = negate ? -t : t;
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                advance();
                acc += parse_term();
            } else if (peek() == '-') {
                advance();
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    const std::string& text_;
    int g_;
    bool allow_h_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

void append_rational(std::ostream& os, const Rational& q) { os << q.get_str(); }

}  // namespace

NcPoly parse(const std::string& text, int g, bool allow_h) {
    if (g < 1) throw std::invalid_argument("variable count must be at least 1");
    return Parser(text, g, allow_h).run();
}

std::string print_word(const Word& w) {
    std::ostringstream os;
    bool first = true;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        Letter l = letter_from_code(w[i]);
        if (!first) os << '*';
        os << (l.kind == LetterKind::H ? 'h' : 'x') << l.index;
        if (run > 1) os << '^' << run;
        first = false;
        i += run;
    }
    return os.str();
}

std::string print(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (w.empty()) {
            append_rational(os, a);
        } else if (a == 1) {
            os << print_word(w);
        } else {
            append_rational(os, a);
            os << '*' << print_word(w);
        }
    }
    return os.str();
}

}  // namespace nchess
