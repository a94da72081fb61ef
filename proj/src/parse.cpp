#include "paralmi/parse.hpp"

#include <cctype>

#include "paralmi/error.hpp"

namespace paralmi {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void skip_ws() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                col = 1;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col;
                ++pos;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char take() {
        char c = peek();
        ++pos;
        ++col;
        return c;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            ++col;
            return true;
        }
        return false;
    }

    std::string take_digits() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            out.push_back(text[pos]);
            ++pos;
            ++col;
        }
        if (out.empty()) fail("expected digits");
        return out;
    }
};

struct Parser {
    Lexer lex;
    const VarSpace& space;

    Parser(const std::string& t, const VarSpace& s) : lex(t), space(s) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (!lex.eof()) lex.fail(std::string("unexpected character '") + lex.peek() + "'");
        return p;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            char c = lex.peek();
            if (c == '+') {
                lex.take();
                acc += term();
            } else if (c == '-') {
                lex.take();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (lex.peek() == '*') {
            lex.take();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (lex.peek() == '^') {
            lex.take();
            std::string d = lex.take_digits();
            unsigned long e = std::stoul(d);
            if (e > 64) lex.fail("exponent too large");
            base = base.pow(static_cast<uint32_t>(e));
        }
        return base;
    }

    MultiPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.take();
            MultiPoly p = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return p;
        }
        if (c == '-') {
            lex.take();
            return -factor();
        }
        if (c == '+') {
            lex.take();
            return factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c == 'x' || c == 'y') return variable();
        lex.fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly number() {
        std::string num = lex.take_digits();
        if (lex.peek() == '/') {
            lex.take();
            std::string den = lex.take_digits();
            Integer d(den, 10);
            if (d == 0) lex.fail("zero denominator");
            return MultiPoly(make_rational(Integer(num, 10), d));
        }
        return MultiPoly(Rational(Integer(num, 10)));
    }

    MultiPoly variable() {
        char kind = lex.take();
        int vline = lex.line, vcol = lex.col;
        std::string d = lex.take_digits();
        unsigned long idx = std::stoul(d);
        Var v = kind == 'x' ? var_x(static_cast<uint32_t>(idx)) : var_y(static_cast<uint32_t>(idx));
        if (!space.contains(v))
            throw ParseError(std::string(1, kind) + d + " is not a declared variable", vline,
                             vcol - 1);
        return MultiPoly::variable(v);
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarSpace& space) {
    Parser p(text, space);
    return p.parse();
}

std::string print_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    // Decreasing canonical order.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = sign(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        if (m.is_one()) {
            out += to_string(a);
        } else {
            bool coef_printed = false;
            if (a != 1) {
                out += to_string(a);
                coef_printed = true;
            }
            bool first_var = true;
            for (const auto& f : m.factors()) {
                if (!first_var || coef_printed) out += "*";
                out += var_name(f.first);
                if (f.second > 1) out += "^" + std::to_string(f.second);
                first_var = false;
            }
        }
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    // Accept decimals in addition to the a/b grammar (grid steps).
    auto dot = text.find('.');
    if (dot == std::string::npos) return rational_from_string(text);
    std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
        negative = head[0] == '-';
        head = head.substr(1);
    }
    if (head.empty()) head = "0";
    for (char c : head + tail)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad rational '" + text + "'", 1, 1);
    Integer num(head + tail, 10);
    Integer den = pow(Integer(10), tail.size());
    Rational q = make_rational(num, den);
    return negative ? Rational(-q) : q;
}

}  // namespace paralmi
