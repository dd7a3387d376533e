#ifndef MDO_PARSE_HPP
#define MDO_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "forcing.hpp"
#include "rational.hpp"
#include "ratpoly.hpp"

namespace mdo {

namespace detail {

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    [[noreturn]] void fail_unexpected() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    std::size_t position() {
        skip_ws();
        return pos_;
    }

    bool at_digit() { return is_digit(peek()); }

    /// Optional run of '+'/'-'; returns true when the net sign is negative.
    bool parse_signs() {
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (text_[pos_] == '-') neg = !neg;
            ++pos_;
        }
        return neg;
    }

    BigInt parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ < text_.size() && text_[pos_] == '.') throw parse_error("non-rational literal", start);
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned parse_exponent() {
        std::size_t start = position();
        BigInt v = parse_uint();
        if (v > 1000) throw parse_error("exponent too large", start);
        return v.convert_to<unsigned>();
    }

    /// int ('/' uint)?, unsigned.
    Rational parse_rational() {
        BigInt num = parse_uint();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = position();
            BigInt den = parse_uint();
            if (den == 0) throw parse_error("zero denominator", at);
            return Rational(num, den);
        }
        return Rational(num);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

/// The "<rational>? '*'? x" rate inside e^(...), sin(...), cos(...).
inline Rational parse_rate(Cursor& cur) {
    bool neg = cur.parse_signs();
    Rational r(1);
    if (cur.at_digit()) {
        r = cur.parse_rational();
        cur.accept('*');
    }
    if (!cur.accept('x')) cur.fail("expected 'x' in rate");
    return neg ? Rational(-r) : r;
}

class ForcingParser {
public:
    explicit ForcingParser(std::string_view text) : cur_(text) {}

    ForcingFunction parse() {
        if (cur_.at_end()) cur_.fail("empty expression");
        std::vector<ForcingTerm> terms;
        terms.push_back(parse_term(cur_.parse_signs()));
        while (cur_.peek() == '+' || cur_.peek() == '-') terms.push_back(parse_term(cur_.parse_signs()));
        if (!cur_.at_end()) cur_.fail_unexpected();
        return canonicalize(std::move(terms));
    }

private:
    bool starts_factor() {
        char c = cur_.peek();
        return is_digit(c) || c == 'x' || c == 'e' || c == 's' || c == 'c';
    }

    ForcingTerm parse_term(bool neg) {
        ForcingTerm t{Rational(neg ? -1 : 1), 0, Rational(0), Rational(0), TrigKind::One};
        if (!starts_factor()) cur_.fail_unexpected();
        parse_factor(t);
        // '*' or juxtaposition
        while (cur_.accept('*') || starts_factor()) parse_factor(t);
        return t;
    }

    void parse_factor(ForcingTerm& t) {
        std::size_t at = cur_.position();
        if (cur_.at_digit()) {
            t.coef *= cur_.parse_rational();
        } else if (cur_.accept_word("sin")) {
            parse_trig(t, TrigKind::Sin, at);
        } else if (cur_.accept_word("cos")) {
            parse_trig(t, TrigKind::Cos, at);
        } else if (cur_.accept('x')) {
            unsigned p = 1;
            if (cur_.accept('^')) p = cur_.parse_exponent();
            t.power += p;
        } else if (cur_.accept('e')) {
            cur_.expect('^');
            cur_.expect('(');
            t.alpha += parse_rate(cur_);
            cur_.expect(')');
        } else {
            cur_.fail_unexpected();
        }
    }

    void parse_trig(ForcingTerm& t, TrigKind kind, std::size_t at) {
        if (t.trig != TrigKind::One) throw parse_error("product of trigonometric factors is not supported", at);
        cur_.expect('(');
        Rational beta = parse_rate(cur_);
        cur_.expect(')');
        t.trig = kind;
        t.beta = beta;
        // canonicalize folds beta == 0 and beta < 0
        if (beta == 0) {
            if (kind == TrigKind::Sin) t.coef = 0;
            t.trig = TrigKind::One;
        }
    }

    Cursor cur_;
};

/// Polynomial in D: + - * ^ ( ), rational literals, juxtaposition.
class DPolyParser {
public:
    explicit DPolyParser(Cursor& cur) : cur_(cur) {}

    RatPoly parse_expr() {
        RatPoly acc = signed_term();
        while (cur_.peek() == '+' || cur_.peek() == '-') acc = acc + signed_term();
        return acc;
    }

private:
    RatPoly signed_term() {
        bool neg = cur_.parse_signs();
        RatPoly t = parse_term();
        return neg ? -t : t;
    }

    bool starts_factor() {
        char c = cur_.peek();
        return is_digit(c) || c == 'D' || c == '(';
    }

    RatPoly parse_term() {
        if (!starts_factor()) cur_.fail_unexpected();
        RatPoly acc = parse_factor();
        while (cur_.accept('*') || starts_factor()) acc = acc * parse_factor();
        return acc;
    }

    RatPoly parse_factor() {
        RatPoly base;
        if (cur_.at_digit()) {
            base = RatPoly::constant(cur_.parse_rational());
        } else if (cur_.accept('D')) {
            base = RatPoly::monomial(1);
        } else if (cur_.accept('(')) {
            base = parse_expr();
            cur_.expect(')');
        } else {
            cur_.fail_unexpected();
        }
        if (cur_.accept('^')) return base.pow(cur_.parse_exponent());
        return base;
    }

    Cursor& cur_;
};

/// y-notation: [sign] [rational ['*']] y('...' | "^(n)") ...
inline RatPoly parse_y_form(Cursor& cur) {
    std::vector<Rational> coeffs;
    bool first = true;
    while (first || cur.peek() == '+' || cur.peek() == '-') {
        first = false;
        bool neg = cur.parse_signs();
        Rational c(1);
        if (cur.at_digit()) {
            c = cur.parse_rational();
            cur.accept('*');
        }
        if (!cur.accept('y')) cur.fail("expected 'y'");
        unsigned order = 0;
        if (cur.accept('^')) {
            cur.expect('(');
            order = cur.parse_exponent();
            cur.expect(')');
        } else {
            while (cur.accept('\'')) ++order;
        }
        if (coeffs.size() <= order) coeffs.resize(order + 1);
        coeffs[order] += neg ? Rational(-c) : c;
    }
    if (!cur.at_end()) cur.fail_unexpected();
    return RatPoly(std::move(coeffs));
}

} // namespace detail

/// Parses a right-hand side such as "2*x*e^(2x)*cos(3x) - sin(-2x)".
inline ForcingFunction parse_forcing(std::string_view text) { return detail::ForcingParser(text).parse(); }

/// Parses "(D-2)^2*(D+4)^2" or "y'' + 3y' - 4y" into the operator polynomial.
inline RatPoly parse_operator(std::string_view text) {
    detail::Cursor cur(text);
    if (cur.at_end()) cur.fail("empty expression");
    RatPoly p;
    if (text.find('y') != std::string_view::npos) {
        p = detail::parse_y_form(cur);
    } else {
        p = detail::DPolyParser(cur).parse_expr();
        if (!cur.at_end()) cur.fail_unexpected();
    }
    if (p.is_zero()) throw zero_operator_error();
    return p;
}

} // namespace mdo

#endif
