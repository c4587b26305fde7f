#pragma once

#include <cctype>
#include <cstddef>
#include <string>

#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

namespace detail {

// Recursive descent over
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' natural)?
//   primary := integer | variable | '(' expr ')'
// Values are elements of Q(var); an empty variable name admits constants only.
class ExprParser {
public:
    ExprParser(const std::string& src, std::string var) : s_(src), var_(std::move(var)) {}

    RatFunc run() {
        skip();
        if (pos_ == s_.size()) throw parse_error("empty expression", pos_);
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) throw parse_error(std::string("unexpected character '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    static constexpr unsigned long kMaxExponent = 100000;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw parse_error("division by zero", at);
                v /= d;
            } else {
                return v;
            }
        }
    }
    RatFunc unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RatFunc power() {
        RatFunc base = primary();
        if (!eat('^')) return base;
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw parse_error("exponent not a nonnegative integer", at);
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) throw parse_error("exponent too large", at);
        return base.pow(static_cast<long>(std::stoul(digits)));
    }
    RatFunc primary() {
        skip();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
            return RatFunc(Rational(Integer(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            if (var_.empty() || name != var_) throw parse_error("unknown identifier '" + name + "'", at);
            return RatFunc::t();
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& s_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_ratfunc(const std::string& expr, const std::string& var = "t") {
    return detail::ExprParser(expr, var).run();
}

inline Poly<Rational> parse_poly(const std::string& expr, const std::string& var = "t") {
    RatFunc r = parse_ratfunc(expr, var);
    if (!r.is_polynomial()) throw parse_error("expression is not a polynomial in " + var, 0);
    return r.num();
}

inline Rational parse_rational(const std::string& expr) {
    return parse_ratfunc(expr, "").constant_value();
}

}  // namespace arithdyn
