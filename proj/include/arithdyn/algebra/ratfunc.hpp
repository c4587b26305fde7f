#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

using QPoly = Poly<Rational>;

/// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(QPoly::constant(Rational(1))) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}  // NOLINT
    RatFunc(const QPoly& p) : num_(p), den_(QPoly::constant(Rational(1))) {}  // NOLINT
    RatFunc(const QPoly& n, const QPoly& d) : num_(n), den_(d) {
        if (d.is_zero()) throw arith_error("rational function with zero denominator");
        normalize();
    }

    static RatFunc t() { return RatFunc(QPoly::x(Rational())); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    Rational constant_value() const { return num_.coeff(0); }

    RatFunc operator-() const { return RatFunc(-num_, den_, raw_tag{}); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
        // cross-cancel first so the products stay small
        QPoly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        QPoly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
        QPoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
        return RatFunc(n, d, monic_tag{});
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw arith_error("division by zero rational function");
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_, b.num_);
        return a * b.inverse();
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    RatFunc inverse() const {
        if (is_zero()) throw arith_error("inverse of zero rational function");
        Rational lc = num_.lead();
        return RatFunc(den_ * lc.inverse(), num_ * lc.inverse(), raw_tag{});
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)), raw_tag{});
    }

    Rational operator()(const Rational& x) const {
        Rational dv = den_(x);
        if (dv.is_zero()) throw arith_error("evaluation of rational function at a pole");
        return num_(x) / dv;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string("t");
        return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

private:
    struct raw_tag {};
    struct monic_tag {};
    // already coprime with monic denominator
    RatFunc(QPoly n, QPoly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    // coprime, denominator not yet monic
    RatFunc(QPoly n, QPoly d, monic_tag) : num_(std::move(n)), den_(std::move(d)) { make_den_monic(); }

    void normalize() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(Rational(1));
            return;
        }
        if (den_.degree() > 0) {
            auto [q, r] = num_.divmod(den_);
            if (r.is_zero()) {
                num_ = q;
                den_ = QPoly::constant(Rational(1));
                return;
            }
            QPoly g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.exact_div(g);
                den_ = den_.exact_div(g);
            }
        }
        make_den_monic();
    }
    void make_den_monic() {
        if (num_.is_zero()) {
            den_ = QPoly::constant(Rational(1));
            return;
        }
        Rational lc = den_.lead();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    QPoly num_;
    QPoly den_;
};

inline RatFunc zero_like(const RatFunc&) { return RatFunc(); }
inline RatFunc one_like(const RatFunc&) { return RatFunc(1L); }
inline RatFunc from_integer(const Integer& n, const RatFunc&) { return RatFunc(Rational(n)); }
inline Integer characteristic(const RatFunc&) { return 0; }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

}  // namespace arithdyn
