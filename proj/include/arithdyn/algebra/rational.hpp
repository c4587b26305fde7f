#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "arithdyn/error.hpp"

namespace arithdyn {

using Integer = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over mpq_class so generic code never sees GMP
/// expression templates.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw arith_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "n" or "n/d" with optional sign.
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0) throw parse_error("invalid rational literal '" + s + "'", 0);
        if (q.get_den() == 0) throw parse_error("rational literal with zero denominator", 0);
        q.canonicalize();
        return Rational(q);
    }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw arith_error("division by zero rational");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational inverse() const {
        if (is_zero()) throw arith_error("inverse of zero rational");
        return Rational(mpq_class(1 / q_));
    }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_integer(const Integer& n, const Rational&) { return Rational(n); }
inline Integer characteristic(const Rational&) { return 0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational pow(const Rational& x, long e) {
    if (e < 0) return pow(x.inverse(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

}  // namespace arithdyn
