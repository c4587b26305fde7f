#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

/// Element of the prime field F_p, p < 2^63.
class FpElem {
public:
    FpElem() = default;
    FpElem(std::uint64_t value, std::uint64_t p) : r_(p ? value % p : 0), p_(p) {}

    static FpElem from_integer(const Integer& v, std::uint64_t p) {
        Integer m = v % Integer(static_cast<unsigned long>(p));
        if (m < 0) m += static_cast<unsigned long>(p);
        return FpElem(m.get_ui(), p);
    }

    /// Image of a rational with p-integral value; throws at a pole.
    static FpElem from_rational(const Rational& q, std::uint64_t p) {
        FpElem d = from_integer(q.den(), p);
        if (d.is_zero()) throw arith_error("rational has a pole at p = " + std::to_string(p));
        return from_integer(q.num(), p) / d;
    }

    std::uint64_t value() const { return r_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    FpElem operator-() const { return FpElem(r_ == 0 ? 0 : p_ - r_, p_); }
    FpElem& operator+=(const FpElem& o) {
        check(o);
        r_ = (r_ >= p_ - o.r_) ? r_ - (p_ - o.r_) : r_ + o.r_;
        return *this;
    }
    FpElem& operator-=(const FpElem& o) {
        check(o);
        r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + (p_ - o.r_);
        return *this;
    }
    FpElem& operator*=(const FpElem& o) {
        check(o);
        r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) * o.r_) % p_);
        return *this;
    }
    FpElem& operator/=(const FpElem& o) { return *this *= o.inverse(); }
    friend FpElem operator+(FpElem a, const FpElem& b) { return a += b; }
    friend FpElem operator-(FpElem a, const FpElem& b) { return a -= b; }
    friend FpElem operator*(FpElem a, const FpElem& b) { return a *= b; }
    friend FpElem operator/(FpElem a, const FpElem& b) { return a /= b; }
    friend bool operator==(const FpElem& a, const FpElem& b) { return a.r_ == b.r_ && a.p_ == b.p_; }

    FpElem pow(std::uint64_t e) const {
        FpElem base = *this, acc(1, p_);
        while (e) {
            if (e & 1U) acc *= base;
            base *= base;
            e >>= 1U;
        }
        return acc;
    }

    FpElem inverse() const {
        if (is_zero()) throw arith_error("inverse of zero in F_" + std::to_string(p_));
        // extended Euclid on signed 128-bit to stay valid for p near 2^63
        __int128 a = r_, m = p_, x0 = 1, x1 = 0;
        while (m != 0) {
            __int128 q = a / m;
            __int128 t = a - q * m; a = m; m = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += p_;
        return FpElem(static_cast<std::uint64_t>(x0), p_);
    }

    std::string to_string() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, const FpElem& x) { return os << x.r_; }

private:
    void check(const FpElem& o) const {
        if (p_ != o.p_) throw arith_error("mixing elements of different prime fields");
    }

    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.modulus()); }
inline FpElem one_like(const FpElem& x) { return FpElem(1, x.modulus()); }
inline FpElem from_integer(const Integer& n, const FpElem& like) { return FpElem::from_integer(n, like.modulus()); }
inline Integer characteristic(const FpElem& x) { return static_cast<unsigned long>(x.modulus()); }
inline bool is_zero(const FpElem& x) { return x.is_zero(); }

}  // namespace arithdyn
