#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

enum class PlaceKind { Prime, FinitePoint, Infinity };

/// Closed point of the base curve: a rational prime (K = Q), a monic
/// irreducible π(t), or the point at infinity (K = Q(t)).
class Place {
public:
    static Place prime(const Integer& p) {
        if (!is_probable_prime(p)) throw arith_error("place " + p.get_str() + " is not prime");
        Place pl;
        pl.kind_ = PlaceKind::Prime;
        pl.p_ = p;
        return pl;
    }
    /// π must be irreducible over Q; it is made monic. Irreducibility is
    /// checked with factor_q unless the caller vouches for it.
    static Place finite(const QPoly& pi, bool checked = false) {
        if (pi.degree() < 1) throw arith_error("finite place needs a polynomial of positive degree");
        if (!checked) {
            auto fs = factor_q(pi);
            if (fs.size() != 1 || fs[0].second != 1) throw arith_error("place polynomial " + pi.to_string("t") + " is reducible");
        }
        Place pl;
        pl.kind_ = PlaceKind::FinitePoint;
        pl.pi_ = pi.monic();
        return pl;
    }
    static Place infinity() {
        Place pl;
        pl.kind_ = PlaceKind::Infinity;
        return pl;
    }
    /// The place t = c.
    static Place at(const Rational& c) { return finite(QPoly({-c, Rational(1)}), true); }

    PlaceKind kind() const { return kind_; }
    bool is_prime() const { return kind_ == PlaceKind::Prime; }
    bool is_infinity() const { return kind_ == PlaceKind::Infinity; }
    bool is_finite_point() const { return kind_ == PlaceKind::FinitePoint; }
    const Integer& p() const { return p_; }
    const QPoly& pi() const { return pi_; }

    /// Degree of the residue field over the constants (1 for primes and ∞).
    long degree() const { return kind_ == PlaceKind::FinitePoint ? pi_.degree() : 1; }

    std::string kind_name() const {
        switch (kind_) {
            case PlaceKind::Prime: return "prime";
            case PlaceKind::FinitePoint: return "poly";
            case PlaceKind::Infinity: return "infinity";
        }
        return "";
    }
    /// Payload as text: the prime, π in t, or "inf".
    std::string data() const {
        switch (kind_) {
            case PlaceKind::Prime: return p_.get_str();
            case PlaceKind::FinitePoint: return pi_.to_string("t");
            case PlaceKind::Infinity: return "inf";
        }
        return "";
    }
    std::string to_string() const {
        switch (kind_) {
            case PlaceKind::Prime: return p_.get_str();
            case PlaceKind::FinitePoint: return "[" + pi_.to_string("t") + "]";
            case PlaceKind::Infinity: return "[inf]";
        }
        return "";
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == PlaceKind::Prime) return a.p_ == b.p_;
        if (a.kind_ == PlaceKind::FinitePoint) return a.pi_ == b.pi_;
        return true;
    }
    /// Primes ascending, then finite points by (degree, coefficients), then ∞.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        if (a.kind_ == PlaceKind::Prime) return a.p_ < b.p_;
        if (a.kind_ == PlaceKind::FinitePoint) return qpoly_less(a.pi_, b.pi_);
        return false;
    }
    friend std::ostream& operator<<(std::ostream& os, const Place& p) { return os << p.to_string(); }

private:
    Place() = default;
    PlaceKind kind_ = PlaceKind::Infinity;
    Integer p_;
    QPoly pi_;
};

}  // namespace arithdyn
