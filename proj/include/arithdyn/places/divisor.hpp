#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/place.hpp"

namespace arithdyn {

struct DivisorDegree {
    long geometric = 0;
    double lognorm = 0.0;
};

/// Finite formal Z-combination of places; zero coefficients are never stored.
class Divisor {
public:
    using Map = std::map<Place, long>;

    Divisor() = default;

    void add(const Place& p, long m) {
        if (m == 0) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, m);
            return;
        }
        it->second += m;
        if (it->second == 0) terms_.erase(it);
    }
    long coeff(const Place& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_effective() const {
        for (const auto& [p, m] : terms_)
            if (m < 0) return false;
        return true;
    }
    std::vector<Place> support() const {
        std::vector<Place> s;
        for (const auto& [p, m] : terms_) s.push_back(p);
        return s;
    }
    /// Coefficient 1 on every place of the support.
    Divisor reduced() const {
        Divisor r;
        for (const auto& [p, m] : terms_) r.add(p, 1);
        return r;
    }

    Divisor operator-() const {
        Divisor r;
        for (const auto& [p, m] : terms_) r.terms_.emplace(p, -m);
        return r;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) {
        for (const auto& [p, m] : b.terms_) a.add(p, m);
        return a;
    }
    friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
    friend Divisor operator*(long k, const Divisor& a) {
        Divisor r;
        for (const auto& [p, m] : a.terms_) r.add(p, k * m);
        return r;
    }
    /// Coefficientwise exact division; throws when some coefficient is not a multiple of k.
    Divisor divide_exact(long k) const {
        if (k == 0) throw arith_error("divisor division by zero");
        Divisor r;
        for (const auto& [p, m] : terms_) {
            if (m % k != 0)
                throw arith_error("coefficient " + std::to_string(m) + " at " + p.to_string() + " is not divisible by " +
                                  std::to_string(k));
            r.add(p, m / k);
        }
        return r;
    }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

    /// Geometric degree Σ m·deg(p) (deg ∞ = 1, deg of a prime = 1) and the
    /// log-norm degree: Σ m·log p for primes, the geometric degree otherwise.
    DivisorDegree degree() const {
        DivisorDegree d;
        for (const auto& [p, m] : terms_) {
            d.geometric += m * p.degree();
            if (p.is_prime()) {
                // log of a big integer through its mantissa/exponent split
                long exp = 0;
                double mant = mpz_get_d_2exp(&exp, p.p().get_mpz_t());
                d.lognorm += static_cast<double>(m) * (std::log(mant) + static_cast<double>(exp) * std::log(2.0));
            } else {
                d.lognorm += static_cast<double>(m * p.degree());
            }
        }
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, m] : terms_) {
            if (!first) s += m < 0 ? " - " : " + ";
            else if (m < 0) s += "-";
            first = false;
            long a = m < 0 ? -m : m;
            s += std::to_string(a) + p.to_string();
        }
        return s;
    }

private:
    Map terms_;
};

/// Σ v_p(x)[p] over the primes dividing numerator or denominator.
inline Divisor principal_divisor(const Rational& x) {
    if (x.is_zero()) throw arith_error("principal divisor of zero");
    Divisor d;
    if (x.num() != 1 && x.num() != -1)
        for (const auto& [p, e] : factor_integer(x.num())) d.add(Place::prime(p), static_cast<long>(e));
    if (x.den() != 1)
        for (const auto& [p, e] : factor_integer(x.den())) d.add(Place::prime(p), -static_cast<long>(e));
    return d;
}

/// Σ v_p(x)[p] over all places of P^1 including ∞.
inline Divisor principal_divisor(const RatFunc& x) {
    if (x.is_zero()) throw arith_error("principal divisor of zero");
    Divisor d;
    if (x.num().degree() > 0)
        for (const auto& [g, m] : factor_q(x.num())) d.add(Place::finite(g, true), static_cast<long>(m));
    if (x.den().degree() > 0)
        for (const auto& [g, m] : factor_q(x.den())) d.add(Place::finite(g, true), -static_cast<long>(m));
    d.add(Place::infinity(), x.den().degree() - x.num().degree());
    return d;
}

inline DivisorDegree divisor_degree(const Divisor& d) { return d.degree(); }

}  // namespace arithdyn
