#pragma once

#include <cstdint>
#include <limits>
#include <memory>

#include "arithdyn/algebra/fp.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/algebra/residue.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/place.hpp"

namespace arithdyn {

/// v_p(0); compares above every finite valuation.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    using residue = FpElem;
    static constexpr bool function_field = false;
    static constexpr const char* name = "rational";
};

template <>
struct field_traits<RatFunc> {
    using residue = ResidueElem;
    static constexpr bool function_field = true;
    static constexpr const char* name = "ratfunc";
};

/// Multiplicity of π in a nonzero polynomial.
inline long poly_valuation(const QPoly& f, const QPoly& pi) {
    if (f.is_zero()) return kInfiniteValuation;
    if (pi.degree() == 1 && pi.coeff(0).is_zero()) return static_cast<long>(f.low_zeros());
    long v = 0;
    QPoly g = f;
    for (;;) {
        auto [q, r] = g.divmod(pi);
        if (!r.is_zero()) return v;
        g = std::move(q);
        ++v;
    }
}

inline long valuation(const Rational& x, const Place& p) {
    if (!p.is_prime()) throw arith_error("place " + p.to_string() + " does not belong to Q");
    if (x.is_zero()) return kInfiniteValuation;
    return integer_valuation(x.num(), p.p()) - integer_valuation(x.den(), p.p());
}

inline long valuation(const RatFunc& x, const Place& p) {
    if (p.is_prime()) throw arith_error("place " + p.to_string() + " does not belong to Q(t)");
    if (x.is_zero()) return kInfiniteValuation;
    if (p.is_infinity()) return x.den().degree() - x.num().degree();
    return poly_valuation(x.num(), p.pi()) - poly_valuation(x.den(), p.pi());
}

inline Rational uniformizer(const Rational&, const Place& p) {
    if (!p.is_prime()) throw arith_error("place does not belong to Q");
    return Rational(p.p());
}

inline RatFunc uniformizer(const RatFunc&, const Place& p) {
    if (p.is_prime()) throw arith_error("place does not belong to Q(t)");
    if (p.is_infinity()) return RatFunc::t().inverse();
    return RatFunc(p.pi());
}

/// Reduction map from the valuation ring at p onto κ(p).
template <class K>
class ResidueMap;

template <>
class ResidueMap<Rational> {
public:
    explicit ResidueMap(const Place& p) : place_(p) {
        if (!p.is_prime()) throw arith_error("place does not belong to Q");
        if (mpz_sizeinbase(p.p().get_mpz_t(), 2) > 62) throw arith_error("residue fields need p < 2^62");
        prime_ = p.p().get_ui();
    }
    FpElem operator()(const Rational& x) const {
        if (valuation(x, place_) < 0) throw arith_error("residue of an element with a pole at " + place_.to_string());
        return FpElem::from_rational(x, prime_);
    }
    FpElem zero() const { return FpElem(0, prime_); }
    /// Integer representative in (-p/2, p/2].
    Rational lift(const FpElem& r) const {
        Integer v = static_cast<unsigned long>(r.value());
        if (2 * r.value() > prime_) v -= static_cast<unsigned long>(prime_);
        return Rational(v);
    }
    const Place& place() const { return place_; }

private:
    Place place_;
    std::uint64_t prime_ = 0;
};

template <>
class ResidueMap<RatFunc> {
public:
    explicit ResidueMap(const Place& p)
        : place_(p), mod_(ResidueElem::make_modulus(p.is_infinity() ? QPoly::x(Rational()) : p.pi())) {
        if (p.is_prime()) throw arith_error("place does not belong to Q(t)");
    }
    ResidueElem operator()(const RatFunc& x) const {
        long v = valuation(x, place_);
        if (v < 0) throw arith_error("residue of an element with a pole at " + place_.to_string());
        if (v > 0) return ResidueElem(Rational(0), mod_);
        if (place_.is_infinity()) return ResidueElem(x.num().lead() / x.den().lead(), mod_);
        ResidueElem n(x.num(), mod_), d(x.den(), mod_);
        return n / d;
    }
    ResidueElem zero() const { return ResidueElem(Rational(0), mod_); }
    /// Polynomial representative of degree < deg π (a constant at ∞).
    RatFunc lift(const ResidueElem& r) const { return RatFunc(r.rep()); }
    const Place& place() const { return place_; }

private:
    Place place_;
    ResidueElem::Modulus mod_;
};

template <class K>
auto residue(const K& x, const Place& p) {
    return ResidueMap<K>(p)(x);
}

}  // namespace arithdyn
