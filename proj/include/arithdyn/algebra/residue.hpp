#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

/// Element of Q[t]/(π) for a monic irreducible π; a field.
///
/// The modulus is shared between all elements of one residue field. An
/// element built without a modulus (a bare constant) adopts the modulus of
/// whatever it is combined with.
class ResidueElem {
public:
    using Modulus = std::shared_ptr<const Poly<Rational>>;

    ResidueElem() = default;
    ResidueElem(const Poly<Rational>& rep, Modulus mod) : rep_(rep), mod_(std::move(mod)) { reduce(); }
    ResidueElem(const Rational& c, Modulus mod) : rep_(Poly<Rational>::constant(c)), mod_(std::move(mod)) {}

    static Modulus make_modulus(const Poly<Rational>& pi) {
        if (pi.degree() < 1) throw arith_error("residue modulus must have positive degree");
        return std::make_shared<const Poly<Rational>>(pi.monic());
    }

    const Poly<Rational>& rep() const { return rep_; }
    const Modulus& modulus() const { return mod_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    Rational rational_value() const { return rep_.coeff(0); }

    ResidueElem operator-() const { return ResidueElem(-rep_, mod_, raw_tag{}); }
    ResidueElem& operator+=(const ResidueElem& o) {
        adopt(o);
        rep_ += o.rep_;
        return *this;
    }
    ResidueElem& operator-=(const ResidueElem& o) {
        adopt(o);
        rep_ -= o.rep_;
        return *this;
    }
    ResidueElem& operator*=(const ResidueElem& o) {
        adopt(o);
        rep_ *= o.rep_;
        reduce();
        return *this;
    }
    ResidueElem& operator/=(const ResidueElem& o) {
        adopt(o);
        return *this *= o.inverse_with(mod_);
    }
    friend ResidueElem operator+(ResidueElem a, const ResidueElem& b) { return a += b; }
    friend ResidueElem operator-(ResidueElem a, const ResidueElem& b) { return a -= b; }
    friend ResidueElem operator*(ResidueElem a, const ResidueElem& b) { return a *= b; }
    friend ResidueElem operator/(ResidueElem a, const ResidueElem& b) { return a /= b; }
    friend bool operator==(const ResidueElem& a, const ResidueElem& b) { return a.rep_ == b.rep_; }

    ResidueElem inverse() const { return inverse_with(mod_); }

    std::string to_string() const { return rep_.to_string("t"); }
    friend std::ostream& operator<<(std::ostream& os, const ResidueElem& x) { return os << x.to_string(); }

private:
    struct raw_tag {};
    ResidueElem(Poly<Rational> rep, Modulus mod, raw_tag) : rep_(std::move(rep)), mod_(std::move(mod)) {}

    void adopt(const ResidueElem& o) {
        if (!mod_) mod_ = o.mod_;
        else if (o.mod_ && o.mod_ != mod_ && !(*o.mod_ == *mod_))
            throw arith_error("mixing elements of different residue fields");
        reduce();
    }
    void reduce() {
        if (mod_ && rep_.degree() >= mod_->degree()) rep_ = rep_ % *mod_;
    }
    ResidueElem inverse_with(const Modulus& mod) const {
        if (is_zero()) throw arith_error("inverse of zero in residue field");
        if (rep_.degree() == 0) return ResidueElem(rep_.coeff(0).inverse(), mod);
        if (!mod) throw arith_error("inverse of non-constant residue without modulus");
        auto [g, s, t] = poly_xgcd(rep_, *mod);
        if (g.degree() != 0) throw arith_error("residue modulus is not irreducible");
        return ResidueElem(s, mod);
    }

    Poly<Rational> rep_;
    Modulus mod_;
};

inline ResidueElem zero_like(const ResidueElem& x) { return ResidueElem(Rational(0), x.modulus()); }
inline ResidueElem one_like(const ResidueElem& x) { return ResidueElem(Rational(1), x.modulus()); }
inline ResidueElem from_integer(const Integer& n, const ResidueElem& x) { return ResidueElem(Rational(n), x.modulus()); }
inline Integer characteristic(const ResidueElem&) { return 0; }
inline bool is_zero(const ResidueElem& x) { return x.is_zero(); }

}  // namespace arithdyn
