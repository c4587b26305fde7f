#pragma once

#include <string>
#include <vector>

#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

namespace arithdyn {

/// Primitive integer representative with the first nonzero coordinate positive.
inline std::vector<Rational> canonical_coords(const std::vector<Rational>& c) {
    Integer l = 1, g = 0;
    for (const auto& v : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    std::vector<Integer> z;
    for (const auto& v : c) {
        z.push_back(v.num() * (l / v.den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g == 0) throw arith_error("canonical representative of the zero vector");
    for (const auto& v : z)
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    std::vector<Rational> r;
    for (const auto& v : z) r.emplace_back(Integer(v / g));
    return r;
}

/// Representative in Z[t] with no common polynomial factor, integer content 1,
/// and positive leading coefficient on the first nonzero coordinate.
inline std::vector<RatFunc> canonical_coords(const std::vector<RatFunc>& c) {
    QPoly l = QPoly::constant(Rational(1));
    for (const auto& v : c) {
        if (v.is_zero()) continue;
        l = l.exact_div(poly_gcd(l, v.den())) * v.den();
    }
    std::vector<QPoly> polys;
    QPoly g;
    for (const auto& v : c) {
        polys.push_back(v.is_zero() ? QPoly() : v.num() * l.exact_div(v.den()));
        g = poly_gcd(g, polys.back());
    }
    if (g.is_zero()) throw arith_error("canonical representative of the zero vector");
    for (auto& p : polys)
        if (!p.is_zero()) p = p.exact_div(g);
    // integer content over all coefficients of all coordinates
    Integer den_l = 1, num_g = 0;
    for (const auto& p : polys)
        for (const auto& q : p.coeffs()) mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), q.den().get_mpz_t());
    for (const auto& p : polys)
        for (const auto& q : p.coeffs()) {
            Integer v = q.num() * (den_l / q.den());
            mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), v.get_mpz_t());
        }
    Rational scale(den_l, num_g);
    for (const auto& p : polys)
        if (!p.is_zero()) {
            if (p.lead().sign() < 0) scale = -scale;
            break;
        }
    std::vector<RatFunc> r;
    for (const auto& p : polys) r.emplace_back(p * scale);
    return r;
}

template <class K>
Model<K> canonical_model(const Model<K>& m) {
    std::vector<K> c = canonical_coords(m.coords());
    Model<K> r = m;
    for (std::size_t i = 0; i <= m.d; ++i) {
        r.a[i] = c[i];
        r.b[i] = c[m.d + 1 + i];
    }
    return r;
}

/// Projective class of a model in Rat_d(K), held through its canonical
/// representative. Construction fails with degenerate_error when ρ = 0.
template <class K>
class Presentation {
public:
    explicit Presentation(const Model<K>& m) : model_(canonical_model(m)) {
        rho_ = sylvester_resultant(model_);
        if (detail::elem_is_zero(rho_))
            throw degenerate_error("resultant vanishes: the forms share a root, so this is not a map of degree " +
                                   std::to_string(model_.d));
    }

    const Model<K>& model() const { return model_; }
    std::size_t degree() const { return model_.d; }
    /// ρ of the canonical representative.
    const K& resultant() const { return rho_; }

    friend bool operator==(const Presentation& x, const Presentation& y) { return x.model_ == y.model_; }

private:
    Model<K> model_;
    K rho_;
};

/// N_{Φ,p} = v_p(ρ) − 2d·n_p, evaluated on the canonical representative.
template <class K>
long n_value(const Presentation<K>& phi, const Place& p) {
    return n_value_of_model(phi.model(), p, &phi.resultant());
}

/// R_Φ = Σ N_{Φ,p}[p]. Finite support comes from factoring ρ (the canonical
/// representative has n_p = 0 at every finite place); ∞ is computed directly.
inline Divisor resultant_divisor(const Presentation<Rational>& phi) {
    Divisor r;
    const Rational& rho = phi.resultant();
    if (rho.num() == 1 || rho.num() == -1) return r;
    for (const auto& [p, e] : factor_integer(rho.num())) {
        Place pl = Place::prime(p);
        r.add(pl, n_value(phi, pl));
    }
    return r;
}

inline Divisor resultant_divisor(const Presentation<RatFunc>& phi) {
    Divisor r;
    const RatFunc& rho = phi.resultant();
    if (rho.num().degree() > 0)
        for (const auto& [g, m] : factor_q(rho.num())) {
            Place pl = Place::finite(g, true);
            r.add(pl, n_value(phi, pl));
        }
    r.add(Place::infinity(), n_value(phi, Place::infinity()));
    return r;
}

}  // namespace arithdyn
