#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/dynsys/reduction.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

namespace arithdyn {

enum class StabilityClass { NonDegenerate, Stable, SemiStableNotStable, Unstable };

inline const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::NonDegenerate: return "NonDegenerate";
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::SemiStableNotStable: return "SemiStableNotStable";
        case StabilityClass::Unstable: return "Unstable";
    }
    return "";
}

inline bool is_semistable(StabilityClass c) { return c != StabilityClass::Unstable; }

/// The common root that decided the class (the worst one found).
struct StabilityWitness {
    std::string factor;  // squarefree part in x = X/Y, or "inf" for [1:0]
    unsigned multiplicity = 0;
    bool fixed = false;
};

struct StabilityResult {
    StabilityClass cls = StabilityClass::NonDegenerate;
    std::optional<StabilityWitness> witness;
    std::string common_factor;  // gcd of the two forms, "1" when trivial
    std::string canceled_map;   // [G_a : G_b] after removing the gcd
};

namespace detail {

inline int severity(StabilityClass c) {
    switch (c) {
        case StabilityClass::NonDegenerate: return 0;
        case StabilityClass::Stable: return 1;
        case StabilityClass::SemiStableNotStable: return 2;
        case StabilityClass::Unstable: return 3;
    }
    return 0;
}

/// Class forced by one common root of the given order (degree d map).
inline StabilityClass root_class(std::size_t d, unsigned order, bool fixed) {
    const unsigned r = static_cast<unsigned>(d / 2);
    if (d % 2 == 0) {
        if (order >= r + 1 || (order == r && fixed)) return StabilityClass::Unstable;
        return StabilityClass::Stable;
    }
    if (order >= r + 2 || (order == r + 1 && fixed)) return StabilityClass::Unstable;
    if (order >= r + 1 || (order == r && r >= 1 && fixed)) return StabilityClass::SemiStableNotStable;
    return StabilityClass::Stable;
}

}  // namespace detail

/// GIT class of a point [a : b] of P^{2d+1} over a field R.
///
/// Cancels G = gcd(F_a, F_b) to get ψ = [G_a : G_b], then weighs each common
/// root by its order in G and by whether ψ fixes it. Roots are never
/// constructed: a squarefree part s of G stands for all its conjugate roots,
/// which share the same order, and "ψ fixes them" is s | X·G_b − Y·G_a.
template <class R>
StabilityResult classify(const Model<R>& point) {
    if (point.is_zero_model()) throw arith_error("stability of the zero point");
    const std::size_t d = point.d;
    BinaryForm<R> Fa = point.form_a(), Fb = point.form_b();
    StabilityResult out;
    BinaryForm<R> G = form_gcd(Fa, Fb);
    out.common_factor = G.degree() == 0 ? "1" : G.to_string();
    if (G.degree() == 0) {
        out.canceled_map = "[" + Fa.to_string() + " : " + Fb.to_string() + "]";
        return out;
    }
    BinaryForm<R> Ga = form_exact_div(Fa, G), Gb = form_exact_div(Fb, G);
    out.canceled_map = "[" + Ga.to_string() + " : " + Gb.to_string() + "]";

    // Fix(X, Y) = X·G_b − Y·G_a, a form of degree d − D + 1
    const R zero = zero_like(point.proto()), one = one_like(point.proto());
    BinaryForm<R> fix = BinaryForm<R>::linear(one, zero) * Gb - BinaryForm<R>::linear(zero, one) * Ga;
    const bool identity = fix.is_zero();
    Poly<R> fix_dehom = fix.dehomogenize();

    out.cls = StabilityClass::Stable;
    auto consider = [&](const std::string& name, unsigned order, bool fixed) {
        StabilityClass c = detail::root_class(d, order, fixed);
        const int sc = detail::severity(c), sw = detail::severity(out.cls);
        if (!out.witness || sc > sw || (sc == sw && order > out.witness->multiplicity)) {
            out.witness = StabilityWitness{name, order, fixed};
            out.cls = c;
        }
    };

    const std::size_t e_inf = G.infinity_multiplicity();
    if (e_inf > 0) consider("inf", static_cast<unsigned>(e_inf), identity || detail::elem_is_zero(Gb.coeff(0)));
    Poly<R> g = G.dehomogenize();
    if (g.degree() > 0)
        for (const auto& [s, m] : squarefree_decomposition(g)) {
            // roots of one squarefree part share their order but not necessarily
            // the fixed-point property; gcd with Fix separates the two kinds
            Poly<R> fixed_part = identity ? s : poly_gcd(s, fix_dehom);
            if (fixed_part.degree() > 0) consider(fixed_part.to_string("x"), m, true);
            if (fixed_part.degree() < s.degree()) consider(s.exact_div(fixed_part).to_string("x"), m, false);
        }
    return out;
}

template <class R>
StabilityResult classify(const ReducedPoint<R>& point) {
    return classify(point.as_model());
}

template <class K>
struct SemistabilityReport {
    bool semistable = true;
    std::vector<std::pair<Place, StabilityResult>> places;  // singular support only, canonical order
};

/// Semi-stable presentation test: the reduction at every place of the
/// singular support avoids the unstable locus.
template <class K>
SemistabilityReport<K> is_semistable_presentation(const Presentation<K>& phi) {
    SemistabilityReport<K> rep;
    for (const auto& p : resultant_divisor(phi).support()) {
        StabilityResult r = classify(reduce_presentation(phi, p));
        if (!is_semistable(r.cls)) rep.semistable = false;
        rep.places.emplace_back(p, std::move(r));
    }
    return rep;
}

namespace detail {

inline Divisor pole_divisor(const Rational& x) {
    Divisor out;
    if (x.is_zero()) return out;
    const Divisor div = principal_divisor(x);
    for (const auto& [p, m] : div.terms())
        if (m < 0) out.add(p, -m);
    return out;
}
inline Divisor pole_divisor(const RatFunc& x) {
    Divisor out;
    if (x.is_zero()) return out;
    const Divisor div = principal_divisor(x);
    for (const auto& [p, m] : div.terms())
        if (m < 0) out.add(p, -m);
    return out;
}

/// Is there a place where both x and y have positive valuation?
inline bool common_zero(const Rational& x, const Rational& y) {
    if (x.is_zero() && y.is_zero()) return true;
    if (x.is_zero()) return y.num() != 1 && y.num() != -1;
    if (y.is_zero()) return x.num() != 1 && x.num() != -1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), x.num().get_mpz_t(), y.num().get_mpz_t());
    return g != 1;
}
inline bool common_zero(const RatFunc& x, const RatFunc& y) {
    if (x.is_zero() && y.is_zero()) return true;
    // a nonzero element of Q(t) always has a zero somewhere unless it is constant
    if (x.is_zero()) return !y.is_constant();
    if (y.is_zero()) return !x.is_constant();
    if (poly_gcd(x.num(), y.num()).degree() > 0) return true;
    return valuation(x, Place::infinity()) > 0 && valuation(y, Place::infinity()) > 0;
}

}  // namespace detail

/// Semi-stability of the normal form [1, λ1, 0, 0, λ2, 1] read off λ1, λ2:
/// equal pole divisors, and no place where both reduce to 1.
template <class K>
bool normal_form_semistable(const K& l1, const K& l2) {
    if (detail::elem_is_zero(one_like(l1) - l1 * l2)) throw degenerate_error("1 - l1*l2 = 0: the normal form is degenerate");
    if (!(detail::pole_divisor(l1) == detail::pole_divisor(l2))) return false;
    return !detail::common_zero(l1 - one_like(l1), l2 - one_like(l2));
}

}  // namespace arithdyn
