#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/dynsys/reduction.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/minimality/multiplier.hpp"
#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

namespace arithdyn {

/// ∂F_a/∂X·∂F_b/∂Y − ∂F_a/∂Y·∂F_b/∂X, a form of degree 2d − 2 vanishing on
/// the critical points.
template <class F>
BinaryForm<F> wronskian(const Model<F>& m) {
    BinaryForm<F> a = m.form_a(), b = m.form_b();
    return a.partial_x() * b.partial_y() - a.partial_y() * b.partial_x();
}

template <class F>
F binary_form_discriminant(const BinaryForm<F>& f) {
    return form_discriminant(f);
}

/// Product of the distinct linear factors of f over the algebraic closure,
/// with [1:0] included when it is a root. Monic after dehomogenizing.
template <class F>
BinaryForm<F> form_squarefree_part(const BinaryForm<F>& f) {
    if (f.is_zero()) throw arith_error("squarefree part of the zero form");
    Poly<F> g = f.dehomogenize();
    const bool at_inf = f.infinity_multiplicity() > 0;
    Poly<F> s = g.degree() > 0 ? squarefree_part(g) : Poly<F>::constant(one_like(f.proto()));
    return BinaryForm<F>::from_dehomogenized(s, static_cast<std::size_t>(s.degree()) + (at_inf ? 1 : 0));
}

/// Resultant eliminating (X, Y) from w = 0 and Z·F_b − T·F_a = 0; a form in
/// (Z, T) of degree deg w whose roots are the images of the roots of w.
template <class F>
BinaryForm<F> pushforward_form(const BinaryForm<F>& w, const Model<F>& m) {
    const std::size_t k = w.degree();
    const F& proto = m.proto();
    BinaryForm<F> Fa = m.form_a(), Fb = m.form_b();
    // homogeneous of degree k in (Z, T): sample T = 1 at k + 1 values of Z
    std::vector<F> zs, vals;
    for (std::size_t j = 0; j <= k; ++j) {
        F z = from_integer(Integer(static_cast<unsigned long>(j)), proto);
        zs.push_back(z);
        vals.push_back(form_resultant(w, z * Fb - Fa));
    }
    Poly<F> r = detail::interpolate(zs, vals);
    if (r.is_zero()) throw degenerate_error("pushforward elimination vanished: w shares a root with both forms");
    return BinaryForm<F>::from_dehomogenized(r, k);
}

/// [α : β] over K.
template <class K>
struct ProjPoint {
    K alpha, beta;
};

/// A point of P¹ over a residue field, stored as [x : 1] or [1 : 0].
template <class R>
struct ResiduePoint {
    bool infinite = false;
    std::optional<R> x;

    friend bool operator==(const ResiduePoint& u, const ResiduePoint& v) {
        if (u.infinite || v.infinite) return u.infinite == v.infinite;
        return *u.x == *v.x;
    }
    std::string to_string() const { return infinite ? "[1 : 0]" : "[" + x->to_string() + " : 1]"; }
};

/// r_p(P): p-normalize the coordinates, then take residues.
template <class K>
ResiduePoint<ResidueOf<K>> reduce_point(const ProjPoint<K>& P, const Place& p) {
    const bool za = detail::elem_is_zero(P.alpha), zb = detail::elem_is_zero(P.beta);
    if (za && zb) throw arith_error("projective point with both coordinates zero");
    const long va = za ? kInfiniteValuation : valuation(P.alpha, p);
    const long vb = zb ? kInfiniteValuation : valuation(P.beta, p);
    const long v = std::min(va, vb);
    ResidueMap<K> r(p);
    const K s = uniformizer_power(za ? P.beta : P.alpha, p, -v);
    auto ra = r(P.alpha * s);
    auto rb = r(P.beta * s);
    if (detail::elem_is_zero(rb)) return {true, std::nullopt};
    return {false, ra / rb};
}

namespace detail {

inline std::vector<Place> candidate_places(const Rational& x) {
    std::vector<Place> out;
    if (x.num() == 1 || x.num() == -1) return out;
    for (const auto& [p, e] : factor_integer(x.num())) out.push_back(Place::prime(p));
    return out;
}

inline std::vector<Place> candidate_places(const RatFunc& x) {
    std::vector<Place> out;
    if (x.num().degree() > 0)
        for (const auto& [g, m] : factor_q(x.num())) out.push_back(Place::finite(g, true));
    out.push_back(Place::infinity());
    return out;
}

}  // namespace detail

/// Σ v_p(Disc f_p)[p] where f_p is f rescaled to unit content at p, i.e. the
/// places where two roots of f collide under reduction.
template <class K>
Divisor discriminant_divisor(const BinaryForm<K>& f) {
    const std::size_t m = f.degree();
    BinaryForm<K> g(canonical_coords(f.coeffs()), f.proto());
    const K disc = form_discriminant(g);
    if (detail::elem_is_zero(disc)) throw arith_error("discriminant of a form with a repeated root");
    Divisor out;
    for (const Place& p : detail::candidate_places(disc)) {
        long n = kInfiniteValuation;
        for (const auto& c : g.coeffs())
            if (!detail::elem_is_zero(c)) n = std::min(n, valuation(c, p));
        out.add(p, valuation(disc, p) - (2 * static_cast<long>(m) - 2) * n);
    }
    return out;
}

enum class CriticalCondition { Points = 1, Values = 2, Both = 3 };

inline const char* to_string(CriticalCondition c) {
    switch (c) {
        case CriticalCondition::Points: return "critical points collide";
        case CriticalCondition::Values: return "critical values collide";
        case CriticalCondition::Both: return "both";
    }
    return "";
}

template <class K>
struct CriticalConductorReport {
    Divisor conductor;
    std::vector<std::pair<Place, CriticalCondition>> attribution;
    BinaryForm<K> critical_form;  // squarefree part of the Wronskian, canonical scaling
    BinaryForm<K> value_form;     // squarefree part of its pushforward
    std::optional<Divisor> points_discriminant;  // absent when fewer than 2 critical points
    std::optional<Divisor> values_discriminant;  // absent when fewer than 2 critical values
    std::string frame = "coordinates of the given presentation";
};

/// Places where distinct critical points, or distinct critical values, meet
/// under reduction. Depends on the coordinates of Φ.
template <class K>
CriticalConductorReport<K> critical_conductor(const Presentation<K>& phi) {
    const Model<K>& m = phi.model();
    CriticalConductorReport<K> rep;
    BinaryForm<K> W = wronskian(m);
    if (W.is_zero()) throw invariant_error("Wronskian vanishes identically for a map of degree at least 1");
    BinaryForm<K> w = form_squarefree_part(W);
    rep.critical_form = BinaryForm<K>(canonical_coords(w.coeffs()), w.proto());
    BinaryForm<K> v = form_squarefree_part(pushforward_form(w, m));
    rep.value_form = BinaryForm<K>(canonical_coords(v.coeffs()), v.proto());

    if (w.degree() >= 2) rep.points_discriminant = discriminant_divisor(w);
    if (v.degree() >= 2) rep.values_discriminant = discriminant_divisor(v);

    std::map<Place, int> flags;
    if (rep.points_discriminant)
        for (const auto& [p, e] : rep.points_discriminant->terms())
            if (e > 0) flags[p] |= 1;
    if (rep.values_discriminant)
        for (const auto& [p, e] : rep.values_discriminant->terms())
            if (e > 0) flags[p] |= 2;
    for (const auto& [p, f] : flags) {
        rep.conductor.add(p, 1);
        rep.attribution.emplace_back(p, static_cast<CriticalCondition>(f));
    }
    return rep;
}

}  // namespace arithdyn
