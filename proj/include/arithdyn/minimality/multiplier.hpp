#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arithdyn/algebra/matrix.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

/// Fixed-point multiplier data of a degree-d map.
template <class F>
struct MultiplierData {
    Poly<F> M;             // monic, degree d+1, roots are the multipliers
    std::vector<F> sigma;  // sigma[0] = σ1, ..., sigma[d] = σ_{d+1}
    Matrix2<F> conjugator; // moved ∞ off the fixed points before elimination

    const F& sigma_i(std::size_t i) const {
        if (i < 1 || i > sigma.size()) throw arith_error("multiplier symmetric function index out of range");
        return sigma[i - 1];
    }
};

namespace detail {

/// [[1,0],[0,1]], [[1,1],[0,1]], [[1,0],[1,1]], [[0,1],[-1,0]], then
/// [[1,0],[k,1]] for k = 2, 3, ... (these send ∞ to [1 : k]).
template <class F>
Matrix2<F> multiplier_conjugator(std::size_t idx, const F& like) {
    const F z = zero_like(like), o = one_like(like);
    switch (idx) {
        case 0: return {o, z, z, o};
        case 1: return {o, o, z, o};
        case 2: return {o, z, o, o};
        case 3: return {z, o, -o, z};
        default: return {o, z, from_integer(Integer(static_cast<long>(idx) - 2), like), o};
    }
}

/// Value at 0 of the polynomial through (x_j, y_j).
template <class F>
F interpolate_at_zero(const std::vector<F>& xs, const std::vector<F>& ys) {
    F acc = zero_like(ys.front());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        F term = ys[j];
        for (std::size_t k = 0; k < xs.size(); ++k)
            if (k != j) term = term * xs[k] / (xs[k] - xs[j]);
        acc = acc + term;
    }
    return acc;
}

template <class F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
    const F& proto = ys.front();
    Poly<F> acc(zero_like(proto));
    for (std::size_t j = 0; j < xs.size(); ++j) {
        Poly<F> basis = Poly<F>::constant(one_like(proto));
        F denom = one_like(proto);
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (k == j) continue;
            basis = basis * Poly<F>(std::vector<F>{-xs[k], one_like(proto)}, proto);
            denom = denom * (xs[j] - xs[k]);
        }
        acc = acc + basis * Poly<F>::constant(ys[j] / denom);
    }
    return acc;
}

}  // namespace detail

/// M(z) = ∏ (z − λ_i) over the d+1 fixed points, with multiplicity.
///
/// After a conjugation that keeps ∞ from being fixed (b0 ≠ 0), the fixed
/// points are the roots of h = f − x·g, and the multiplier at a root x0 is
/// w(x0)/g(x0)² with w = f′g − fg′. So Res_x(h, z·g² − w) is M(z) up to a
/// nonzero constant. It is sampled at z = 0..d+1 and interpolated.
template <class F>
MultiplierData<F> multiplier_polynomial(const Model<F>& m) {
    if (m.d < 2) throw arith_error("multiplier polynomial needs degree at least 2");
    if (detail::elem_is_zero(sylvester_resultant(m)))
        throw degenerate_error("resultant vanishes: no multiplier data for a degenerate map");
    const F& proto = m.proto();
    const long d = static_cast<long>(m.d);
    const Integer ch = characteristic(proto);
    if (ch != 0 && ch <= d + 1) throw arith_error("multiplier polynomial needs characteristic 0 or above d+1");

    Model<F> c;
    Matrix2<F> used;
    for (std::size_t idx = 0;; ++idx) {
        if (idx > m.d + 8) throw invariant_error("no conjugator moved infinity off the fixed points");
        used = detail::multiplier_conjugator(idx, proto);
        c = conjugate(m, used);
        if (!detail::elem_is_zero(c.b[0])) break;
    }

    std::vector<F> fa(c.a.rbegin(), c.a.rend()), fb(c.b.rbegin(), c.b.rend());
    Poly<F> f(fa, proto), g(fb, proto);
    Poly<F> h = f - Poly<F>::x(proto) * g;
    Poly<F> g2 = g * g;
    Poly<F> w = f.derivative() * g - f * g.derivative();

    std::vector<F> zs, vals;
    for (long j = 0; j <= d + 1; ++j) {
        F z = from_integer(Integer(j), proto);
        Poly<F> q = Poly<F>::constant(z) * g2 - w;
        zs.push_back(z);
        vals.push_back(poly_resultant_formal(h, d + 1, q, 2 * d,
                                             [](DenseMatrix<F> M) { return bareiss_determinant(std::move(M)); }));
    }
    Poly<F> R = detail::interpolate(zs, vals);
    if (R.degree() != d + 1) throw invariant_error("multiplier resultant has the wrong degree in z");

    MultiplierData<F> out{R.monic(), {}, used};
    F sign = one_like(proto);
    for (long i = 1; i <= d + 1; ++i) {
        sign = -sign;
        out.sigma.push_back(sign * out.M.coeff(static_cast<std::size_t>(d + 1 - i)));
    }
    return out;
}

template <class K>
MultiplierData<K> multiplier_polynomial(const Presentation<K>& phi) {
    return multiplier_polynomial(phi.model());
}

/// ρ·σ1 for d = 2 as an explicit quartic in the coefficients.
template <class F>
F sigma1_numerator(const Model<F>& m) {
    if (m.d != 2) throw arith_error("sigma1_numerator is defined for degree-2 models only");
    const F &a0 = m.a[0], &a1 = m.a[1], &a2 = m.a[2];
    const F &b0 = m.b[0], &b1 = m.b[1], &b2 = m.b[2];
    auto k = [&](long v) { return from_integer(Integer(v), a0); };
    return a1 * a1 * a1 * b0 - k(4) * a0 * a1 * a2 * b0 - k(6) * a2 * a2 * b0 * b0 - a0 * a1 * a1 * b1 +
           k(4) * a1 * a2 * b0 * b1 - k(2) * a0 * a2 * b1 * b1 + a2 * b1 * b1 * b1 - k(2) * a1 * a1 * b0 * b2 +
           k(4) * a0 * a2 * b0 * b2 - k(4) * a2 * b0 * b1 * b2 - a1 * b1 * b1 * b2 + k(2) * a0 * a0 * b2 * b2 +
           k(4) * a1 * b0 * b2 * b2 + k(4) * a0 * a0 * a2 * b1;
}

/// ρ^power·σ_i at a degree-2 point, including points with ρ = 0.
///
/// The product is a form of degree 4·power in the six coordinates, so its
/// value at m is recovered by interpolating along the line m + ε·(X², Y²)
/// through 4·power + 1 nondegenerate samples.
template <class F>
F multiplier_numerator(const Model<F>& m, std::size_t i, long power) {
    if (m.d != 2) throw arith_error("multiplier numerators are implemented for degree 2 only");
    if (i < 1 || i > 3 || power < 1) throw arith_error("multiplier numerator index out of range");
    const F& proto = m.proto();
    const long deg = 4 * power;
    const Integer ch = characteristic(proto);
    std::vector<F> eps, vals;
    for (long k = 1; static_cast<long>(eps.size()) <= deg; ++k) {
        if (k > 64 + deg || (ch != 0 && ch <= k)) throw invariant_error("too many degenerate samples on the interpolation line");
        F e = from_integer(Integer(k), proto);
        Model<F> s = m;
        s.a[0] = s.a[0] + e;
        s.b[2] = s.b[2] + e;
        F rho = sylvester_resultant(s);
        if (detail::elem_is_zero(rho)) continue;
        F v = multiplier_polynomial(s).sigma_i(i);
        for (long j = 0; j < power; ++j) v = v * rho;
        eps.push_back(e);
        vals.push_back(v);
    }
    return detail::interpolate_at_zero(eps, vals);
}

}  // namespace arithdyn
