#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/valuation.hpp"
#include "arithdyn/stability.hpp"

namespace arithdyn {

/// y² = x³ + Ax + B with 4A³ + 27B² ≠ 0.
template <class K>
struct EllipticCurve {
    K A, B;

    EllipticCurve(K a, K b) : A(std::move(a)), B(std::move(b)) {
        if (detail::elem_is_zero(discriminant()))
            throw validation_error("singular curve: 4A^3 + 27B^2 = 0 for A = " + A.to_string() + ", B = " + B.to_string());
    }
    K discriminant() const { return cubic_discriminant(A, B); }
    static K cubic_discriminant(const K& A, const K& B) {
        return from_integer(Integer(4), A) * A * A * A + from_integer(Integer(27), A) * B * B;
    }
    /// x³ + Ax + B
    Poly<K> cubic() const { return weierstrass_cubic(A, B); }
    static Poly<K> weierstrass_cubic(const K& A, const K& B) {
        const K z = zero_like(A), o = one_like(A);
        return Poly<K>(std::vector<K>{B, A, z, o}, A);
    }
};

/// even + y·odd in K[x, y]/(y² − P(x)).
template <class K>
struct CurvePoly {
    Poly<K> even, odd;

    bool operator==(const CurvePoly& o) const { return even == o.even && odd == o.odd; }
    /// The square as an x-polynomial (only for pure parts, where no y survives).
    Poly<K> square_in_x(const Poly<K>& P) const {
        if (!odd.is_zero() && !even.is_zero()) throw arith_error("square of a mixed curve polynomial has a y term");
        return odd.is_zero() ? even * even : P * odd * odd;
    }
};

template <class K>
CurvePoly<K> curve_mul(const CurvePoly<K>& u, const CurvePoly<K>& v, const Poly<K>& P) {
    return {u.even * v.even + P * u.odd * v.odd, u.even * v.odd + u.odd * v.even};
}

namespace detail {

/// x-parts f_n with Ψ_n = f_n for odd n and Ψ_n = y·f_n for even n, n = 0..nmax.
template <class K>
std::vector<Poly<K>> division_parts(const K& A, const K& B, std::size_t nmax) {
    const K z = zero_like(A);
    auto k = [&](long v) { return from_integer(Integer(v), A); };
    auto P = EllipticCurve<K>::weierstrass_cubic(A, B);
    auto P2 = P * P;
    std::vector<Poly<K>> f;
    f.push_back(Poly<K>::zero(A));
    f.push_back(Poly<K>::constant(one_like(A)));
    f.push_back(Poly<K>::constant(k(2)));
    f.push_back(Poly<K>(std::vector<K>{-A * A, k(12) * B, k(6) * A, z, k(3)}, A));
    f.push_back(Poly<K>::constant(k(4)) *
                Poly<K>(std::vector<K>{-k(8) * B * B - A * A * A, -k(4) * A * B, -k(5) * A * A, k(20) * B, k(5) * A, z,
                                       one_like(A)},
                        A));
    const Poly<K> half = Poly<K>::constant(one_like(A) / k(2));
    for (std::size_t n = 5; n <= nmax; ++n) {
        const std::size_t m = n / 2;
        if (n % 2 == 1) {
            if (m % 2 == 0)
                f.push_back(P2 * f[m + 2] * f[m].pow(3) - f[m - 1] * f[m + 1].pow(3));
            else
                f.push_back(f[m + 2] * f[m].pow(3) - P2 * f[m - 1] * f[m + 1].pow(3));
        } else {
            // Ψ_m/2y times a bracket that carries y (m even) or y² (m odd):
            // either way the y cancels against 2y and one factor y remains
            f.push_back(half * f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]));
        }
    }
    f.resize(nmax + 1);
    return f;
}

}  // namespace detail

/// Ψ_1..Ψ_n (index i−1 holds Ψ_i), for any A, B including singular cubics.
template <class K>
std::vector<CurvePoly<K>> division_polynomials(const K& A, const K& B, std::size_t n) {
    if (n < 1) throw arith_error("division polynomials start at n = 1");
    auto f = detail::division_parts(A, B, std::max<std::size_t>(n, 4));
    std::vector<CurvePoly<K>> out;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i % 2 == 1) out.push_back({f[i], Poly<K>::zero(A)});
        else out.push_back({Poly<K>::zero(A), f[i]});
    }
    return out;
}

template <class K>
std::vector<CurvePoly<K>> division_polynomials(const EllipticCurve<K>& E, std::size_t n) {
    return division_polynomials(E.A, E.B, n);
}

/// Numerator and denominator of x([n]P) as x-polynomials:
/// (xΨ_n² − Ψ_{n+1}Ψ_{n−1}) / Ψ_n² after substituting y² = P(x).
template <class K>
std::pair<Poly<K>, Poly<K>> lattes_fraction(const K& A, const K& B, std::size_t n) {
    if (n < 2) throw arith_error("Lattes maps need n >= 2");
    auto f = detail::division_parts(A, B, std::max<std::size_t>(n + 1, 4));
    auto P = EllipticCurve<K>::weierstrass_cubic(A, B);
    const Poly<K> x = Poly<K>::x(A);
    if (n % 2 == 0) return {x * P * f[n] * f[n] - f[n + 1] * f[n - 1], P * f[n] * f[n]};
    return {x * f[n] * f[n] - P * f[n + 1] * f[n - 1], f[n] * f[n]};
}

/// Degree-n² model (F_a, F_b) = Y^{n²}·(num, den)(X/Y), not rescaled.
template <class K>
Model<K> lattes_model_raw(const K& A, const K& B, std::size_t n) {
    auto [num, den] = lattes_fraction(A, B, n);
    const std::size_t d = n * n;
    if (num.degree() > static_cast<long>(d) || den.degree() > static_cast<long>(d))
        throw invariant_error("Lattes numerator or denominator exceeds degree n^2");
    Model<K> m;
    m.d = d;
    for (std::size_t i = 0; i <= d; ++i) {
        m.a.push_back(num.coeff(d - i));
        m.b.push_back(den.coeff(d - i));
    }
    return m;
}

template <class K>
Model<K> lattes_model(const EllipticCurve<K>& E, std::size_t n) {
    return lattes_model_raw(E.A, E.B, n);
}

template <class K>
Presentation<K> lattes_map(const EllipticCurve<K>& E, std::size_t n) {
    return Presentation<K>(lattes_model(E, n));
}

struct NodalRow {
    std::size_t n = 0;
    std::size_t degree = 0;    // n²
    long two_v_psi = 0;        // 2v(ψ_n): order of (x − λ) in Ψ_n² as an x-polynomial
    long v_numerator = 0;      // order in xΨ_n² − Ψ_{n+1}Ψ_{n−1}
    long M = 0;                // min of the two orders
    long bound = 0;            // r+1 (n even) or r+2 (n odd) for d = n²
    std::optional<StabilityClass> cls;
    std::optional<StabilityResult> stability;
};

struct NodalReport {
    Rational lambda;
    Rational A, B;
    std::vector<Poly<Rational>> psi;  // x-parts f_1..f_{n_max+1}
    std::vector<NodalRow> rows;       // n = 2..n_max
};

namespace detail {

inline long root_order(const Poly<Rational>& f, const Rational& r) {
    if (f.is_zero()) return kInfiniteValuation;
    const Poly<Rational> lin({-r, Rational(1)});
    long v = 0;
    Poly<Rational> g = f;
    while (g.divisible_by(lin)) {
        g = g.exact_div(lin);
        ++v;
    }
    return v;
}

}  // namespace detail

/// Cubic (x − λ)²(x + 2λ): A = −3λ², B = 2λ³. Tabulates orders of x − λ in the
/// Lattès data for 2 ≤ n ≤ n_max and classifies the specialized map for
/// n ≤ n_classify.
inline NodalReport nodal_analysis(const Rational& lambda, std::size_t n_max = 9, std::size_t n_classify = 4) {
    if (lambda.is_zero()) throw validation_error("lambda = 0 gives a cusp, not a node");
    if (n_max < 2) throw validation_error("n_max must be at least 2");
    NodalReport rep{lambda, Rational(-3) * lambda * lambda, Rational(2) * lambda * lambda * lambda, {}, {}};
    auto f = detail::division_parts(rep.A, rep.B, n_max + 1);
    rep.psi.assign(f.begin() + 1, f.end());
    for (std::size_t n = 2; n <= n_max; ++n) {
        NodalRow row;
        row.n = n;
        row.degree = n * n;
        auto [num, den] = lattes_fraction(rep.A, rep.B, n);
        row.two_v_psi = detail::root_order(den, lambda);
        row.v_numerator = detail::root_order(num, lambda);
        row.M = std::min(row.two_v_psi, row.v_numerator);
        const long r = static_cast<long>(row.degree / 2);
        row.bound = n % 2 == 0 ? r + 1 : r + 2;
        if (n <= n_classify) {
            StabilityResult s = classify(lattes_model_raw(rep.A, rep.B, n));
            row.cls = s.cls;
            row.stability = s;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace arithdyn
