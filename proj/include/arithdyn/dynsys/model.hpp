#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/matrix.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"

namespace arithdyn {

/// Coefficient pair (a, b) of two degree-d forms F_a = Σ a_i X^{d-i} Y^i,
/// F_b = Σ b_i X^{d-i} Y^i. Works over any field F, including residue fields.
template <class F>
struct Model {
    std::size_t d = 0;
    std::vector<F> a, b;

    Model() = default;
    Model(std::size_t degree, std::vector<F> av, std::vector<F> bv) : d(degree), a(std::move(av)), b(std::move(bv)) {
        if (d < 1) throw validation_error("model degree must be at least 1");
        if (a.size() != d + 1 || b.size() != d + 1)
            throw validation_error("model of degree " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                                   " coefficients per form");
        if (is_zero_model()) throw validation_error("all model coefficients are zero");
    }

    const F& proto() const { return a.front(); }
    BinaryForm<F> form_a() const { return BinaryForm<F>(a, a.front()); }
    BinaryForm<F> form_b() const { return BinaryForm<F>(b, a.front()); }

    /// a_0..a_d, b_0..b_d as one list of 2d+2 coordinates.
    std::vector<F> coords() const {
        std::vector<F> c = a;
        c.insert(c.end(), b.begin(), b.end());
        return c;
    }

    bool is_zero_model() const {
        for (const auto& v : a)
            if (!detail::elem_is_zero(v)) return false;
        for (const auto& v : b)
            if (!detail::elem_is_zero(v)) return false;
        return true;
    }

    Model scaled(const F& c) const {
        Model m = *this;
        for (auto& v : m.a) v = v * c;
        for (auto& v : m.b) v = v * c;
        return m;
    }

    friend bool operator==(const Model& x, const Model& y) { return x.d == y.d && x.a == y.a && x.b == y.b; }
};

/// 2d × 2d Sylvester matrix: d shifted rows of a, then d shifted rows of b.
template <class F>
DenseMatrix<F> sylvester_matrix(const Model<F>& m) {
    const std::size_t d = m.d;
    DenseMatrix<F> M(2 * d, std::vector<F>(2 * d, zero_like(m.proto())));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            M[i][i + j] = m.a[j];
            M[d + i][i + j] = m.b[j];
        }
    return M;
}

/// ρ(a, b): the Sylvester determinant, by Bareiss elimination.
template <class F>
F sylvester_resultant(const Model<F>& m) {
    return bareiss_determinant(sylvester_matrix(m));
}

/// Γ = [[α, β], [γ, δ]].
template <class F>
struct Matrix2 {
    F alpha, beta, gamma, delta;

    F det() const { return alpha * delta - beta * gamma; }
    Matrix2 adjugate() const { return {delta, -beta, -gamma, alpha}; }
    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.alpha * y.alpha + x.beta * y.gamma, x.alpha * y.beta + x.beta * y.delta,
                x.gamma * y.alpha + x.delta * y.gamma, x.gamma * y.beta + x.delta * y.delta};
    }
    Matrix2 scaled(const F& c) const { return {alpha * c, beta * c, gamma * c, delta * c}; }
    static Matrix2 identity(const F& like) { return {one_like(like), zero_like(like), zero_like(like), one_like(like)}; }
    static Matrix2 diag(const F& u, const F& v) { return {u, zero_like(u), zero_like(u), v}; }
    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma && x.delta == y.delta;
    }
};

/// Conjugate coefficient pair (a^Γ, b^Γ).
///
/// With P = F_a(αX+βY, γX+δY) and Q = F_b(αX+βY, γX+δY), the new forms are
/// a^Γ = δP − βQ and b^Γ = −γP + αQ, i.e. Γ^adj applied to the column (P, Q).
/// This is a right action: conjugate(conjugate(m, Γ1), Γ2) = conjugate(m, Γ1·Γ2),
/// and as maps φ^Γ = Γ^{-1} ∘ φ ∘ Γ.
template <class F>
Model<F> conjugate(const Model<F>& m, const Matrix2<F>& g) {
    if (detail::elem_is_zero(g.det())) throw arith_error("conjugation by a singular matrix");
    BinaryForm<F> P = m.form_a().substitute(g.alpha, g.beta, g.gamma, g.delta);
    BinaryForm<F> Q = m.form_b().substitute(g.alpha, g.beta, g.gamma, g.delta);
    BinaryForm<F> A = g.delta * P - g.beta * Q;
    BinaryForm<F> B = g.alpha * Q - g.gamma * P;
    Model<F> r;
    r.d = m.d;
    r.a = A.coeffs();
    r.b = B.coeffs();
    return r;
}

/// n_p(a, b) = min_j v_p(c_j).
template <class K>
long min_valuation(const Model<K>& m, const Place& p) {
    long n = kInfiniteValuation;
    for (const auto& c : m.coords()) n = std::min(n, valuation(c, p));
    return n;
}

/// v_p(Γ): minimum valuation of the entries.
template <class K>
long matrix_valuation(const Matrix2<K>& g, const Place& p) {
    return std::min({valuation(g.alpha, p), valuation(g.beta, p), valuation(g.gamma, p), valuation(g.delta, p)});
}

template <class K>
K uniformizer_power(const K& like, const Place& p, long e) {
    K u = uniformizer(like, p);
    if (e < 0) {
        u = one_like(like) / u;
        e = -e;
    }
    K acc = one_like(like);
    for (long i = 0; i < e; ++i) acc = acc * u;
    return acc;
}

/// Rescales m to a p-model (all coefficients integral, one a unit) and
/// returns it together with the original n_p.
template <class K>
std::pair<Model<K>, long> normalize_p_model(const Model<K>& m, const Place& p) {
    const long n = min_valuation(m, p);
    if (n == 0) return {m, 0};
    return {m.scaled(uniformizer_power(m.proto(), p, -n)), n};
}

/// Γ rescaled so that v_p(Γ) = 0.
template <class K>
Matrix2<K> normalize_p_matrix(const Matrix2<K>& g, const Place& p) {
    const long v = matrix_valuation(g, p);
    if (v == 0) return g;
    return g.scaled(uniformizer_power(g.alpha, p, -v));
}

/// N_{Φ,p} = v_p(ρ) − 2d·n_p for an arbitrary model; throws if ρ = 0.
template <class K>
long n_value_of_model(const Model<K>& m, const Place& p, const K* rho_hint = nullptr) {
    K rho = rho_hint ? *rho_hint : sylvester_resultant(m);
    if (detail::elem_is_zero(rho)) throw degenerate_error("resultant vanishes: the model is not a map of degree " + std::to_string(m.d));
    return valuation(rho, p) - 2 * static_cast<long>(m.d) * min_valuation(m, p);
}

}  // namespace arithdyn
