#pragma once

// Small helpers shared by the unit tests: literal models, random models and
// matrices, projective comparison.

#include <functional>
#include <string>
#include <vector>

#include "arithdyn/algebra/parse.hpp"
#include "arithdyn/dynsys/families.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "support/oracles.hpp"

namespace testutil {

using namespace arithdyn;

inline Model<RatFunc> rf_model(std::size_t d, const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<RatFunc> av, bv;
    for (const auto& s : a) av.push_back(parse_ratfunc(s));
    for (const auto& s : b) bv.push_back(parse_ratfunc(s));
    return Model<RatFunc>(d, av, bv);
}

inline Model<Rational> q_model(std::size_t d, const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<Rational> av, bv;
    for (long v : a) av.emplace_back(v);
    for (long v : b) bv.emplace_back(v);
    return Model<Rational>(d, av, bv);
}

/// x and y proportional (same point of projective space).
template <class F>
bool projectively_equal(const std::vector<F>& x, const std::vector<F>& y) {
    if (x.size() != y.size()) return false;
    std::size_t k = 0;
    while (k < x.size() && detail::elem_is_zero(x[k])) ++k;
    if (k == x.size()) return false;
    if (detail::elem_is_zero(y[k])) return false;
    F s = y[k] / x[k];
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] * s == y[i])) return false;
    return true;
}

inline Model<Rational> random_q_model(oracle::Gen& g, std::size_t d, long h) {
    for (;;) {
        std::vector<Rational> a, b;
        for (std::size_t i = 0; i <= d; ++i) {
            a.push_back(g.rational(h));
            b.push_back(g.rational(h));
        }
        Model<Rational> m;
        m.d = d;
        m.a = a;
        m.b = b;
        if (!m.is_zero_model()) return m;
    }
}

inline Model<RatFunc> random_rf_model(oracle::Gen& g, std::size_t d, long deg, long h) {
    for (;;) {
        std::vector<RatFunc> a, b;
        for (std::size_t i = 0; i <= d; ++i) {
            a.push_back(g.poly_ratfunc(deg, h));
            b.push_back(g.poly_ratfunc(deg, h));
        }
        Model<RatFunc> m;
        m.d = d;
        m.a = a;
        m.b = b;
        if (!m.is_zero_model()) return m;
    }
}

template <class K>
Matrix2<K> random_matrix(oracle::Gen&, const std::function<K()>& entry) {
    for (;;) {
        Matrix2<K> m{entry(), entry(), entry(), entry()};
        if (!detail::elem_is_zero(m.det())) return m;
    }
}

/// Degree-2 map over Q(t) whose reduction at t is singular but stable:
/// λ1 = a + t^k·u, λ2 = 1/a + t^k·v (a ≠ 0, 1), conjugated by a random
/// constant matrix so the normal form is hidden.
inline Model<RatFunc> semistable_singular_rf(oracle::Gen& g, long kmax = 3) {
    for (;;) {
        Rational a = g.nonzero_rational(5);
        if (a.is_one()) continue;
        const long k = g.integer(1, kmax);
        RatFunc tk = RatFunc::t().pow(k);
        RatFunc l1 = RatFunc(a) + tk * g.poly_ratfunc(2, 4);
        RatFunc l2 = RatFunc(a.inverse()) + tk * g.poly_ratfunc(2, 4);
        if ((RatFunc(1L) - l1 * l2).is_zero()) continue;
        auto gamma = random_matrix<RatFunc>(g, [&] { return RatFunc(Rational(g.integer(-3, 3))); });
        return conjugate(normal_form(l1, l2), gamma);
    }
}

}  // namespace testutil
