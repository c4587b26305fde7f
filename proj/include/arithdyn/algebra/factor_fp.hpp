#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "arithdyn/algebra/fp.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

using FpPoly = Poly<FpElem>;
using Factorization = std::vector<std::pair<FpPoly, unsigned>>;

inline FpPoly fp_poly(const std::vector<long>& coeffs, std::uint64_t p) {
    std::vector<FpElem> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(FpElem::from_integer(Integer(c), p));
    return FpPoly(std::move(v), FpElem(0, p));
}

namespace detail {

inline FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

/// base^e mod m for an arbitrary-size exponent.
inline FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) {
    FpPoly acc = FpPoly::constant(base.one_elem()) % m;
    base = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = mulmod(acc, acc, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulmod(acc, base, m);
    }
    return acc;
}

inline bool poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coeff(i).value() != b.coeff(i).value()) return a.coeff(i).value() < b.coeff(i).value();
    return false;
}

/// Splits a monic squarefree f into (product of all degree-d factors) for each d.
inline std::vector<std::pair<FpPoly, unsigned>> distinct_degree(FpPoly f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    const Integer p = characteristic(f.proto());
    const FpPoly x = FpPoly::x(f.proto());
    FpPoly h = x;  // x^{p^d} mod f
    for (unsigned d = 1; 2 * static_cast<long>(d) <= f.degree(); ++d) {
        h = powmod(h, p, f);
        FpPoly g = poly_gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f.exact_div(g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Cantor–Zassenhaus splitting of a product of degree-d irreducibles.
inline void equal_degree(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == static_cast<long>(d)) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t p = f.proto().modulus();
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    for (;;) {
        std::vector<FpElem> rc;
        for (long i = 0; i < f.degree(); ++i) rc.emplace_back(coin(rng), p);
        FpPoly a(std::move(rc), f.proto());
        if (a.degree() < 1) continue;
        FpPoly b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^{2^{kd-1}} with kd = d
            FpPoly t = a % f, acc = t;
            for (unsigned i = 1; i < d; ++i) {
                t = mulmod(t, t, f);
                acc += t;
            }
            b = acc;
        } else {
            b = powmod(a, (q - 1) / 2, f) - FpPoly::constant(f.one_elem());
        }
        FpPoly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.exact_div(g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete factorization over F_p into monic irreducibles with multiplicity.
///
/// Output is sorted by (degree, coefficients from the constant term up).
/// The random splitting is driven by mt19937_64(seed), so results, including
/// the order in which factors are discovered, are reproducible.
inline Factorization factor_fp(const FpPoly& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw arith_error("factor_fp of zero polynomial");
    std::mt19937_64 rng(seed);
    Factorization out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<FpPoly> pieces;
            detail::equal_degree(block, d, rng, pieces);
            for (auto& g : pieces) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return detail::poly_less(a.first, b.first);
    });
    return out;
}

/// Roots in F_p of f (each listed once), ascending.
inline std::vector<FpElem> roots_fp(const FpPoly& f, std::uint64_t seed = 0) {
    std::vector<FpElem> r;
    for (const auto& [g, m] : factor_fp(f, seed))
        if (g.degree() == 1) r.push_back(-g.coeff(0));
    std::sort(r.begin(), r.end(), [](const FpElem& a, const FpElem& b) { return a.value() < b.value(); });
    return r;
}

}  // namespace arithdyn
