#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "arithdyn/algebra/factor_fp.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

using QPoly = Poly<Rational>;
using QFactorization = std::vector<std::pair<QPoly, unsigned>>;

/// Total order on rational polynomials: degree, then coefficients from the
/// constant term up. Used wherever places must be listed canonically.
inline bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

/// Scales f to a primitive integer polynomial with positive leading coefficient.
inline std::vector<Integer> primitive_integer_coeffs(const QPoly& f) {
    Integer l = 1, g = 0;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : f.coeffs()) {
        Integer v = c.num() * (l / c.den());
        z.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 0) return z;
    if (f.lead().sign() < 0) g = -g;
    for (auto& v : z) v /= g;
    return z;
}

namespace detail {

using ZPoly = std::vector<Integer>;  // low to high, trimmed

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}
inline ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}
inline ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ztrim(a);
    return a;
}
inline ZPoly zscale(ZPoly a, const Integer& s) {
    for (auto& v : a) v *= s;
    ztrim(a);
    return a;
}
/// Reduce coefficients into the symmetric range (-m/2, m/2].
inline ZPoly zsym(ZPoly a, const Integer& m) {
    const Integer half = m / 2;
    for (auto& v : a) {
        v %= m;
        if (v < 0) v += m;
        if (v > half) v -= m;
    }
    ztrim(a);
    return a;
}
inline FpPoly to_fp(const ZPoly& a, std::uint64_t p) {
    std::vector<FpElem> v;
    for (const auto& c : a) v.push_back(FpElem::from_integer(c, p));
    return FpPoly(std::move(v), FpElem(0, p));
}
inline ZPoly from_fp(const FpPoly& a) {
    ZPoly r;
    for (const auto& c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c.value()));
    ztrim(r);
    return r;
}
inline QPoly to_q(const ZPoly& a) {
    std::vector<Rational> v;
    for (const auto& c : a) v.emplace_back(c);
    return QPoly(std::move(v));
}

/// Lifts monic A, B with T ≡ A·B (mod p) to T ≡ A·B (mod p^k); T monic mod p^k.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& T, ZPoly A, ZPoly B, std::uint64_t p, unsigned k) {
    FpPoly Ap = to_fp(A, p), Bp = to_fp(B, p);
    auto [g, s, t] = poly_xgcd(Ap, Bp);
    if (g.degree() != 0) throw invariant_error("Hensel lifting needs coprime factors");
    Integer pj = static_cast<unsigned long>(p);
    for (unsigned j = 1; j < k; ++j) {
        ZPoly e = zsub(T, zmul(A, B));
        Integer pk = pj * static_cast<unsigned long>(p);
        e = zsym(e, pk);
        for (auto& c : e) {
            if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw invariant_error("Hensel error term not divisible");
            c /= pj;
        }
        FpPoly ep = to_fp(e, p);
        auto [q, alpha] = (ep * t).divmod(Ap);
        FpPoly beta = ep * s + q * Bp;
        // alpha·B + beta·A ≡ e, so alpha corrects A and beta corrects B
        A = zsym(zadd(A, zscale(from_fp(alpha), pj)), pk);
        B = zsym(zadd(B, zscale(from_fp(beta), pj)), pk);
        pj = pk;
    }
    return {A, B};
}

/// Lifts the monic factorization T ≡ ∏ u_i (mod p) to modulus p^k.
inline std::vector<ZPoly> hensel_multi(const ZPoly& T, const std::vector<FpPoly>& us, std::uint64_t p, unsigned k,
                                       const Integer& pk) {
    if (us.size() == 1) return {zsym(T, pk)};
    const std::size_t half = us.size() / 2;
    FpPoly L = FpPoly::constant(FpElem(1, p)), R = L;
    for (std::size_t i = 0; i < half; ++i) L *= us[i];
    for (std::size_t i = half; i < us.size(); ++i) R *= us[i];
    auto [A, B] = hensel_pair(T, from_fp(L), from_fp(R), p, k);
    std::vector<FpPoly> lu(us.begin(), us.begin() + static_cast<long>(half));
    std::vector<FpPoly> ru(us.begin() + static_cast<long>(half), us.end());
    auto lf = hensel_multi(A, lu, p, k, pk);
    auto rf = hensel_multi(B, ru, p, k, pk);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

/// Zassenhaus factorization of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> zassenhaus(ZPoly F) {
    const long n = static_cast<long>(F.size()) - 1;
    if (n <= 1) return {F};

    // choose a good prime: p ∤ lc and F mod p squarefree; keep the one with fewest factors
    std::uint64_t best_p = 0;
    std::vector<FpPoly> best;
    int good = 0;
    for (std::uint64_t p = 3; good < 5 && p < 100000; p = next_prime(Integer(static_cast<unsigned long>(p))).get_ui()) {
        if (mpz_divisible_ui_p(F.back().get_mpz_t(), p)) continue;
        FpPoly fp = to_fp(F, p);
        if (poly_gcd(fp, fp.derivative()).degree() > 0) continue;
        ++good;
        std::vector<FpPoly> fs;
        for (auto& [g, m] : factor_fp(fp)) fs.push_back(g);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best = std::move(fs);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw invariant_error("no suitable prime for Zassenhaus");
    if (best.size() == 1) return {F};
    const std::uint64_t p = best_p;

    // coefficient bound for factors of F, times |lc| for the recombination product
    Integer maxc = 0;
    for (const auto& c : F) maxc = std::max(maxc, Integer(abs(c)));
    Integer bound = maxc * abs(F.back()) * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    Integer pk = static_cast<unsigned long>(p);
    unsigned k = 1;
    while (pk <= 2 * bound) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }

    // monic target T = lc^{-1} F mod p^k
    Integer lcinv;
    mpz_invert(lcinv.get_mpz_t(), F.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly T = zsym(zscale(F, lcinv), pk);
    std::vector<ZPoly> lifted = hensel_multi(T, best, p, k, pk);

    std::vector<ZPoly> found;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZPoly g{F.back()};
            for (std::size_t i : idx) g = zsym(zmul(g, lifted[remaining[i]]), pk);
            QPoly gq = to_q(g);
            std::vector<Integer> gz = primitive_integer_coeffs(gq);
            QPoly gp = to_q(gz), Fq = to_q(F);
            if (gp.degree() > 0) {
                auto [q, r] = Fq.divmod(gp);
                if (r.is_zero()) {
                    found.push_back(gz);
                    F = primitive_integer_coeffs(q);
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0; i < remaining.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
                    remaining = std::move(keep);
                    hit = true;
                    break;
                }
            }
            // next combination of s indices out of remaining.size()
            std::size_t i = s;
            while (i > 0 && idx[i - 1] == remaining.size() - s + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (F.size() > 1) found.push_back(F);
    return found;
}

}  // namespace detail

/// Complete factorization over Q into monic irreducibles with multiplicity.
///
/// Output sorted by qpoly_less, then multiplicity.
inline QFactorization factor_q(const QPoly& f) {
    if (f.is_zero()) throw arith_error("factor_q of zero polynomial");
    QFactorization out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        // x^k factors split off directly; they are common and cheap
        std::size_t low = part.low_zeros();
        if (low > 0) out.emplace_back(QPoly::x(Rational()), mult);
        QPoly rest = part.shift_down(low);
        if (rest.degree() <= 0) continue;
        if (rest.degree() == 1) {
            out.emplace_back(rest.monic(), mult);
            continue;
        }
        for (const auto& z : detail::zassenhaus(primitive_integer_coeffs(rest)))
            out.emplace_back(detail::to_q(z).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return qpoly_less(a.first, b.first);
    });
    return out;
}

/// Rational roots of f, each once, ascending.
inline std::vector<Rational> rational_roots(const QPoly& f) {
    std::vector<Rational> r;
    for (const auto& [g, m] : factor_q(f))
        if (g.degree() == 1) r.push_back(-g.coeff(0));
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace arithdyn
