#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/factor_fp.hpp"
#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/dynsys/reduction.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/minimality/multiplier.hpp"
#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"
#include "arithdyn/places/valuation.hpp"
#include "arithdyn/stability.hpp"

namespace arithdyn {

enum class CertificateKind { GoodReduction, QuickResultantBound, MultiplierNumerator, SemistableReduction };

struct Certificate {
    CertificateKind kind = CertificateKind::GoodReduction;
    int index = 0;  // i of σ_i for MultiplierNumerator
    int power = 0;  // m_i

    std::string describe() const {
        switch (kind) {
            case CertificateKind::GoodReduction: return "GoodReduction";
            case CertificateKind::QuickResultantBound: return "QuickResultantBound";
            case CertificateKind::MultiplierNumerator:
                return "MultiplierNumerator(sigma" + std::to_string(index) + ", m=" + std::to_string(power) + ")";
            case CertificateKind::SemistableReduction: return "SemistableReduction";
        }
        return "";
    }
};

struct MinimalityStatus {
    bool certified = false;
    std::optional<Certificate> certificate;  // set iff certified
    long value = 0;                          // N_{Φ,p} of the reported presentation
    bool budget_exhausted = false;

    static MinimalityStatus certified_minimal(Certificate c, long value) { return {true, c, value, false}; }
    static MinimalityStatus best_found(long value) { return {false, std::nullopt, value, true}; }
    std::string describe() const {
        return certified ? "CertifiedMinimal(" + certificate->describe() + ")" : "BestFound(" + std::to_string(value) + ")";
    }
};

/// m_i for which ρ^{m_i}·σ_i is a polynomial in the coefficients (d = 2).
inline long multiplier_denominator_power(std::size_t d, std::size_t i) {
    if (d == 2 && (i == 1 || i == 2)) return 1;
    return 0;
}

namespace detail {

/// Certificate for a model with known N at p, or nothing.
template <class K>
std::optional<Certificate> certify(const Model<K>& m, long N, const Place& p, const MultiplierData<K>* mult) {
    const long d = static_cast<long>(m.d);
    if (N == 0) return Certificate{CertificateKind::GoodReduction, 0, 0};
    const long c = d % 2 == 1 ? 2 * d : d;
    if (N > 0 && N < c) return Certificate{CertificateKind::QuickResultantBound, 0, 0};
    if (d == 2 && mult) {
        for (std::size_t i : {1u, 2u}) {
            const K& s = mult->sigma_i(i);
            if (detail::elem_is_zero(s)) continue;
            const long mi = multiplier_denominator_power(m.d, i);
            if (valuation(s, p) + mi * N == 0)
                return Certificate{CertificateKind::MultiplierNumerator, static_cast<int>(i), static_cast<int>(mi)};
        }
    }
    if constexpr (std::is_same_v<K, RatFunc>) {
        if (d == 2 && is_semistable(classify(reduce_model(m, p)).cls))
            return Certificate{CertificateKind::SemistableReduction, 0, 0};
    }
    return std::nullopt;
}

}  // namespace detail

/// One of the sufficient conditions for N_{Φ,p} = ε_p(φ), checked in the
/// order quick bound, σ1, σ2, semistable reduction. Empty when none applies.
/// `mult` may pass precomputed multiplier data of Φ (it is conjugation invariant).
template <class K>
std::optional<MinimalityStatus> minimality_certificate(const Presentation<K>& phi, const Place& p,
                                                       const MultiplierData<K>* mult = nullptr) {
    const long N = n_value(phi, p);
    if (N == 0) throw validation_error("nothing to certify: good reduction at " + p.to_string());
    std::optional<MultiplierData<K>> local;
    if (!mult && phi.degree() == 2) {
        local = multiplier_polynomial(phi);
        mult = &*local;
    }
    auto c = detail::certify(phi.model(), N, p, mult);
    if (!c) return std::nullopt;
    return MinimalityStatus::certified_minimal(*c, N);
}

/// True iff Γ shows Φ is not minimal at p: after normalizing Γ and taking a
/// p-model (a, b), n_p(a^Γ, b^Γ) > (d+1)/2 · v_p(det Γ).
template <class K>
bool check_minimality_witness(const Presentation<K>& phi, const Place& p, const Matrix2<K>& gamma) {
    Matrix2<K> g = normalize_p_matrix(gamma, p);
    const K det = g.det();
    if (detail::elem_is_zero(det)) throw arith_error("witness matrix is singular");
    const long e = valuation(det, p);
    if (e == 0) throw validation_error("witness matrix has unit determinant at " + p.to_string() + ": no information");
    Model<K> pm = normalize_p_model(phi.model(), p).first;
    const long n = min_valuation(conjugate(pm, g), p);
    return 2 * n > (static_cast<long>(phi.degree()) + 1) * e;
}

namespace detail {

/// Roots in κ(p) of the reduced common factor, lifted to K. Only residue
/// fields Q (degree-one places of Q(t)) and F_p are searched.
inline std::vector<Rational> common_factor_root_lifts(const Model<Rational>& m, const Place& p) {
    ResidueMap<Rational> r(p);
    auto red = reduce_model(m, p);
    BinaryForm<FpElem> G = form_gcd(BinaryForm<FpElem>(red.a, red.a.front()), BinaryForm<FpElem>(red.b, red.a.front()));
    std::vector<Rational> out;
    if (G.degree() == 0) return out;
    Poly<FpElem> g = G.dehomogenize();
    if (g.degree() <= 0) return out;
    for (const auto& x : roots_fp(g))
        if (!detail::elem_is_zero(x)) out.push_back(r.lift(x));
    return out;
}

inline std::vector<RatFunc> common_factor_root_lifts(const Model<RatFunc>& m, const Place& p) {
    std::vector<RatFunc> out;
    if (p.degree() != 1) return out;
    auto red = reduce_model(m, p);
    BinaryForm<ResidueElem> G =
        form_gcd(BinaryForm<ResidueElem>(red.a, red.a.front()), BinaryForm<ResidueElem>(red.b, red.a.front()));
    if (G.degree() == 0) return out;
    Poly<ResidueElem> g = G.dehomogenize();
    if (g.degree() <= 0) return out;
    std::vector<Rational> qc;
    for (const auto& c : g.coeffs()) qc.push_back(c.rational_value());
    for (const auto& x : rational_roots(QPoly(qc)))
        if (!x.is_zero()) out.push_back(RatFunc(x));
    return out;
}

}  // namespace detail

template <class K>
struct DescentResult {
    Presentation<K> presentation;
    MinimalityStatus status;
    Matrix2<K> total;  // presentation = Φ^total up to scaling
    long rounds = 0;
};

/// Greedy descent: each round tries diag(π^k, 1), diag(1, π^k) and
/// [[π^k, r], [0, 1]] for lifted roots r of the reduced common factor,
/// 1 ≤ k ≤ budget, and moves to the conjugate with the smallest N if it is
/// strictly smaller. Stops at a certificate or when no candidate improves.
template <class K>
DescentResult<K> descend(const Presentation<K>& phi, const Place& p, long budget,
                         const MultiplierData<K>* mult = nullptr) {
    std::optional<MultiplierData<K>> local;
    if (!mult && phi.degree() == 2) {
        local = multiplier_polynomial(phi);
        mult = &*local;
    }
    const K one = one_like(phi.model().proto()), zero = zero_like(one);
    const long d = static_cast<long>(phi.degree());
    DescentResult<K> out{phi, {}, Matrix2<K>::identity(one), 0};
    long N = n_value(phi, p);
    for (;;) {
        if (auto c = detail::certify(out.presentation.model(), N, p, mult)) {
            out.status = MinimalityStatus::certified_minimal(*c, N);
            return out;
        }
        const Model<K>& cur = out.presentation.model();
        const long vrho = valuation(out.presentation.resultant(), p);
        std::vector<Matrix2<K>> cands;
        const std::vector<K> roots = detail::common_factor_root_lifts(cur, p);
        for (long k = 1; k <= budget; ++k) {
            const K pk = uniformizer_power(one, p, k);
            cands.push_back(Matrix2<K>::diag(pk, one));
            cands.push_back(Matrix2<K>::diag(one, pk));
            for (const auto& r : roots) cands.push_back(Matrix2<K>{pk, r, zero, one});
        }
        std::optional<std::size_t> best;
        long bestN = N;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const long e = valuation(cands[i].det(), p);
            const long n = min_valuation(conjugate(cur, cands[i]), p);
            const long Ni = vrho + (d * d + d) * e - 2 * d * n;
            if (Ni < bestN) {
                bestN = Ni;
                best = i;
            }
        }
        if (!best) {
            out.status = MinimalityStatus::best_found(N);
            return out;
        }
        out.presentation = Presentation<K>(conjugate(cur, cands[*best]));
        out.total = out.total * cands[*best];
        N = bestN;
        ++out.rounds;
        if (n_value(out.presentation, p) != N) throw invariant_error("descent step changed N inconsistently");
    }
}

template <class K>
struct PlaceMinimality {
    Place place;
    long n_value = 0;  // N_{Φ,p} of the input
    long epsilon = 0;  // reported minimal value
    MinimalityStatus status;
    Presentation<K> presentation;  // where epsilon is attained
};

template <class K>
struct MinimalResultantReport {
    Divisor R;
    Divisor conductor;
    std::vector<PlaceMinimality<K>> places;  // singular support of Φ, canonical order
    Presentation<K> presentation_used;

    bool all_certified() const {
        for (const auto& e : places)
            if (!e.status.certified) return false;
        return true;
    }
};

/// Per place of bad reduction of Φ: a certificate if one applies, otherwise
/// descent. Places are handled independently, so the attaining presentation
/// can differ from place to place.
template <class K>
MinimalResultantReport<K> minimal_resultant(const Presentation<K>& phi, long budget) {
    std::optional<MultiplierData<K>> mult;
    if (phi.degree() == 2) mult = multiplier_polynomial(phi);
    const MultiplierData<K>* mp = mult ? &*mult : nullptr;
    MinimalResultantReport<K> rep{{}, {}, {}, phi};
    const Divisor rd = resultant_divisor(phi);
    for (const auto& [p, N] : rd.terms()) {
        if (N == 0) continue;
        auto res = descend(phi, p, budget, mp);
        rep.places.push_back({p, N, res.status.value, res.status, res.presentation});
        if (res.status.value != 0) {
            rep.R.add(p, res.status.value);
            rep.conductor.add(p, 1);
        }
    }
    return rep;
}

/// A = (R − div ρ(m)) / c with c = 2d for odd d and c = d for even d.
template <class K>
Divisor wclass_divisor(const Model<K>& m, const Divisor& R) {
    const K rho = sylvester_resultant(m);
    if (detail::elem_is_zero(rho)) throw degenerate_error("resultant vanishes: the model is degenerate");
    const long d = static_cast<long>(m.d);
    const long c = d % 2 == 1 ? 2 * d : d;
    Divisor diff = R - principal_divisor(rho);
    try {
        return diff.divide_exact(c);
    } catch (const arith_error& e) {
        throw validation_error(std::string("class divisor is not integral: ") + e.what());
    }
}

}  // namespace arithdyn
