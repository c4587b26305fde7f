#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

namespace detail {
// unqualified call so ADL finds the field's is_zero from outside Poly's scope
template <class T>
bool elem_is_zero(const T& v) {
    return is_zero(v);
}
}  // namespace detail

/// Dense univariate polynomial over a field F, lowest degree first.
///
/// F must provide field arithmetic plus the ADL hooks zero_like, one_like,
/// from_integer, characteristic and is_zero. Fields whose elements carry
/// runtime context (F_p, residue rings) are handled through a prototype
/// element kept alongside the coefficients, so the zero polynomial still
/// knows which field it lives in.
template <class F>
class Poly {
public:
    using value_type = F;

    Poly() : proto_(zero_like(F())) {}
    explicit Poly(const F& c) : proto_(zero_like(c)) {
        if (!detail::elem_is_zero(c)) c_.push_back(c);
    }
    Poly(std::vector<F> coeffs, const F& proto) : c_(std::move(coeffs)), proto_(zero_like(proto)) { trim(); }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        proto_ = c_.empty() ? zero_like(F()) : zero_like(c_.front());
        trim();
    }

    static Poly zero(const F& proto) { return Poly(std::vector<F>{}, proto); }
    static Poly constant(const F& c) { return Poly(c); }
    static Poly x(const F& proto) { return monomial(one_like(proto), 1); }
    static Poly monomial(const F& c, std::size_t k) {
        std::vector<F> v(k + 1, zero_like(c));
        v[k] = c;
        return Poly(std::move(v), c);
    }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    const F& proto() const { return proto_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : proto_; }
    const std::vector<F>& coeffs() const { return c_; }
    F lead() const { return c_.empty() ? proto_ : c_.back(); }
    F zero_elem() const { return proto_; }
    F one_elem() const { return one_like(proto_); }

    void set_coeff(std::size_t i, const F& v) {
        if (i >= c_.size()) c_.resize(i + 1, proto_);
        c_[i] = v;
        trim();
    }

    F operator()(const F& x) const {
        F acc = proto_;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), proto_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const F& s) {
        if (is_zero_elem(s)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.proto_);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.proto_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_elem(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r), a.proto_);
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw arith_error("polynomial division by zero");
        Poly r = *this;
        if (degree() < d.degree()) return {zero(proto_), r};
        std::vector<F> q(c_.size() - d.c_.size() + 1, proto_);
        F inv = one_like(proto_) / d.c_.back();
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            F coef = r.coeff(k + dd) * inv;
            q[k] = coef;
            if (is_zero_elem(coef)) continue;
            for (std::size_t j = 0; j <= dd; ++j) r.c_[k + j] -= coef * d.c_[j];
            r.c_.resize(k + dd);  // top coefficient is now exactly zero
            r.trim();
        }
        r.trim();
        return {Poly(std::move(q), proto_), r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    /// Quotient when d divides *this exactly; throws otherwise.
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw arith_error("inexact polynomial division");
        return q;
    }
    bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (one_like(proto_) / c_.back());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero(proto_);
        std::vector<F> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * from_integer(Integer(static_cast<unsigned long>(i)), proto_));
        return Poly(std::move(r), proto_);
    }

    Poly pow(unsigned long e) const {
        Poly acc = constant(one_like(proto_)), base = *this;
        while (e) {
            if (e & 1UL) acc *= base;
            e >>= 1UL;
            if (e) base *= base;
        }
        return acc;
    }

    /// f(g(x)).
    Poly compose(const Poly& g) const {
        Poly acc = zero(proto_);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
        return acc;
    }

    /// Multiplicity of x as a factor.
    std::size_t low_zeros() const {
        std::size_t k = 0;
        while (k < c_.size() && is_zero_elem(c_[k])) ++k;
        return k;
    }

    Poly shift_down(std::size_t k) const {
        if (k >= c_.size()) return zero(proto_);
        return Poly(std::vector<F>(c_.begin() + static_cast<long>(k), c_.end()), proto_);
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero_elem(c_[i])) continue;
            std::string s = coeff_string(c_[i]);
            bool neg = !s.empty() && s[0] == '-' && s.find_first_of("+-", 1) == std::string::npos;
            if (neg) s = s.substr(1);
            if (!first) os << (neg ? " - " : " + ");
            else if (neg) os << "-";
            bool unit = (s == "1");
            bool compound = s.find_first_of("+-", 1) != std::string::npos || s.find('/') != std::string::npos;
            if (i == 0) os << (compound ? "(" + s + ")" : s);
            else {
                if (!unit) os << (compound ? "(" + s + ")" : s) << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    static bool is_zero_elem(const F& v) { return detail::elem_is_zero(v); }
    static std::string coeff_string(const F& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
    void trim() {
        while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
    F proto_;
};

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) {
    return os << p.to_string();
}

template <class F>
bool is_zero(const Poly<F>& p) {
    return p.is_zero();
}

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s·a + t·b = g = poly_gcd(a, b).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
    const F z = a.is_zero() ? b.proto() : a.proto();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(one_like(z)), s1 = Poly<F>::zero(z);
    Poly<F> t0 = Poly<F>::zero(z), t1 = Poly<F>::constant(one_like(z));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    F inv = one_like(z) / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

/// Squarefree decomposition f = lc · ∏ g_i^{m_i} with m_i strictly increasing.
///
/// Yun's algorithm; in characteristic p the part killed by the derivative is
/// a p-th power and is handled by extracting the p-th root (valid over prime
/// fields, where Frobenius is the identity on coefficients).
template <class F>
std::vector<std::pair<Poly<F>, unsigned>> squarefree_decomposition(const Poly<F>& f) {
    if (f.is_zero()) throw arith_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly<F>, unsigned>> out;
    if (f.degree() == 0) return out;

    const Integer ch = characteristic(f.proto());
    auto accumulate = [&](const Poly<F>& g, unsigned m) {
        if (g.degree() <= 0) return;
        for (auto& [h, k] : out)
            if (k == m) {
                h = h * g;
                return;
            }
        out.emplace_back(g, m);
    };

    // recursive worker: decomposes monic f, multiplying multiplicities by scale
    auto run = [&](auto&& self, Poly<F> a, unsigned scale) -> void {
        if (a.degree() <= 0) return;
        Poly<F> da = a.derivative();
        if (da.is_zero()) {
            // a(x) = b(x^p)
            const unsigned long p = ch.get_ui();
            std::vector<F> bc;
            for (std::size_t i = 0; i < a.size(); i += p) bc.push_back(a.coeff(i));
            self(self, Poly<F>(bc, a.proto()).monic(), scale * static_cast<unsigned>(p));
            return;
        }
        Poly<F> c = poly_gcd(a, da);
        Poly<F> w = a.exact_div(c);
        unsigned i = 1;
        if (ch == 0) {
            Poly<F> y = da.exact_div(c);
            Poly<F> z = y - w.derivative();
            while (w.degree() > 0) {
                Poly<F> g = poly_gcd(w, z);
                accumulate(g, i * scale);
                w = w.exact_div(g);
                y = z.exact_div(g);
                z = y - w.derivative();
                ++i;
            }
            return;
        }
        // characteristic p: Musser-style loop, leftover c is a p-th power
        while (w.degree() > 0) {
            Poly<F> y = poly_gcd(w, c);
            accumulate(w.exact_div(y), i * scale);
            w = y;
            c = c.exact_div(y);
            ++i;
        }
        if (c.degree() > 0) {
            const unsigned long p = ch.get_ui();
            std::vector<F> bc;
            for (std::size_t k = 0; k < c.size(); k += p) bc.push_back(c.coeff(k));
            self(self, Poly<F>(bc, c.proto()).monic(), scale * static_cast<unsigned>(p));
        }
    };
    run(run, f.monic(), 1);
    for (auto& [g, m] : out) g = g.monic();
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
    return out;
}

/// Product of the distinct irreducible factors, monic.
template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
    Poly<F> r = Poly<F>::constant(one_like(f.proto()));
    for (const auto& [g, m] : squarefree_decomposition(f)) r *= g;
    return r;
}

/// Sylvester resultant with formal degrees m >= deg f, n >= deg g, computed
/// as a determinant by the caller-provided routine.
template <class F, class Det>
F poly_resultant_formal(const Poly<F>& f, long m, const Poly<F>& g, long n, Det det) {
    const long s = m + n;
    const F z = f.proto();
    if (s == 0) return one_like(z);
    std::vector<std::vector<F>> M(static_cast<std::size_t>(s), std::vector<F>(static_cast<std::size_t>(s), z));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) M[i][i + j] = f.coeff(static_cast<std::size_t>(m - j));
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) M[n + i][i + j] = g.coeff(static_cast<std::size_t>(n - j));
    return det(std::move(M));
}

}  // namespace arithdyn
