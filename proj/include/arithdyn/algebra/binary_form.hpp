#pragma once

#include <cstddef>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arithdyn/algebra/matrix.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

template <class F>
F pow_elem(const F& x, std::size_t e) {
    F acc = one_like(x);
    for (std::size_t i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

/// Homogeneous form Σ c_i X^{m-i} Y^i of (formal) degree m.
///
/// The root [1:0] has multiplicity equal to the number of leading zero
/// coefficients, so the dehomogenization f(x) = F(x, 1) together with m
/// determines F completely.
template <class F>
class BinaryForm {
public:
    BinaryForm() : proto_(zero_like(F())) {}
    BinaryForm(std::vector<F> coeffs, const F& proto) : c_(std::move(coeffs)), proto_(zero_like(proto)) {
        if (c_.empty()) throw arith_error("binary form needs at least one coefficient");
    }
    explicit BinaryForm(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw arith_error("binary form needs at least one coefficient");
        proto_ = zero_like(c_.front());
    }

    static BinaryForm from_dehomogenized(const Poly<F>& f, std::size_t m) {
        if (f.degree() > static_cast<long>(m)) throw arith_error("polynomial degree exceeds form degree");
        std::vector<F> c(m + 1, f.zero_elem());
        for (std::size_t i = 0; i <= m; ++i) c[i] = f.coeff(m - i);
        return BinaryForm(std::move(c), f.proto());
    }
    static BinaryForm constant(const F& c) { return BinaryForm(std::vector<F>{c}, c); }
    /// αX + βY.
    static BinaryForm linear(const F& alpha, const F& beta) { return BinaryForm(std::vector<F>{alpha, beta}, alpha); }

    std::size_t degree() const { return c_.size() - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& coeff(std::size_t i) const { return c_.at(i); }
    const F& proto() const { return proto_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!detail::elem_is_zero(v)) return false;
        return true;
    }

    Poly<F> dehomogenize() const {
        std::vector<F> v(c_.size(), proto_);
        const std::size_t m = degree();
        for (std::size_t i = 0; i <= m; ++i) v[m - i] = c_[i];
        return Poly<F>(std::move(v), proto_);
    }

    /// Multiplicity of the root [1:0]; max() for the zero form.
    std::size_t infinity_multiplicity() const {
        std::size_t k = 0;
        while (k < c_.size() && detail::elem_is_zero(c_[k])) ++k;
        return k == c_.size() ? std::numeric_limits<std::size_t>::max() : k;
    }

    F operator()(const F& x, const F& y) const {
        F acc = proto_;
        std::vector<F> ypows(c_.size(), one_like(proto_));
        for (std::size_t i = 1; i < c_.size(); ++i) ypows[i] = ypows[i - 1] * y;
        for (std::size_t i = 0; i < c_.size(); ++i) acc = acc * x + c_[i] * ypows[i];
        return acc;
    }

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, a.proto_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return BinaryForm(std::move(r), a.proto_);
    }
    friend BinaryForm operator*(const F& s, BinaryForm a) {
        for (auto& v : a.c_) v = s * v;
        return a;
    }
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw arith_error("adding binary forms of different degree");
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) {
        if (a.degree() != b.degree()) throw arith_error("subtracting binary forms of different degree");
        for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.c_ == b.c_; }

    BinaryForm pow(std::size_t e) const {
        BinaryForm acc = constant(one_like(proto_));
        for (std::size_t i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// ∂/∂X, a form of degree m-1 (zero form of degree 0 when m = 0).
    BinaryForm partial_x() const {
        const std::size_t m = degree();
        if (m == 0) return constant(proto_);
        std::vector<F> r(m, proto_);
        for (std::size_t i = 0; i < m; ++i)
            r[i] = c_[i] * from_integer(Integer(static_cast<unsigned long>(m - i)), proto_);
        return BinaryForm(std::move(r), proto_);
    }
    /// ∂/∂Y.
    BinaryForm partial_y() const {
        const std::size_t m = degree();
        if (m == 0) return constant(proto_);
        std::vector<F> r(m, proto_);
        for (std::size_t i = 1; i <= m; ++i)
            r[i - 1] = c_[i] * from_integer(Integer(static_cast<unsigned long>(i)), proto_);
        return BinaryForm(std::move(r), proto_);
    }

    /// F(αX + βY, γX + δY).
    BinaryForm substitute(const F& alpha, const F& beta, const F& gamma, const F& delta) const {
        const std::size_t m = degree();
        BinaryForm u = linear(alpha, beta), v = linear(gamma, delta);
        std::vector<BinaryForm> upow{constant(one_like(proto_))}, vpow{constant(one_like(proto_))};
        for (std::size_t i = 1; i <= m; ++i) {
            upow.push_back(upow.back() * u);
            vpow.push_back(vpow.back() * v);
        }
        BinaryForm acc(std::vector<F>(m + 1, proto_), proto_);
        for (std::size_t i = 0; i <= m; ++i) {
            if (detail::elem_is_zero(c_[i])) continue;
            acc = acc + c_[i] * (upow[m - i] * vpow[i]);
        }
        return acc;
    }

    std::string to_string() const {
        std::ostringstream os;
        const std::size_t m = degree();
        bool first = true;
        for (std::size_t i = 0; i <= m; ++i) {
            if (detail::elem_is_zero(c_[i])) continue;
            std::ostringstream cs;
            cs << c_[i];
            std::string s = cs.str();
            if (!first) os << " + ";
            first = false;
            bool mono = (m - i) > 0 || i > 0;
            if (!mono || s != "1") os << "(" << s << ")";
            if (m - i > 0) os << (s != "1" ? "*" : "") << "X" << (m - i > 1 ? "^" + std::to_string(m - i) : "");
            if (i > 0) os << ((m - i > 0 || s != "1") ? "*" : "") << "Y" << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return first ? "0" : os.str();
    }

private:
    std::vector<F> c_;
    F proto_;
};

/// Greatest common divisor of binary forms, dehomogenization made monic.
///
/// gcd(F, 0) = F (up to scaling). Both zero is an error.
template <class F>
BinaryForm<F> form_gcd(const BinaryForm<F>& a, const BinaryForm<F>& b) {
    const bool za = a.is_zero(), zb = b.is_zero();
    if (za && zb) throw arith_error("gcd of two zero forms");
    auto normalized = [](const BinaryForm<F>& f) {
        const std::size_t e = f.infinity_multiplicity();
        Poly<F> g = f.dehomogenize().monic();
        return BinaryForm<F>::from_dehomogenized(g, static_cast<std::size_t>(g.degree()) + e);
    };
    if (zb) return normalized(a);
    if (za) return normalized(b);
    const std::size_t e = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    Poly<F> g = poly_gcd(a.dehomogenize(), b.dehomogenize());
    return BinaryForm<F>::from_dehomogenized(g, static_cast<std::size_t>(g.degree()) + e);
}

/// Exact quotient a / g of binary forms; throws when g does not divide a.
template <class F>
BinaryForm<F> form_exact_div(const BinaryForm<F>& a, const BinaryForm<F>& g) {
    if (g.is_zero()) throw arith_error("division by zero form");
    if (g.degree() > a.degree()) throw arith_error("divisor form has larger degree");
    const std::size_t m = a.degree() - g.degree();
    if (a.is_zero()) return BinaryForm<F>(std::vector<F>(m + 1, a.proto()), a.proto());
    if (a.infinity_multiplicity() < g.infinity_multiplicity()) throw arith_error("inexact division of binary forms");
    Poly<F> q = a.dehomogenize().exact_div(g.dehomogenize());
    return BinaryForm<F>::from_dehomogenized(q, m);
}

/// Resultant of two forms by their formal degrees (Sylvester determinant).
template <class F>
F form_resultant(const BinaryForm<F>& f, const BinaryForm<F>& g) {
    const std::size_t m = f.degree(), n = g.degree();
    const F z = f.proto();
    if (m + n == 0) return one_like(z);
    if (m == 0) return pow_elem(f.coeff(0), n);
    if (n == 0) return pow_elem(g.coeff(0), m);
    DenseMatrix<F> M(m + n, std::vector<F>(m + n, z));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = f.coeff(j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = g.coeff(j);
    return bareiss_determinant(std::move(M));
}

/// Discriminant normalized so a quadratic form gives c1² − 4 c0 c2:
/// (−1)^{m(m−1)/2} Res(∂F/∂X, ∂F/∂Y) / m^{m−2}.
template <class F>
F form_discriminant(const BinaryForm<F>& f) {
    const std::size_t m = f.degree();
    if (m < 2) throw arith_error("discriminant needs a form of degree at least 2");
    F r = form_resultant(f.partial_x(), f.partial_y());
    F scale = pow_elem(from_integer(Integer(static_cast<unsigned long>(m)), f.proto()), m - 2);
    F d = r / scale;
    return ((m * (m - 1) / 2) % 2 == 1) ? -d : d;
}

}  // namespace arithdyn
