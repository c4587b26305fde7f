#pragma once

#include <string>
#include <vector>

#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/error.hpp"

namespace arithdyn {

/// (X² + λ1·XY) / (λ2·XY + Y²).
template <class K>
Model<K> normal_form(const K& l1, const K& l2) {
    const K z = zero_like(l1), o = one_like(l1);
    return Model<K>(2, {o, l1, z}, {z, l2, o});
}

/// (t^N X² + Y²) / (t^N Y²), i.e. x² + t^{-N}.
inline Model<RatFunc> example1(long N) {
    if (N < 1) throw validation_error("family parameter N must be at least 1");
    RatFunc tn = RatFunc::t().pow(N);
    return Model<RatFunc>(2, {tn, RatFunc(), RatFunc(1L)}, {RatFunc(), RatFunc(), tn});
}

struct Example2Params {
    Rational a, b, bp;
};

/// Reasons (a, b, b′) fails the family constraints; empty when valid.
inline std::vector<std::string> example2_violations(const Example2Params& p) {
    std::vector<std::string> out;
    auto check = [&](const Rational& v, const char* name) {
        if (v.is_zero()) out.push_back(std::string(name) + " != 0 fails");
        if (v.is_one()) out.push_back(std::string(name) + " != 1 fails");
    };
    check(p.a, "a");
    check(p.b, "b");
    check(p.bp, "b'");
    if (!p.a.is_zero() && !(p.a * p.bp + p.b / p.a).is_zero())
        out.push_back("a*b' + b/a = 0 fails (value " + (p.a * p.bp + p.b / p.a).to_string() + ")");
    return out;
}

/// b′ forced by a·b′ + b/a = 0.
inline Rational example2_forced_bp(const Rational& a, const Rational& b) {
    if (a.is_zero()) throw validation_error("a != 0 fails");
    return -b / (a * a);
}

/// Normal form with λ1 = a + b·u^N, λ2 = a⁻¹ + b′·u^N for u = t (or a prime).
template <class K>
Model<K> example2_generic(const K& u, long N, const Example2Params& p) {
    if (N < 1) throw validation_error("family parameter N must be at least 1");
    auto bad = example2_violations(p);
    if (!bad.empty()) throw validation_error(bad.front());
    K uN = one_like(u);
    for (long i = 0; i < N; ++i) uN = uN * u;
    K l1 = K(p.a) + K(p.b) * uN;
    K l2 = K(p.a.inverse()) + K(p.bp) * uN;
    return normal_form(l1, l2);
}

inline Model<RatFunc> example2(long N, const Example2Params& p) { return example2_generic(RatFunc::t(), N, p); }

/// The same family over Q with t replaced by the prime p.
inline Model<Rational> number_field_family(const Integer& prime, long N, const Example2Params& p) {
    return example2_generic(Rational(prime), N, p);
}

}  // namespace arithdyn
