#include <gtest/gtest.h>

#include <map>

#include "arithdyn/algebra/binary_form.hpp"
#include "arithdyn/algebra/factor_fp.hpp"
#include "arithdyn/algebra/factor_q.hpp"
#include "arithdyn/algebra/fp.hpp"
#include "arithdyn/algebra/integer.hpp"
#include "arithdyn/algebra/matrix.hpp"
#include "arithdyn/algebra/parse.hpp"
#include "arithdyn/algebra/poly.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/residue.hpp"
#include "support/oracles.hpp"

using namespace arithdyn;

namespace {

QPoly qp(std::vector<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(v);
}

QPoly expand(const QFactorization& fs) {
    QPoly r = qp({1});
    for (const auto& [g, m] : fs) r *= g.pow(m);
    return r;
}

FpPoly expand_fp(const Factorization& fs, std::uint64_t p) {
    FpPoly r = fp_poly({1}, p);
    for (const auto& [g, m] : fs) r *= g.pow(m);
    return r;
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(Integer(0), Integer(7)).den(), 1);
    EXPECT_THROW(Rational(Integer(1), Integer(0)), arith_error);
    EXPECT_EQ(Rational::parse("-10/4"), Rational(Integer(-5), Integer(2)));
    EXPECT_THROW(Rational::parse("1/0"), parse_error);
    EXPECT_THROW(Rational(0).inverse(), arith_error);
}

TEST(FpElem, FieldAxiomsNearWordSize) {
    const std::uint64_t p = 9223372036854775783ULL;  // largest prime below 2^63
    FpElem a(123456789123456789ULL, p), b(p - 5, p);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * a.inverse(), FpElem(1, p));
    EXPECT_EQ(a.pow(p - 1), FpElem(1, p));
    EXPECT_EQ(FpElem::from_rational(Rational(Integer(7), Integer(3)), 5).value(), 4U);
    EXPECT_THROW(FpElem::from_rational(Rational(Integer(1), Integer(5)), 5), arith_error);
}

TEST(PolyGcd, Examples) {
    EXPECT_EQ(poly_gcd(qp({-1, 0, 1}), qp({-1, 1})), qp({-1, 1}));
    EXPECT_EQ(poly_gcd(qp({0, 0, 3}), QPoly()), qp({0, 0, 1}));
    EXPECT_TRUE(poly_gcd(QPoly(), QPoly()).is_zero());
}

TEST(PolyGcd, RandomCommonFactor) {
    oracle::Gen gen(11);
    for (int it = 0; it < 200; ++it) {
        QPoly w = gen.poly(gen.integer(1, 4), 9);
        if (w.degree() < 1) continue;
        QPoly u = gen.poly(gen.integer(0, 4), 9), v = gen.poly(gen.integer(0, 4), 9);
        if (u.is_zero() || v.is_zero() || poly_gcd(u, v).degree() != 0) continue;
        QPoly g = poly_gcd(u * w, v * w);
        EXPECT_EQ(g, w.monic());
        EXPECT_TRUE((u * w).divisible_by(g));
        EXPECT_TRUE((v * w).divisible_by(g));
    }
}

TEST(PolyGcd, XgcdBezout) {
    oracle::Gen gen(12);
    for (int it = 0; it < 100; ++it) {
        QPoly a = gen.poly(gen.integer(0, 5), 6), b = gen.poly(gen.integer(0, 5), 6);
        auto [g, s, t] = poly_xgcd(a, b);
        EXPECT_EQ(s * a + t * b, g);
        EXPECT_EQ(g, poly_gcd(a, b));
    }
}

TEST(Squarefree, Examples) {
    // (x-1)^3 (x+3)
    QPoly f = qp({-1, 1}).pow(3) * qp({3, 1});
    auto sf = squarefree_decomposition(f);
    ASSERT_EQ(sf.size(), 2U);
    EXPECT_EQ(sf[0].first, qp({3, 1}));
    EXPECT_EQ(sf[0].second, 1U);
    EXPECT_EQ(sf[1].first, qp({-1, 1}));
    EXPECT_EQ(sf[1].second, 3U);

    auto x = squarefree_decomposition(qp({0, 1}));
    ASSERT_EQ(x.size(), 1U);
    EXPECT_EQ(x[0].first, qp({0, 1}));
    EXPECT_THROW(squarefree_decomposition(QPoly()), arith_error);
}

TEST(Squarefree, RandomRootMultisets) {
    oracle::Gen gen(13);
    for (int it = 0; it < 100; ++it) {
        std::map<Rational, unsigned> roots;
        int k = static_cast<int>(gen.integer(1, 4));
        for (int i = 0; i < k; ++i) roots[gen.rational(6)] += static_cast<unsigned>(gen.integer(1, 3));
        QPoly f = qp({static_cast<long>(gen.integer(1, 5))});
        for (auto& [r, m] : roots) f *= QPoly({-r, Rational(1)}).pow(m);
        auto sf = squarefree_decomposition(f);
        std::map<unsigned, QPoly> expect;
        for (auto& [r, m] : roots) {
            auto it2 = expect.find(m);
            QPoly lin({-r, Rational(1)});
            if (it2 == expect.end()) expect.emplace(m, lin);
            else it2->second *= lin;
        }
        ASSERT_EQ(sf.size(), expect.size());
        for (auto& [g, m] : sf) {
            EXPECT_EQ(g, expect.at(m));
            EXPECT_EQ(poly_gcd(g, g.derivative()).degree(), 0);
        }
        for (std::size_t i = 0; i < sf.size(); ++i)
            for (std::size_t j = i + 1; j < sf.size(); ++j) EXPECT_EQ(poly_gcd(sf[i].first, sf[j].first).degree(), 0);
    }
}

TEST(Squarefree, CharacteristicP) {
    // (x+1)^5 (x+2)^2 over F_5: derivative kills the fifth power
    FpPoly f = fp_poly({1, 1}, 5).pow(5) * fp_poly({2, 1}, 5).pow(2);
    auto sf = squarefree_decomposition(f);
    ASSERT_EQ(sf.size(), 2U);
    EXPECT_EQ(sf[0].first, fp_poly({2, 1}, 5));
    EXPECT_EQ(sf[0].second, 2U);
    EXPECT_EQ(sf[1].first, fp_poly({1, 1}, 5));
    EXPECT_EQ(sf[1].second, 5U);
}

TEST(FactorQ, Examples) {
    auto t12 = factor_q(qp({0, 1}).pow(12));
    ASSERT_EQ(t12.size(), 1U);
    EXPECT_EQ(t12[0].first, qp({0, 1}));
    EXPECT_EQ(t12[0].second, 12U);

    auto t4 = factor_q(qp({1, 0, 0, 0, 1}));
    ASSERT_EQ(t4.size(), 1U);
    EXPECT_EQ(t4[0].first, qp({1, 0, 0, 0, 1}));

    // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
    auto c8 = factor_q(qp({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    ASSERT_EQ(c8.size(), 4U);
    EXPECT_EQ(c8[0].first, qp({-1, 1}));
    EXPECT_EQ(c8[1].first, qp({1, 1}));
    EXPECT_EQ(c8[2].first, qp({1, 0, 1}));
    EXPECT_EQ(c8[3].first, qp({1, 0, 0, 0, 1}));
    EXPECT_THROW(factor_q(QPoly()), arith_error);
}

TEST(FactorQ, SwinnertonDyerStyleRecombination) {
    // x^4 - 10x^2 + 1 is irreducible but splits into linear/quadratic factors mod every prime
    auto f = factor_q(qp({1, 0, -10, 0, 1}));
    ASSERT_EQ(f.size(), 1U);
    EXPECT_EQ(f[0].first.degree(), 4);
}

TEST(FactorQ, NonMonicRoundTrip) {
    QPoly f = qp({3, 2}) * qp({-1, 0, 5}) * qp({1, 1, 0, 7});  // (2x+3)(5x^2-1)(7x^3+x+1)
    auto fs = factor_q(f);
    EXPECT_EQ(expand(fs) * f.lead(), f);
    ASSERT_EQ(fs.size(), 3U);
    for (auto& [g, m] : fs) EXPECT_EQ(m, 1U);
}

TEST(FactorQ, RandomIrreducibleProducts) {
    oracle::Gen gen(14);
    int checked = 0;
    for (int it = 0; it < 60; ++it) {
        // random monic factors need not be irreducible, so only the round trip
        // and the absence of rational roots in nonlinear factors are checked here
        std::vector<QPoly> parts;
        int k = static_cast<int>(gen.integer(1, 3));
        for (int i = 0; i < k; ++i) parts.push_back(gen.monic_int_poly(gen.integer(1, 4), 5));
        QPoly f = qp({1});
        std::vector<unsigned> mult;
        for (auto& p : parts) {
            unsigned m = static_cast<unsigned>(gen.integer(1, 2));
            f *= p.pow(m);
            mult.push_back(m);
        }
        auto fs = factor_q(f);
        EXPECT_EQ(expand(fs), f);
        for (auto& [g, m] : fs) {
            EXPECT_EQ(g, g.monic());
            // every factor mod a good prime must not have a rational root unless linear
            if (g.degree() > 1) { EXPECT_TRUE(rational_roots(g).empty()); }
        }
        ++checked;
    }
    EXPECT_EQ(checked, 60);
}

TEST(FactorQ, KnownIrreducibleProducts) {
    // factors chosen irreducible by Eisenstein or by degree ≤ 3 with no rational root
    std::vector<QPoly> irr = {qp({2, 0, 1}), qp({-2, 0, 0, 1}), qp({3, 3, 0, 1}), qp({5, 0, 5, 0, 1}),
                              qp({1, 1, 1}), qp({-7, 1}), qp({1, -1, 0, 1})};
    oracle::Gen gen(15);
    for (int it = 0; it < 40; ++it) {
        std::map<std::size_t, unsigned> pick;
        int k = static_cast<int>(gen.integer(1, 4));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(gen.integer(0, 6))] += 1;
        QPoly f = qp({1});
        for (auto& [i, m] : pick) f *= irr[i].pow(m);
        auto fs = factor_q(f);
        ASSERT_EQ(fs.size(), pick.size());
        for (auto& [g, m] : fs) {
            bool found = false;
            for (auto& [i, mm] : pick)
                if (irr[i] == g) {
                    EXPECT_EQ(m, mm);
                    found = true;
                }
            EXPECT_TRUE(found) << g;
        }
    }
}

TEST(FactorFp, Examples) {
    auto f5 = factor_fp(fp_poly({1, 0, 1}, 5));
    ASSERT_EQ(f5.size(), 2U);
    EXPECT_EQ(f5[0].first, fp_poly({2, 1}, 5));
    EXPECT_EQ(f5[1].first, fp_poly({3, 1}, 5));
    auto f7 = factor_fp(fp_poly({1, 0, 1}, 7));
    ASSERT_EQ(f7.size(), 1U);
    EXPECT_EQ(f7[0].first, fp_poly({1, 0, 1}, 7));
    EXPECT_THROW(factor_fp(fp_poly({0}, 7)), arith_error);
}

TEST(FactorFp, RandomSplittingPolynomials) {
    oracle::Gen gen(16);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL, 1000003ULL}) {
        for (int it = 0; it < 20; ++it) {
            std::map<std::uint64_t, unsigned> roots;
            int k = static_cast<int>(gen.integer(1, 6));
            for (int i = 0; i < k; ++i)
                roots[static_cast<std::uint64_t>(gen.integer(0, static_cast<long>(std::min<std::uint64_t>(p - 1, 1000))))] +=
                    static_cast<unsigned>(gen.integer(1, 3));
            FpPoly f = fp_poly({static_cast<long>(gen.integer(1, 9))}, p);
            if (f.is_zero()) f = fp_poly({1}, p);
            for (auto& [r, m] : roots) f *= FpPoly({-FpElem(r, p), FpElem(1, p)}, FpElem(0, p)).pow(m);
            auto fs = factor_fp(f, 7);
            EXPECT_EQ(expand_fp(fs, p) * f.lead(), f);
            ASSERT_EQ(fs.size(), roots.size());
            for (auto& [g, m] : fs) {
                ASSERT_EQ(g.degree(), 1);
                EXPECT_EQ(m, roots.at((-g.coeff(0)).value()));
            }
        }
    }
}

TEST(FactorFp, IrreducibleBlocksAndSeedDeterminism) {
    // x^8 - 1 over F_3: (x-1)(x+1)(x^2+1)(x^2+x+2)(x^2+2x+2)
    FpPoly f = fp_poly({-1, 0, 0, 0, 0, 0, 0, 0, 1}, 3);
    auto a = factor_fp(f, 0), b = factor_fp(f, 99);
    ASSERT_EQ(a.size(), 5U);
    EXPECT_EQ(expand_fp(a, 3), f);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].first, b[i].first);
    // x^15 - 1 over F_2 has factor degrees 1, 2, 4, 4, 4
    FpPoly g = fp_poly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 2);
    auto c = factor_fp(g);
    std::vector<long> degs;
    for (auto& [h, m] : c) degs.push_back(h.degree());
    EXPECT_EQ(degs, (std::vector<long>{1, 2, 4, 4, 4}));
    EXPECT_EQ(expand_fp(c, 2), g);
}

TEST(Parse, Examples) {
    EXPECT_EQ(parse_poly("t^2 - 2*t + 1"), qp({1, -2, 1}));
    EXPECT_EQ(parse_poly("(t-1)*(t+1)"), qp({-1, 0, 1}));
    EXPECT_EQ(parse_poly("3/2*t^3"), QPoly({Rational(0), Rational(0), Rational(0), Rational(Integer(3), Integer(2))}));
    EXPECT_EQ(parse_ratfunc("1/(t-1) + 1/(t+1)"), RatFunc(qp({0, 2}), qp({-1, 0, 1})));
    EXPECT_EQ(parse_rational("-3/4"), Rational(Integer(-3), Integer(4)));
    EXPECT_EQ(parse_poly("-x^2", "x"), qp({0, 0, -1}));
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse_poly("t^2 + * 3");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 6U);
    }
    try {
        parse_poly("t^-1");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.position(), 2U);
    }
    EXPECT_THROW(parse_poly("1/t"), parse_error);
    EXPECT_THROW(parse_poly("(t+1"), parse_error);
    EXPECT_THROW(parse_poly("s+1"), parse_error);
    EXPECT_THROW(parse_rational("t"), parse_error);
    EXPECT_THROW(parse_ratfunc("1/(t-t)"), parse_error);
    EXPECT_THROW(parse_poly(""), parse_error);
}

TEST(RatFunc, CanonicalFormIsNormal) {
    oracle::Gen gen(17);
    for (int it = 0; it < 200; ++it) {
        RatFunc r = gen.ratfunc(4, 7);
        RatFunc again(r.num(), r.den());
        EXPECT_EQ(r, again);
        EXPECT_EQ(r.den(), r.den().monic());
        if (!r.is_zero()) { EXPECT_EQ(poly_gcd(r.num(), r.den()).degree(), 0); }
        // a·c / (b·c) reduces to the same representative
        QPoly c = gen.int_poly(gen.integer(1, 3), 5);
        if (c.is_zero()) continue;
        EXPECT_EQ(RatFunc(r.num() * c, r.den() * c * Rational(3)), RatFunc(r.num() * Rational(Integer(1), Integer(3)), r.den()));
    }
}

TEST(RatFunc, FieldIdentities) {
    oracle::Gen gen(18);
    for (int it = 0; it < 100; ++it) {
        RatFunc a = gen.ratfunc(3, 5), b = gen.ratfunc(3, 5), c = gen.nonzero_ratfunc(3, 5);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(a - a, RatFunc());
    }
}

TEST(Residue, QuotientFieldArithmetic) {
    auto mod = ResidueElem::make_modulus(qp({1, 0, 1}));  // Q(i)
    ResidueElem i(qp({0, 1}), mod);
    EXPECT_EQ(i * i, ResidueElem(Rational(-1), mod));
    ResidueElem z(qp({2, 3}), mod);
    EXPECT_EQ(z * z.inverse(), one_like(z));
    EXPECT_THROW(zero_like(z).inverse(), arith_error);
}

TEST(Bareiss, MatchesLeibnizOracle) {
    oracle::Gen gen(19);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
        DenseMatrix<Rational> M(n, std::vector<Rational>(n));
        for (auto& row : M)
            for (auto& v : row) v = gen.coin() ? gen.rational(9) : Rational(0);
        EXPECT_EQ(bareiss_determinant(M), oracle::leibniz_det(M));
    }
    for (int it = 0; it < 15; ++it) {
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
        DenseMatrix<RatFunc> M(n, std::vector<RatFunc>(n));
        for (auto& row : M)
            for (auto& v : row) v = gen.coin() ? gen.ratfunc(2, 4) : RatFunc();
        EXPECT_EQ(bareiss_determinant(M), oracle::leibniz_det(M));
    }
}

TEST(BinaryForms, ResultantMatchesRootProduct) {
    oracle::Gen gen(20);
    for (int it = 0; it < 50; ++it) {
        std::vector<Rational> r, s;
        for (long i = 0, k = gen.integer(1, 4); i < k; ++i) r.push_back(gen.rational(5));
        for (long i = 0, k = gen.integer(1, 4); i < k; ++i) s.push_back(gen.rational(5));
        Rational c = gen.nonzero_rational(4), e = gen.nonzero_rational(4);
        using BF = BinaryForm<Rational>;
        BF f = BF::constant(c), g = BF::constant(e);
        for (auto& x : r) f = f * BF::linear(Rational(1), -x);
        for (auto& x : s) g = g * BF::linear(Rational(1), -x);
        EXPECT_EQ(form_resultant(f, g), oracle::resultant_from_roots(c, r, e, s));
    }
}

TEST(BinaryForms, DiscriminantNormalization) {
    using BF = BinaryForm<Rational>;
    EXPECT_EQ(form_discriminant(BF({Rational(2), Rational(5), Rational(3)})), Rational(25 - 24));
    EXPECT_EQ(form_discriminant(BF::linear(Rational(1), Rational(-1)).pow(2)), Rational(0));
    // cubic: b²c² − 4ac³ − 4b³d − 27a²d² + 18abcd
    oracle::Gen gen(21);
    for (int it = 0; it < 30; ++it) {
        Rational a = gen.nonzero_rational(6), b = gen.rational(6), c = gen.rational(6), d = gen.rational(6);
        Rational expect = b * b * c * c - Rational(4) * a * c * c * c - Rational(4) * b * b * b * d -
                          Rational(27) * a * a * d * d + Rational(18) * a * b * c * d;
        EXPECT_EQ(form_discriminant(BF({a, b, c, d})), expect);
    }
    EXPECT_THROW(form_discriminant(BF::linear(Rational(1), Rational(1))), arith_error);
}

TEST(BinaryForms, GcdHandlesInfinityAndZero) {
    using BF = BinaryForm<Rational>;
    BF y2({Rational(0), Rational(0), Rational(1)});
    BF zero({Rational(0), Rational(0), Rational(0)});
    EXPECT_EQ(form_gcd(y2, zero), y2);
    BF xy({Rational(0), Rational(1), Rational(0)});  // XY
    EXPECT_EQ(form_gcd(xy, y2), BF({Rational(0), Rational(1)}));
    EXPECT_THROW(form_gcd(zero, zero), arith_error);
}

TEST(IntegerFactor, SmallAndLarge) {
    auto f = factor_integer(Integer(12));
    ASSERT_EQ(f.size(), 2U);
    EXPECT_EQ(f[0], std::make_pair(Integer(2), 2U));
    EXPECT_EQ(f[1], std::make_pair(Integer(3), 1U));
    // product of two ~10-digit primes goes through Pollard rho
    Integer a("1000000007"), b("9999999967");
    auto g = factor_integer(Integer(a * b * 25));
    ASSERT_EQ(g.size(), 3U);
    EXPECT_EQ(g[0].first, 5);
    EXPECT_EQ(g[1].first, a);
    EXPECT_EQ(g[2].first, b);
    EXPECT_EQ(integer_valuation(Integer(50), Integer(5)), 2);
}
