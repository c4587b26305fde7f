#include <gtest/gtest.h>

#include "arithdyn/critical.hpp"
#include "arithdyn/dynsys/families.hpp"
#include "support/builders.hpp"
#include "support/critical_oracle.hpp"
#include "support/oracles.hpp"

using namespace arithdyn;

namespace {

const Example2Params kEx2{Rational(2), Rational(3), Rational(Integer(-3), Integer(4))};
const Place kT = Place::at(Rational(0));

BinaryForm<Rational> qform(const std::vector<Rational>& c) { return BinaryForm<Rational>(c, Rational()); }

}  // namespace

TEST(Wronskian, NormalFormAndPowerMap) {
    oracle::Gen g(41);
    for (int it = 0; it < 10; ++it) {
        Rational l1 = g.rational(7), l2 = g.rational(7);
        EXPECT_EQ(wronskian(normal_form(l1, l2)), qform({Rational(2) * l2, Rational(4), Rational(2) * l1}));
    }
    EXPECT_EQ(wronskian(testutil::q_model(2, {1, 0, 0}, {0, 0, 1})), qform({Rational(0), Rational(4), Rational(0)}));
}

TEST(Wronskian, DegreeAndExample2Roots) {
    oracle::Gen g(42);
    for (std::size_t d = 2; d <= 4; ++d) EXPECT_EQ(wronskian(testutil::random_q_model(g, d, 5)).degree(), 2 * d - 2);
    for (long N = 1; N <= 3; ++N) {
        auto W = wronskian(example2(N, kEx2));
        auto c = oracle::example2_critical_points(N, kEx2);
        EXPECT_TRUE(W(c.P.alpha, c.P.beta).is_zero());
        EXPECT_TRUE(W(c.Q.alpha, c.Q.beta).is_zero());
    }
}

TEST(Discriminant, QuadraticsAndRepeatedRoots) {
    oracle::Gen g(43);
    for (int it = 0; it < 10; ++it) {
        Rational a = g.rational(9), b = g.rational(9), c = g.rational(9);
        EXPECT_EQ(binary_form_discriminant(qform({a, b, c})), b * b - Rational(4) * a * c);
    }
    EXPECT_TRUE(binary_form_discriminant(qform({Rational(1), Rational(-2), Rational(1)})).is_zero());
    EXPECT_THROW(binary_form_discriminant(qform({Rational(1), Rational(3)})), arith_error);
    for (int it = 0; it < 5; ++it) {
        Rational l1 = g.rational(7), l2 = g.rational(7);
        EXPECT_EQ(binary_form_discriminant(wronskian(normal_form(l1, l2))), Rational(16) * (Rational(1) - l1 * l2));
    }
}

TEST(Discriminant, CubicMatchesRootProduct) {
    oracle::Gen g(44);
    for (int it = 0; it < 10; ++it) {
        Rational c = g.nonzero_rational(5), r1 = g.rational(6), r2 = g.rational(6), r3 = g.rational(6);
        // c(X − r1Y)(X − r2Y)(X − r3Y)
        auto f = BinaryForm<Rational>::linear(c, -c * r1) * BinaryForm<Rational>::linear(Rational(1), -r2) *
                 BinaryForm<Rational>::linear(Rational(1), -r3);
        Rational expect = c * c * c * c * (r1 - r2) * (r1 - r2) * (r1 - r3) * (r1 - r3) * (r2 - r3) * (r2 - r3);
        EXPECT_EQ(binary_form_discriminant(f), expect);
    }
}

TEST(Pushforward, PowerMapAndNormalForm) {
    auto pf = pushforward_form(qform({Rational(0), Rational(1), Rational(0)}), testutil::q_model(2, {1, 0, 0}, {0, 0, 1}));
    EXPECT_TRUE(testutil::projectively_equal(pf.coeffs(), {Rational(0), Rational(1), Rational(0)}));
    oracle::Gen g(45);
    for (int it = 0; it < 10; ++it) {
        Rational l1 = g.rational(7), l2 = g.rational(7);
        if ((l1 * l2).is_one()) continue;
        auto m = normal_form(l1, l2);
        auto pf2 = pushforward_form(wronskian(m), m);
        std::vector<Rational> expect{l2 * l2, -(Rational(2) * l1 * l2 - Rational(4)), l1 * l1};
        EXPECT_TRUE(testutil::projectively_equal(pf2.coeffs(), expect)) << l1 << " " << l2;
    }
}

TEST(Pushforward, PointwiseImagesOfRationalRoots) {
    oracle::Gen g(46);
    for (int it = 0; it < 15; ++it) {
        auto m = testutil::random_q_model(g, 2 + it % 2, 5);
        if (sylvester_resultant(m).is_zero()) continue;
        Rational r1 = g.rational(4), r2 = g.rational(4);
        if (r1 == r2) continue;
        auto w = BinaryForm<Rational>::linear(Rational(1), -r1) * BinaryForm<Rational>::linear(Rational(1), -r2);
        auto pf = pushforward_form(w, m);
        for (const auto& r : {r1, r2}) {
            Rational Z = m.form_a()(r, Rational(1)), T = m.form_b()(r, Rational(1));
            EXPECT_TRUE(pf(Z, T).is_zero());
        }
    }
}

TEST(ReducePoint, Examples) {
    RatFunc t = RatFunc::t();
    auto r1 = reduce_point(ProjPoint<RatFunc>{t, RatFunc(1L)}, kT);
    EXPECT_FALSE(r1.infinite);
    EXPECT_TRUE(r1.x->rational_value().is_zero());
    auto r2 = reduce_point(ProjPoint<RatFunc>{RatFunc(1L) / t, RatFunc(1L)}, kT);
    EXPECT_TRUE(r2.infinite);
    // scaling the representative does not change the reduction
    auto r3 = reduce_point(ProjPoint<RatFunc>{t * t * RatFunc(Rational(3)), t * t * t + t * t}, kT);
    EXPECT_EQ(r3.x->rational_value(), Rational(3));
    auto rq = reduce_point(ProjPoint<Rational>{Rational(Integer(10), Integer(3)), Rational(25)}, Place::prime(5));
    EXPECT_TRUE(rq.infinite);

    for (long N = 1; N <= 3; ++N) {
        auto c = oracle::example2_critical_points(N, kEx2);
        EXPECT_EQ(reduce_point(c.P, kT), reduce_point(c.Q, kT));
    }
}

TEST(CriticalConductor, PowerMapIsEmpty) {
    Presentation<RatFunc> phi(testutil::rf_model(2, {"1", "0", "0"}, {"0", "0", "1"}));
    auto rep = critical_conductor(phi);
    EXPECT_TRUE(rep.conductor.is_zero());
}

TEST(CriticalConductor, Example2) {
    for (long N = 1; N <= 4; ++N) {
        Presentation<RatFunc> phi(example2(N, kEx2));
        auto rep = critical_conductor(phi);
        ASSERT_TRUE(rep.points_discriminant.has_value());
        EXPECT_EQ(rep.points_discriminant->coeff(kT), 2 * N);
        EXPECT_GT(rep.conductor.coeff(kT), 0);
        EXPECT_GT(rep.conductor.coeff(Place::infinity()), 0);
        ASSERT_TRUE(rep.values_discriminant.has_value());
        EXPECT_GT(rep.values_discriminant->coeff(Place::infinity()), 0);
        // only these two places
        EXPECT_EQ(rep.conductor.degree().geometric, 2);
    }
}

TEST(CriticalConductor, AgreesWithPointwiseOracle) {
    for (long N = 1; N <= 4; ++N) {
        Presentation<RatFunc> phi(example2(N, kEx2));
        auto rep = critical_conductor(phi);
        auto c = oracle::example2_critical_points(N, kEx2);
        Divisor support = rep.points_discriminant->reduced() + rep.values_discriminant->reduced();
        for (const auto& p : support.support()) {
            auto v = oracle::pointwise_verdict(c, p);
            EXPECT_EQ(v.bad(), rep.conductor.coeff(p) > 0) << p.to_string();
        }
        for (const auto& p : rep.conductor.support()) EXPECT_GT(support.coeff(p), 0);
    }
}

TEST(CriticalConductor, OverRationals) {
    // x² + 3: critical points 0, ∞ with images 3, ∞, which stay apart at every prime
    Presentation<Rational> phi(testutil::q_model(2, {1, 0, 3}, {0, 0, 1}));
    auto rep = critical_conductor(phi);
    EXPECT_TRUE(rep.conductor.is_zero());
    // x² + 1/3: the critical value 1/3 reduces to ∞ at 3, colliding with φ(∞) = ∞
    Presentation<Rational> psi(testutil::q_model(2, {3, 0, 1}, {0, 0, 3}));
    auto rep2 = critical_conductor(psi);
    EXPECT_EQ(rep2.conductor.coeff(Place::prime(3)), 1);
    EXPECT_EQ(rep2.conductor.degree().geometric, 1);
}
