#include <gtest/gtest.h>

#include <optional>

#include "arithdyn/lattes.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace arithdyn;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

QPoly qp(const std::vector<Rational>& low_to_high) { return QPoly(low_to_high); }

// affine point on y² = x³ + Ax + B; nullopt is the point at infinity
using Pt = std::optional<std::pair<Rational, Rational>>;

Pt add(const Pt& P, const Pt& Q, const Rational& A) {
    if (!P) return Q;
    if (!Q) return P;
    auto [x1, y1] = *P;
    auto [x2, y2] = *Q;
    Rational s;
    if (x1 == x2) {
        if ((y1 + y2).is_zero()) return std::nullopt;
        s = (Rational(3) * x1 * x1 + A) / (Rational(2) * y1);
    } else {
        s = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = s * s - x1 - x2;
    return std::make_pair(x3, s * (x1 - x3) - y1);
}

// 2d × 2d Sylvester matrix built directly from the coefficient lists
std::vector<std::vector<Rational>> sylvester_by_hand(const Model<Rational>& m) {
    const std::size_t d = m.d;
    std::vector<std::vector<Rational>> M(2 * d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) {
            M[i][i + j] = m.a[j];
            M[d + i][i + j] = m.b[j];
        }
    return M;
}

}  // namespace

TEST(DivisionPolynomials, PrintedBaseCases) {
    oracle::Gen g(31);
    for (int it = 0; it < 10; ++it) {
        Rational A = g.rational(9), B = g.rational(9);
        auto psi = division_polynomials(A, B, 4);
        EXPECT_TRUE(psi[0].odd.is_zero());
        EXPECT_EQ(psi[0].even, qp({Rational(1)}));
        EXPECT_TRUE(psi[1].even.is_zero());
        EXPECT_EQ(psi[1].odd, qp({Rational(2)}));
        EXPECT_EQ(psi[2].even, qp({-A * A, Rational(12) * B, Rational(6) * A, Rational(0), Rational(3)}));
        EXPECT_TRUE(psi[2].odd.is_zero());
        QPoly inner = qp({Rational(-8) * B * B - A * A * A, Rational(-4) * A * B, Rational(-5) * A * A, Rational(20) * B,
                          Rational(5) * A, Rational(0), Rational(1)});
        EXPECT_EQ(psi[3].odd, QPoly::constant(Rational(4)) * inner);
        EXPECT_TRUE(psi[3].even.is_zero());
    }
}

TEST(DivisionPolynomials, ParityAndDegrees) {
    Rational A(2), B(-3);
    auto P = EllipticCurve<Rational>(A, B).cubic();
    auto psi = division_polynomials(A, B, 12);
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto& c = psi[n - 1];
        if (n % 2 == 1) EXPECT_TRUE(c.odd.is_zero()) << n;
        else EXPECT_TRUE(c.even.is_zero()) << n;
        EXPECT_EQ(c.square_in_x(P).degree(), static_cast<long>(n * n) - 1) << n;
    }
}

TEST(DivisionPolynomials, CurveMultiplicationMatchesRecurrence) {
    // Ψ2·Ψ2 = 4y² = 4P, a pure x-polynomial
    Rational A(1), B(1);
    auto P = EllipticCurve<Rational>(A, B).cubic();
    auto psi = division_polynomials(A, B, 4);
    auto sq = curve_mul(psi[1], psi[1], P);
    EXPECT_TRUE(sq.odd.is_zero());
    EXPECT_EQ(sq.even, QPoly::constant(Rational(4)) * P);
}

TEST(Lattes, MultiplicationByNMatchesGroupLaw) {
    // curves through a chosen rational point, checked against repeated addition
    struct Case { long A, x0, y0; };
    for (auto c : {Case{0, 3, 5}, Case{0, -2, 3}, Case{-2, 2, 3}, Case{1, 1, 2}, Case{-7, 3, 5}}) {
        Rational A(c.A), x0(c.x0), y0(c.y0);
        Rational B = y0 * y0 - x0 * x0 * x0 - A * x0;
        EllipticCurve<Rational> E(A, B);
        Pt P = std::make_pair(x0, y0), acc = P;
        for (std::size_t n = 2; n <= 6; ++n) {
            acc = add(acc, P, A);
            if (!acc) break;  // torsion point, nothing more to compare
            auto [num, den] = lattes_fraction(A, B, n);
            ASSERT_FALSE(den(x0).is_zero());
            EXPECT_EQ(num(x0) / den(x0), acc->first) << "A=" << c.A << " n=" << n;
        }
    }
}

TEST(Lattes, DegreeTwoClosedForm) {
    oracle::Gen g(32);
    for (int it = 0; it < 10; ++it) {
        Rational A = g.rational(6), B = g.rational(6);
        auto [num, den] = lattes_fraction(A, B, 2);
        EXPECT_EQ(num, qp({A * A, Rational(-8) * B, Rational(-2) * A, Rational(0), Rational(1)}));
        EXPECT_EQ(den, qp({Rational(4) * B, Rational(4) * A, Rational(0), Rational(4)}));
    }
}

TEST(Lattes, ResultantIs256DSquared) {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {1, 2}, {-1, 1}, {2, 3}, {-2, 5}, {3, -4}}) {
        EllipticCurve<Rational> E{Rational(a), Rational(b)};
        auto m = lattes_model(E, 2);
        const Rational D = E.discriminant();
        EXPECT_EQ(sylvester_resultant(m), Rational(256) * D * D);
        EXPECT_EQ(oracle::leibniz_det(sylvester_by_hand(m)), Rational(256) * D * D);
    }
    EllipticCurve<Rational> E{Rational(0), Rational(1)};
    EXPECT_EQ(sylvester_resultant(lattes_model(E, 2)), Rational(186624));
    EXPECT_EQ(lattes_map(E, 2).resultant(), Rational(186624));
}

TEST(Lattes, DegreeIsNSquared) {
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {-1, 3}, {2, -1}}) {
        EllipticCurve<Rational> E{Rational(a), Rational(b)};
        for (std::size_t n = 2; n <= 4; ++n) {
            auto [num, den] = lattes_fraction(E.A, E.B, n);
            EXPECT_EQ(num.degree(), static_cast<long>(n * n));
            EXPECT_EQ(den.degree(), static_cast<long>(n * n) - 1);
            EXPECT_EQ(poly_gcd(num, den).degree(), 0);
        }
        auto phi3 = lattes_map(E, 3);
        EXPECT_EQ(phi3.degree(), 9u);
        EXPECT_FALSE(phi3.resultant().is_zero());
    }
}

TEST(Lattes, SingularCurveRejected) {
    EXPECT_THROW(EllipticCurve<Rational>(Rational(-3), Rational(2)), validation_error);
    EXPECT_THROW(EllipticCurve<Rational>(Rational(0), Rational(0)), validation_error);
}

TEST(Nodal, PsiFactorizations) {
    for (Rational l : {q(1), q(2), q(-1), q(1, 2)}) {
        auto rep = nodal_analysis(l, 4, 0);
        QPoly lin({-l, Rational(1)});
        EXPECT_EQ(rep.psi[2], QPoly::constant(Rational(3)) * lin.pow(3) * QPoly({Rational(3) * l, Rational(1)}));
        EXPECT_EQ(rep.psi[3], QPoly::constant(Rational(4)) * lin.pow(5) * QPoly({Rational(5) * l, Rational(1)}));
    }
}

TEST(Nodal, ValuationTableAndLowerBounds) {
    const std::vector<long> table{2, 6, 12, 18, 26, 36, 48, 60};
    for (Rational l : {q(1), q(2), q(-1)}) {
        auto rep = nodal_analysis(l, 12, 0);
        ASSERT_EQ(rep.rows.size(), 11u);
        for (const auto& row : rep.rows) {
            if (row.n <= 9) { EXPECT_GE(row.two_v_psi, table[row.n - 2]) << row.n; }
            const long m = static_cast<long>(row.n / 2);
            if (m >= 2) {
                if (row.n % 2 == 0) EXPECT_GE(row.two_v_psi, 2 * m * m + 1) << row.n;
                else EXPECT_GE(row.two_v_psi, 2 * (m * m + m + 1)) << row.n;
            }
            if (row.n >= 3) { EXPECT_GE(row.M, row.bound) << row.n; }
        }
    }
}

TEST(Nodal, ReducedMapsAreUnstable) {
    for (Rational l : {q(1), q(2), q(-1)}) {
        auto rep = nodal_analysis(l, 4, 4);
        for (const auto& row : rep.rows) {
            ASSERT_TRUE(row.cls.has_value());
            EXPECT_EQ(*row.cls, StabilityClass::Unstable) << row.n;
        }
        const auto& w = rep.rows[0].stability->witness;
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->multiplicity, 2u);
        EXPECT_TRUE(w->fixed);
        EXPECT_EQ(w->factor, QPoly({-l, Rational(1)}).to_string("x"));
    }
    EXPECT_THROW(nodal_analysis(Rational(0)), validation_error);
}
