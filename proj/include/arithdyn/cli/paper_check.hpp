#pragma once

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arithdyn/cli/commands.hpp"
#include "arithdyn/cli/json_io.hpp"
#include "arithdyn/critical.hpp"
#include "arithdyn/dynsys/families.hpp"
#include "arithdyn/lattes.hpp"
#include "arithdyn/minimality/minimal_resultant.hpp"
#include "arithdyn/minimality/multiplier.hpp"
#include "arithdyn/stability.hpp"

namespace arithdyn::cli {

struct CheckRow {
    std::string id, section, location, computed, expected, status;
};

namespace detail {

inline CheckRow row(std::string id, std::string section, std::string location, std::string computed,
                    std::string expected, bool ok) {
    return {std::move(id), std::move(section), std::move(location), std::move(computed), std::move(expected),
            ok ? "pass" : "fail"};
}

inline std::string ints(const std::vector<long>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

inline std::string places_text(const Divisor& D) {
    std::string s = "{";
    bool first = true;
    for (const auto& [p, m] : D.terms()) {
        s += (first ? "" : ",") + p.to_string();
        first = false;
    }
    return s + "}";
}

class SeededInts {
public:
    explicit SeededInts(unsigned long long seed) : g_(seed) {}
    long operator()(long h) { return static_cast<long>(g_() % static_cast<unsigned long long>(2 * h + 1)) - h; }
    Rational rational(long h) {
        long d = 0;
        while (d == 0) d = (*this)(h);
        return Rational(Integer((*this)(h)), Integer(d));
    }

private:
    std::mt19937_64 g_;
};

inline const Example2Params kFamilyParams{Rational(2), Rational(3), Rational(Integer(-3), Integer(4))};

inline void examples_rows(std::vector<CheckRow>& out, unsigned long long seed) {
    const std::string sec = "examples";
    SeededInts rng(seed);

    {
        int ok = 0, total = 0;
        for (; total < 40; ++total) {
            const std::size_t d = 2 + static_cast<std::size_t>(total % 2);
            std::vector<Rational> a, b;
            for (std::size_t i = 0; i <= d; ++i) {
                a.push_back(rng.rational(10));
                b.push_back(rng.rational(10));
            }
            Model<Rational> m(d, a, b);
            Matrix2<Rational> g{rng.rational(5), rng.rational(5), rng.rational(5), rng.rational(5)};
            if (g.det().is_zero()) g = Matrix2<Rational>::diag(Rational(1), Rational(2));
            Rational lhs = sylvester_resultant(conjugate(m, g));
            Rational rhs = sylvester_resultant(m) * pow(g.det(), static_cast<long>(d * d + d));
            if (lhs == rhs) ++ok;
        }
        out.push_back(row("resultant-law", sec, "conjugation and the resultant", std::to_string(ok) + "/40 exact",
                          "40/40 exact", ok == 40));
    }
    {
        int ok = 0;
        for (int i = 0; i < 20; ++i) {
            Rational l1 = rng.rational(20), l2 = rng.rational(20);
            if ((Rational(1) - l1 * l2).is_zero()) l2 = l2 + Rational(1);
            if (sylvester_resultant(normal_form(l1, l2)) == Rational(1) - l1 * l2) ++ok;
        }
        out.push_back(row("normal-form-resultant", sec, "quadratic normal form", std::to_string(ok) + "/20",
                          "20/20 equal to 1 - l1*l2", ok == 20));
    }
    {
        int ok = 0;
        for (int i = 0; i < 20; ++i) {
            Model<Rational> m(2, {rng.rational(9), rng.rational(9), rng.rational(9)},
                              {rng.rational(9), rng.rational(9), rng.rational(9)});
            if (sylvester_resultant(m).is_zero()) {
                ++ok;
                continue;
            }
            auto md = multiplier_polynomial(m);
            if (md.sigma_i(1) == md.sigma_i(3) + Rational(2)) ++ok;
        }
        out.push_back(row("multiplier-relation", sec, "fixed-point multipliers, degree 2", std::to_string(ok) + "/20",
                          "20/20 with sigma1 = sigma3 + 2", ok == 20));
    }

    const Place t0 = Place::at(Rational(0));
    {
        Presentation<RatFunc> phi(example1(6));
        const long n0 = n_value(phi, t0);
        out.push_back(row("x2+t^-6:n-value", sec, "x^2 + t^-N family, N = 6", std::to_string(n0), "24", n0 == 24));
        Presentation<RatFunc> psi(conjugate(phi.model(), Matrix2<RatFunc>::diag(RatFunc(1L), RatFunc::t().pow(3))));
        const long n1 = n_value(psi, t0);
        out.push_back(row("x2+t^-6:conjugate", sec, "x^2 + t^-N family, diag(1, t^3)", std::to_string(n1), "6", n1 == 6));
    }

    const Example2Params& prm = kFamilyParams;
    for (long N = 1; N <= 8; ++N) {
        const std::string tag = "family-N=" + std::to_string(N);
        const std::string loc = "normal-form family a=2 b=3 b'=-3/4, N=" + std::to_string(N);
        Model<RatFunc> m = example2(N, prm);
        const RatFunc rho = sylvester_resultant(m);
        const RatFunc want = RatFunc(-prm.b * prm.bp) * RatFunc::t().pow(2 * N);
        out.push_back(row(tag + ":resultant", sec, loc, rho.to_string(), want.to_string(), rho == want));

        Presentation<RatFunc> phi(m);
        auto c0 = classify(reduce_presentation(phi, t0)).cls;
        auto ci = classify(reduce_presentation(phi, Place::infinity())).cls;
        out.push_back(row(tag + ":semistable", sec, loc,
                          std::string("t: ") + to_string(c0) + ", inf: " + to_string(ci), "semistable at t and inf",
                          is_semistable(c0) && is_semistable(ci)));

        auto md = multiplier_polynomial(phi);
        auto st = minimality_certificate(phi, t0, &md);
        const long vsum = valuation(md.sigma_i(1), t0) + valuation(phi.resultant(), t0);
        const std::string got = (st ? st->describe() : std::string("none")) + ", v(sigma1)+v(rho)=" + std::to_string(vsum);
        out.push_back(row(tag + ":certificate", sec, loc, got,
                          "CertifiedMinimal(MultiplierNumerator(sigma1, m=1)), v(sigma1)+v(rho)=0",
                          got == "CertifiedMinimal(MultiplierNumerator(sigma1, m=1)), v(sigma1)+v(rho)=0"));
        if (N == 1) {
            const RatFunc P = sigma1_numerator(m);
            const Rational c = P.is_polynomial() ? P.num().coeff(0) : Rational(0);
            out.push_back(row("family:sigma1-constant-term", sec, "normal-form family, rho*sigma1 at t = 0",
                              c.to_string(), "-1/2", c == Rational(Integer(-1), Integer(2))));
        }
        if (N <= 4) {
            auto rep = minimal_resultant(phi, 8);
            out.push_back(row(tag + ":minimal-resultant-at-t", sec, loc, std::to_string(rep.R.coeff(t0)),
                              std::to_string(2 * N), rep.R.coeff(t0) == 2 * N));
            const long g = rep.conductor.degree().geometric;
            out.push_back(row(tag + ":conductor-degree", sec, loc, std::to_string(g), "2", g == 2));
        }
    }

    const Place five = Place::prime(5);
    for (long N = 1; N <= 5; ++N) {
        const std::string tag = "nf-N=" + std::to_string(N);
        const std::string loc = "family over Q with t -> 5, N=" + std::to_string(N);
        Presentation<Rational> phi(number_field_family(Integer(5), N, prm));
        const long v5 = valuation(phi.resultant(), five);
        out.push_back(row(tag + ":v5-resultant", sec, loc, std::to_string(v5), std::to_string(2 * N), v5 == 2 * N));
        auto rep = minimal_resultant(phi, 8);
        std::string cert = "none";
        for (const auto& e : rep.places)
            if (e.place == five) cert = e.status.describe();
        out.push_back(row(tag + ":certificate-at-5", sec, loc, cert, "CertifiedMinimal(MultiplierNumerator(sigma1, m=1))",
                          cert == "CertifiedMinimal(MultiplierNumerator(sigma1, m=1))"));
        const std::string supp = places_text(rep.conductor);
        out.push_back(row(tag + ":conductor-support", sec, loc, supp, "{5}", supp == "{5}"));
        const double ln = rep.R.degree().lognorm, want = 2.0 * static_cast<double>(N) * std::log(5.0);
        std::ostringstream a, b;
        a.precision(12);
        b.precision(12);
        a << ln;
        b << want;
        out.push_back(row(tag + ":lognorm-degree", sec, loc, a.str(), b.str(), std::fabs(ln - want) < 1e-9));
    }
}

inline void lattes_rows(std::vector<CheckRow>& out) {
    const std::string sec = "lattes";
    const std::vector<std::pair<long, long>> curves{{0, 1}, {1, 1}, {1, 2}, {-1, 1}, {2, 3}};
    for (auto [a, b] : curves) {
        const std::string loc =
            "Lattes n=2 on y^2 = " + QPoly({Rational(b), Rational(a), Rational(0), Rational(1)}).to_string("x");
        EllipticCurve<Rational> E{Rational(a), Rational(b)};
        const Rational R = sylvester_resultant(lattes_model(E, 2));
        const Rational D = E.discriminant();
        const Rational ratio = R / (D * D);
        out.push_back(row("lattes-256:(" + std::to_string(a) + "," + std::to_string(b) + ")", sec, loc,
                          "R/D^2 = " + ratio.to_string(), "R/D^2 = 256", ratio == Rational(256)));
        if (a == 0 && b == 1)
            out.push_back(row("lattes-resultant-value:(0,1)", sec, loc, R.to_string(), "186624", R == Rational(186624)));

        const Rational A(a), B(b);
        auto f = division_polynomials(A, B, 4);
        const QPoly psi3({-A * A, Rational(12) * B, Rational(6) * A, Rational(0), Rational(3)});
        const QPoly psi4 = QPoly::constant(Rational(4)) *
                           QPoly({-Rational(8) * B * B - A * A * A, -Rational(4) * A * B, -Rational(5) * A * A,
                                  Rational(20) * B, Rational(5) * A, Rational(0), Rational(1)});
        const bool ok3 = f[2].even == psi3 && f[2].odd.is_zero();
        const bool ok4 = f[3].odd == psi4 && f[3].even.is_zero();
        out.push_back(row("division-base-cases:(" + std::to_string(a) + "," + std::to_string(b) + ")", sec, loc,
                          "psi3 = " + f[2].even.to_string("x") + ", psi4 = y*(" + f[3].odd.to_string("x") + ")",
                          "psi3 = 3x^4 + 6Ax^2 + 12Bx - A^2, psi4 = 4y(x^6 + 5Ax^4 + 20Bx^3 - 5A^2x^2 - 4ABx - 8B^2 - A^3)",
                          ok3 && ok4));
    }

    auto rep = nodal_analysis(Rational(1), 12, 0);
    {
        const QPoly lin({Rational(-1), Rational(1)});
        const QPoly want = QPoly::constant(Rational(3)) * lin.pow(3) * QPoly({Rational(3), Rational(1)});
        out.push_back(row("nodal-psi3", sec, "nodal cubic (x-1)^2(x+2)", rep.psi[2].to_string("x"),
                          want.to_string("x"), rep.psi[2] == want));
    }
    {
        const std::vector<long> table{2, 6, 12, 18, 26, 36, 48, 60};
        std::vector<long> got;
        bool ok = true;
        for (const auto& r : rep.rows)
            if (r.n <= 9) {
                got.push_back(r.two_v_psi);
                ok = ok && r.two_v_psi >= table[r.n - 2];
            }
        out.push_back(row("psi-table:n=2..9", sec, "nodal cubic, 2v(psi_n) table", ints(got),
                          ">= " + ints(table) + " entrywise", ok));
    }
    {
        bool ok = true;
        std::string first_bad = "all hold";
        for (const auto& r : rep.rows) {
            const long m = static_cast<long>(r.n / 2);
            if (m < 2) continue;
            const long lb = r.n % 2 == 0 ? 2 * m * m + 1 : 2 * (m * m + m + 1);
            if (r.two_v_psi < lb && ok) {
                ok = false;
                first_bad = "n=" + std::to_string(r.n) + ": " + std::to_string(r.two_v_psi) + " < " + std::to_string(lb);
            }
        }
        out.push_back(row("psi-lower-bounds:n<=12", sec, "nodal cubic, lower bounds on 2v(psi_n)", first_bad, "all hold", ok));
    }
    {
        std::vector<long> got, want;
        bool ok = true;
        for (const auto& r : rep.rows)
            if (r.n >= 3 && r.n <= 9) {
                got.push_back(r.M);
                want.push_back(r.bound);
                ok = ok && r.M >= r.bound;
            }
        out.push_back(row("common-root-order:n=3..9", sec, "nodal cubic, order of the common root", ints(got),
                          ">= " + ints(want) + " entrywise", ok));
    }
    for (long l : {1L, 2L, -1L}) {
        auto nr = nodal_analysis(Rational(l), 4, 4);
        std::string got;
        bool ok = true;
        for (const auto& r : nr.rows) {
            got += (got.empty() ? "" : ", ") + std::string("n=") + std::to_string(r.n) + ": " + to_string(*r.cls);
            ok = ok && *r.cls == StabilityClass::Unstable;
        }
        out.push_back(row("nodal-unstable:lambda=" + std::to_string(l), sec, "reduced Lattes maps on a nodal cubic", got,
                          "Unstable for n = 2, 3, 4", ok));
        const auto& w = nr.rows[0].stability->witness;
        const std::string wt = w ? "(" + w->factor + ")^" + std::to_string(w->multiplicity) + (w->fixed ? ", fixed" : ", not fixed")
                                 : "none";
        const std::string ww = "(" + QPoly({Rational(-l), Rational(1)}).to_string("x") + ")^2, fixed";
        out.push_back(row("nodal-witness:lambda=" + std::to_string(l), sec, "reduced Lattes map n=2 on a nodal cubic", wt,
                          ww, wt == ww));
    }
}

/// Example-2 critical points (−1 ± (b/a)t^N)/λ2 and their images, reduced
/// place by place.
inline bool pointwise_bad(const Model<RatFunc>& m, long N, const Example2Params& prm, const Place& p) {
    const RatFunc l2 = m.b[1];
    const RatFunc s = RatFunc(prm.b / prm.a) * RatFunc::t().pow(N);
    ProjPoint<RatFunc> P{RatFunc(-1L) + s, l2}, Q{RatFunc(-1L) - s, l2};
    auto image = [&](const ProjPoint<RatFunc>& X) {
        return ProjPoint<RatFunc>{m.form_a()(X.alpha, X.beta), m.form_b()(X.alpha, X.beta)};
    };
    return reduce_point(P, p) == reduce_point(Q, p) || reduce_point(image(P), p) == reduce_point(image(Q), p);
}

inline void critical_rows(std::vector<CheckRow>& out) {
    const std::string sec = "critical";
    const Example2Params& prm = kFamilyParams;
    for (long N = 1; N <= 4; ++N) {
        const std::string loc = "critical bad reduction, normal-form family N=" + std::to_string(N);
        Model<RatFunc> m = example2(N, prm);
        Presentation<RatFunc> phi(m);
        auto rep = critical_conductor(phi);
        const Place t0 = Place::at(Rational(0));
        const long vt = rep.points_discriminant ? rep.points_discriminant->coeff(t0) : 0;
        out.push_back(row("critical-disc-at-t:N=" + std::to_string(N), sec, loc, std::to_string(vt),
                          std::to_string(2 * N), vt == 2 * N));

        // places to compare: both discriminant supports, plus the zeros of a⁻¹ + b′t^N
        Divisor probe;
        if (rep.points_discriminant) probe = probe + rep.points_discriminant->reduced();
        if (rep.values_discriminant) probe = probe + rep.values_discriminant->reduced();
        QPoly h = QPoly::constant(prm.bp) * QPoly::x(Rational(1)).pow(static_cast<unsigned long>(N)) +
                  QPoly::constant(prm.a.inverse());
        for (const auto& [g, e] : factor_q(h)) probe.add(Place::finite(g, true), 1);
        probe.add(t0, 1);
        probe.add(Place::infinity(), 1);
        bool agree = true;
        std::string mism;
        for (const auto& p : probe.support()) {
            const bool pw = pointwise_bad(m, N, prm, p);
            const bool dc = rep.conductor.coeff(p) > 0;
            if (pw != dc) {
                agree = false;
                mism += (mism.empty() ? "" : ",") + p.to_string();
            }
        }
        out.push_back(row("critical-oracle-agreement:N=" + std::to_string(N), sec, loc,
                          agree ? "agree at " + std::to_string(probe.support().size()) + " places" : "disagree at " + mism,
                          "discriminant and pointwise computations agree", agree));

        if (N == 3) {
            const long count = rep.conductor.degree().geometric;
            CheckRow r{"critical-count:N=3", sec, "number of critical bad reduction places, N=3",
                       std::to_string(count) + " " + places_text(rep.conductor), ">= " + std::to_string(N + 1), ""};
            if (count >= N + 1) r.status = agree ? "pass" : "fail";
            else r.status = agree ? "discrepancy-documented" : "fail";
            out.push_back(r);
        }
    }
}

}  // namespace detail

inline std::vector<CheckRow> paper_check_rows(const std::string& section, unsigned long long seed) {
    if (section != "all" && section != "examples" && section != "lattes" && section != "critical")
        throw validation_error("unknown section '" + section + "' (expected all, examples, lattes or critical)");
    std::vector<CheckRow> rows;
    if (section == "all" || section == "examples") detail::examples_rows(rows, seed);
    if (section == "all" || section == "lattes") detail::lattes_rows(rows);
    if (section == "all" || section == "critical") detail::critical_rows(rows);
    return rows;
}

inline json paper_check_json(const std::vector<CheckRow>& rows, const std::string& section, const RunOptions& opt) {
    json out = header("paper-check", opt);
    out["section"] = section;
    json arr = json::array();
    long pass = 0, fail = 0, doc = 0;
    for (const auto& r : rows) {
        arr.push_back(json{{"id", r.id},
                           {"section", r.section},
                           {"location", r.location},
                           {"computed", r.computed},
                           {"expected", r.expected},
                           {"status", r.status}});
        if (r.status == "pass") ++pass;
        else if (r.status == "fail") ++fail;
        else ++doc;
    }
    out["rows"] = arr;
    out["summary"] = json{{"pass", pass}, {"fail", fail}, {"discrepancy-documented", doc}};
    return out;
}

inline std::string paper_check_tsv(const std::vector<CheckRow>& rows) {
    std::string s = "id\tsection\tlocation\tcomputed\texpected\tstatus\n";
    for (const auto& r : rows)
        s += r.id + '\t' + r.section + '\t' + r.location + '\t' + r.computed + '\t' + r.expected + '\t' + r.status + '\n';
    return s;
}

}  // namespace arithdyn::cli
