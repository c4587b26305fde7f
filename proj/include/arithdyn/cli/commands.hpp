#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arithdyn/cli/json_io.hpp"
#include "arithdyn/critical.hpp"
#include "arithdyn/dynsys/families.hpp"
#include "arithdyn/lattes.hpp"
#include "arithdyn/minimality/minimal_resultant.hpp"
#include "arithdyn/stability.hpp"

namespace arithdyn::cli {

struct RunOptions {
    long budget = 8;
    unsigned long long seed = 0;
    bool skip_critical = false;
};

inline json header(const std::string& command, const RunOptions& opt) {
    return json{{"schema", kSchemaVersion}, {"tool", "arithdyn"},     {"version", kToolVersion},
                {"command", command},       {"seed", opt.seed},      {"budget", opt.budget}};
}

inline json stability_json(const StabilityResult& r) {
    json w = nullptr;
    if (r.witness)
        w = json{{"factor", r.witness->factor}, {"multiplicity", r.witness->multiplicity}, {"fixed", r.witness->fixed}};
    return json{{"class", to_string(r.cls)},
                {"common_factor", r.common_factor},
                {"canceled_map", r.canceled_map},
                {"witness", w}};
}

inline json status_json(const MinimalityStatus& s) {
    json c = nullptr;
    if (s.certificate) {
        c = json{{"kind", s.certificate->describe()}};
        if (s.certificate->kind == CertificateKind::MultiplierNumerator) {
            c["sigma_index"] = s.certificate->index;
            c["denominator_power"] = s.certificate->power;
        }
    }
    return json{{"result", s.certified ? "CertifiedMinimal" : "BestFound"},
                {"value", s.value},
                {"certificate", c},
                {"budget_exhausted", s.budget_exhausted}};
}

template <class K>
json minimal_json(const MinimalResultantReport<K>& rep) {
    json places = json::array();
    for (const auto& e : rep.places)
        places.push_back(json{{"place", place_json(e.place)},
                              {"n_value", e.n_value},
                              {"epsilon", e.epsilon},
                              {"status", status_json(e.status)},
                              {"presentation", map_description_json(e.presentation)}});
    return json{{"minimal_resultant", divisor_json(rep.R)},
                {"minimal_resultant_degree", degree_json(rep.R)},
                {"conductor", divisor_json(rep.conductor)},
                {"conductor_degree", degree_json(rep.conductor)},
                {"all_certified", rep.all_certified()},
                {"places", places}};
}

template <class K>
json form_json(const BinaryForm<K>& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(element_json(c));
    return arr;
}

inline const char* condition_key(CriticalCondition c) {
    switch (c) {
        case CriticalCondition::Points: return "points";
        case CriticalCondition::Values: return "values";
        case CriticalCondition::Both: return "both";
    }
    return "";
}

template <class K>
json critical_json(const CriticalConductorReport<K>& rep) {
    json attr = json::array();
    for (const auto& [p, c] : rep.attribution) attr.push_back(json{{"place", place_json(p)}, {"condition", condition_key(c)}});
    auto opt_div = [](const std::optional<Divisor>& D) -> json { return D ? divisor_json(*D) : json(nullptr); };
    return json{{"frame", rep.frame},
                {"conductor", divisor_json(rep.conductor)},
                {"conductor_degree", degree_json(rep.conductor)},
                {"attribution", attr},
                {"critical_form", form_json(rep.critical_form)},
                {"value_form", form_json(rep.value_form)},
                {"points_discriminant", opt_div(rep.points_discriminant)},
                {"values_discriminant", opt_div(rep.values_discriminant)}};
}

template <class K>
json class_divisor_json(const Presentation<K>& phi, const Divisor& R) {
    try {
        Divisor A = wclass_divisor(phi.model(), R);
        return json{{"divisor", divisor_json(A)}, {"degree", degree_json(A)}};
    } catch (const validation_error& e) {
        return json{{"error", e.what()}};
    }
}

/// Full pipeline: resultant divisor, reduction type per place, minimal
/// resultant with certificates or descent, conductor, critical conductor.
template <class K>
json analyze_json(const Presentation<K>& phi, const RunOptions& opt) {
    json out = header("analyze", opt);
    out["presentation"] = map_description_json(phi);
    out["resultant"] = element_json(phi.resultant());
    const Divisor R = resultant_divisor(phi);
    out["resultant_divisor"] = divisor_json(R);
    out["resultant_divisor_degree"] = degree_json(R);

    auto ss = is_semistable_presentation(phi);
    json places = json::array();
    for (const auto& [p, r] : ss.places) {
        json row{{"place", place_json(p)}, {"n_value", R.coeff(p)}};
        row.update(stability_json(r));
        places.push_back(row);
    }
    out["reduction"] = json{{"semistable_presentation", ss.semistable}, {"places", places}};

    auto mr = minimal_resultant(phi, opt.budget);
    out["minimality"] = minimal_json(mr);
    out["conductor"] = divisor_json(mr.conductor);
    out["conductor_degree"] = degree_json(mr.conductor);
    out["class_divisor"] = class_divisor_json(phi, mr.R);
    if (opt.skip_critical) out["critical"] = json{{"skipped", true}};
    else out["critical"] = critical_json(critical_conductor(phi));
    return out;
}

template <class K>
json minimal_command_json(const Presentation<K>& phi, const RunOptions& opt) {
    json out = header("minimal", opt);
    out["presentation"] = map_description_json(phi);
    out.update(minimal_json(minimal_resultant(phi, opt.budget)));
    return out;
}

template <class K>
json critical_command_json(const Presentation<K>& phi, const RunOptions& opt) {
    json out = header("critical", opt);
    out["presentation"] = map_description_json(phi);
    out.update(critical_json(critical_conductor(phi)));
    return out;
}

/// One line per place: resultant N, reduction class, ε, status, critical condition.
template <class K>
std::string analyze_tsv(const Presentation<K>& phi, const RunOptions& opt) {
    const Divisor R = resultant_divisor(phi);
    auto mr = minimal_resultant(phi, opt.budget);
    std::optional<CriticalConductorReport<K>> cr;
    if (!opt.skip_critical) cr = critical_conductor(phi);
    std::set<Place> all;
    for (const auto& p : R.support()) all.insert(p);
    if (cr)
        for (const auto& p : cr->conductor.support()) all.insert(p);
    std::ostringstream os;
    os << "place\tn_value\treduction\tepsilon\tstatus\tcritical\n";
    for (const auto& p : all) {
        os << p.to_string() << '\t' << R.coeff(p) << '\t';
        os << (R.coeff(p) != 0 ? to_string(classify(reduce_presentation(phi, p)).cls) : "good") << '\t';
        const PlaceMinimality<K>* pm = nullptr;
        for (const auto& e : mr.places)
            if (e.place == p) pm = &e;
        if (pm) os << pm->epsilon << '\t' << pm->status.describe();
        else os << 0 << '\t' << "-";
        os << '\t';
        std::string c = "-";
        if (cr)
            for (const auto& [q, cond] : cr->attribution)
                if (q == p) c = condition_key(cond);
        os << c << '\n';
    }
    return os.str();
}

template <class K>
std::string minimal_tsv(const Presentation<K>& phi, const RunOptions& opt) {
    auto mr = minimal_resultant(phi, opt.budget);
    std::ostringstream os;
    os << "place\tn_value\tepsilon\tstatus\n";
    for (const auto& e : mr.places)
        os << e.place.to_string() << '\t' << e.n_value << '\t' << e.epsilon << '\t' << e.status.describe() << '\n';
    return os.str();
}

template <class K>
std::string critical_tsv(const Presentation<K>& phi) {
    auto cr = critical_conductor(phi);
    std::ostringstream os;
    os << "place\tcondition\n";
    for (const auto& [p, c] : cr.attribution) os << p.to_string() << '\t' << condition_key(c) << '\n';
    return os.str();
}

struct FamilyOptions {
    std::string kind;  // ex1, ex2, nf-number-field
    long N = 1;
    std::optional<std::string> a, b, bp;
    std::string p = "5";
};

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

/// (a, b, b′) with b′ forced by a·b′ + b/a = 0 when not given; throws with
/// every failed constraint otherwise.
inline Example2Params family_params(const FamilyOptions& f) {
    Example2Params prm{parse_rational(f.a.value_or("2")), parse_rational(f.b.value_or("3")), Rational(0)};
    if (prm.a.is_zero()) throw validation_error("family constraints violated: a != 0 fails");
    prm.bp = f.bp ? parse_rational(*f.bp) : example2_forced_bp(prm.a, prm.b);
    auto bad = example2_violations(prm);
    if (!bad.empty()) throw validation_error("family constraints violated: " + join(bad, "; "));
    return prm;
}

/// MapDescription of the canonical presentation, plus the family parameters
/// (ignored when the file is read back).
inline json family_json(const FamilyOptions& f) {
    if (f.N < 1) throw validation_error("family parameter N must be at least 1");
    json params{{"N", f.N}};
    json desc;
    if (f.kind == "ex1") {
        if (f.a || f.b || f.bp) throw validation_error("ex1 takes only --N");
        desc = map_description_json(Presentation<RatFunc>(example1(f.N)));
    } else if (f.kind == "ex2") {
        Example2Params prm = family_params(f);
        params["a"] = prm.a.to_string();
        params["b"] = prm.b.to_string();
        params["bp"] = prm.bp.to_string();
        desc = map_description_json(Presentation<RatFunc>(example2(f.N, prm)));
    } else if (f.kind == "nf-number-field") {
        Example2Params prm = family_params(f);
        Integer p;
        try {
            p = Integer(f.p);
        } catch (const std::exception&) {
            throw parse_error("--p is not an integer", 0);
        }
        if (p < 2 || !is_probable_prime(p)) throw validation_error("--p must be a prime, got " + f.p);
        params["a"] = prm.a.to_string();
        params["b"] = prm.b.to_string();
        params["bp"] = prm.bp.to_string();
        params["p"] = p.get_str();
        desc = map_description_json(Presentation<Rational>(number_field_family(p, f.N, prm)));
    } else {
        throw validation_error("unknown family '" + f.kind + "' (expected ex1, ex2 or nf-number-field)");
    }
    desc["family"] = json{{"name", f.kind}, {"params", params}};
    return desc;
}

template <class K>
json lattes_json_impl(const K& A, const K& B, long n, const RunOptions& opt) {
    EllipticCurve<K> E(A, B);
    Model<K> raw = lattes_model(E, static_cast<std::size_t>(n));
    Presentation<K> phi(raw);
    const K R = sylvester_resultant(raw);
    const K D = E.discriminant();
    json out = header("lattes", opt);
    out["curve"] = json{{"A", element_json(A)}, {"B", element_json(B)}, {"discriminant", element_json(D)}};
    out["n"] = n;
    out["map"] = map_description_json(phi);
    out["model_resultant"] = element_json(R);
    if (n == 2) {
        const K ratio = R / (D * D);
        out["resultant_check"] = json{{"identity", "R = 256 D^2"},
                                      {"R_over_D2", element_json(ratio)},
                                      {"holds", ratio == from_integer(Integer(256), A)}};
    }
    return out;
}

/// Multiplication-by-n Lattès map on y² = x³ + Ax + B. A and B are constants
/// or expressions in t (then the map is over Q(t)).
inline json lattes_json(const std::string& A, const std::string& B, long n, const RunOptions& opt) {
    if (n < 2) throw validation_error("--n must be at least 2");
    RatFunc a = parse_ratfunc(A, "t"), b = parse_ratfunc(B, "t");
    if (a.is_constant() && b.is_constant()) return lattes_json_impl(a.constant_value(), b.constant_value(), n, opt);
    return lattes_json_impl(a, b, n, opt);
}

}  // namespace arithdyn::cli
