#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "arithdyn/algebra/parse.hpp"
#include "arithdyn/algebra/ratfunc.hpp"
#include "arithdyn/algebra/rational.hpp"
#include "arithdyn/dynsys/model.hpp"
#include "arithdyn/dynsys/presentation.hpp"
#include "arithdyn/error.hpp"
#include "arithdyn/places/divisor.hpp"
#include "arithdyn/places/place.hpp"

namespace arithdyn::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

template <class K>
struct FieldName;
template <>
struct FieldName<Rational> {
    static constexpr const char* value = "rational";
};
template <>
struct FieldName<RatFunc> {
    static constexpr const char* value = "ratfunc";
};

inline json element_json(const Rational& x) { return x.to_string(); }
inline json element_json(const RatFunc& x) {
    return json{{"num", x.num().to_string("t")}, {"den", x.den().to_string("t")}};
}

/// Text that parse_ratfunc reads back to the same element.
inline std::string element_text(const Rational& x) { return x.to_string(); }
inline std::string element_text(const RatFunc& x) { return x.to_string(); }

inline json place_json(const Place& p) { return json{{"kind", p.kind_name()}, {"data", p.data()}}; }

inline json divisor_json(const Divisor& D) {
    json arr = json::array();
    for (const auto& [p, m] : D.terms()) arr.push_back(json{{"place", place_json(p)}, {"coeff", m}});
    return arr;
}

inline json degree_json(const Divisor& D) {
    DivisorDegree g = D.degree();
    return json{{"geometric", g.geometric}, {"lognorm", g.lognorm}};
}

/// MapDescription: {field, degree, a: [...], b: [...]}, a[i] the coefficient
/// of X^{d-i}Y^i.
template <class K>
json map_description_json(const Model<K>& m) {
    json a = json::array(), b = json::array();
    for (const auto& c : m.a) a.push_back(element_text(c));
    for (const auto& c : m.b) b.push_back(element_text(c));
    return json{{"field", FieldName<K>::value}, {"degree", m.d}, {"a", a}, {"b", b}};
}

template <class K>
json map_description_json(const Presentation<K>& phi) {
    return map_description_json(phi.model());
}

using AnyPresentation = std::variant<Presentation<Rational>, Presentation<RatFunc>>;

namespace detail {

inline const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw validation_error(std::string("map description: missing field '") + key + "'");
    return *it;
}

inline Rational parse_element(const std::string& s, const Rational*) { return parse_rational(s); }
inline RatFunc parse_element(const std::string& s, const RatFunc*) { return parse_ratfunc(s, "t"); }

/// Entries are expression strings or plain JSON integers.
template <class K>
std::vector<K> parse_coeffs(const json& arr, const char* name) {
    std::vector<K> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& e = arr[i];
        const std::string where = std::string(name) + "[" + std::to_string(i) + "]";
        if (!e.is_string() && !e.is_number_integer())
            throw validation_error(where + ": coefficient must be a string or an integer");
        try {
            out.push_back(parse_element(e.is_string() ? e.get<std::string>() : e.dump(), static_cast<const K*>(nullptr)));
        } catch (const parse_error& err) {
            throw parse_error(where + ": " + err.message(), err.position());
        }
    }
    return out;
}

template <class K>
Presentation<K> presentation_from_json(const json& j, std::size_t d) {
    const json& a = require(j, "a");
    const json& b = require(j, "b");
    if (!a.is_array() || !b.is_array()) throw validation_error("map description: 'a' and 'b' must be arrays");
    if (a.size() != d + 1 || b.size() != d + 1)
        throw validation_error("map description: degree " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                               " coefficients in each of 'a' and 'b'");
    return Presentation<K>(Model<K>(d, parse_coeffs<K>(a, "a"), parse_coeffs<K>(b, "b")));
}

}  // namespace detail

inline AnyPresentation parse_map_description(const json& j) {
    if (!j.is_object()) throw validation_error("map description must be a JSON object");
    const json& f = detail::require(j, "field");
    const json& deg = detail::require(j, "degree");
    if (!f.is_string()) throw validation_error("map description: 'field' must be a string");
    if (!deg.is_number_integer() || deg.get<long>() < 1)
        throw validation_error("map description: 'degree' must be a positive integer");
    const auto d = static_cast<std::size_t>(deg.get<long>());
    const std::string field = f.get<std::string>();
    if (field == "rational") return detail::presentation_from_json<Rational>(j, d);
    if (field == "ratfunc") return detail::presentation_from_json<RatFunc>(j, d);
    throw validation_error("map description: field must be \"rational\" or \"ratfunc\", got \"" + field + "\"");
}

/// JSON syntax errors become parse_error with the byte offset.
inline AnyPresentation parse_map_description(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
    return parse_map_description(j);
}

}  // namespace arithdyn::cli
