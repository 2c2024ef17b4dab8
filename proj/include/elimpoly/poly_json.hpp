// JSON form of Poly: an array of {"a","b","c","coeff"} objects in canonical
// term order, with the coefficient as a decimal string.
#pragma once

#include <string>
#include <string_view>

#include "elimpoly/poly.hpp"
#include "json.hpp"

namespace elimpoly {

inline nlohmann::json to_json_value(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json term;
        term["a"] = m.a;
        term["b"] = m.b;
        term["c"] = m.c;
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

inline std::string to_json(const Poly& p) { return to_json_value(p).dump(); }

inline Poly poly_from_json_value(const nlohmann::json& arr) {
    if (!arr.is_array()) throw poly_parse_error("polynomial JSON must be an array");
    Poly p;
    for (const auto& term : arr) {
        if (!term.is_object()) throw poly_parse_error("polynomial JSON term must be an object");
        auto exp = [&](const char* key) {
            const auto& v = term.at(key);
            if (!v.is_number_unsigned()) throw poly_parse_error(std::string("exponent '") + key + "' must be unsigned");
            auto e = v.get<std::uint64_t>();
            if (e > kMaxExponent) throw exponent_overflow("exponent exceeds cap");
            return static_cast<std::uint32_t>(e);
        };
        const auto& coeff = term.at("coeff");
        if (!coeff.is_string()) throw poly_parse_error("coeff must be a decimal string");
        const auto c = detail::parse_decimal(coeff.get<std::string>());
        if (!c) throw poly_parse_error("coeff is not a decimal integer: " + coeff.get<std::string>());
        p.add_term(Monomial(exp("a"), exp("b"), exp("c")), *c);
    }
    return p;
}

inline Poly poly_from_json(std::string_view text) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw poly_parse_error(e.what());
    }
    return poly_from_json_value(parsed);
}

}  // namespace elimpoly
