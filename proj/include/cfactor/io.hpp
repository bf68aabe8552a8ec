#pragma once

#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfactor/dense_poly.hpp"
#include "cfactor/errors.hpp"
#include "cfactor/factored_poly.hpp"
#include "cfactor/rational.hpp"

namespace cfactor {
namespace io {

using nlohmann::json;

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r' || s[a] == '\n')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r' || s[b - 1] == '\n')) --b;
    return std::string(s.substr(a, b - a));
}

/// Comma-separated exact scalars, e.g. "576,-504,158,-21,1".
inline std::vector<rational> parse_scalar_list(std::string_view text) {
    std::vector<rational> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const std::string t = trim(item);
        if (t.empty()) throw invalid_input_error("empty entry in scalar list");
        out.push_back(rational::parse(t));
    }
    if (out.empty()) throw invalid_input_error("empty scalar list");
    return out;
}

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (const auto& r : parse_scalar_list(text)) {
        if (!r.is_integer() || r.sign() <= 0)
            throw invalid_input_error("multiplicities must be positive integers");
        out.push_back(static_cast<int>(r.numerator().get_si()));
    }
    return out;
}

/// Ascending coefficient list "c0,c1,...,cd".
inline dense_poly parse_poly(std::string_view text) {
    return dense_poly(parse_scalar_list(text));
}

inline std::string poly_to_text(const dense_poly& p) {
    std::ostringstream os;
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) os << ',';
        os << cs[i].str();
    }
    if (cs.empty()) os << '0';
    return os.str();
}

/// Terms file: either one scalar per line, or a JSON object with a
/// "terms" array of scalar strings.
inline std::vector<rational> parse_terms(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::string t = trim(content);
    if (t.empty()) throw invalid_input_error("empty term list");
    std::vector<rational> out;
    if (t.front() == '{') {
        json j = json::parse(t);
        if (!j.contains("terms") || !j["terms"].is_array())
            throw invalid_input_error("terms JSON must contain a \"terms\" array");
        for (const auto& e : j["terms"]) out.push_back(rational::parse(e.get<std::string>()));
    } else {
        std::istringstream lines(t);
        std::string line;
        while (std::getline(lines, line)) {
            const std::string s = trim(line);
            if (s.empty()) continue;
            out.push_back(rational::parse(s));
        }
    }
    if (out.empty()) throw invalid_input_error("empty term list");
    return out;
}

// JSON schemas: scalars are exact strings, never numbers.

inline json to_json(const dense_poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return json{{"coeffs", std::move(coeffs)}};
}

inline json to_json(const factored_poly& f) {
    json roots = json::array();
    for (const auto& [root, mult] : f.factors())
        roots.push_back(json{{"root", root.str()}, {"mult", mult}});
    return json{{"roots", std::move(roots)}};
}

inline dense_poly poly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw invalid_input_error("polynomial JSON must contain a \"coeffs\" array");
    std::vector<rational> cs;
    for (const auto& e : j["coeffs"]) cs.push_back(rational::parse(e.get<std::string>()));
    return dense_poly(std::move(cs));
}

inline factored_poly factored_from_json(const json& j) {
    if (!j.contains("roots") || !j["roots"].is_array())
        throw invalid_input_error("factored JSON must contain a \"roots\" array");
    std::vector<factored_poly::factor> fs;
    for (const auto& e : j["roots"])
        fs.push_back({rational::parse(e.at("root").get<std::string>()), e.at("mult").get<int>()});
    return factored_poly(std::move(fs));
}

} // namespace io
} // namespace cfactor
