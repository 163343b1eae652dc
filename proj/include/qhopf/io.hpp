#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qhopf/haar.hpp"
#include "qhopf/matrix.hpp"

namespace qhopf {

using json = nlohmann::ordered_json;

/**
 * Parses a polynomial in z such as "1", "-1", "z^2", "1/2*z+3" or
 * "z+z^4-1", reducing it modulo Phi_m.
 */
inline CycloNumber parse_cyclo_expr(std::string_view text, std::uint64_t conductor)
{
    auto fail = [&](const std::string& why) {
        return Error(ErrorCode::ParseError, "bad entry '" + std::string(text) + "': " + why);
    };
    auto is_atom = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '/' || c == '^'; };
    std::string s;
    bool gap = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            gap = true;
            continue;
        }
        if (gap && !s.empty() && is_atom(s.back()) && is_atom(c))
            throw fail("unexpected whitespace");
        gap = false;
        s += c;
    }
    if (s.empty())
        throw Error(ErrorCode::ParseError, "empty entry");

    std::vector<Rational> poly(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-'");
        }
        Rational coeff(1);
        bool has_coeff = false;
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (pos > start) {
            try {
                coeff = parse_rational(s.substr(start, pos - start));
            } catch (const Error& e) {
                throw Error(e.code(), "bad entry '" + std::string(text) + "': " + e.what());
            }
            has_coeff = true;
        }
        std::size_t exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_coeff)
                throw fail("'*' without coefficient");
            ++pos;
            if (pos >= s.size() || s[pos] != 'z')
                throw fail("expected 'z' after '*'");
        }
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t e0 = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    ++pos;
                if (pos == e0)
                    throw fail("missing exponent");
                exponent = std::stoul(s.substr(e0, pos - e0));
            }
        } else if (!has_coeff) {
            throw fail("expected a coefficient or 'z'");
        }
        if (poly.size() <= exponent)
            poly.resize(exponent + 1);
        poly[exponent] += negative ? Rational(-coeff) : coeff;
    }
    return CycloNumber::from_poly(conductor, std::move(poly));
}

/// {"conductor": m, "coeffs": {"j": "p/q", ...}} with zero coefficients omitted.
inline json to_json(const CycloNumber& x)
{
    json coeffs = json::object();
    for (std::size_t j = 0; j < x.coeffs().size(); ++j)
        if (x.coeffs()[j] != 0)
            coeffs[std::to_string(j)] = to_string(x.coeffs()[j]);
    return json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

namespace detail {

inline std::uint64_t read_conductor(const json& doc)
{
    if (!doc.contains("conductor"))
        throw Error(ErrorCode::ParseError, "missing field 'conductor'");
    const json& c = doc.at("conductor");
    if (!c.is_number_integer() || c.get<std::int64_t>() < 1)
        throw Error(ErrorCode::ParseError, "field 'conductor' must be a positive integer");
    return c.get<std::uint64_t>();
}

inline void reject_unknown_keys(const json& doc, std::initializer_list<std::string_view> allowed)
{
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || it.key() == a;
        if (!ok)
            throw Error(ErrorCode::ParseError, "unknown field '" + it.key() + "'");
    }
}

inline CycloNumber read_entry(const json& v, std::uint64_t conductor, const std::string& where)
{
    if (v.is_string()) {
        try {
            return parse_cyclo_expr(v.get<std::string>(), conductor);
        } catch (const Error& e) {
            throw Error(e.code(), "field '" + where + "': " + e.what());
        }
    }
    if (v.is_number_integer())
        return CycloNumber(Rational(v.get<long>()), conductor);
    throw Error(ErrorCode::ParseError, "field '" + where + "' must be a string polynomial in z");
}

inline std::vector<CycloNumber> read_vector(const json& doc, const std::string& key, std::uint64_t m)
{
    const json& arr = doc.at(key);
    if (!arr.is_array() || arr.empty())
        throw Error(ErrorCode::ParseError, "field '" + key + "' must be a non-empty array");
    std::vector<CycloNumber> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(read_entry(arr[i], m, key + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace detail

inline CycloNumber cyclo_from_json(const json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorCode::ParseError, "cyclotomic value must be an object");
    detail::reject_unknown_keys(doc, {"conductor", "coeffs"});
    const std::uint64_t m = detail::read_conductor(doc);
    const std::size_t phi = euler_phi(m);
    std::vector<Rational> coeffs(phi);
    if (doc.contains("coeffs")) {
        for (auto it = doc.at("coeffs").begin(); it != doc.at("coeffs").end(); ++it) {
            std::size_t j = 0;
            try {
                j = std::stoul(it.key());
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "bad exponent key '" + it.key() + "' in 'coeffs'");
            }
            if (j >= phi)
                throw Error(ErrorCode::ParseError, "exponent key '" + it.key() + "' out of range");
            if (!it.value().is_string())
                throw Error(ErrorCode::ParseError, "coefficient for '" + it.key() + "' must be a string");
            coeffs[j] = parse_rational(it.value().get<std::string>());
        }
    }
    return CycloNumber::from_poly(m, std::move(coeffs));
}

/// {"conductor": m, "matrix": [[...]]}, or the {"antidiag": [...]} / {"diag": [...]} shorthands.
inline ExactMatrix parse_matrix(const json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorCode::ParseError, "matrix document must be a JSON object");
    detail::reject_unknown_keys(doc, {"conductor", "matrix", "antidiag", "diag"});
    const std::uint64_t m = detail::read_conductor(doc);
    const int shapes = int(doc.contains("matrix")) + int(doc.contains("antidiag")) + int(doc.contains("diag"));
    if (shapes != 1)
        throw Error(ErrorCode::ParseError, "exactly one of 'matrix', 'antidiag', 'diag' is required");

    if (doc.contains("antidiag"))
        return antidiag(detail::read_vector(doc, "antidiag", m));
    if (doc.contains("diag"))
        return ExactMatrix::diag(detail::read_vector(doc, "diag", m));

    const json& rows = doc.at("matrix");
    if (!rows.is_array() || rows.empty())
        throw Error(ErrorCode::ParseError, "field 'matrix' must be a non-empty array of rows");
    const std::size_t n = rows.size();
    std::vector<CycloNumber> entries;
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw Error(ErrorCode::ParseError,
                        "field 'matrix' is not square: row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < n; ++j)
            entries.push_back(detail::read_entry(
                rows[i][j], m, "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    return ExactMatrix(n, std::move(entries), m);
}

inline json to_json(const ExactMatrix& mat)
{
    json rows = json::array();
    for (std::size_t i = 0; i < mat.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < mat.size(); ++j)
            row.push_back(mat.at(i, j).to_string());
        rows.push_back(row);
    }
    return json{{"conductor", mat.conductor()}, {"matrix", rows}};
}

/// {"denominator": ..., "moments": [{"k","l","i","j","value"}, ...]}, indices 1-based.
inline json to_json(const HaarMomentTable& table)
{
    json moments = json::array();
    const std::size_t n = table.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    moments.push_back(json{{"k", k + 1},
                                           {"l", l + 1},
                                           {"i", i + 1},
                                           {"j", j + 1},
                                           {"value", to_json(table.at(k, l, i, j))}});
    return json{{"denominator", to_json(table.denominator())}, {"moments", moments}};
}

} // namespace qhopf
