#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "hermite_laguerre.hpp"
#include "jack.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "report.hpp"

namespace nsjack::io {

using json = nlohmann::json;

/// Comma-separated non-negative integers, e.g. "1,0,2".
inline Composition parse_composition(const std::string& text)
{
    Composition out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            throw ParameterError("malformed composition '" + text + "'");
        out.push_back(std::stoi(part));
    }
    if (out.empty() || text.back() == ',')
        throw ParameterError("malformed composition '" + text + "'");
    return out;
}

/// Comma-separated rationals, e.g. "1,2,1/2".
inline std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        out.push_back(parse_rational(part));
    if (out.empty())
        throw ParameterError("empty rational list");
    return out;
}

/// Canonical form {"n": n, "terms": [[[e1..en], "num", "den"], ...]}; terms
/// in descending lexicographic order of exponent.  With double_exponents
/// every exponent is doubled (Laguerre polynomials written in x^2).
inline json poly_to_json(const SparsePoly& p, bool double_exponents = false)
{
    json terms = json::array();
    const std::size_t n = p.nvars();
    for (const auto& [e, c] : p.terms()) {
        json ex = json::array();
        for (std::size_t i = 0; i < n; ++i)
            ex.push_back(double_exponents ? 2 * e[i] : e[i]);
        terms.push_back(json::array({ex, c.get_num().get_str(), c.get_den().get_str()}));
    }
    return json{{"n", n}, {"terms", terms}};
}

inline SparsePoly poly_from_json(const json& j)
{
    try {
        std::size_t n = j.at("n").get<std::size_t>();
        SparsePoly p(n);
        for (const auto& t : j.at("terms")) {
            const auto& ex = t.at(0);
            if (ex.size() != n)
                throw DimensionError("exponent length does not match n");
            Exponent e{};
            for (std::size_t i = 0; i < n; ++i)
                e[i] = ex.at(i).get<int>();
            Rational c = parse_rational(t.at(1).get<std::string>() + "/" + t.at(2).get<std::string>());
            p.add_term(e, c);
        }
        return p;
    } catch (const json::exception& e) {
        throw ContractError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

inline json report_to_json(const Report& r)
{
    json j{{"identity", r.identity},
           {"n", r.n},
           {"alpha", to_string(r.alpha)},
           {"D", r.D},
           {"params", r.params},
           {"status", r.passed ? "pass" : "fail"}};
    if (!r.passed)
        j["first_failure"] = r.first_failure;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

inline json numeric_to_json(const numeric::NumericReport& r)
{
    json j{{"check", r.check},     {"case", r.label},     {"n", r.n},
           {"alpha", to_string(r.alpha)}, {"a", to_string(r.a)}, {"D", r.D},
           {"lhs", r.lhs},         {"rhs", r.rhs},        {"abs_err", r.abs_err},
           {"rel_err", r.rel_err}, {"tolerance", r.tolerance}, {"status", r.status}};
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

// ---------------------------------------------------------------------------
// CSV.

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += (i ? "," : "") + csv_field(fields[i]);
    return out + "\n";
}

/// Header e1..en,num,den, then one row per term.
inline std::string poly_to_csv(const SparsePoly& p, bool double_exponents = false)
{
    const std::size_t n = p.nvars();
    std::vector<std::string> head;
    for (std::size_t i = 0; i < n; ++i)
        head.push_back("e" + std::to_string(i + 1));
    head.push_back("num");
    head.push_back("den");
    std::string out = csv_row(head);
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < n; ++i)
            row.push_back(std::to_string(double_exponents ? 2 * e[i] : e[i]));
        row.push_back(c.get_num().get_str());
        row.push_back(c.get_den().get_str());
        out += csv_row(row);
    }
    return out;
}

inline std::string params_text(const std::map<std::string, std::string>& params)
{
    std::string out;
    for (const auto& [k, v] : params)
        out += (out.empty() ? "" : ";") + k + "=" + v;
    return out;
}

inline std::string reports_to_csv(const ReportList& reports, const numeric::NumericReportList& numeric)
{
    std::string out = csv_row({"kind", "identity", "n", "alpha", "a", "D", "status", "params", "lhs", "rhs",
                               "rel_err", "tolerance", "first_failure", "note"});
    for (const auto& r : reports) {
        auto a = r.params.count("a") ? r.params.at("a") : "";
        out += csv_row({"exact", r.identity, std::to_string(r.n), to_string(r.alpha), a, std::to_string(r.D),
                        r.passed ? "pass" : "fail", params_text(r.params), "", "", "", "", r.first_failure,
                        r.note});
    }
    auto num = [](double x) {
        std::ostringstream s;
        s.precision(17);
        s << x;
        return s.str();
    };
    for (const auto& r : numeric)
        out += csv_row({"numeric", r.check, std::to_string(r.n), to_string(r.alpha), to_string(r.a),
                        std::to_string(r.D), r.status, "case=" + r.label, num(r.lhs), num(r.rhs),
                        num(r.rel_err), num(r.tolerance), "", r.note});
    return out;
}

// ---------------------------------------------------------------------------
// Basis caches on disk: one JSON file per (family, n, alpha[, a]).

inline std::string cache_file_name(const std::string& family, std::size_t n, const Rational& alpha,
                                   const Rational* a = nullptr)
{
    auto tag = [](const Rational& r) {
        std::string s = to_string(r);
        for (char& ch : s)
            if (ch == '/')
                ch = '_';
            else if (ch == '-')
                ch = 'm';
        return s;
    };
    std::string name = family + "_n" + std::to_string(n) + "_alpha" + tag(alpha);
    if (a)
        name += "_a" + tag(*a);
    return name + ".json";
}

inline json cache_to_json(const std::string& family, std::size_t n, const Rational& alpha,
                          const std::map<Composition, SparsePoly>& table, const Rational* a = nullptr)
{
    json entries = json::array();
    for (const auto& [eta, p] : table)
        entries.push_back(json{{"eta", eta}, {"poly", poly_to_json(p)}});
    json j{{"family", family}, {"n", n}, {"alpha", to_string(alpha)}, {"entries", entries}};
    if (a)
        j["a"] = to_string(*a);
    return j;
}

/// Reads a cache file written by cache_to_json; returns an empty table if
/// the file is missing or describes a different context.
inline std::map<Composition, SparsePoly> read_cache(const std::filesystem::path& file, const std::string& family,
                                                    std::size_t n, const Rational& alpha,
                                                    const Rational* a = nullptr)
{
    std::map<Composition, SparsePoly> out;
    std::ifstream in(file);
    if (!in)
        return out;
    json j;
    try {
        in >> j;
        if (j.at("family") != family || j.at("n").get<std::size_t>() != n ||
            parse_rational(j.at("alpha").get<std::string>()) != alpha)
            return out;
        if (a && parse_rational(j.at("a").get<std::string>()) != *a)
            return out;
        for (const auto& e : j.at("entries")) {
            Composition eta = e.at("eta").get<Composition>();
            SparsePoly p = poly_from_json(e.at("poly"));
            if (eta.size() != n || p.nvars() != n)
                return {};
            out.emplace(std::move(eta), std::move(p));
        }
    } catch (const std::exception&) {
        return {};
    }
    return out;
}

inline void write_cache(const std::filesystem::path& file, const json& j)
{
    std::filesystem::create_directories(file.parent_path());
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, file);
}

} // namespace nsjack::io
