#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permstat/multipoly.hpp"
#include "permstat/perms.hpp"
#include "permstat/ratfunc.hpp"
#include "permstat/symfunc.hpp"
#include "permstat/verify/report.hpp"

namespace permstat {

// Serialization is the bit-exact golden-file contract: variables in registry
// order, terms sorted lexicographically by exponent tuple, rationals always
// written "num/den" in lowest terms. No timestamps or other volatile data
// inside payloads.

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string to_json(const MultiPoly& p) {
    std::set<VarId> used = p.vars_used();
    std::vector<VarId> vars(used.begin(), used.end());
    std::ostringstream os;
    os << "{\"vars\":[";
    for (size_t i = 0; i < vars.size(); ++i)
        os << (i ? "," : "") << '"' << VarRegistry::name(vars[i]) << '"';
    os << "],\"terms\":[";
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << ",";
        first = false;
        os << "{\"c\":\"" << rat_str(c) << "\",\"e\":[";
        for (size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << m.exp_of(vars[i]);
        os << "]}";
    }
    os << "]}";
    return os.str();
}

inline std::string to_json(const RatFunc& r) {
    return "{\"num\":" + to_json(r.num()) + ",\"den\":" + to_json(r.den()) + "}";
}

inline std::string to_json(const SymFunc& f) {
    std::ostringstream os;
    int maxdeg = f.truncated() ? f.trunc() : f.degree();
    os << "{\"maxDegree\":" << maxdeg << ",\"terms\":[";
    bool first = true;
    for (const auto& [l, c] : f.terms()) {
        if (!first) os << ",";
        first = false;
        os << "{\"partition\":[";
        for (size_t i = 0; i < l.parts.size(); ++i) os << (i ? "," : "") << l.parts[i];
        os << "],\"coeff\":" << to_json(c) << "}";
    }
    os << "]}";
    return os.str();
}

inline std::string to_json(const DistPoly& d) {
    std::string poly = to_json(d.poly);
    // Merge the profile field into the polynomial object.
    return "{\"profile\":\"" + d.profile + "\"," + poly.substr(1);
}

inline std::string to_json(const verify::VerifyReport& r) {
    std::ostringstream os;
    os << "{\"id\":\"" << json_escape(r.id) << "\"";
    if (r.n >= 0) os << ",\"n\":" << r.n;
    if (r.k_max >= 0) os << ",\"k_max\":" << r.k_max;
    os << ",\"status\":\"" << (r.pass ? "pass" : "fail") << "\"";
    os << ",\"witness\":";
    if (r.witness.empty())
        os << "null";
    else
        os << '"' << json_escape(r.witness) << '"';
    os << ",\"ms\":" << r.ms << "}";
    return os.str();
}

// One row per exponent tuple: vars columns then the coefficient.
inline std::string to_csv(const MultiPoly& p) {
    std::set<VarId> used = p.vars_used();
    std::vector<VarId> vars(used.begin(), used.end());
    std::ostringstream os;
    for (size_t i = 0; i < vars.size(); ++i) os << VarRegistry::name(vars[i]) << ",";
    os << "coeff\n";
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < vars.size(); ++i) os << m.exp_of(vars[i]) << ",";
        os << rat_str(c) << "\n";
    }
    return os.str();
}

inline std::string to_csv(const std::map<Composition, Int>& table) {
    std::ostringstream os;
    os << "composition,count\n";
    for (const auto& [comp, cnt] : table) {
        for (size_t i = 0; i < comp.size(); ++i) os << (i ? "-" : "") << comp[i];
        os << "," << cnt.get_str() << "\n";
    }
    return os.str();
}

}  // namespace permstat
