#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tau/combinatorics.hpp"
#include "tau/errors.hpp"
#include "tau/polynomial.hpp"

namespace tau {

/// What `compute` emits: phi_w(Lambda_j), optionally over its normalization factor, with the
/// tau monomial prod tau_i^{m_i}. Under a modulus every index is already a residue.
struct PhiOutput {
    Partition shape;
    bool normalized = false;
    Polynomial phi;
    std::vector<Polynomial> denominator;  // hook factors, only when normalized
    std::map<int, int> tau_monomial;
    std::optional<int> modulus;
};

namespace detail {

/// "a_0+a_1" style: no spaces, used inside products.
inline std::string compact(const Polynomial& p) {
    std::string s = p.to_string();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == ' ' && i + 2 < s.size() && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
            out += s[i + 1];
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

inline std::string latex_var(VarId v) {
    const std::string idx = "_{" + std::to_string(v.index) + "}";
    switch (v.kind) {
        case VarKind::Alpha: return "\\alpha" + idx;
        case VarKind::F: return "f" + idx;
        case VarKind::Tau: return "\\tau" + idx;
    }
    return {};
}

inline VarId parse_var_name(const std::string& name) {
    if (name.size() < 3 || name[1] != '_') throw ParseError("bad variable name '" + name + "'");
    VarKind kind{};
    switch (name[0]) {
        case 'a': kind = VarKind::Alpha; break;
        case 'f': kind = VarKind::F; break;
        case 't': kind = VarKind::Tau; break;
        default: throw ParseError("bad variable name '" + name + "'");
    }
    try {
        std::size_t used = 0;
        const int index = std::stoi(name.substr(2), &used);
        if (used != name.size() - 2) throw ParseError("bad variable name '" + name + "'");
        return {kind, index};
    } catch (const std::logic_error&) {
        throw ParseError("bad variable name '" + name + "'");
    }
}

inline nlohmann::ordered_json terms_to_json(const Polynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const Term& t : p.terms()) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (const Factor& fct : t.mono.factors()) exps[fct.var.name()] = fct.exp;
        out.push_back({{"coeff", t.coeff.str()}, {"exps", std::move(exps)}});
    }
    return out;
}

inline Polynomial terms_from_json(const nlohmann::ordered_json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of terms");
    std::vector<Term> terms;
    for (const auto& t : arr) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items())
            m = m * Monomial(parse_var_name(name), e.get<std::uint32_t>());
        terms.push_back({m, Integer(t.at("coeff").get<std::string>())});
    }
    return Polynomial::from_terms(std::move(terms));
}

}  // namespace detail

/// Canonical text. Normalized output reads "(num) / (h1*h2*...)" with multi-term factors
/// parenthesized, e.g. "(f_0*f_1 - a_1) / ((a_0+a_1)*a_1)".
inline std::string format_text(const PhiOutput& out) {
    if (!out.normalized || out.denominator.empty()) return out.phi.to_string();
    std::string num = out.phi.to_string();
    if (out.phi.size() > 1) num = "(" + num + ")";
    std::string den;
    for (const Polynomial& h : out.denominator) {
        if (!den.empty()) den += "*";
        den += h.size() > 1 ? "(" + detail::compact(h) + ")" : detail::compact(h);
    }
    if (out.denominator.size() > 1) den = "(" + den + ")";
    return num + " / " + den;
}

inline std::string latex_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Integer c = t.coeff;
        if (c < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        first = false;
        const bool unit = t.mono.factors().empty();
        if (c != 1 || unit) out += c.str();
        bool need_space = c != 1;
        for (const Factor& fct : t.mono.factors()) {
            if (need_space) out += " ";
            out += detail::latex_var(fct.var);
            if (fct.exp > 1) out += "^{" + std::to_string(fct.exp) + "}";
            need_space = true;
        }
    }
    return out;
}

inline std::string format_latex(const PhiOutput& out) {
    if (!out.normalized || out.denominator.empty()) return latex_polynomial(out.phi);
    std::string den;
    for (const Polynomial& h : out.denominator)
        den += h.size() > 1 ? "(" + latex_polynomial(h) + ")" : latex_polynomial(h);
    return "\\frac{" + latex_polynomial(out.phi) + "}{" + den + "}";
}

inline nlohmann::ordered_json to_json(const PhiOutput& out) {
    nlohmann::ordered_json j;
    j["partition"] = out.shape.parts();
    j["normalized"] = out.normalized;
    j["phi"] = detail::terms_to_json(out.phi);
    if (out.normalized) {
        auto den = nlohmann::ordered_json::array();
        for (const Polynomial& h : out.denominator) den.push_back(detail::terms_to_json(h));
        j["denominator"] = std::move(den);
    }
    nlohmann::ordered_json taus = nlohmann::ordered_json::object();
    for (const auto& [i, m] : out.tau_monomial) taus[std::to_string(i)] = m;
    j["tau_monomial"] = std::move(taus);
    if (out.modulus) j["modulus"] = *out.modulus;
    return j;
}

inline std::string format_json(const PhiOutput& out) { return to_json(out).dump(2); }

inline PhiOutput parse_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    try {
        PhiOutput out;
        out.shape = Partition(j.at("partition").get<std::vector<int>>());
        out.normalized = j.at("normalized").get<bool>();
        out.phi = detail::terms_from_json(j.at("phi"));
        if (j.contains("denominator"))
            for (const auto& h : j.at("denominator")) out.denominator.push_back(detail::terms_from_json(h));
        for (const auto& [k, v] : j.at("tau_monomial").items()) out.tau_monomial[std::stoi(k)] = v.get<int>();
        if (j.contains("modulus")) out.modulus = j.at("modulus").get<int>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
}

}  // namespace tau
