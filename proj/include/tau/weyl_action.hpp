#pragma once

#include <string>
#include <vector>

#include "tau/combinatorics.hpp"
#include "tau/rational_function.hpp"
#include "tau/verification.hpp"

namespace tau {

/// Substitution table of the generator s_i:
///   alpha_i -> -alpha_i,  alpha_{i+-1} -> alpha_{i+-1} + alpha_i,
///   f_{i+-1} -> f_{i+-1} +- alpha_i / f_i,  tau_i -> f_i tau_{i-1} tau_{i+1} / tau_i.
inline Substitution s_substitution(int i) {
    Substitution m;
    m[alpha_var(i)] = RationalFunction(-alpha(i));
    m[alpha_var(i - 1)] = RationalFunction(alpha(i - 1) + alpha(i));
    m[alpha_var(i + 1)] = RationalFunction(alpha(i + 1) + alpha(i));
    m[f_var(i + 1)] = RationalFunction(f(i + 1) * f(i) + alpha(i), f(i));
    m[f_var(i - 1)] = RationalFunction(f(i - 1) * f(i) - alpha(i), f(i));
    m[tau_var(i)] = RationalFunction(f(i) * tau_poly(i - 1) * tau_poly(i + 1), tau_poly(i));
    return m;
}

namespace detail {

inline bool touches(const Polynomial& p, const Substitution& m) {
    for (const Term& t : p.terms())
        for (const Factor& fct : t.mono.factors())
            if (m.count(fct.var)) return true;
    return false;
}

}  // namespace detail

inline RationalFunction apply_s(int i, const RationalFunction& x) {
    Substitution m = s_substitution(i);
    if (!detail::touches(x.num(), m) && !detail::touches(x.den(), m)) return x;
    return substitute(x, m);
}

/// pi^j: every index shifts by j.
inline Polynomial apply_pi(int j, const Polynomial& p) {
    if (j == 0) return p;
    return p.renamed([j](VarId v) { return VarId{v.kind, v.index + j}; });
}

inline RationalFunction apply_pi(int j, const RationalFunction& x) {
    if (j == 0) return x;
    return RationalFunction(apply_pi(j, x.num()), apply_pi(j, x.den()));
}

/// w(x) for w = pi^k s_{i_p} ... s_{i_1}: s_{i_1} acts first, pi^k last.
inline RationalFunction apply_word(const WeylWord& w, const RationalFunction& x) {
    RationalFunction y = x;
    for (int i : w.acting_order()) y = apply_s(i, y);
    return apply_pi(w.pi_power, y);
}

/// Checks s_i^2 = 1, (s_i s_{i+1})^3 = 1, s_i s_j = s_j s_i (|i-j| >= 2) and pi s_i = s_{i+1} pi
/// for generators indexed in [lo, hi], on every alpha_j, f_j, tau_j with j in [lo, hi].
inline VerificationReport verify_relations(int lo, int hi) {
    VerificationReport report("relations");
    std::vector<std::pair<std::string, RationalFunction>> vars;
    for (int j = lo; j <= hi; ++j) {
        vars.emplace_back(alpha_var(j).name(), RationalFunction(alpha(j)));
        vars.emplace_back(f_var(j).name(), RationalFunction(f(j)));
        vars.emplace_back(tau_var(j).name(), RationalFunction(tau_poly(j)));
    }
    auto word = [](std::vector<int> letters, const RationalFunction& x) {
        return apply_word(WeylWord{std::move(letters), 0}, x);
    };
    auto check = [&](const std::string& rel, const std::string& var, const RationalFunction& lhs,
                     const RationalFunction& rhs) {
        bool ok = rat_equal(lhs, rhs);
        report.record(rel + " on " + var, ok, ok ? "" : "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
    };
    for (const auto& [name, x] : vars) {
        for (int i = lo; i <= hi; ++i) {
            const std::string si = "s" + std::to_string(i);
            check(si + "^2 = 1", name, word({i, i}, x), x);
            if (i + 1 <= hi) {
                check("(" + si + " s" + std::to_string(i + 1) + ")^3 = 1", name,
                      word({i, i + 1, i, i + 1, i, i + 1}, x), x);
            }
            for (int j = i + 2; j <= hi; ++j) {
                check(si + " s" + std::to_string(j) + " = s" + std::to_string(j) + " " + si, name,
                      word({i, j}, x), word({j, i}, x));
            }
            check("pi " + si + " = s" + std::to_string(i + 1) + " pi", name, apply_pi(1, apply_s(i, x)),
                  apply_s(i + 1, apply_pi(1, x)));
        }
    }
    return report;
}

}  // namespace tau
