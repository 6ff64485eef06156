#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tau/polynomial.hpp"

namespace tau {

/// num / den with den != 0 and a positive leading coefficient in den. Fractions are not
/// reduced to lowest terms; compare them with rat_equal.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : RationalFunction(Polynomial(c)) {}         // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        if (den_.leading_term().coeff < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    [[nodiscard]] const Polynomial& num() const noexcept { return num_; }
    [[nodiscard]] const Polynomial& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_).cancelled();
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_).cancelled();
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_).cancelled();
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_).cancelled();
    }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_).cancelled();
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_).cancelled();
    }

    /// Cheap partial simplification: strips the common integer and monomial content and
    /// replaces num/den by a polynomial when den divides num exactly. Not a gcd.
    [[nodiscard]] RationalFunction cancelled() const {
        if (num_.is_zero()) return RationalFunction();
        if (den_.is_one()) return *this;
        Integer c = boost::multiprecision::gcd(num_.content(), den_.content());
        Monomial m = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
        Polynomial n = num_;
        Polynomial d = den_;
        if (c != 1 || !m.is_one()) {
            n = n.divided_by_term(m, c);
            d = d.divided_by_term(m, c);
        }
        if (!d.is_constant() && n.size() >= d.size()) {
            if (auto q = try_exact_div(n, d)) return RationalFunction(std::move(*q));
        }
        return RationalFunction(std::move(n), std::move(d));
    }

    /// The polynomial num/den; throws NotDivisible when den does not divide num.
    [[nodiscard]] Polynomial to_polynomial() const { return exact_div(num_, den_); }

    [[nodiscard]] std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const Polynomial& p) {
            return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
        };
        return wrap(num_) + " / " + wrap(den_);
    }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Equality in the fraction field, by cross-multiplication.
inline bool rat_equal(const RationalFunction& a, const RationalFunction& b) {
    if (a.den() == b.den()) return a.num() == b.num();
    return a.num() * b.den() == b.num() * a.den();
}

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

using Substitution = std::map<VarId, RationalFunction>;

/// Ring-homomorphic image of p under the substitution (unmapped variables are fixed).
/// The result is not simplified: its denominator is the product over mapped variables v of
/// den(v)^deg_v(p).
inline RationalFunction substitute(const Polynomial& p, const Substitution& map) {
    // Mapped variables that actually occur, with their maximal degree.
    std::vector<std::pair<VarId, std::uint32_t>> active;
    for (const auto& [v, image] : map) {
        std::uint32_t d = p.degree_in(v);
        if (d > 0) active.emplace_back(v, d);
    }
    if (active.empty()) return RationalFunction(p);

    struct Powers {
        std::vector<Polynomial> num;  // num^0 .. num^d
        std::vector<Polynomial> den;  // den^0 .. den^d
    };
    std::vector<Powers> powers;
    Polynomial common_den(1);
    for (const auto& [v, d] : active) {
        const RationalFunction& image = map.at(v);
        Powers pw;
        pw.num.push_back(Polynomial(1));
        pw.den.push_back(Polynomial(1));
        for (std::uint32_t k = 1; k <= d; ++k) {
            pw.num.push_back(pw.num.back() * image.num());
            pw.den.push_back(pw.den.back() * image.den());
        }
        common_den *= pw.den[d];
        powers.push_back(std::move(pw));
    }

    // Group terms by their exponent vector on the active variables; each group is a
    // cofactor polynomial in the untouched variables.
    std::map<std::vector<std::uint32_t>, std::vector<Term>> groups;
    for (const Term& t : p.terms()) {
        std::vector<std::uint32_t> key(active.size());
        Monomial::Storage rest;
        std::size_t a = 0;
        for (const Factor& fct : t.mono.factors()) {
            while (a < active.size() && active[a].first < fct.var) ++a;
            if (a < active.size() && active[a].first == fct.var) key[a] = fct.exp;
            else rest.push_back(fct);
        }
        Monomial rest_mono;
        for (const Factor& fct : rest) rest_mono = rest_mono * Monomial(fct.var, fct.exp);
        groups[key].push_back({std::move(rest_mono), t.coeff});
    }

    Polynomial num;
    for (auto& [key, cofactor_terms] : groups) {
        Polynomial image(1);
        for (std::size_t a = 0; a < active.size(); ++a) {
            const std::uint32_t e = key[a];
            image *= powers[a].num[e];
            if (active[a].second > e) image *= powers[a].den[active[a].second - e];
        }
        num += Polynomial::from_terms(std::move(cofactor_terms)) * image;
    }
    return RationalFunction(std::move(num), std::move(common_den));
}

/// Applies a substitution to a fraction and performs the cheap cancellation.
inline RationalFunction substitute(const RationalFunction& x, const Substitution& map) {
    RationalFunction n = substitute(x.num(), map);
    if (x.den().is_one()) return n.cancelled();
    RationalFunction d = substitute(x.den(), map);
    return (n / d).cancelled();
}

}  // namespace tau
