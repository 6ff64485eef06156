#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tau/errors.hpp"
#include "tau/monomial.hpp"

namespace tau {

using Integer = boost::multiprecision::cpp_int;

struct Term {
    Monomial mono;
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with integer coefficients. Terms are stored in strictly descending
/// canonical order with nonzero coefficients, so structural equality is equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Integer(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(Integer c) {                         // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
    }
    explicit Polynomial(VarId v) { terms_.push_back({Monomial(v), Integer(1)}); }
    Polynomial(Monomial m, Integer c) {
        if (c != 0) terms_.push_back({std::move(m), std::move(c)});
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
        Polynomial out;
        for (Term& t : terms) {
            if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
                out.terms_.back().coeff += t.coeff;
                if (out.terms_.back().coeff == 0) out.terms_.pop_back();
            } else if (t.coeff != 0) {
                out.terms_.push_back(std::move(t));
            }
        }
        return out;
    }

    /// Wraps terms that are already canonical. Caller guarantees the invariant.
    static Polynomial from_sorted_terms(std::vector<Term> terms) {
        Polynomial out;
        out.terms_ = std::move(terms);
        return out;
    }

    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }
    [[nodiscard]] bool is_one() const noexcept {
        return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
    }
    [[nodiscard]] bool is_monomial() const noexcept { return terms_.size() == 1; }
    [[nodiscard]] Integer constant_term() const {
        return (!terms_.empty() && terms_.back().mono.is_one()) ? terms_.back().coeff : Integer(0);
    }

    /// Requires a nonzero polynomial.
    [[nodiscard]] const Term& leading_term() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.front();
    }

    [[nodiscard]] std::uint32_t degree_in(VarId v) const {
        std::uint32_t d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.exponent(v));
        return d;
    }

    /// Sorted list of variables that occur.
    [[nodiscard]] std::vector<VarId> variables() const {
        std::vector<VarId> vars;
        for (const Term& t : terms_)
            for (const Factor& f : t.mono.factors()) vars.push_back(f.var);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        return vars;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a.terms_, b.terms_, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a.terms_, b.terms_, true); }
    friend Polynomial operator-(Polynomial a) {
        for (Term& t : a.terms_) t.coeff = -t.coeff;
        return a;
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const Polynomial& small = a.size() <= b.size() ? a : b;
        const Polynomial& large = a.size() <= b.size() ? b : a;
        // Each row t*large is already sorted since the term order is multiplicative;
        // rows are combined by a balanced merge tree.
        std::vector<std::vector<Term>> rows;
        rows.reserve(small.size());
        for (const Term& t : small.terms_) rows.push_back(times_term(large.terms_, t));
        while (rows.size() > 1) {
            std::vector<std::vector<Term>> next;
            next.reserve((rows.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
                next.push_back(std::move(merge(rows[i], rows[i + 1], false).terms_));
            if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
            rows = std::move(next);
        }
        return from_sorted_terms(std::move(rows.front()));
    }

    [[nodiscard]] Polynomial times(const Monomial& m, const Integer& c) const {
        if (c == 0) return {};
        return from_sorted_terms(times_term(terms_, Term{m, c}));
    }

    [[nodiscard]] Polynomial pow(unsigned n) const {
        Polynomial result(1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1U) result *= base;
            n >>= 1U;
            if (n > 0) base = base * base;
        }
        return result;
    }

    /// Renames variables (e.g. index shifts or foldings) and recanonicalizes.
    template <class Fn>
    [[nodiscard]] Polynomial renamed(Fn&& fn) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) out.push_back({t.mono.renamed(fn), t.coeff});
        return from_terms(std::move(out));
    }

    /// Evaluates with every variable replaced by an integer.
    template <class Fn>
    [[nodiscard]] Integer evaluate(Fn&& value_of) const {
        Integer sum = 0;
        for (const Term& t : terms_) {
            Integer prod = t.coeff;
            for (const Factor& f : t.mono.factors()) prod *= boost::multiprecision::pow(Integer(value_of(f.var)), f.exp);
            sum += prod;
        }
        return sum;
    }

    /// Gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
    [[nodiscard]] Integer content() const {
        Integer g = 0;
        for (const Term& t : terms_) {
            g = boost::multiprecision::gcd(g, t.coeff);
            if (g == 1) break;
        }
        return g;
    }

    /// Gcd of all monomials; the unit monomial for the zero polynomial.
    [[nodiscard]] Monomial monomial_content() const {
        if (terms_.empty()) return {};
        Monomial g = terms_.front().mono;
        for (const Term& t : terms_) {
            if (g.is_one()) break;
            g = Monomial::gcd(g, t.mono);
        }
        return g;
    }

    /// Divides every term by a monomial and an integer that are known to divide it.
    [[nodiscard]] Polynomial divided_by_term(const Monomial& m, const Integer& c) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_) {
            if (!m.divides(t.mono) || t.coeff % c != 0) throw NotDivisible();
            out.push_back({m.quotient_of(t.mono), t.coeff / c});
        }
        return from_sorted_terms(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    static std::vector<Term> times_term(const std::vector<Term>& terms, const Term& t) {
        std::vector<Term> out;
        out.reserve(terms.size());
        for (const Term& u : terms) out.push_back({u.mono * t.mono, u.coeff * t.coeff});
        return out;
    }

    static Polynomial merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            auto c = i->mono <=> j->mono;
            if (c > 0) {
                out.push_back(*i++);
            } else if (c < 0) {
                out.push_back(subtract ? Term{j->mono, -j->coeff} : *j);
                ++j;
            } else {
                Integer s = subtract ? Integer(i->coeff - j->coeff) : Integer(i->coeff + j->coeff);
                if (s != 0) out.push_back({i->mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        out.insert(out.end(), i, a.end());
        for (; j != b.end(); ++j) out.push_back(subtract ? Term{j->mono, -j->coeff} : *j);
        return from_sorted_terms(std::move(out));
    }

    std::vector<Term> terms_;
};

inline Polynomial alpha(int i) { return Polynomial(alpha_var(i)); }
inline Polynomial f(int i) { return Polynomial(f_var(i)); }
inline Polynomial tau_poly(int i) { return Polynomial(tau_var(i)); }

/// Exact quotient a / b by multivariate long division in the canonical order. Returns
/// nullopt when the remainder is nonzero.
inline std::optional<Polynomial> try_exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Polynomial{};
    const Term& lead = b.leading_term();
    if (b.is_monomial()) {
        std::vector<Term> out;
        out.reserve(a.size());
        for (const Term& t : a.terms()) {
            if (!lead.mono.divides(t.mono) || t.coeff % lead.coeff != 0) return std::nullopt;
            out.push_back({lead.mono.quotient_of(t.mono), t.coeff / lead.coeff});
        }
        return Polynomial::from_sorted_terms(std::move(out));
    }
    auto desc = [](const Monomial& x, const Monomial& y) { return x > y; };
    std::map<Monomial, Integer, decltype(desc)> rem(desc);
    for (const Term& t : a.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lead.mono.divides(top->first)) return std::nullopt;
        Integer q, r;
        boost::multiprecision::divide_qr(top->second, lead.coeff, q, r);
        if (r != 0) return std::nullopt;
        Monomial qm = lead.mono.quotient_of(top->first);
        rem.erase(top);
        for (std::size_t k = 1; k < b.size(); ++k) {
            const Term& bt = b.terms()[k];
            Monomial m = bt.mono * qm;
            auto [it, inserted] = rem.try_emplace(std::move(m), 0);
            it->second -= bt.coeff * q;
            if (it->second == 0) rem.erase(it);
        }
        quotient.push_back({std::move(qm), std::move(q)});
    }
    return Polynomial::from_sorted_terms(std::move(quotient));
}

/// Exact quotient; throws NotDivisible or DivisionByZero.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible();
    return std::move(*q);
}

/// Sum of the terms whose degree in the f-variables is maximal.
inline Polynomial leading_f_component(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    // f-degree is the primary sort key, so the component is a prefix.
    std::uint32_t top = p.terms().front().mono.f_degree();
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        if (t.mono.f_degree() != top) break;
        out.push_back(t);
    }
    return Polynomial::from_sorted_terms(std::move(out));
}

/// Canonical text form, e.g. "f_0*f_1 - a_1".
inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        const bool negative = t.coeff < 0;
        Integer mag = negative ? Integer(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + '*';
            out += t.mono.to_string();
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace tau
