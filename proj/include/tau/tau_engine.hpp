#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tau/combinatorics.hpp"
#include "tau/determinant.hpp"
#include "tau/rational_function.hpp"
#include "tau/root_fraction.hpp"
#include "tau/weyl_action.hpp"

namespace tau {

/// Thread-safe memo table. Values are computed outside the lock, so two threads may both
/// compute a missing entry; the first insert wins and both results are equal anyway.
template <class Key, class Value>
class SharedMemo {
public:
    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, Value> table_;
};

/// (p, q) with p >= 1, q >= 0: the hook diagram (p, 1^q).
struct HookIndex {
    int p = 1;
    int q = 0;

    HookIndex(int p_, int q_) : p(p_), q(q_) {
        if (p < 1 || q < 0) throw std::invalid_argument("hook index needs p >= 1 and q >= 0");
    }

    [[nodiscard]] Partition partition() const {
        std::vector<int> parts{p};
        parts.insert(parts.end(), static_cast<std::size_t>(q), 1);
        return Partition(std::move(parts));
    }

    friend auto operator<=>(const HookIndex&, const HookIndex&) = default;
};

/// w(tau_j) = phi * prod tau_i^{m_i}.
struct TauImage {
    Polynomial phi;
    std::map<int, int> tau_monomial;

    [[nodiscard]] RationalFunction to_rational() const {
        Polynomial num = phi;
        Polynomial den(1);
        for (const auto& [i, m] : tau_monomial) {
            if (m > 0) num *= tau_poly(i).pow(static_cast<unsigned>(m));
            else den *= tau_poly(i).pow(static_cast<unsigned>(-m));
        }
        return RationalFunction(std::move(num), std::move(den));
    }
};

// ---------------------------------------------------------------------------
// Hook determinants
// ---------------------------------------------------------------------------

/// Subdiagonal entry of the hook matrix: v_j - v_p for j > 0, v_j - v_{-q} for j <= 0.
inline Polynomial beta(int j, int p, int q) {
    if (j < -q + 1 || j > p - 1) throw IndexOutOfBand(j);
    return j > 0 ? VDifference{j, p}.to_polynomial() : VDifference{j, -q}.to_polynomial();
}

/// Tridiagonal (p+q)x(p+q) matrix: diagonal f_{-q}..f_{p-1}, superdiagonal 1, subdiagonal beta.
inline Matrix<Polynomial> hook_matrix(HookIndex h) {
    const int n = h.p + h.q;
    Matrix<Polynomial> m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        const int j = r - h.q;
        const auto ur = static_cast<std::size_t>(r);
        m[ur][ur] = f(j);
        if (r + 1 < n) m[ur][ur + 1] = Polynomial(1);
        if (r > 0) m[ur][ur - 1] = beta(j, h.p, h.q);
    }
    return m;
}

namespace detail {

inline SharedMemo<std::pair<int, int>, Polynomial>& hook_memo() {
    static SharedMemo<std::pair<int, int>, Polynomial> memo;
    return memo;
}

inline SharedMemo<std::pair<int, int>, RootFraction>& h_memo() {
    static SharedMemo<std::pair<int, int>, RootFraction> memo;
    return memo;
}

inline SharedMemo<std::vector<int>, Polynomial>& phi_memo() {
    static SharedMemo<std::vector<int>, Polynomial> memo;
    return memo;
}

inline RootFraction root_fraction_det(const Matrix<RootFraction>& m) {
    return laplace_determinant(
        m, RootFraction(Polynomial(1)), [](const RootFraction& x) { return x.is_zero(); },
        [](const std::vector<std::pair<bool, RootFraction>>& parts) { return RootFraction::sum(parts); });
}

inline Polynomial clear_normalization(const RootFraction& det, const Partition& lambda, const char* route) {
    auto phi = det.times_roots(hook_forms(lambda));
    if (!phi) throw NormalizationMismatch(std::string(route) + " for partition (" + lambda.to_string() + ")");
    return std::move(*phi);
}

}  // namespace detail

/// phi_{p,q} = X_{p,q}, the tau polynomial of the hook (p, 1^q).
inline Polynomial hook_tau(HookIndex h) {
    return detail::hook_memo().get_or_compute({h.p, h.q}, [h] { return det_polynomial(hook_matrix(h)); });
}

/// X_{p,q} over the hook normalization, denominator kept factored.
inline RootFraction hook_fraction(HookIndex h) { return RootFraction(hook_tau(h), hook_forms(h.partition())); }

inline RationalFunction phi_tilde_hook(HookIndex h) {
    return RationalFunction(hook_tau(h), normalization_factor(h.partition()));
}

// ---------------------------------------------------------------------------
// Determinant formulas
// ---------------------------------------------------------------------------

/// Minor matrix (phi~_{p,q}) with rows p in I and columns q in J, both decreasing.
inline Matrix<RootFraction> frobenius_matrix(const Partition& lambda) {
    FrobeniusSymbol fs = partition_to_frobenius(lambda);
    Matrix<RootFraction> m;
    for (int p : fs.arms) {
        std::vector<RootFraction> row;
        for (int q : fs.legs) row.push_back(hook_fraction({p, q}));
        m.push_back(std::move(row));
    }
    return m;
}

/// phi_w(Lambda_0) from the determinant of normalized hook functions over the Frobenius
/// symbol, multiplied back by N_w.
inline Polynomial phi_theorem1(const Partition& lambda) {
    return detail::phi_memo().get_or_compute(lambda.parts(), [&] {
        return detail::clear_normalization(detail::root_fraction_det(frobenius_matrix(lambda)), lambda,
                                           "Frobenius determinant");
    });
}

/// h_k^{(j)} = pi^j(phi~_{k,0}); h_0 = 1 and h_k = 0 for k < 0.
inline RootFraction h_fraction(int k, int j) {
    if (k < 0) return RootFraction();
    if (k == 0) return RootFraction(Polynomial(1));
    return detail::h_memo().get_or_compute({k, j}, [k, j] { return hook_fraction({k, 0}).shifted(j); });
}

inline RationalFunction h_entry(int k, int j) { return h_fraction(k, j).to_rational(); }

/// (h_{lambda_i - i + j}^{(1-j)})_{1 <= i,j <= l}
inline Matrix<RootFraction> jacobi_trudi_matrix(const Partition& lambda) {
    const int l = lambda.length();
    Matrix<RootFraction> m;
    for (int i = 1; i <= l; ++i) {
        std::vector<RootFraction> row;
        for (int j = 1; j <= l; ++j) row.push_back(h_fraction(lambda.part(i) - i + j, 1 - j));
        m.push_back(std::move(row));
    }
    return m;
}

/// phi_w(Lambda_0) from the Jacobi-Trudi determinant of single-row functions.
inline Polynomial phi_theorem2(const Partition& lambda) {
    return detail::clear_normalization(detail::root_fraction_det(jacobi_trudi_matrix(lambda)), lambda,
                                       "Jacobi-Trudi determinant");
}

/// Normalized function phi~ = phi / N as a fraction.
inline RationalFunction phi_tilde(const Partition& lambda) {
    return RationalFunction(phi_theorem1(lambda), normalization_factor(lambda));
}

// ---------------------------------------------------------------------------
// Cocycle route
// ---------------------------------------------------------------------------

/// Folds phi_{s_i w} = s_i(phi_w) f_i from phi_id = 1 along the word. Every step must add a
/// node (m_i = 1). Each intermediate is itself a tau polynomial, so the f_i-power
/// denominator is cleared after every step. A pi-power in the word shifts the result.
inline Polynomial phi_cocycle(const WeylWord& word) {
    Polynomial phi(1);
    Partition shape;
    std::size_t step = 0;
    for (int i : word.acting_order()) {
        ++step;
        if (m_coefficient(shape, i) != 1) throw InadmissibleStep(step);
        RationalFunction image = apply_s(i, RationalFunction(phi)) * RationalFunction(f(i));
        auto cleared = try_exact_div(image.num(), image.den());
        if (!cleared) throw NormalizationMismatch("cocycle step " + std::to_string(step) + " of " + word.to_string());
        phi = std::move(*cleared);
        shape = apply_generator_to_diagram(shape, i);
    }
    return apply_pi(word.pi_power, phi);
}

/// Diagram reached by the word from Lambda_0 (letters acting right to left), ignoring pi.
/// Steps with m_i = 0 or -1 are allowed here; they fix or remove a node.
inline Partition orbit_partition(const std::vector<int>& acting_letters) {
    Partition shape;
    for (int i : acting_letters) shape = apply_generator_to_diagram(shape, i);
    return shape;
}

/// phi_w(Lambda_j) with its tau monomial, via phi_w(Lambda_j) = pi^j(phi_{pi^-j w pi^j}(Lambda_0)).
/// The value depends only on the orbit point, so any word is accepted: the conjugated word
/// is walked on diagrams and the resulting partition is evaluated by the Frobenius formula.
inline TauImage phi_lambda_j(const WeylWord& word, int j) {
    std::vector<int> conj = word.acting_order();
    for (int& i : conj) i -= j;
    Partition mu = orbit_partition(conj);
    const int shift = j + word.pi_power;
    TauImage out;
    out.phi = apply_pi(shift, phi_theorem1(mu));
    for (const auto& [i, m] : m_coefficients(mu)) out.tau_monomial[i + shift] = m;
    return out;
}

/// The element pi^j w_lambda pi^-j applied to tau_j.
inline TauImage phi_lambda_j(const Partition& lambda, int j) {
    return phi_lambda_j(canonical_word(lambda).shifted(j), j);
}

// ---------------------------------------------------------------------------
// Frame of the universal Grassmannian
// ---------------------------------------------------------------------------

/// Entry of the frame X in row j <= 0 and column c: h_{c-j}^{(j)}.
inline RootFraction frame_entry(int row, int col) { return h_fraction(col - row, row); }

/// Minor of X on rows 0, -1, ..., -(window-1) and the columns given by the first `window`
/// elements of the Maya diagram of lambda. Equals the Jacobi-Trudi determinant.
inline RationalFunction frame_minor(const Partition& lambda, int window) {
    if (window < lambda.length() || window < lambda.part(1))
        throw WindowTooSmall("partition (" + lambda.to_string() + ") needs window >= " +
                             std::to_string(std::max(lambda.length(), lambda.part(1))));
    std::vector<int> columns = partition_to_maya(lambda).top_elements(window);
    Matrix<RootFraction> m;
    for (int r = 0; r < window; ++r) {
        std::vector<RootFraction> row;
        for (int c : columns) row.push_back(frame_entry(-r, c));
        m.push_back(std::move(row));
    }
    return detail::root_fraction_det(m).to_rational();
}

}  // namespace tau
