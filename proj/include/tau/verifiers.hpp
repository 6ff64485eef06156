#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tau/combinatorics.hpp"
#include "tau/determinant.hpp"
#include "tau/tau_engine.hpp"
#include "tau/verification.hpp"
#include "tau/weyl_action.hpp"

namespace tau {

using Rational = boost::multiprecision::cpp_rational;

/// Evaluates every item on `jobs` worker threads; results keep the input order.
template <class Item, class Fn>
std::vector<VerificationReport> parallel_reports(const std::vector<Item>& items, Fn&& fn, unsigned jobs) {
    std::vector<VerificationReport> out(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < std::min<std::size_t>(jobs, items.size()); ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < items.size(); i = next++) out[i] = fn(items[i]);
            });
        }
    }
    return out;
}

inline VerificationReport merge_reports(std::string name, const std::vector<VerificationReport>& parts) {
    VerificationReport report(std::move(name));
    for (const auto& p : parts) report.merge(p);
    return report;
}

namespace detail {

inline std::string shape_label(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

/// alpha_k = 1, f_k = pseudo-random distinct integers: a cheap necessary condition checked
/// before exact comparison.
inline Integer specialize_alpha_one(const Polynomial& p, std::uint64_t seed) {
    return p.evaluate([seed](VarId v) -> long long {
        if (v.kind == VarKind::Alpha) return 1;
        std::uint64_t h = seed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.index)) * 0x9e3779b97f4a7c15ULL) ^
                          (static_cast<std::uint64_t>(v.kind) << 56);
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 32;
        return static_cast<long long>(h % 2000003ULL) + 2 * v.index + 3;
    });
}

inline bool equal_with_precheck(const Polynomial& a, const Polynomial& b, std::uint64_t seed) {
    if (specialize_alpha_one(a, seed) != specialize_alpha_one(b, seed)) return false;
    return a == b;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Determinant formulas against the cocycle
// ---------------------------------------------------------------------------

/// Frobenius determinant == cocycle for every partition with <= max_cells cells.
inline VerificationReport verify_theorem1(int max_cells, unsigned jobs = 1) {
    auto parts = parallel_reports(partitions_up_to(max_cells), [](const Partition& lambda) {
        VerificationReport r;
        Polynomial t1 = phi_theorem1(lambda);
        Polynomial co = phi_cocycle(canonical_word(lambda));
        bool ok = detail::equal_with_precheck(t1, co, 17);
        r.record("theorem1 " + detail::shape_label(lambda), ok,
                 "partition " + detail::shape_label(lambda) + ": determinant = " + t1.to_string() +
                     ", cocycle = " + co.to_string());
        return r;
    }, jobs);
    return merge_reports("theorem1", parts);
}

/// Jacobi-Trudi determinant == cocycle for every partition with <= max_cells cells.
inline VerificationReport verify_theorem2(int max_cells, unsigned jobs = 1) {
    auto parts = parallel_reports(partitions_up_to(max_cells), [](const Partition& lambda) {
        VerificationReport r;
        Polynomial t2 = phi_theorem2(lambda);
        Polynomial co = phi_cocycle(canonical_word(lambda));
        bool ok = detail::equal_with_precheck(t2, co, 23);
        r.record("theorem2 " + detail::shape_label(lambda), ok,
                 "partition " + detail::shape_label(lambda) + ": Jacobi-Trudi = " + t2.to_string() +
                     ", cocycle = " + co.to_string());
        return r;
    }, jobs);
    return merge_reports("theorem2", parts);
}

/// All three routes agree exactly.
inline VerificationReport verify_three_way(int max_cells, unsigned jobs = 1) {
    auto parts = parallel_reports(partitions_up_to(max_cells), [](const Partition& lambda) {
        VerificationReport r;
        Polynomial t1 = phi_theorem1(lambda);
        Polynomial t2 = phi_theorem2(lambda);
        Polynomial co = phi_cocycle(canonical_word(lambda));
        bool ok = detail::equal_with_precheck(t1, t2, 29) && detail::equal_with_precheck(t1, co, 31);
        r.record("three-way " + detail::shape_label(lambda), ok,
                 "partition " + detail::shape_label(lambda) + ": theorem1 = " + t1.to_string() +
                     ", theorem2 = " + t2.to_string() + ", cocycle = " + co.to_string());
        return r;
    }, jobs);
    return merge_reports("cocycle-equivalence", parts);
}

/// A uniformly random order of adding the cells of lambda so that every prefix is a diagram.
inline WeylWord random_build_word(const Partition& lambda, std::mt19937_64& rng) {
    std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
    std::vector<int> colors;
    const int total = lambda.cells();
    while (static_cast<int>(colors.size()) < total) {
        std::vector<int> rows;
        for (int i = 1; i <= lambda.length(); ++i) {
            const int next_col = filled[static_cast<std::size_t>(i - 1)] + 1;
            if (next_col > lambda.part(i)) continue;
            if (i > 1 && filled[static_cast<std::size_t>(i - 2)] < next_col) continue;
            rows.push_back(i);
        }
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        const int i = rows[pick(rng)];
        const int j = ++filled[static_cast<std::size_t>(i - 1)];
        colors.push_back(node_color(i, j));
    }
    WeylWord w;
    w.letters.assign(colors.rbegin(), colors.rend());
    return w;
}

/// Random admissible build orders of the same diagram give the same phi.
inline VerificationReport verify_order_independence(int max_cells, int orders_per_partition, std::uint64_t seed) {
    VerificationReport report("order-independence");
    std::mt19937_64 rng(seed);
    for (const Partition& lambda : partitions_up_to(max_cells)) {
        const Polynomial reference = phi_cocycle(canonical_word(lambda));
        for (int k = 0; k < orders_per_partition; ++k) {
            WeylWord w = random_build_word(lambda, rng);
            Polynomial phi = phi_cocycle(w);
            report.record("order-independence " + detail::shape_label(lambda) + " #" + std::to_string(k),
                          phi == reference,
                          "partition " + detail::shape_label(lambda) + ", word " + w.to_string() + ": " +
                              phi.to_string() + " vs canonical " + reference.to_string());
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/// N_{s_k w} = alpha_k s_k(N_w) on every add step, and the normalized cocycle
/// phi~_{s_k w} = s_k(phi~_w) f_k / alpha_k for diagrams up to `cocycle_cells`.
inline VerificationReport verify_normalization(int max_cells, int cocycle_cells = -1) {
    if (cocycle_cells < 0) cocycle_cells = std::min(max_cells, 6);
    VerificationReport report("normalization");
    for (const Partition& lambda : partitions_up_to(max_cells - 1)) {
        for (const auto& [k, m] : m_coefficients(lambda)) {
            if (m != 1) continue;
            const Partition grown = apply_generator_to_diagram(lambda, k);
            if (grown.cells() > max_cells) continue;
            const std::string step = detail::shape_label(lambda) + " --s" + std::to_string(k) + "--> " +
                                     detail::shape_label(grown);
            RationalFunction lhs(normalization_factor(grown));
            RationalFunction rhs = RationalFunction(alpha(k)) * apply_s(k, RationalFunction(normalization_factor(lambda)));
            report.record("hook recurrence " + step, rat_equal(lhs, rhs),
                          step + ": N = " + lhs.to_string() + ", alpha_k s_k(N) = " + rhs.to_string());
            if (grown.cells() <= cocycle_cells) {
                RationalFunction nl = phi_tilde(grown);
                RationalFunction nr = apply_s(k, phi_tilde(lambda)) * RationalFunction(f(k), alpha(k));
                report.record("normalized cocycle " + step, rat_equal(nl, nr),
                              step + ": phi~ = " + nl.to_string() + ", s_k(phi~) f_k/alpha_k = " + nr.to_string());
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Hooks, Plucker relations, corollary
// ---------------------------------------------------------------------------

/// X_{p+1,q} = s_p(X_{p,q}) f_p and X_{p,q+1} = s_{-(q+1)}(X_{p,q}) f_{-(q+1)}.
inline VerificationReport verify_hook_recurrences(int pmax, int qmax) {
    VerificationReport report("hook-recurrence");
    for (int p = 1; p <= pmax; ++p) {
        for (int q = 0; q <= qmax; ++q) {
            RationalFunction x(hook_tau({p, q}));
            RationalFunction row_rhs = apply_s(p, x) * RationalFunction(f(p));
            RationalFunction col_rhs = apply_s(-(q + 1), x) * RationalFunction(f(-(q + 1)));
            RationalFunction row_lhs(hook_tau({p + 1, q}));
            RationalFunction col_lhs(hook_tau({p, q + 1}));
            const bool row_ok = rat_equal(row_lhs, row_rhs);
            const bool col_ok = rat_equal(col_lhs, col_rhs);
            std::string witness;
            if (!row_ok) witness += "X_{p+1,q} = " + row_lhs.to_string() + " vs " + row_rhs.to_string() + "; ";
            if (!col_ok) witness += "X_{p,q+1} = " + col_lhs.to_string() + " vs " + col_rhs.to_string();
            report.record("hook (" + std::to_string(p) + "," + std::to_string(q) + ")", row_ok && col_ok, witness);
        }
    }
    return report;
}

/// The six normalized functions of the smallest diagrams, named by their Plucker indices.
struct SmallPluckerFunctions {
    RationalFunction a12, a13, a14, a23, a24, a34;

    static SmallPluckerFunctions compute() {
        return {phi_tilde({}), phi_tilde({1}), phi_tilde({2}), phi_tilde({1, 1}), phi_tilde({2, 1}),
                phi_tilde({2, 2})};
    }
};

namespace detail {

inline Rational eval_rational(const RationalFunction& x, const std::function<long long(VarId)>& point) {
    Integer d = x.den().evaluate(point);
    if (d == 0) throw DivisionByZero();
    return Rational(x.num().evaluate(point)) / Rational(d);
}

}  // namespace detail

/// a12 a34 - a13 a24 + a14 a23 = 0 and a23 = pi^-1(a13) a13 - pi^-1(a14) a12, exactly and
/// after `seeds` random integer specializations.
inline VerificationReport verify_plucker(int seeds = 0) {
    VerificationReport report("plucker");
    const auto a = SmallPluckerFunctions::compute();
    RationalFunction quadratic = a.a12 * a.a34 - a.a13 * a.a24 + a.a14 * a.a23;
    report.record("a12 a34 - a13 a24 + a14 a23 = 0", rat_equal(quadratic, RationalFunction()),
                  "value = " + quadratic.to_string());
    RationalFunction shifted = apply_pi(-1, a.a13) * a.a13 - apply_pi(-1, a.a14) * a.a12;
    report.record("a23 = pi^-1(a13) a13 - pi^-1(a14) a12", rat_equal(a.a23, shifted),
                  "a23 = " + a.a23.to_string() + ", rhs = " + shifted.to_string());

    for (int s = 0; s < seeds; ++s) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(s) + 1);
        std::uniform_int_distribution<long long> dist(-50, 50);
        std::map<VarId, long long> values;
        auto point = [&](VarId v) -> long long {
            auto it = values.find(v);
            if (it != values.end()) return it->second;
            long long x = 0;
            while (x == 0) x = dist(rng);
            return values[v] = x;
        };
        // Points where a denominator vanishes are redrawn from the same stream.
        bool ok = false;
        std::string witness;
        for (int attempt = 0;; ++attempt) {
            try {
                auto ev = [&](const RationalFunction& x) { return detail::eval_rational(x, point); };
                Rational q = ev(a.a12) * ev(a.a34) - ev(a.a13) * ev(a.a24) + ev(a.a14) * ev(a.a23);
                Rational l = ev(a.a23);
                Rational r = ev(apply_pi(-1, a.a13)) * ev(a.a13) - ev(apply_pi(-1, a.a14)) * ev(a.a12);
                ok = q == 0 && l == r;
                witness = "quadratic = " + q.str() + ", a23 = " + l.str() + ", rhs = " + r.str();
                break;
            } catch (const DivisionByZero&) {
                if (attempt == 100) {
                    witness = "no pole-free point after 100 draws";
                    break;
                }
                values.clear();
            }
        }
        report.record("specialized seed " + std::to_string(s), ok, witness);
    }
    return report;
}

/// Integer coefficients, and the top f-degree part is exactly prod f_i^{nu_i}.
inline VerificationReport verify_corollary(const Partition& lambda) {
    VerificationReport report("corollary");
    const Polynomial phi = phi_theorem1(lambda);
    Monomial expected_mono;
    for (const auto& [color, nu] : color_multiplicities(lambda))
        expected_mono = expected_mono * Monomial(f_var(color), static_cast<std::uint32_t>(nu));
    const Polynomial expected(expected_mono, Integer(1));
    const Polynomial lead = leading_f_component(phi);
    report.record("corollary " + detail::shape_label(lambda), lead == expected,
                  "leading f-part " + lead.to_string() + ", expected " + expected.to_string());
    return report;
}

inline VerificationReport verify_corollary_suite(int max_cells) {
    VerificationReport report("corollary");
    for (const Partition& lambda : partitions_up_to(max_cells)) report.merge(verify_corollary(lambda));
    return report;
}

// ---------------------------------------------------------------------------
// Bordered determinant identity
// ---------------------------------------------------------------------------

/// z^{n-1} det[[A, x],[y, z]] = det(a_ij z - x_i y_j) on random integer data, n in [1, 5].
inline VerificationReport verify_lemma5(std::uint64_t seed, int trials = 100) {
    VerificationReport report("lemma5");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 5);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < trials; ++t) {
        const int n = size(rng);
        const auto un = static_cast<std::size_t>(n);
        Matrix<Polynomial> a(un, std::vector<Polynomial>(un));
        std::vector<int> x(un), y(un);
        for (auto& row : a)
            for (auto& e : row) e = Polynomial(entry(rng));
        for (int& v : x) v = entry(rng);
        for (int& v : y) v = entry(rng);
        int z = 0;
        while (z == 0) z = entry(rng);

        Matrix<Polynomial> bordered(un + 1, std::vector<Polynomial>(un + 1));
        Matrix<Polynomial> compressed(un, std::vector<Polynomial>(un));
        for (std::size_t i = 0; i < un; ++i) {
            for (std::size_t j = 0; j < un; ++j) {
                bordered[i][j] = a[i][j];
                compressed[i][j] = a[i][j] * Polynomial(z) - Polynomial(x[i] * y[j]);
            }
            bordered[i][un] = Polynomial(x[i]);
            bordered[un][i] = Polynomial(y[i]);
        }
        bordered[un][un] = Polynomial(z);
        const Polynomial lhs = Polynomial(z).pow(static_cast<unsigned>(n - 1)) * det_polynomial(bordered);
        const Polynomial rhs = det_polynomial(compressed);
        report.record("trial " + std::to_string(t) + " (n=" + std::to_string(n) + ")", lhs == rhs,
                      "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Tau images and the f multiplicative formula
// ---------------------------------------------------------------------------

/// w(tau_j) computed by composing generators equals phi_w(Lambda_j) prod tau_i^{m_i}.
inline VerificationReport verify_tau_consistency(const Partition& lambda, int j) {
    VerificationReport report("tau-consistency");
    const WeylWord w = canonical_word(lambda).shifted(j);
    RationalFunction lhs = apply_word(w, RationalFunction(tau_poly(j)));
    RationalFunction rhs = phi_lambda_j(lambda, j).to_rational();
    report.record("tau " + detail::shape_label(lambda) + " j=" + std::to_string(j), rat_equal(lhs, rhs),
                  "word " + w.to_string() + ": composed = " + lhs.to_string() + ", formula = " + rhs.to_string());
    return report;
}

/// w(f_i) = phi_w(Lambda_i) phi_{w s_i}(Lambda_i) / (phi_w(Lambda_{i-1}) phi_w(Lambda_{i+1})).
inline VerificationReport verify_remark2(const Partition& lambda, int i) {
    VerificationReport report("remark2");
    const WeylWord w = canonical_word(lambda);
    WeylWord ws = w;
    ws.letters.push_back(i);
    RationalFunction lhs = apply_word(w, RationalFunction(f(i)));
    Polynomial num = phi_lambda_j(w, i).phi * phi_lambda_j(ws, i).phi;
    Polynomial den = phi_lambda_j(w, i - 1).phi * phi_lambda_j(w, i + 1).phi;
    RationalFunction rhs(num, den);
    report.record("f " + detail::shape_label(lambda) + " i=" + std::to_string(i), rat_equal(lhs, rhs),
                  "word " + w.to_string() + ": w(f_i) = " + lhs.to_string() + ", tau ratio = " + rhs.to_string());
    return report;
}

inline VerificationReport verify_tau_consistency_suite(int max_cells, const std::vector<int>& js) {
    VerificationReport report("tau-consistency");
    for (const Partition& lambda : partitions_up_to(max_cells))
        for (int j : js) report.merge(verify_tau_consistency(lambda, j));
    return report;
}

inline VerificationReport verify_remark2_suite(int max_cells, const std::vector<int>& is) {
    VerificationReport report("remark2");
    for (const Partition& lambda : partitions_up_to(max_cells))
        for (int i : is) report.merge(verify_remark2(lambda, i));
    return report;
}

}  // namespace tau
