#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tau/tau_engine.hpp"
#include "tau/verification.hpp"

namespace tau {

/// A variable of the periodic specialization alpha_{i+N} = alpha_i, f_{i+N} = f_i,
/// tau_{i+N} = tau_i.
struct ReducedVarId {
    VarKind kind = VarKind::Alpha;
    int residue = 0;
    int modulus = 2;

    ReducedVarId(VarId v, int n) : kind(v.kind), residue(((v.index % n) + n) % n), modulus(n) {
        if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    }

    [[nodiscard]] VarId representative() const { return {kind, residue}; }
};

namespace detail {

inline void check_modulus(int n) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace detail

/// Replaces every index by its residue mod N and collects like terms.
inline Polynomial reduce_poly(const Polynomial& p, int n) {
    detail::check_modulus(n);
    return p.renamed([n](VarId v) { return ReducedVarId(v, n).representative(); });
}

inline RationalFunction reduce_rational(const RationalFunction& x, int n) {
    return RationalFunction(reduce_poly(x.num(), n), reduce_poly(x.den(), n));
}

/// Folded generator s̄_i = prod_n s_{i+nN} on a reduced fraction whose indices lie in
/// [lo, hi] (default [0, N)). Only the generators with index in [lo-1, hi+1] can touch
/// such variables; they commute, so they are applied one after another and the result is
/// folded back mod N.
inline RationalFunction apply_s_bar(int i, const RationalFunction& x, int n, int lo, int hi) {
    detail::check_modulus(n);
    for (const Polynomial* p : {&x.num(), &x.den()}) {
        for (VarId v : p->variables())
            if (v.index < lo || v.index > hi)
                throw WindowTooSmall("variable " + v.name() + " outside [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
    }
    RationalFunction y = x;
    const int r = ((i % n) + n) % n;
    for (int k = lo - 1; k <= hi + 1; ++k)
        if (((k % n) + n) % n == r) y = apply_s(k, y);
    return reduce_rational(y, n).cancelled();
}

inline RationalFunction apply_s_bar(int i, const RationalFunction& x, int n) { return apply_s_bar(i, x, n, 0, n - 1); }

/// Lifts one folded step at the current diagram: every generator k = r mod N with m_k != 0.
/// Returns the colors of the nodes added; a folded step that removes a node or does nothing
/// is inadmissible.
inline std::vector<int> lift_reduced_step(const Partition& shape, int r, int n, std::size_t step) {
    std::vector<int> added;
    auto ms = m_coefficients(shape);
    for (const auto& [k, m] : ms) {
        if ((((k - r) % n) + n) % n != 0) continue;
        if (m < 0) throw InadmissibleStep(step);
        added.push_back(k);
    }
    if (added.empty()) throw InadmissibleStep(step);
    return added;
}

/// Result of walking a folded word: the A-infinity word it lifts to and the diagram reached.
struct LiftedWord {
    WeylWord word;
    Partition shape;
};

inline LiftedWord lift_reduced_word(const WeylWord& reduced, int n) {
    detail::check_modulus(n);
    LiftedWord out;
    std::vector<int> acting;
    std::size_t step = 0;
    for (int r : reduced.acting_order()) {
        ++step;
        for (int k : lift_reduced_step(out.shape, r, n, step)) {
            acting.push_back(k);
            out.shape = apply_generator_to_diagram(out.shape, k);
        }
    }
    out.word.letters.assign(acting.rbegin(), acting.rend());
    return out;
}

/// The folded cocycle: phī <- s̄_r(phī) * f_r^(nodes added), computed in the reduced field only.
inline Polynomial phi_reduced_cocycle(const WeylWord& reduced, int n) {
    detail::check_modulus(n);
    Polynomial phi(1);
    Partition shape;
    std::size_t step = 0;
    for (int r : reduced.acting_order()) {
        ++step;
        auto added = lift_reduced_step(shape, r, n, step);
        for (int k : added) shape = apply_generator_to_diagram(shape, k);
        const int res = ((r % n) + n) % n;
        RationalFunction image = apply_s_bar(res, RationalFunction(phi), n) *
                                 RationalFunction(f(res).pow(static_cast<unsigned>(added.size())));
        auto cleared = try_exact_div(image.num(), image.den());
        if (!cleared) throw NormalizationMismatch("reduced cocycle step " + std::to_string(step));
        phi = std::move(*cleared);
    }
    return phi;
}

/// Compares reducing the A-infinity tau polynomial with computing directly in the reduced field.
inline VerificationReport verify_reduction(const WeylWord& reduced, int n) {
    VerificationReport report("reduction");
    LiftedWord lifted = lift_reduced_word(reduced, n);
    Polynomial lhs = reduce_poly(phi_cocycle(lifted.word), n);
    Polynomial rhs = phi_reduced_cocycle(reduced, n);
    const bool ok = lhs == rhs;
    report.record("N=" + std::to_string(n) + " word " + reduced.to_string() + " -> (" +
                      lifted.shape.to_string() + ")",
                  ok, "reduced A-infinity = " + lhs.to_string() + ", folded = " + rhs.to_string());
    return report;
}

/// Every folded word of length <= max_length whose steps are all admissible.
inline std::vector<WeylWord> admissible_reduced_words(int n, int max_length) {
    detail::check_modulus(n);
    std::vector<WeylWord> out;
    // Words are grown by prepending letters (the new letter acts last).
    struct Node {
        std::vector<int> acting;
        Partition shape;
    };
    std::vector<Node> frontier{{{}, Partition()}};
    out.push_back(WeylWord{});
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (int r = 0; r < n; ++r) {
                try {
                    auto added = lift_reduced_step(node.shape, r, n, static_cast<std::size_t>(len));
                    Node child = node;
                    child.acting.push_back(r);
                    for (int k : added) child.shape = apply_generator_to_diagram(child.shape, k);
                    WeylWord w;
                    w.letters.assign(child.acting.rbegin(), child.acting.rend());
                    out.push_back(w);
                    next.push_back(std::move(child));
                } catch (const InadmissibleStep&) {
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// Diagrams with at most max_cells cells reachable from the empty diagram through
/// admissible folded steps.
inline std::set<Partition> reachable_reduced_diagrams(int n, int max_cells) {
    std::set<Partition> seen{Partition()};
    std::vector<Partition> queue{Partition()};
    while (!queue.empty()) {
        Partition shape = queue.back();
        queue.pop_back();
        for (int r = 0; r < n; ++r) {
            try {
                Partition next = shape;
                for (int k : lift_reduced_step(shape, r, n, 1)) next = apply_generator_to_diagram(next, k);
                if (next.cells() <= max_cells && seen.insert(next).second) queue.push_back(next);
            } catch (const InadmissibleStep&) {
            }
        }
    }
    return seen;
}

/// Runs verify_reduction over every admissible folded word up to max_length and notes the
/// reachable diagrams with at most `observe_cells` cells.
inline VerificationReport verify_reduction_suite(int n, int max_length, int observe_cells = 6) {
    VerificationReport report("reduction");
    for (const WeylWord& w : admissible_reduced_words(n, max_length)) report.merge(verify_reduction(w, n));
    std::string reach;
    for (const Partition& p : reachable_reduced_diagrams(n, observe_cells))
        reach += (reach.empty() ? "(" : " (") + p.to_string() + ")";
    report.notes.push_back("N=" + std::to_string(n) + " diagrams reachable with <= " + std::to_string(observe_cells) +
                           " cells: " + reach);
    return report;
}

}  // namespace tau
