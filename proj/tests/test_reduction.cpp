#include <random>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "tau/reduction.hpp"

using namespace tau;

namespace {

/// Folds indices term by term without going through Polynomial::renamed.
Polynomial fold_oracle(const Polynomial& p, int n) {
    Polynomial out;
    for (const Term& t : p.terms()) {
        Polynomial term(t.coeff);
        for (const Factor& fc : t.mono.factors()) {
            int r = fc.var.index % n;
            if (r < 0) r += n;
            term = term * Polynomial(VarId{fc.var.kind, r}).pow(fc.exp);
        }
        out = out + term;
    }
    return out;
}

/// 3-cores: diagrams with no hook length divisible by 3.
bool is_core(const Partition& p, int n) {
    for (auto [i, j] : p.nodes())
        if (oracle::hook_length(p.parts(), i, j) % n == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("index folding") {
    CHECK(reduce_poly(f(0) * f(3) - alpha(1), 3) == f(0).pow(2) - alpha(1));
    CHECK(reduce_poly(f(0), 3) == f(0));
    CHECK(reduce_poly(alpha(-1), 3) == alpha(2));
    CHECK_THROWS_AS(reduce_poly(f(0), 1), std::invalid_argument);
    CHECK(ReducedVarId(f_var(-4), 3).residue == 2);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = oracle::random_polynomial(rng), b = oracle::random_polynomial(rng);
        CHECK(reduce_poly(a, 3) == fold_oracle(a, 3));
        CHECK(reduce_poly(a * b, 3) == reduce_poly(a, 3) * reduce_poly(b, 3));
        CHECK(reduce_poly(a + b, 4) == reduce_poly(a, 4) + reduce_poly(b, 4));
    }
}

TEST_CASE("folded generators") {
    CHECK(rat_equal(apply_s_bar(0, RationalFunction(alpha(0)), 3), RationalFunction(-alpha(0))));
    CHECK(rat_equal(apply_s_bar(0, RationalFunction(f(1)), 3), RationalFunction(f(1) * f(0) + alpha(0), f(0))));
    CHECK(rat_equal(apply_s_bar(0, RationalFunction(f(2)), 3), RationalFunction(f(2) * f(0) - alpha(0), f(0))));
    CHECK_THROWS_AS(apply_s_bar(0, RationalFunction(f(5)), 3), WindowTooSmall);
}

TEST_CASE("folded relations") {
    for (int n : {3, 4}) {
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                for (const Polynomial& v : {alpha(k), f(k), tau_poly(k)}) {
                    RationalFunction x(v);
                    auto sb = [n](int g, const RationalFunction& y) { return apply_s_bar(g, y, n); };
                    CHECK(rat_equal(sb(i, sb(i, x)), x));
                    const int j = (i + 1) % n;
                    RationalFunction y = x;
                    for (int rep = 0; rep < 3; ++rep) y = sb(i, sb(j, y));
                    CHECK(rat_equal(y, x));
                    if (n == 4) {
                        const int far = (i + 2) % n;
                        CHECK(rat_equal(sb(i, sb(far, x)), sb(far, sb(i, x))));
                    }
                }
            }
        }
    }
}

TEST_CASE("reduction consistency") {
    CHECK(verify_reduction(canonical_word(Partition{1}), 3).passed());
    CHECK(verify_reduction(WeylWord{}, 3).passed());
    CHECK(verify_reduction(canonical_word(Partition{2, 1}), 3).passed());
    CHECK_THROWS_AS(verify_reduction(WeylWord::parse("s0 s0"), 3), InadmissibleStep);
    CHECK(verify_reduction_suite(3, 5).passed());
    CHECK(verify_reduction_suite(4, 4).passed());
}

TEST_CASE("lifted words") {
    // s2 s1 s0 mod 3 lifts to add (1), then (2), then colors 2 and -1 together.
    LiftedWord lw = lift_reduced_word(WeylWord::parse("s2 s1 s0"), 3);
    CHECK(lw.shape == Partition{3, 1});
    CHECK(lw.word.letters.size() == 4);
}

TEST_CASE("reachable diagrams are cores") {
    auto seen = reachable_reduced_diagrams(3, 8);
    CHECK(seen.size() > 5);
    for (const Partition& p : seen) {
        INFO("(" << p.to_string() << ")");
        CHECK(is_core(p, 3));
    }
}
