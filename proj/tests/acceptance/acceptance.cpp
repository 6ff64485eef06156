// Acceptance gate: one PASS/FAIL line per criterion. A criterion passes when every exact
// check holds and the run stays inside its time budget. Exit status is nonzero on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "tau/reduction.hpp"
#include "tau/tau_engine.hpp"
#include "tau/verifiers.hpp"
#include "tau/weyl_action.hpp"

namespace {

using namespace tau;

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<VerificationReport()> run;
};

/// The six functions as printed: numerator and denominator, both as polynomials and as text.
VerificationReport examples_golden() {
    VerificationReport r("golden");
    struct Golden {
        std::string name;
        Partition shape;
        Polynomial num;
        Polynomial den;
        std::string num_text;
        std::string den_text;
    };
    const Polynomial s_m10 = alpha(-1) + alpha(0);
    const Polynomial s_01 = alpha(0) + alpha(1);
    const Polynomial s_m11 = alpha(-1) + alpha(0) + alpha(1);
    const std::vector<Golden> golden{
        {"a12", {}, Polynomial(1), Polynomial(1), "1", "1"},
        {"a13", {1}, f(0), alpha(0), "f_0", "a_0"},
        {"a14", {2}, f(0) * f(1) - alpha(1), s_01 * alpha(1), "f_0*f_1 - a_1", "a_0*a_1 + a_1^2"},
        {"a23", {1, 1}, f(-1) * f(0) + alpha(-1), s_m10 * alpha(-1), "f_-1*f_0 + a_-1", "a_-1^2 + a_-1*a_0"},
        {"a24", {2, 1}, f(-1) * f(0) * f(1) + alpha(-1) * f(1) - alpha(1) * f(-1), s_m11 * alpha(-1) * alpha(1),
         "f_-1*f_0*f_1 + a_-1*f_1 - a_1*f_-1", "a_-1^2*a_1 + a_-1*a_0*a_1 + a_-1*a_1^2"},
        {"a34", {2, 2},
         f(-1) * f(0).pow(2) * f(1) + alpha(-1) * f(0) * f(1) - alpha(1) * f(-1) * f(0) + alpha(0) * s_m11,
         s_m11 * s_01 * s_m10 * alpha(0),
         "f_-1*f_0^2*f_1 + a_-1*f_0*f_1 - a_1*f_-1*f_0 + a_-1*a_0 + a_0^2 + a_0*a_1",
         "a_-1^2*a_0^2 + a_-1^2*a_0*a_1 + 2*a_-1*a_0^3 + 3*a_-1*a_0^2*a_1 + a_-1*a_0*a_1^2 + a_0^4 + "
         "2*a_0^3*a_1 + a_0^2*a_1^2"},
    };
    for (const Golden& g : golden) {
        const Polynomial phi = phi_theorem1(g.shape);
        const Polynomial n = normalization_factor(g.shape);
        const RationalFunction computed(phi, n);
        const RationalFunction printed(g.num, g.den);
        r.record(g.name + " rat_equal", rat_equal(computed, printed),
                 "computed " + computed.to_string() + ", printed " + printed.to_string());
        r.record(g.name + " numerator text", phi.to_string() == g.num_text, phi.to_string() + " vs " + g.num_text);
        r.record(g.name + " denominator text", n.to_string() == g.den_text, n.to_string() + " vs " + g.den_text);
    }
    return r;
}

VerificationReport tau_and_remark2() {
    VerificationReport r("tau-consistency+remark2");
    r.merge(verify_tau_consistency_suite(5, {-1, 0, 1}));
    r.merge(verify_remark2_suite(4, {-1, 0, 1}));
    return r;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden normalized functions a12..a34", 1.0, examples_golden},
        {2, "three-way equivalence, all 67 partitions <= 8 cells", 300.0, [] { return verify_three_way(8, 1); }},
        {3, "Weyl relations on window [-4, 4]", 30.0, [] { return verify_relations(-4, 4); }},
        {4, "order independence, 20 build orders, <= 6 cells", 120.0,
         [] { return verify_order_independence(6, 20, 0); }},
        {5, "hook normalization recurrence, <= 8 cells", 30.0, [] { return verify_normalization(8); }},
        {6, "hook recurrences p <= 5, q <= 4", 60.0, [] { return verify_hook_recurrences(5, 4); }},
        {7, "Plucker identities, exact and 10 specializations", 5.0, [] { return verify_plucker(10); }},
        {8, "corollary: integrality and leading f-part, <= 8 cells", 30.0, [] { return verify_corollary_suite(8); }},
        {9, "bordered determinant identity, 100 instances", 5.0, [] { return verify_lemma5(0, 100); }},
        {10, "tau images (<= 5 cells) and f formula (<= 4 cells)", 300.0, tau_and_remark2},
        {11, "N = 3 reduction, admissible words of length <= 6", 120.0, [] { return verify_reduction_suite(3, 6); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport report;
        std::string error;
        try {
            report = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool exact = error.empty() && !report.checks.empty() && report.passed();
        const bool in_time = secs <= c.budget_seconds;
        const bool ok = exact && in_time;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ("
                  << report.checks.size() << " checks, " << report.failures() << " failed, " << std::fixed
                  << std::setprecision(3) << secs << " s of " << std::setprecision(0) << c.budget_seconds
                  << " s)\n";
        if (!error.empty()) std::cout << "      error: " << error << "\n";
        if (!exact && error.empty()) {
            for (const Check& k : report.checks)
                if (!k.passed) std::cout << "      FAIL " << k.label << ": " << k.witness << "\n";
        }
        for (const std::string& n : report.notes) std::cout << "      note: " << n << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
