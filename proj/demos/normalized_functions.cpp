// Prints the normalized functions of all diagrams with at most four cells, then checks the
// quadratic relation between the six smallest ones.

#include <iostream>

#include "tau/format.hpp"
#include "tau/tau_engine.hpp"
#include "tau/verifiers.hpp"

int main() {
    using namespace tau;
    for (const Partition& lambda : partitions_up_to(4)) {
        PhiOutput out;
        out.shape = lambda;
        out.normalized = true;
        out.phi = phi_theorem1(lambda);
        for (const VDifference& h : hook_forms(lambda)) out.denominator.push_back(h.to_polynomial());
        std::cout << "(" << lambda.to_string() << ")  " << format_text(out) << "\n";
    }
    verify_plucker().print(std::cout);
}
