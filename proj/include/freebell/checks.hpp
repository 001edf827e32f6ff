#ifndef FREEBELL_CHECKS_HPP
#define FREEBELL_CHECKS_HPP

#include <string>
#include <vector>

namespace freebell {
namespace checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // what was covered, or the first mismatch found
};

// The thirteen acceptance checks.  Each one recomputes its targets from
// scratch, compares against values frozen in the implementation, and never
// throws: failures (including internal errors) come back as pass = false
// with the reason in detail.
CheckResult bell_expansions();         // integer expansions up to degree 5
CheckResult q_bell_tables();           // q-tables up to degree 4 + triangle rows
CheckResult quasideterminant();        // path-sum vs recursion, closed coefficients
CheckResult free_bell();               // G-expansions, partition-sum identity
CheckResult right_combs();             // C_I vs decreasing-tree fibers
CheckResult dual_immaculate();         // three routes agree, worked expansions
CheckResult hook_formula();            // hook product vs specialization vs inv
CheckResult specialization_bridge();   // free Bell -> q-Bell specialization
CheckResult half_product_displays();   // worked half products, closed formulas
CheckResult dendriform_axioms();       // axioms + splitting identities
CheckResult bell_classes();            // class structure, posets, insertion
CheckResult hopf_closure();            // class-sum basis closed under ops
CheckResult quasi_differential();      // two-alphabet route for the left product

// Suites: "all", "bell", "dendriform", "dualimm", "hopf".
// Unknown names raise std::invalid_argument.
std::vector<CheckResult> run_suite(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace checks
}  // namespace freebell

#endif
