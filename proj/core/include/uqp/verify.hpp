#ifndef UQP_VERIFY_HPP
#define UQP_VERIFY_HPP

#include <string>
#include <vector>

namespace uqp {

struct CheckResult {
    std::string section;
    std::string name;
    bool ok = false;
    std::string detail;
};

/// The full verification battery behind `verify --suite paper`: quantum
/// binomial values, braided automorphism groups, derived Nichols relations,
/// the identity registry, confluence of every builtin presentation, Hilbert
/// agreement, and the poset/witness checks.
std::vector<CheckResult> run_verify_suite();

} // namespace uqp

#endif
