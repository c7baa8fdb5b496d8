#ifndef UQP_IDENTITIES_HPP
#define UQP_IDENTITIES_HPP

#include <functional>
#include <string>
#include <vector>

namespace uqp {

/// A registered exact identity check. run() returns true on success and
/// appends a human-readable explanation (or the failing residual) to detail.
struct IdentityCheck {
    std::string name;
    std::string label;
    std::function<bool(std::string& detail)> run;
};

/// The displayed-identity battery: central elements, bracket identities,
/// the quotient map onto the Heisenberg algebra, the localized inverse
/// identity for e2, and the subalgebra central elements.
const std::vector<IdentityCheck>& identity_registry();

/// Runs one registered identity by name; throws on unknown names.
bool run_identity(const std::string& name, std::string& detail);

} // namespace uqp

#endif
