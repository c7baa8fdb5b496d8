#ifndef UQP_POSET_HPP
#define UQP_POSET_HPP

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace uqp {

/// Finite labeled partial order stored by its covering relation (transitive
/// reduction); edges point from the smaller to the larger element.
struct Poset {
    std::vector<std::string> nodes;
    std::set<std::pair<int, int>> covers;

    int index(const std::string& label) const;
    bool leq(int a, int b) const;
    bool leq(const std::string& a, const std::string& b) const;
    std::vector<std::string> covers_of(const std::string& label) const; // upward covers

    /// Acyclicity and irredundancy of the stored covers.
    void validate() const;

    std::string to_dot(const std::string& graph_name) const;
};

/// Builds a poset from a comparison oracle: covers are computed as the
/// transitive reduction of the full order.
Poset poset_from_leq(const std::vector<std::string>& nodes,
                     const std::function<bool(int, int)>& leq);

/// Bruhat order on the B2 Weyl group.
Poset bruhat_poset();

} // namespace uqp

#endif
