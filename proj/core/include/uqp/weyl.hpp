#ifndef UQP_WEYL_HPP
#define UQP_WEYL_HPP

#include <array>
#include <string>
#include <vector>

namespace uqp {

/// Signed action on the basis (eps_1, eps_2): action[i] = (j, s) means
/// eps_{i+1} |-> s * eps_{j+1}.
using SignedAction = std::array<std::pair<int, int>, 2>;

struct WeylElement {
    std::string name;          // canonical reduced word, e.g. "s1s2s1" ("e" for the identity)
    std::vector<int> word;     // canonical reduced word over {1,2}
    SignedAction action;

    int length() const { return static_cast<int>(word.size()); }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

/// The dihedral Weyl group of type B2 (order 8), generated from the table
///   s1: eps1 <-> eps2        s2: eps1 -> eps1, eps2 -> -eps2
/// by breadth-first composition; canonical reduced words are the
/// lexicographically first words of minimal length.
std::vector<WeylElement> weyl_b2();

const WeylElement& weyl_element(const std::string& name);

/// Subword criterion, decided exhaustively: x <= y iff some reduced word of x
/// is a subword of the canonical reduced word of y.
bool bruhat_leq(const WeylElement& x, const WeylElement& y);

/// All reduced words of a B2 element (words of minimal length with its action).
std::vector<std::vector<int>> weyl_reduced_words(const WeylElement& w);

} // namespace uqp

#endif
