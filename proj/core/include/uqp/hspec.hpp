#ifndef UQP_HSPEC_HPP
#define UQP_HSPEC_HPP

#include <map>
#include <string>
#include <vector>

#include "uqp/poset.hpp"
#include "uqp/presentation.hpp"

namespace uqp {

/// The eight graded prime ideals of the B2 nilpotent quantum enveloping
/// algebra, ordered by inclusion, together with the order-reversing bijection
/// from the Bruhat poset.
struct HSpectrum {
    Poset poset; // inclusion order: (0) at the bottom, (e1,e2) at the top
    std::map<std::string, std::string> bruhat_to_ideal;
    // the pairing of the two diagrams is read off positionally
    std::string pairing_assumption = "positional";
};

HSpectrum hspec_poset();

/// Generators of an ideal node as elements of the b2 presentation.
std::vector<AlgebraElement> ideal_generators(const std::string& ideal_label);

struct WitnessCheck {
    std::string edge;    // "smaller c bigger"
    std::string detail;  // the verified membership identity
    bool ok = false;
};

/// For each covering edge of the H-spectrum, verifies algebraically that each
/// generator of the smaller ideal is an explicit two-sided combination of the
/// larger ideal's generator.
std::vector<WitnessCheck> containment_witnesses();

} // namespace uqp

#endif
