#ifndef UQP_CARTAN_HPP
#define UQP_CARTAN_HPP

#include <vector>

namespace uqp {

/// Symmetrizable Cartan data: an integer Cartan matrix (a_ij) together with
/// positive symmetrizing integers (d_i) with d_i a_ij = d_j a_ji.
struct CartanData {
    int rank = 0;
    std::vector<std::vector<int>> a;
    std::vector<int> d;

    /// Throws std::invalid_argument naming the violated axiom.
    void validate() const;

    static CartanData a1();
    static CartanData a2();
    static CartanData b2();
    static CartanData g2();
};

} // namespace uqp

#endif
