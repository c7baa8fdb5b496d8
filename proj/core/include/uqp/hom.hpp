#ifndef UQP_HOM_HPP
#define UQP_HOM_HPP

#include <string>
#include <vector>

#include "uqp/presentation.hpp"

namespace uqp {

/// Algebra map given by the image of each source generator. Only relation
/// preservation is checked; gradings are not assumed.
struct AlgebraHom {
    const Presentation* src = nullptr;
    const Presentation* dst = nullptr;
    std::vector<AlgebraElement> images;
};

AlgebraElement hom_apply(const AlgebraHom& h, const AlgebraElement& a);

/// Every rewrite rule of the source, with generators replaced by their images,
/// must normalize to zero in the target. Returns the violated rules.
std::vector<std::string> hom_check(const AlgebraHom& h);

/// The quotient by the central generator z: e1 |-> E1, e2 |-> E2, z |-> 0.
AlgebraHom quotient_b2_to_heisenberg();

} // namespace uqp

#endif
