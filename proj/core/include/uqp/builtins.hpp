#ifndef UQP_BUILTINS_HPP
#define UQP_BUILTINS_HPP

#include <string>
#include <vector>

#include "uqp/presentation.hpp"

namespace uqp {

/// The registered presentations:
///   heisenberg   E3 < E1 < E2
///   b2           z < e3 < e1 < e2
///   qplane       e3 < e1
///   qtorus       e3 < e1, both localized
///   b2_localized z < e3 < e1 < e2, e3 and e1 localized
///   a_s1s2s1     w < e2 < e3
///   a_s1s2       w < e2
///   a_s2s1s2     e3bar < e1 < wbar
///   a_s2s1       e3bar < e1
///   poly_zz'     z < z'
const std::vector<std::string>& builtin_names();
const Presentation& builtin_presentation(const std::string& name);

/// Distinguished elements given by their defining expressions, e.g. z', e3bar,
/// w and s in b2, Omega and E3bar in heisenberg, z in a_s1s2s1, u in a_s2s1s2.
AlgebraElement named_element(const Presentation& p, const std::string& name);
std::vector<std::string> named_element_names(const Presentation& p);

} // namespace uqp

#endif
