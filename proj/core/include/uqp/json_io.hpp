#ifndef UQP_JSON_IO_HPP
#define UQP_JSON_IO_HPP

#include <string>

#include "uqp/braiding.hpp"
#include "uqp/cartan.hpp"
#include "uqp/hspec.hpp"
#include "uqp/poset.hpp"
#include "uqp/presentation.hpp"
#include "uqp/symmetrizer.hpp"

namespace uqp {

/// Accepts {"C": [[2,-1],[-2,2]], "d": [2,1]}; validates the data.
CartanData cartan_from_json(const std::string& text);
std::string cartan_to_json(const CartanData& cd);

/// Presentation files: generators, degrees, optional multidegrees and
/// localization flags, and the rewrite rules as coefficient/monomial lists.
/// The returned presentation is finalized.
Presentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const Presentation& p);

/// {"torus_rank": n, "diagram_group": [one-line permutations], "structure": ...}
std::string group_description_to_json(const GroupDescription& g);

/// [{"degree":3, "multidegree":[2,1], "relation":[{"word":[1,1,2],"coeff":"1"}, ...]}, ...]
std::string relations_to_json(const RelationBasis& rb);

std::string element_to_json(const AlgebraElement& a);

std::string poset_to_json(const Poset& p);
std::string hspec_to_json(const HSpectrum& h);

std::string lemma_conditions_to_json(const LemmaConditions& c);

} // namespace uqp

#endif
