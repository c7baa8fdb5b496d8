#include "uqp/hom.hpp"

#include <stdexcept>

#include "uqp/builtins.hpp"

namespace uqp {

namespace {

AlgebraElement image_of_monomial(const AlgebraHom& h, const PbwMonomial& m, const RatFunc& c) {
    AlgebraElement acc = AlgebraElement::scalar(*h.dst, c);
    for (std::size_t g = 0; g < m.size(); ++g) {
        if (m[g] == 0) continue;
        acc = acc * h.images[g].pow(m[g]);
    }
    return acc;
}

} // namespace

AlgebraElement hom_apply(const AlgebraHom& h, const AlgebraElement& a) {
    if (!h.src || !h.dst) throw std::invalid_argument("hom without presentations");
    if (&a.presentation() != h.src) throw std::invalid_argument("element not over the hom source");
    if (h.images.size() != static_cast<std::size_t>(h.src->arity()))
        throw std::invalid_argument("hom image count mismatch");
    AlgebraElement out(*h.dst);
    for (const auto& [m, c] : a.terms()) out += image_of_monomial(h, m, c);
    return out;
}

std::vector<std::string> hom_check(const AlgebraHom& h) {
    if (!h.src || !h.dst) throw std::invalid_argument("hom without presentations");
    if (h.images.size() != static_cast<std::size_t>(h.src->arity()))
        throw std::invalid_argument("hom image count mismatch");
    std::vector<std::string> violated;
    for (const auto& [key, rhs] : h.src->rules) {
        if (key.hi_sign != 1 || key.lo_sign != 1) continue; // derived variants follow from the base rules
        AlgebraElement lhs = h.images[static_cast<std::size_t>(key.hi)] * h.images[static_cast<std::size_t>(key.lo)];
        AlgebraElement rhs_img(*h.dst);
        for (const auto& [c, mono] : rhs) rhs_img += image_of_monomial(h, mono, c);
        if (!(lhs == rhs_img)) {
            violated.push_back(h.src->gens[static_cast<std::size_t>(key.hi)] + "*" +
                               h.src->gens[static_cast<std::size_t>(key.lo)]);
        }
    }
    return violated;
}

AlgebraHom quotient_b2_to_heisenberg() {
    const Presentation& b2 = builtin_presentation("b2");
    const Presentation& h = builtin_presentation("heisenberg");
    return AlgebraHom{&b2, &h,
                      {AlgebraElement::zero(h), AlgebraElement::generator(h, "E3"),
                       AlgebraElement::generator(h, "E1"), AlgebraElement::generator(h, "E2")}};
}

} // namespace uqp
