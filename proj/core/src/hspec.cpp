#include "uqp/hspec.hpp"

#include <stdexcept>

#include "uqp/builtins.hpp"

namespace uqp {

namespace {

const std::vector<std::pair<std::string, std::string>>& hspec_cover_list() {
    // inclusion covers, smaller ideal first; exactly the drawn diagram
    static const std::vector<std::pair<std::string, std::string>> edges = {
        {"(0)", "(z)"},      {"(0)", "(z')"},
        {"(z)", "(e3)"},     {"(z)", "(e3bar)"},
        {"(z')", "(e3)"},    {"(z')", "(e3bar)"},
        {"(e3)", "(e1)"},    {"(e3)", "(e2)"},
        {"(e3bar)", "(e1)"}, {"(e3bar)", "(e2)"},
        {"(e1)", "(e1,e2)"}, {"(e2)", "(e1,e2)"},
    };
    return edges;
}

} // namespace

HSpectrum hspec_poset() {
    HSpectrum h;
    h.poset.nodes = {"(0)", "(z)", "(z')", "(e3)", "(e3bar)", "(e1)", "(e2)", "(e1,e2)"};
    for (const auto& [a, b] : hspec_cover_list())
        h.poset.covers.insert({h.poset.index(a), h.poset.index(b)});
    h.poset.validate();
    h.bruhat_to_ideal = {
        {"s1s2s1s2", "(0)"}, {"s1s2s1", "(z)"}, {"s2s1s2", "(z')"}, {"s1s2", "(e3)"},
        {"s2s1", "(e3bar)"}, {"s1", "(e1)"},    {"s2", "(e2)"},     {"e", "(e1,e2)"},
    };
    return h;
}

std::vector<AlgebraElement> ideal_generators(const std::string& ideal_label) {
    const Presentation& b2 = builtin_presentation("b2");
    auto g = [&](const std::string& n) { return AlgebraElement::generator(b2, n); };
    if (ideal_label == "(0)") return {};
    if (ideal_label == "(z)") return {g("z")};
    if (ideal_label == "(z')") return {named_element(b2, "z'")};
    if (ideal_label == "(e3)") return {g("e3")};
    if (ideal_label == "(e3bar)") return {named_element(b2, "e3bar")};
    if (ideal_label == "(e1)") return {g("e1")};
    if (ideal_label == "(e2)") return {g("e2")};
    if (ideal_label == "(e1,e2)") return {g("e1"), g("e2")};
    throw std::invalid_argument("unknown ideal label '" + ideal_label + "'");
}

std::vector<WitnessCheck> containment_witnesses() {
    const Presentation& b2 = builtin_presentation("b2");
    auto g = [&](const std::string& n) { return AlgebraElement::generator(b2, n); };
    const AlgebraElement one = AlgebraElement::one(b2);
    const AlgebraElement e1 = g("e1"), e2 = g("e2"), e3 = g("e3"), z = g("z");
    const AlgebraElement e3bar = named_element(b2, "e3bar");
    const AlgebraElement zp = named_element(b2, "z'");
    const RatFunc one_r(1), q2 = RatFunc::q_power(2), qm2 = RatFunc::q_power(-2),
                  q4 = RatFunc::q_power(4), qm4 = RatFunc::q_power(-4);

    struct Term {
        RatFunc c;
        AlgebraElement u, v;
    };
    struct Entry {
        std::string small, big;
        AlgebraElement target;  // generator of the smaller ideal
        AlgebraElement big_gen; // generator of the larger ideal
        std::vector<Term> terms;
        std::string detail;
    };

    std::vector<Entry> entries;
    entries.push_back({"(z)", "(e3)", z, e3,
                       {{one_r, e2, one}, {-q2, one, e2}},
                       "z = e2*e3 - q^2*e3*e2"});
    entries.push_back({"(z)", "(e3bar)", z, e3bar,
                       {{q4, e2, one}, {-q2, one, e2}},
                       "z = q^4*(e2*e3bar - q^-2*e3bar*e2)"});
    entries.push_back({"(z')", "(e3)", zp, e3,
                       {{(one_r - qm4) * (one_r - qm2), one, e1 * e2},
                        {qm4 * (one_r - qm2), one, e3},
                        {one_r - qm4, e2, e1},
                        {-q2 * (one_r - qm4), one, e2 * e1}},
                       "z' = (1-q^-4)(1-q^-2)*e3*e1*e2 + q^-4(1-q^-2)*e3^2 + (1-q^-4)*z*e1 with z = e2*e3 - q^2*e3*e2"});
    entries.push_back({"(z')", "(e3bar)", zp, e3bar,
                       {{one_r - qm2, e3, one},
                        {(one_r - qm4) * q4, e2, e1},
                        {-(one_r - qm4) * q2, one, e2 * e1}},
                       "z' = (1-q^-2)*(e3*e3bar + (1+q^-2)*z*e1) with z = q^4*e2*e3bar - q^2*e3bar*e2"});
    entries.push_back({"(e3)", "(e1)", e3, e1,
                       {{one_r, one, e2}, {-q2, e2, one}},
                       "e3 = e1*e2 - q^2*e2*e1"});
    entries.push_back({"(e3)", "(e2)", e3, e2,
                       {{one_r, e1, one}, {-q2, one, e1}},
                       "e3 = e1*e2 - q^2*e2*e1"});
    entries.push_back({"(e3bar)", "(e1)", e3bar, e1,
                       {{one_r, one, e2}, {-qm2, e2, one}},
                       "e3bar = e1*e2 - q^-2*e2*e1"});
    entries.push_back({"(e3bar)", "(e2)", e3bar, e2,
                       {{one_r, e1, one}, {-qm2, one, e1}},
                       "e3bar = e1*e2 - q^-2*e2*e1"});
    entries.push_back({"(e1)", "(e1,e2)", e1, e1, {{one_r, one, one}}, "e1 in (e1,e2)"});
    entries.push_back({"(e2)", "(e1,e2)", e2, e2, {{one_r, one, one}}, "e2 in (e1,e2)"});

    std::vector<WitnessCheck> out;
    for (const auto& [a, b] : hspec_cover_list()) {
        if (a == "(0)") {
            out.push_back(WitnessCheck{a + " c " + b, "zero ideal", true});
            continue;
        }
        bool found = false;
        for (const auto& e : entries) {
            if (e.small != a || e.big != b) continue;
            found = true;
            AlgebraElement sum(b2);
            for (const auto& t : e.terms) sum += (t.u * e.big_gen * t.v).scaled(t.c);
            out.push_back(WitnessCheck{a + " c " + b, e.detail, sum == e.target});
        }
        if (!found)
            out.push_back(WitnessCheck{a + " c " + b, "missing witness", false});
    }
    return out;
}

} // namespace uqp
