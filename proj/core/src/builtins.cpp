#include "uqp/builtins.hpp"

#include <map>
#include <stdexcept>

namespace uqp {

namespace {

RatFunc qp(long e) { return RatFunc::q_power(e); }

PbwMonomial mono(int n, std::initializer_list<std::pair<int, long>> entries) {
    PbwMonomial m(static_cast<std::size_t>(n), 0);
    for (auto [g, e] : entries) m[static_cast<std::size_t>(g)] = e;
    return m;
}

Presentation make_heisenberg() {
    Presentation p;
    p.name = "heisenberg";
    p.gens = {"E3", "E1", "E2"};
    p.degree = {2, 1, 1};
    p.mdeg = {{1, 1}, {1, 0}, {0, 1}};
    const int E3 = 0, E1 = 1, E2 = 2;
    p.rules[RuleKey{E1, 1, E3, 1}] = {{qp(-2), mono(3, {{E3, 1}, {E1, 1}})}};
    p.rules[RuleKey{E2, 1, E3, 1}] = {{qp(2), mono(3, {{E3, 1}, {E2, 1}})}};
    p.rules[RuleKey{E2, 1, E1, 1}] = {{qp(-2), mono(3, {{E1, 1}, {E2, 1}})},
                                      {-qp(-2), mono(3, {{E3, 1}})}};
    p.finalize();
    return p;
}

Presentation make_b2(bool localized) {
    Presentation p;
    p.name = localized ? "b2_localized" : "b2";
    p.gens = {"z", "e3", "e1", "e2"};
    p.degree = {3, 2, 1, 1};
    p.mdeg = {{1, 2}, {1, 1}, {1, 0}, {0, 1}};
    const int z = 0, e3 = 1, e1 = 2, e2 = 3;
    if (localized) p.localized = {0, 1, 1, 0};
    p.rules[RuleKey{e3, 1, z, 1}] = {{RatFunc(1), mono(4, {{z, 1}, {e3, 1}})}};
    p.rules[RuleKey{e1, 1, z, 1}] = {{RatFunc(1), mono(4, {{z, 1}, {e1, 1}})}};
    p.rules[RuleKey{e2, 1, z, 1}] = {{RatFunc(1), mono(4, {{z, 1}, {e2, 1}})}};
    p.rules[RuleKey{e1, 1, e3, 1}] = {{qp(-2), mono(4, {{e3, 1}, {e1, 1}})}};
    p.rules[RuleKey{e2, 1, e3, 1}] = {{qp(2), mono(4, {{e3, 1}, {e2, 1}})},
                                      {RatFunc(1), mono(4, {{z, 1}})}};
    p.rules[RuleKey{e2, 1, e1, 1}] = {{qp(-2), mono(4, {{e1, 1}, {e2, 1}})},
                                      {-qp(-2), mono(4, {{e3, 1}})}};
    if (localized) {
        // tails conjugated through the localization:
        //   e2*e3^-1 = q^-2 e3^-1 e2 - q^-2 z e3^-2
        //   e2*e1^-1 = q^2 e1^-1 e2 + q^2 e3 e1^-2
        p.rules[RuleKey{e2, 1, e3, -1}] = {{qp(-2), mono(4, {{e3, -1}, {e2, 1}})},
                                           {-qp(-2), mono(4, {{z, 1}, {e3, -2}})}};
        p.rules[RuleKey{e2, 1, e1, -1}] = {{qp(2), mono(4, {{e1, -1}, {e2, 1}})},
                                           {qp(2), mono(4, {{e3, 1}, {e1, -2}})}};
    }
    p.finalize();
    return p;
}

Presentation make_qplane(bool localized) {
    Presentation p;
    p.name = localized ? "qtorus" : "qplane";
    p.gens = {"e3", "e1"};
    p.degree = {2, 1};
    p.mdeg = {{1, 1}, {1, 0}};
    if (localized) p.localized = {1, 1};
    p.rules[RuleKey{1, 1, 0, 1}] = {{qp(-2), mono(2, {{0, 1}, {1, 1}})}};
    p.finalize();
    return p;
}

Presentation make_a_s1s2s1() {
    Presentation p;
    p.name = "a_s1s2s1";
    p.gens = {"w", "e2", "e3"};
    p.degree = {3, 1, 2};
    p.mdeg = {{1, 2}, {0, 1}, {1, 1}};
    const int w = 0, e2 = 1, e3 = 2;
    p.rules[RuleKey{e2, 1, w, 1}] = {{qp(2), mono(3, {{w, 1}, {e2, 1}})}};
    p.rules[RuleKey{e3, 1, w, 1}] = {{qp(-2), mono(3, {{w, 1}, {e3, 1}})}};
    p.rules[RuleKey{e3, 1, e2, 1}] = {{RatFunc(1), mono(3, {{e2, 1}, {e3, 1}})},
                                      {RatFunc(-1), mono(3, {{w, 1}})}};
    p.finalize();
    return p;
}

Presentation make_a_s1s2() {
    Presentation p;
    p.name = "a_s1s2";
    p.gens = {"w", "e2"};
    p.degree = {3, 1};
    p.mdeg = {{1, 2}, {0, 1}};
    p.rules[RuleKey{1, 1, 0, 1}] = {{qp(2), mono(2, {{0, 1}, {1, 1}})}};
    p.finalize();
    return p;
}

Presentation make_a_s2s1s2() {
    Presentation p;
    p.name = "a_s2s1s2";
    p.gens = {"e3bar", "e1", "wbar"};
    p.degree = {2, 1, 3};
    p.mdeg = {{1, 1}, {1, 0}, {1, 2}};
    const int e3b = 0, e1 = 1, wb = 2;
    p.rules[RuleKey{e1, 1, e3b, 1}] = {{qp(2), mono(3, {{e3b, 1}, {e1, 1}})}};
    p.rules[RuleKey{wb, 1, e3b, 1}] = {{qp(-2), mono(3, {{e3b, 1}, {wb, 1}})}};
    LaurentPoly q2m1 = LaurentPoly::q_power(2) - LaurentPoly(1);
    p.rules[RuleKey{wb, 1, e1, 1}] = {{RatFunc(1), mono(3, {{e1, 1}, {wb, 1}})},
                                      {RatFunc(q2m1), mono(3, {{e3b, 2}})}};
    p.finalize();
    return p;
}

Presentation make_a_s2s1() {
    Presentation p;
    p.name = "a_s2s1";
    p.gens = {"e3bar", "e1"};
    p.degree = {2, 1};
    p.mdeg = {{1, 1}, {1, 0}};
    p.rules[RuleKey{1, 1, 0, 1}] = {{qp(2), mono(2, {{0, 1}, {1, 1}})}};
    p.finalize();
    return p;
}

Presentation make_poly_zz() {
    Presentation p;
    p.name = "poly_zz'";
    p.gens = {"z", "z'"};
    p.degree = {3, 4};
    p.rules[RuleKey{1, 1, 0, 1}] = {{RatFunc(1), mono(2, {{0, 1}, {1, 1}})}};
    p.finalize();
    return p;
}

const std::map<std::string, Presentation>& registry() {
    static const std::map<std::string, Presentation> reg = [] {
        std::map<std::string, Presentation> r;
        r["heisenberg"] = make_heisenberg();
        r["b2"] = make_b2(false);
        r["b2_localized"] = make_b2(true);
        r["qplane"] = make_qplane(false);
        r["qtorus"] = make_qplane(true);
        r["a_s1s2s1"] = make_a_s1s2s1();
        r["a_s1s2"] = make_a_s1s2();
        r["a_s2s1s2"] = make_a_s2s1s2();
        r["a_s2s1"] = make_a_s2s1();
        r["poly_zz'"] = make_poly_zz();
        return r;
    }();
    return reg;
}

AlgebraElement gen(const Presentation& p, const std::string& g) {
    return AlgebraElement::generator(p, g);
}

} // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, p] : registry()) {
            (void)p;
            v.push_back(k);
        }
        return v;
    }();
    return names;
}

const Presentation& builtin_presentation(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown presentation '" + name + "'");
    return it->second;
}

AlgebraElement named_element(const Presentation& p, const std::string& name) {
    const RatFunc q2 = RatFunc::q_power(2), qm2 = RatFunc::q_power(-2), qm4 = RatFunc::q_power(-4);
    if (p.name == "b2" || p.name == "b2_localized") {
        AlgebraElement e1 = gen(p, "e1"), e2 = gen(p, "e2"), e3 = gen(p, "e3"), z = gen(p, "z");
        if (name == "e3bar") return e1 * e2 - (e2 * e1).scaled(qm2);
        if (name == "w") return e2 * e3 - e3 * e2;
        if (name == "wbar") {
            AlgebraElement e3b = named_element(p, "e3bar");
            return e2 * e3b - e3b * e2;
        }
        if (name == "z'") {
            AlgebraElement w = named_element(p, "w");
            return e1 * w - (w * e1).scaled(qm4);
        }
        if (name == "s") {
            RatFunc c = q2 + qm2;
            return e2 * e2 * e1 - (e2 * e1 * e2).scaled(c) + e1 * e2 * e2;
        }
    }
    if (p.name == "heisenberg") {
        AlgebraElement E1 = gen(p, "E1"), E2 = gen(p, "E2"), E3 = gen(p, "E3");
        if (name == "E3bar") return E1 * E2 - (E2 * E1).scaled(qm2);
        if (name == "Omega")
            return (E3 * E1 * E2).scaled(RatFunc(1) - qm4) + (E3 * E3).scaled(qm4);
    }
    if (p.name == "a_s1s2s1") {
        AlgebraElement e2 = gen(p, "e2"), e3 = gen(p, "e3"), w = gen(p, "w");
        if (name == "z") return (e3 * e2).scaled(RatFunc(1) - q2) + w;
    }
    if (p.name == "a_s2s1s2") {
        AlgebraElement e1 = gen(p, "e1"), e3b = gen(p, "e3bar"), wb = gen(p, "wbar");
        if (name == "u") return (e1 * wb).scaled(RatFunc(1) - qm4) + (e3b * e3b).scaled(q2 - RatFunc(1));
    }
    throw std::invalid_argument("no named element '" + name + "' in presentation " + p.name);
}

std::vector<std::string> named_element_names(const Presentation& p) {
    if (p.name == "b2" || p.name == "b2_localized") return {"e3bar", "w", "wbar", "z'", "s"};
    if (p.name == "heisenberg") return {"E3bar", "Omega"};
    if (p.name == "a_s1s2s1") return {"z"};
    if (p.name == "a_s2s1s2") return {"u"};
    return {};
}

} // namespace uqp
