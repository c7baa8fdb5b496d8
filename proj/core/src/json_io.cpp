#include "uqp/json_io.hpp"

#include <json.hpp>

#include "uqp/expr.hpp"

namespace uqp {

using json = nlohmann::ordered_json;
using ordered_json = nlohmann::ordered_json;

CartanData cartan_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("C") || !j.contains("d"))
        throw std::invalid_argument("Cartan JSON must be an object with fields \"C\" and \"d\"");
    CartanData cd;
    cd.a = j.at("C").get<std::vector<std::vector<int>>>();
    cd.d = j.at("d").get<std::vector<int>>();
    cd.rank = static_cast<int>(cd.a.size());
    cd.validate();
    return cd;
}

std::string cartan_to_json(const CartanData& cd) {
    ordered_json j;
    j["C"] = cd.a;
    j["d"] = cd.d;
    return j.dump();
}

Presentation presentation_from_json(const std::string& text) {
    json j = json::parse(text);
    Presentation p;
    p.name = j.value("name", "custom");
    p.gens = j.at("generators").get<std::vector<std::string>>();
    p.degree = j.at("degrees").get<std::vector<long>>();
    if (j.contains("multidegrees"))
        for (const auto& md : j.at("multidegrees"))
            p.mdeg.push_back({md.at(0).get<long>(), md.at(1).get<long>()});
    p.localized.assign(p.gens.size(), 0);
    if (j.contains("localized"))
        for (const auto& g : j.at("localized"))
            p.localized[static_cast<std::size_t>(p.index(g.get<std::string>()))] = 1;
    for (const auto& r : j.at("rules")) {
        RuleKey key;
        key.hi = p.index(r.at("hi").get<std::string>());
        key.lo = p.index(r.at("lo").get<std::string>());
        key.hi_sign = r.value("hi_sign", 1);
        key.lo_sign = r.value("lo_sign", 1);
        RuleRhs rhs;
        for (const auto& t : r.at("rhs")) {
            // a coefficient is a Laurent expression string, or a num/den pair
            // when it is a proper rational function
            RatFunc coeff;
            const auto& cj = t.at("coeff");
            if (cj.is_string()) {
                coeff = eval_scalar(parse_expr(cj.get<std::string>()));
            } else {
                RatFunc num = eval_scalar(parse_expr(cj.at("num").get<std::string>()));
                RatFunc den = eval_scalar(parse_expr(cj.at("den").get<std::string>()));
                coeff = num / den;
            }
            PbwMonomial mono(p.gens.size(), 0);
            for (const auto& [g, e] : t.at("monomial").items())
                mono[static_cast<std::size_t>(p.index(g))] = e.get<long>();
            rhs.emplace_back(std::move(coeff), std::move(mono));
        }
        p.rules[key] = std::move(rhs);
    }
    p.finalize();
    return p;
}

std::string presentation_to_json(const Presentation& p) {
    ordered_json j;
    j["name"] = p.name;
    j["generators"] = p.gens;
    j["degrees"] = p.degree;
    if (!p.mdeg.empty()) {
        ordered_json mds = ordered_json::array();
        for (const auto& md : p.mdeg) mds.push_back({md[0], md[1]});
        j["multidegrees"] = mds;
    }
    ordered_json loc = ordered_json::array();
    for (std::size_t i = 0; i < p.localized.size(); ++i)
        if (p.localized[i]) loc.push_back(p.gens[i]);
    if (!loc.empty()) j["localized"] = loc;
    ordered_json rules = ordered_json::array();
    for (const auto& [key, rhs] : p.rules) {
        // derived sign variants are reconstructed by finalize()
        if (key.hi_sign != 1 || key.lo_sign != 1) {
            bool scalar_base = false;
            auto base = p.rules.find(RuleKey{key.hi, 1, key.lo, 1});
            if (base != p.rules.end() && base->second.size() == 1) scalar_base = true;
            if (scalar_base) continue;
        }
        ordered_json r;
        r["hi"] = p.gens[static_cast<std::size_t>(key.hi)];
        r["lo"] = p.gens[static_cast<std::size_t>(key.lo)];
        if (key.hi_sign != 1) r["hi_sign"] = key.hi_sign;
        if (key.lo_sign != 1) r["lo_sign"] = key.lo_sign;
        ordered_json terms = ordered_json::array();
        for (const auto& [c, mono] : rhs) {
            ordered_json t;
            if (c.is_laurent()) {
                t["coeff"] = c.numerator().str();
            } else {
                ordered_json frac;
                frac["num"] = c.numerator().str();
                frac["den"] = c.denominator().str();
                t["coeff"] = frac;
            }
            ordered_json m;
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] != 0) m[p.gens[i]] = mono[i];
            t["monomial"] = m;
            terms.push_back(t);
        }
        r["rhs"] = terms;
        rules.push_back(r);
    }
    j["rules"] = rules;
    return j.dump();
}

std::string group_description_to_json(const GroupDescription& g) {
    ordered_json j;
    if (!g.decided) {
        j["structure"] = "undecided";
        return j.dump();
    }
    j["torus_rank"] = g.torus_rank;
    json perms = json::array();
    for (const auto& s : g.diagram_group) {
        json one_line = json::array();
        for (int i = 0; i < s.size(); ++i) one_line.push_back(s(i) + 1);
        perms.push_back(one_line);
    }
    j["diagram_group"] = perms;
    j["structure"] = g.structure();
    return j.dump();
}

namespace {

ordered_json relation_to_json_obj(const Relation& r) {
    ordered_json j;
    j["degree"] = r.degree;
    j["multidegree"] = r.mdeg;
    json terms = json::array();
    for (const auto& [w, c] : r.element.terms()) {
        ordered_json t;
        json word = json::array();
        for (int l : w) word.push_back(l + 1);
        t["word"] = word;
        t["coeff"] = c.str();
        terms.push_back(t);
    }
    j["relation"] = terms;
    return j;
}

} // namespace

std::string relations_to_json(const RelationBasis& rb) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rb.relations) arr.push_back(relation_to_json_obj(r));
    return arr.dump();
}

std::string element_to_json(const AlgebraElement& a) {
    ordered_json arr = ordered_json::array();
    if (a.is_zero()) return arr.dump();
    const Presentation& p = a.presentation();
    for (const auto& [m, c] : a.terms()) {
        ordered_json t;
        ordered_json mono;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) mono[p.gens[i]] = m[i];
        t["monomial"] = mono;
        t["coeff"] = c.str();
        arr.push_back(t);
    }
    return arr.dump();
}

std::string poset_to_json(const Poset& p) {
    ordered_json j;
    j["nodes"] = p.nodes;
    json covers = json::array();
    for (const auto& [a, b] : p.covers) {
        json e = json::array();
        e.push_back(p.nodes[static_cast<std::size_t>(a)]);
        e.push_back(p.nodes[static_cast<std::size_t>(b)]);
        covers.push_back(e);
    }
    j["covers"] = covers;
    return j.dump();
}

std::string hspec_to_json(const HSpectrum& h) {
    ordered_json j;
    j["nodes"] = h.poset.nodes;
    json covers = json::array();
    for (const auto& [a, b] : h.poset.covers) {
        json e = json::array();
        e.push_back(h.poset.nodes[static_cast<std::size_t>(a)]);
        e.push_back(h.poset.nodes[static_cast<std::size_t>(b)]);
        covers.push_back(e);
    }
    j["covers"] = covers;
    j["order"] = "inclusion";
    ordered_json map;
    for (const auto& w : {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"})
        map[w] = h.bruhat_to_ideal.at(w);
    j["bruhat_to_ideal"] = map;
    j["pairing"] = h.pairing_assumption;
    return j.dump();
}

std::string lemma_conditions_to_json(const LemmaConditions& c) {
    ordered_json j;
    j["i"] = c.rows_separated;
    j["ii"] = c.cols_separated;
    j["iii"] = c.no_constant_block;
    j["any"] = c.any();
    return j.dump();
}

} // namespace uqp
