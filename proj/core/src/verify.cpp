#include "uqp/verify.hpp"

#include <sstream>

#include "uqp/braiding.hpp"
#include "uqp/builtins.hpp"
#include "uqp/hspec.hpp"
#include "uqp/identities.hpp"
#include "uqp/symmetrizer.hpp"
#include "uqp/weyl.hpp"

namespace uqp {

namespace {

void add(std::vector<CheckResult>& out, const std::string& section, const std::string& name,
         bool ok, const std::string& detail = "") {
    out.push_back(CheckResult{section, name, ok, detail});
}

void check_scalars(std::vector<CheckResult>& out) {
    auto expect = [&](const std::string& name, const LaurentPoly& got, const std::string& want) {
        add(out, "scalar", name, got.str() == want, got.str());
    };
    expect("[2 over 0]_{q^2} = 1", q_binom(2, 0, 2), "1");
    expect("[2 over 2]_{q^2} = 1", q_binom(2, 2, 2), "1");
    expect("[2 over 1]_{q^2} = q^2 + q^-2", q_binom(2, 1, 2), "q^2 + q^-2");
    expect("[3 over 0]_q = 1", q_binom(3, 0, 1), "1");
    expect("[3 over 1]_q = q^2 + 1 + q^-2", q_binom(3, 1, 1), "q^2 + 1 + q^-2");
    expect("[3 over 2]_q = q^2 + 1 + q^-2", q_binom(3, 2, 1), "q^2 + 1 + q^-2");
}

void check_braided(std::vector<CheckResult>& out) {
    BraidingMatrix a2 = braiding_from_cartan(CartanData::a2());
    BraidingMatrix b2 = braiding_from_cartan(CartanData::b2());
    add(out, "braided", "A2 braiding is [[q^2,q^-1],[q^-1,q^2]]",
        a2.entry(0, 0) == RatFunc::q_power(2) && a2.entry(0, 1) == RatFunc::q_power(-1) &&
            a2.entry(1, 0) == RatFunc::q_power(-1) && a2.entry(1, 1) == RatFunc::q_power(2));
    add(out, "braided", "B2 braiding is [[q^4,q^-2],[q^-2,q^2]]",
        b2.entry(0, 0) == RatFunc::q_power(4) && b2.entry(0, 1) == RatFunc::q_power(-2) &&
            b2.entry(1, 0) == RatFunc::q_power(-2) && b2.entry(1, 1) == RatFunc::q_power(2));
    add(out, "braided", "Autdiagr(A2) = {id, swap}", autdiagr(a2).size() == 2);
    add(out, "braided", "Autdiagr(B2) trivial", autdiagr(b2).size() == 1);
    auto ga = hopf_aut_bosonization(CartanData::a2());
    auto gb = hopf_aut_bosonization(CartanData::b2());
    add(out, "braided", "Hopf automorphisms A2: torus rank 2, diagram order 2",
        ga.decided && ga.torus_rank == 2 && ga.diagram_group.size() == 2, ga.structure());
    add(out, "braided", "Hopf automorphisms B2: torus rank 2, trivial diagram group",
        gb.decided && gb.torus_rank == 2 && gb.diagram_group.size() == 1, gb.structure());
    RatMatrix swap{{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}};
    add(out, "braided", "swap map lies in GL(V,c) for A2", glvc_member(swap, a2));
    add(out, "braided", "swap map fails GL(V,c) for B2", !glvc_member(swap, b2));
}

bool relation_spans_line(const Relation& rel, const TensorElement& target) {
    // both normalized so the lexicographically least word has coefficient 1
    return rel.element == target;
}

void check_nichols(std::vector<CheckResult>& out) {
    const RatFunc one(1);
    {
        BraidingMatrix a2 = braiding_from_cartan(CartanData::a2());
        RelationBasis rb = minimal_relations(a2, 4);
        bool shape = rb.relations.size() == 2 && rb.at(3).size() == 2 && rb.at(4).empty();
        add(out, "nichols", "A2 braiding: exactly two degree-3 relations, none in degree 4",
            shape);
        RatFunc c = RatFunc::q_power(1) + RatFunc::q_power(-1);
        TensorElement serre(3);
        serre.add({0, 0, 1}, one);
        serre.add({0, 1, 0}, -c);
        serre.add({1, 0, 0}, one);
        bool found = false;
        for (const auto& r : rb.relations)
            if (r.mdeg == std::vector<int>{2, 1} && relation_spans_line(r, serre)) found = true;
        add(out, "nichols", "A2 braiding: (2,1)-relation is the [2]_q quantum Serre line", found);
    }
    {
        // the braiding underlying the quantum Heisenberg presentation (q -> q^2)
        CartanData scaled = CartanData::a2();
        scaled.d = {2, 2};
        BraidingMatrix h = braiding_from_cartan(scaled);
        RelationBasis rb = minimal_relations(h, 3);
        RatFunc c = RatFunc::q_power(2) + RatFunc::q_power(-2);
        TensorElement serre(3);
        serre.add({0, 0, 1}, one);
        serre.add({0, 1, 0}, -c);
        serre.add({1, 0, 0}, one);
        bool found = false;
        for (const auto& r : rb.relations)
            if (r.mdeg == std::vector<int>{2, 1} && relation_spans_line(r, serre)) found = true;
        add(out, "nichols", "scaled A2 braiding: (2,1)-relation matches the heisenberg Serre line",
            found);
    }
    {
        BraidingMatrix b2 = braiding_from_cartan(CartanData::b2());
        RelationBasis rb = minimal_relations(b2, 4);
        bool shape = rb.relations.size() == 2 && rb.at(3).size() == 1 && rb.at(4).size() == 1;
        add(out, "nichols", "B2 braiding: one degree-3 and one degree-4 relation up to degree 4",
            shape);
        RatFunc c2 = RatFunc::q_power(2) + RatFunc::q_power(-2);
        TensorElement s1(3);
        s1.add({0, 0, 1}, one);
        s1.add({0, 1, 0}, -c2);
        s1.add({1, 0, 0}, one);
        RatFunc c3 = RatFunc::q_power(2) + one + RatFunc::q_power(-2);
        TensorElement s2(4);
        s2.add({0, 1, 1, 1}, one);
        s2.add({1, 0, 1, 1}, -c3);
        s2.add({1, 1, 0, 1}, c3);
        s2.add({1, 1, 1, 0}, -one);
        bool f1 = false, f2 = false;
        for (const auto& r : rb.relations) {
            if (r.mdeg == std::vector<int>{2, 1} && relation_spans_line(r, s1)) f1 = true;
            if (r.mdeg == std::vector<int>{1, 3} && relation_spans_line(r, s2)) f2 = true;
        }
        add(out, "nichols", "B2 braiding: (2,1)-relation spans (S1)", f1);
        add(out, "nichols", "B2 braiding: (1,3)-relation spans (S2)", f2);
        bool prim = true;
        for (const auto& r : rb.relations)
            if (!is_primitive(r.element, b2)) prim = false;
        add(out, "nichols", "every derived B2 relation is primitive", prim);
    }
}

void check_identities(std::vector<CheckResult>& out) {
    for (const auto& c : identity_registry()) {
        std::string detail;
        bool ok = c.run(detail);
        add(out, "identity", c.name + " (" + c.label + ")", ok, detail);
    }
}

void check_confluence(std::vector<CheckResult>& out) {
    for (const auto& name : builtin_names()) {
        auto failures = confluence_check(builtin_presentation(name));
        std::string detail;
        if (!failures.empty()) {
            std::ostringstream os;
            os << failures.size() << " unresolved overlaps";
            detail = os.str();
        }
        add(out, "confluence", name, failures.empty(), detail);
    }
}

void check_hilbert(std::vector<CheckResult>& out) {
    auto h_counts = hilbert_count(builtin_presentation("heisenberg"), 8);
    auto b_counts = hilbert_count(builtin_presentation("b2"), 8);
    auto a_dims = nichols_dimension_table(8, braiding_from_cartan(CartanData::a2()));
    auto b_dims = nichols_dimension_table(8, braiding_from_cartan(CartanData::b2()));
    bool ok_a = true, ok_b = true;
    std::ostringstream da, db;
    for (int m = 0; m <= 8; ++m) {
        if (a_dims[static_cast<std::size_t>(m)] != h_counts[static_cast<std::size_t>(m)]) ok_a = false;
        if (b_dims[static_cast<std::size_t>(m)] != b_counts[static_cast<std::size_t>(m)]) ok_b = false;
        da << a_dims[static_cast<std::size_t>(m)] << (m < 8 ? " " : "");
        db << b_dims[static_cast<std::size_t>(m)] << (m < 8 ? " " : "");
    }
    add(out, "hilbert", "A2 graded dimensions match the heisenberg PBW counts (degrees 0..8)",
        ok_a, da.str());
    add(out, "hilbert", "B2 graded dimensions match the b2 PBW counts (degrees 0..8)", ok_b,
        db.str());
}

void check_posets(std::vector<CheckResult>& out) {
    auto group = weyl_b2();
    add(out, "poset", "the B2 Weyl group has 8 elements", group.size() == 8);
    const WeylElement& w0 = weyl_element("s1s2s1s2");
    add(out, "poset", "s1s2s1s2 = s2s1s2s1",
        w0.action == weyl_element("s2s1s2s1").action);
    Poset bruhat = bruhat_poset();
    HSpectrum hs = hspec_poset();
    bool anti = true;
    for (const auto& x : group)
        for (const auto& y : group) {
            bool b = bruhat_leq(x, y);
            bool i = hs.poset.leq(hs.bruhat_to_ideal.at(y.name), hs.bruhat_to_ideal.at(x.name));
            if (b != i) anti = false;
        }
    add(out, "poset", "w |-> Q(w) reverses the order on all 64 pairs", anti);
    add(out, "poset", "Bruhat and H-spectrum Hasse diagrams have the same edge count",
        bruhat.covers.size() == hs.poset.covers.size(),
        std::to_string(bruhat.covers.size()) + " covers");
    bool wit = true;
    std::string first_bad;
    for (const auto& w : containment_witnesses())
        if (!w.ok && first_bad.empty()) {
            wit = false;
            first_bad = w.edge;
        }
    add(out, "poset", "all containment witnesses verify", wit, first_bad);
}

} // namespace

std::vector<CheckResult> run_verify_suite() {
    std::vector<CheckResult> out;
    check_scalars(out);
    check_braided(out);
    check_nichols(out);
    check_identities(out);
    check_confluence(out);
    check_hilbert(out);
    check_posets(out);
    return out;
}

} // namespace uqp
