#include <doctest.h>

#include <set>

#include "uqp/hspec.hpp"
#include "uqp/poset.hpp"
#include "uqp/weyl.hpp"

using namespace uqp;

TEST_SUITE("weylspec") {

TEST_CASE("the group has eight elements with the right lengths") {
    auto group = weyl_b2();
    REQUIRE(group.size() == 8);
    std::multiset<int> lengths;
    for (const auto& w : group) lengths.insert(w.length());
    CHECK(lengths == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4});
}

TEST_CASE("generator actions and the longest element") {
    const WeylElement& e = weyl_element("e");
    CHECK(e.action == SignedAction{std::make_pair(0, 1), std::make_pair(1, 1)});
    const WeylElement& s1 = weyl_element("s1");
    CHECK(s1.action == SignedAction{std::make_pair(1, 1), std::make_pair(0, 1)});
    const WeylElement& s2 = weyl_element("s2");
    CHECK(s2.action == SignedAction{std::make_pair(0, 1), std::make_pair(1, -1)});
    // the two spellings of the longest element coincide; it acts by -1
    const WeylElement& w0 = weyl_element("s1s2s1s2");
    CHECK(w0.action == weyl_element("s2s1s2s1").action);
    CHECK(w0.action == SignedAction{std::make_pair(0, -1), std::make_pair(1, -1)});
    // table rows for the mixed words
    CHECK(weyl_element("s1s2").action == SignedAction{std::make_pair(1, 1), std::make_pair(0, -1)});
    CHECK(weyl_element("s2s1").action == SignedAction{std::make_pair(1, -1), std::make_pair(0, 1)});
}

TEST_CASE("reduced words") {
    CHECK(weyl_reduced_words(weyl_element("e")) == std::vector<std::vector<int>>{{}});
    CHECK(weyl_reduced_words(weyl_element("s1s2s1")) == std::vector<std::vector<int>>{{1, 2, 1}});
    auto w0_words = weyl_reduced_words(weyl_element("s1s2s1s2"));
    CHECK(w0_words.size() == 2); // s1s2s1s2 and s2s1s2s1
}

TEST_CASE("bruhat order by the subword criterion") {
    auto group = weyl_b2();
    const WeylElement& e = weyl_element("e");
    for (const auto& y : group) CHECK(bruhat_leq(e, y));
    CHECK(bruhat_leq(weyl_element("s1"), weyl_element("s1s2")));
    CHECK(bruhat_leq(weyl_element("s1"), weyl_element("s2s1")));
    CHECK(bruhat_leq(weyl_element("s2"), weyl_element("s1s2")));
    CHECK(bruhat_leq(weyl_element("s1s2"), weyl_element("s2s1s2")));
    CHECK(bruhat_leq(weyl_element("s2s1"), weyl_element("s1s2s1")));
    // incomparable pairs
    CHECK_FALSE(bruhat_leq(weyl_element("s1s2"), weyl_element("s2s1")));
    CHECK_FALSE(bruhat_leq(weyl_element("s2s1"), weyl_element("s1s2")));
    CHECK_FALSE(bruhat_leq(weyl_element("s1s2s1"), weyl_element("s2s1s2")));
    CHECK_FALSE(bruhat_leq(weyl_element("s1"), weyl_element("e")));
}

TEST_CASE("bruhat poset is graded with covers raising length by one") {
    Poset p = bruhat_poset();
    p.validate();
    CHECK(p.nodes.size() == 8);
    CHECK(p.covers.size() == 12);
    for (const auto& [a, b] : p.covers) {
        const WeylElement& x = weyl_element(p.nodes[static_cast<std::size_t>(a)]);
        const WeylElement& y = weyl_element(p.nodes[static_cast<std::size_t>(b)]);
        CHECK(y.length() == x.length() + 1);
        CHECK(bruhat_leq(x, y));
    }
}

TEST_CASE("hspec poset matches the drawn diagram") {
    HSpectrum h = hspec_poset();
    h.poset.validate();
    CHECK(h.poset.nodes.size() == 8);
    CHECK(h.poset.covers.size() == 12);
    auto covers0 = h.poset.covers_of("(0)");
    CHECK(covers0 == std::vector<std::string>{"(z)", "(z')"});
    // (e1,e2) is the maximal ideal: everything is contained in it
    for (const auto& n : h.poset.nodes) CHECK(h.poset.leq(n, "(e1,e2)"));
    CHECK(h.pairing_assumption == "positional");
}

TEST_CASE("the map w -> Q(w) is an order anti-isomorphism") {
    HSpectrum h = hspec_poset();
    auto group = weyl_b2();
    for (const auto& x : group)
        for (const auto& y : group) {
            bool b = bruhat_leq(x, y);
            bool i = h.poset.leq(h.bruhat_to_ideal.at(y.name), h.bruhat_to_ideal.at(x.name));
            CHECK(b == i);
        }
    // the Hasse diagrams coincide as graphs under the map
    Poset bruhat = bruhat_poset();
    std::set<std::pair<std::string, std::string>> bruhat_edges, hspec_edges;
    for (const auto& [a, b] : bruhat.covers)
        bruhat_edges.insert({h.bruhat_to_ideal.at(bruhat.nodes[static_cast<std::size_t>(b)]),
                             h.bruhat_to_ideal.at(bruhat.nodes[static_cast<std::size_t>(a)])});
    for (const auto& [a, b] : h.poset.covers)
        hspec_edges.insert({h.poset.nodes[static_cast<std::size_t>(a)],
                            h.poset.nodes[static_cast<std::size_t>(b)]});
    CHECK(bruhat_edges == hspec_edges);
}

TEST_CASE("containment witnesses all verify") {
    auto checks = containment_witnesses();
    CHECK(checks.size() == 12);
    for (const auto& c : checks) CHECK_MESSAGE(c.ok, (c.edge + ": " + c.detail));
}

TEST_CASE("ideal generators") {
    CHECK(ideal_generators("(0)").empty());
    CHECK(ideal_generators("(e1,e2)").size() == 2);
    CHECK(ideal_generators("(z')").size() == 1);
    CHECK_THROWS_AS(ideal_generators("(zz)"), std::invalid_argument);
}

TEST_CASE("dot output is stable") {
    Poset p = bruhat_poset();
    std::string dot = p.to_dot("bruhat");
    CHECK(dot.find("graph \"bruhat\"") != std::string::npos);
    CHECK(dot.find("\"e\" -- \"s1\"") != std::string::npos);
    CHECK(p.to_dot("bruhat") == dot);
}

TEST_CASE("poset validation rejects cycles and transitive edges") {
    Poset cyc;
    cyc.nodes = {"a", "b"};
    cyc.covers = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(cyc.validate(), std::logic_error);
    Poset trans;
    trans.nodes = {"a", "b", "c"};
    trans.covers = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(trans.validate(), std::logic_error);
}

} // TEST_SUITE
