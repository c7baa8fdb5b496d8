#include <doctest.h>

#include "test_util.hpp"
#include "uqp/builtins.hpp"
#include "uqp/hom.hpp"
#include "uqp/identities.hpp"
#include "uqp/json_io.hpp"

using namespace uqp;

namespace {

AlgebraElement gen(const Presentation& p, const std::string& g) {
    return AlgebraElement::generator(p, g);
}

AlgebraElement random_element(uqp_test::Rng& rng, const Presentation& p, int max_words = 3,
                              int max_len = 3) {
    AlgebraElement acc = AlgebraElement::zero(p);
    for (long w = 0, n = rng.range(1, max_words); w < n; ++w) {
        FreeWord word;
        for (long i = 0, len = rng.range(0, max_len); i < len; ++i)
            word.push_back(SignedLetter{static_cast<int>(rng.range(0, p.arity() - 1)), 1});
        acc += AlgebraElement::from_word(p, word, RatFunc(make_rat(rng.range(-4, 4), rng.range(1, 3))));
    }
    return acc;
}

} // namespace

TEST_SUITE("pbw") {

TEST_CASE("builtin inventory") {
    CHECK(builtin_names().size() == 10);
    CHECK(builtin_presentation("b2").rules.size() == 6);
    CHECK(builtin_presentation("heisenberg").rules.size() == 3);
    CHECK_THROWS_AS(builtin_presentation("no_such_algebra"), std::invalid_argument);
    // b2 rule e2*e3 -> q^2 e3 e2 + z
    const Presentation& b2 = builtin_presentation("b2");
    const RuleRhs* r = b2.find_rule(RuleKey{b2.index("e2"), 1, b2.index("e3"), 1});
    REQUIRE(r != nullptr);
    CHECK(r->size() == 2);
    // a_s1s2s1 rule e2*w -> q^2 w e2
    const Presentation& left = builtin_presentation("a_s1s2s1");
    const RuleRhs* rw = left.find_rule(RuleKey{left.index("e2"), 1, left.index("w"), 1});
    REQUIRE(rw != nullptr);
    REQUIRE(rw->size() == 1);
    CHECK(rw->front().first == RatFunc::q_power(2));
}

TEST_CASE("normal form examples") {
    const Presentation& b2 = builtin_presentation("b2");
    AlgebraElement e1 = gen(b2, "e1"), e2 = gen(b2, "e2"), e3 = gen(b2, "e3"), z = gen(b2, "z");
    AlgebraElement nf = e2 * e1;
    CHECK(nf == (e1 * e2).scaled(RatFunc::q_power(-2)) - e3.scaled(RatFunc::q_power(-2)));
    CHECK(nf.str() == "q^-2*e1*e2 - q^-2*e3");
    // already-normal monomial is untouched
    AlgebraElement mono = z * e3 * e1 * e2;
    REQUIRE(mono.terms().size() == 1);
    CHECK(mono.terms().begin()->first == PbwMonomial{1, 1, 1, 1});
    CHECK(mono.terms().begin()->second == RatFunc(1));

    const Presentation& h = builtin_presentation("heisenberg");
    AlgebraElement nfh = gen(h, "E2") * gen(h, "E1");
    CHECK(nfh == (gen(h, "E1") * gen(h, "E2")).scaled(RatFunc::q_power(-2)) -
                     gen(h, "E3").scaled(RatFunc::q_power(-2)));
}

TEST_CASE("normal form is idempotent and associative on random inputs") {
    uqp_test::Rng rng(77);
    for (const auto& name : builtin_names()) {
        const Presentation& p = builtin_presentation(name);
        for (int iter = 0; iter < 8; ++iter) {
            AlgebraElement a = random_element(rng, p);
            AlgebraElement b = random_element(rng, p);
            AlgebraElement c = random_element(rng, p);
            CHECK((a * b) * c == a * (b * c));
            // elements are stored normalized; re-normalizing their monomials is a no-op
            AlgebraElement again = AlgebraElement::zero(p);
            for (const auto& [m, coeff] : a.terms())
                again += AlgebraElement::from_word(p, p.monomial_word(m), coeff);
            CHECK(again == a);
        }
    }
}

TEST_CASE("negative powers require localization") {
    const Presentation& b2 = builtin_presentation("b2");
    CHECK_THROWS_AS(gen(b2, "e1").pow(-1), std::invalid_argument);
    const Presentation& v = builtin_presentation("b2_localized");
    AlgebraElement e1 = gen(v, "e1"), e3 = gen(v, "e3");
    CHECK(e1.pow(-1) * e1 == AlgebraElement::one(v));
    CHECK(e3 * e3.pow(-2) * e3 == AlgebraElement::one(v));
    // localized q-commutation: e1 e3^-1 = q^2 e3^-1 e1
    CHECK(e1 * e3.pow(-1) == (e3.pow(-1) * e1).scaled(RatFunc::q_power(2)));
}

TEST_CASE("q_bracket examples") {
    const Presentation& b2 = builtin_presentation("b2");
    AlgebraElement e1 = gen(b2, "e1"), e2 = gen(b2, "e2"), e3 = gen(b2, "e3"), z = gen(b2, "z");
    CHECK(q_bracket(e1, e2, RatFunc::q_power(2)) == e3);
    AlgebraElement w = q_bracket(e2, e3, RatFunc(1));
    CHECK(w == z + (e3 * e2).scaled(RatFunc::q_power(2) - RatFunc(1)));
    CHECK(q_bracket(e1, e1, RatFunc(1)).is_zero());
    CHECK_THROWS_AS(q_bracket(e1, gen(builtin_presentation("heisenberg"), "E1"), RatFunc(1)),
                    std::invalid_argument);
}

TEST_CASE("centrality") {
    const Presentation& b2 = builtin_presentation("b2");
    CHECK(is_central(gen(b2, "z")));
    CHECK(is_central(named_element(b2, "z'")));
    CHECK_FALSE(is_central(gen(b2, "e1")));
    CHECK_FALSE(is_central(named_element(b2, "e3bar")));
    CHECK(is_central(named_element(builtin_presentation("heisenberg"), "Omega")));
    CHECK(is_central(named_element(builtin_presentation("a_s1s2s1"), "z")));
    CHECK(is_central(named_element(builtin_presentation("a_s2s1s2"), "u")));
}

TEST_CASE("q-normality") {
    const Presentation& left = builtin_presentation("a_s1s2s1");
    auto rep = q_normality(gen(left, "w"));
    CHECK(rep.ok);
    for (const auto& e : rep.entries) {
        if (e.gen == "w") CHECK(e.lambda == RatFunc(1));
        if (e.gen == "e2") CHECK(e.lambda == RatFunc::q_power(-2));
        if (e.gen == "e3") CHECK(e.lambda == RatFunc::q_power(2));
    }

    const Presentation& b2 = builtin_presentation("b2");
    auto repw = q_normality(named_element(b2, "w"));
    CHECK_FALSE(repw.ok);
    REQUIRE(repw.failure() != nullptr);
    CHECK(repw.failure()->gen == "e1");
    // w*e1 - e1*w = -(1-q^-2) e3^2
    AlgebraElement e3 = gen(b2, "e3");
    CHECK(repw.failure()->residual ==
          (e3 * e3).scaled(RatFunc::q_power(-2) - RatFunc(1)));

    // central elements are q-normal with every lambda = 1
    auto repz = q_normality(gen(b2, "z"));
    CHECK(repz.ok);
    for (const auto& e : repz.entries) CHECK(e.lambda == RatFunc(1));

    // powers of the normal generators stay q-normal
    const Presentation& right = builtin_presentation("a_s2s1s2");
    for (int n = 1; n <= 3; ++n) {
        CHECK(q_normality(gen(right, "e3bar").pow(n)).ok);
        CHECK(q_normality(gen(left, "w").pow(n)).ok);
    }
}

TEST_CASE("named elements") {
    const Presentation& b2 = builtin_presentation("b2");
    const RatFunc one(1), qm2 = RatFunc::q_power(-2), qm4 = RatFunc::q_power(-4);
    AlgebraElement e1 = gen(b2, "e1"), e2 = gen(b2, "e2"), e3 = gen(b2, "e3"), z = gen(b2, "z");
    // z' from the bracket construction equals the displayed expansion
    AlgebraElement zp = named_element(b2, "z'");
    AlgebraElement displayed = (e3 * e1 * e2).scaled((one - qm4) * (one - qm2)) +
                               (e3 * e3).scaled(qm4 * (one - qm2)) + (z * e1).scaled(one - qm4);
    CHECK(zp == displayed);
    // Omega = E3 * E3bar
    const Presentation& h = builtin_presentation("heisenberg");
    CHECK(named_element(h, "Omega") == gen(h, "E3") * named_element(h, "E3bar"));
    // e2 e3bar - q^-2 e3bar e2 = q^-4 z
    AlgebraElement e3bar = named_element(b2, "e3bar");
    CHECK(e2 * e3bar - (e3bar * e2).scaled(qm2) == z.scaled(qm4));
    CHECK_THROWS_AS(named_element(b2, "nope"), std::invalid_argument);
}

TEST_CASE("confluence of every builtin presentation") {
    for (const auto& name : builtin_names()) {
        auto failures = confluence_check(builtin_presentation(name));
        CHECK_MESSAGE(failures.empty(), name);
    }
}

TEST_CASE("a corrupted presentation is caught by the confluence check") {
    // break the centrality of z: e3 z -> q z e3 makes the overlap e2 e3 z
    // irresolvable
    Presentation p = builtin_presentation("b2");
    p.rules[RuleKey{p.index("e3"), 1, p.index("z"), 1}] = {
        {RatFunc::q_power(1), [&] {
             PbwMonomial m(4, 0);
             m[static_cast<std::size_t>(p.index("z"))] = 1;
             m[static_cast<std::size_t>(p.index("e3"))] = 1;
             return m;
         }()}};
    Presentation fresh;
    fresh.name = "b2_corrupted";
    fresh.gens = p.gens;
    fresh.degree = p.degree;
    fresh.mdeg = p.mdeg;
    fresh.rules = p.rules;
    fresh.finalize();
    auto failures = confluence_check(fresh);
    CHECK_FALSE(failures.empty());
}

TEST_CASE("rules must be homogeneous and carry their leading term") {
    Presentation p;
    p.name = "broken";
    p.gens = {"a", "b"};
    p.degree = {1, 1};
    // drop the leading term entirely
    p.rules[RuleKey{1, 1, 0, 1}] = {{RatFunc(1), PbwMonomial{2, 0}}};
    CHECK_THROWS_AS(p.finalize(), std::invalid_argument);
    // inhomogeneous tail
    Presentation p2;
    p2.name = "broken2";
    p2.gens = {"a", "b"};
    p2.degree = {1, 1};
    p2.rules[RuleKey{1, 1, 0, 1}] = {{RatFunc(1), PbwMonomial{1, 1}}, {RatFunc(1), PbwMonomial{1, 0}}};
    CHECK_THROWS_AS(p2.finalize(), std::invalid_argument);
}

TEST_CASE("hilbert counts") {
    CHECK(hilbert_count(builtin_presentation("b2"), 3) ==
          std::vector<unsigned long long>{1, 2, 4, 7});
    auto h = hilbert_count(builtin_presentation("heisenberg"), 2);
    CHECK(h == std::vector<unsigned long long>{1, 2, 4});
    CHECK(hilbert_count(builtin_presentation("a_s1s2s1"), 0) ==
          std::vector<unsigned long long>{1});
    CHECK_THROWS_AS(hilbert_count(builtin_presentation("qtorus"), 3), std::invalid_argument);
}

TEST_CASE("hom checks") {
    const Presentation& b2 = builtin_presentation("b2");
    const Presentation& h = builtin_presentation("heisenberg");

    // psi_{alpha,beta} on a 5x5 grid of distinct rationals
    // (the rule identities have degree <= 4 in each parameter)
    const long samples[5] = {2, 3, 5, 7, 11};
    for (long a : samples)
        for (long b : samples) {
            RatFunc alpha(make_rat(a)), beta(make_rat(b));
            AlgebraHom psi{&b2, &b2,
                           {gen(b2, "z").scaled(alpha * beta * beta),
                            gen(b2, "e3").scaled(alpha * beta), gen(b2, "e1").scaled(alpha),
                            gen(b2, "e2").scaled(beta)}};
            CHECK(hom_check(psi).empty());
        }

    // omega swaps the heisenberg generators
    AlgebraElement omega_E3 =
        gen(h, "E2") * gen(h, "E1") - (gen(h, "E1") * gen(h, "E2")).scaled(RatFunc::q_power(2));
    AlgebraHom omega{&h, &h, {omega_E3, gen(h, "E2"), gen(h, "E1")}};
    CHECK(hom_check(omega).empty());
    CHECK(omega_E3 == named_element(h, "E3bar").scaled(-RatFunc::q_power(2)));

    // swapping e1 and e2 is not an endomorphism of b2
    AlgebraElement se3 =
        gen(b2, "e2") * gen(b2, "e1") - (gen(b2, "e1") * gen(b2, "e2")).scaled(RatFunc::q_power(2));
    AlgebraElement sz = gen(b2, "e1") * se3 - (se3 * gen(b2, "e1")).scaled(RatFunc::q_power(2));
    AlgebraHom swap{&b2, &b2, {sz, se3, gen(b2, "e2"), gen(b2, "e1")}};
    CHECK_FALSE(hom_check(swap).empty());
}

TEST_CASE("identity registry runs green") {
    for (const auto& c : identity_registry()) {
        std::string detail;
        bool ok = c.run(detail);
        CHECK_MESSAGE(ok, (c.name + ": " + detail));
    }
    std::string detail;
    CHECK(run_identity("s_equals_minus_qm2_z", detail));
    CHECK(run_identity("torus_identity_1", detail));
    CHECK(run_identity("serre_S1_S2_hold_in_b2", detail));
    CHECK_THROWS_AS(run_identity("unknown", detail), std::invalid_argument);
}

TEST_CASE("b2 embeds into its localization") {
    // normal forms computed in b2 and in b2_localized agree on the image
    const Presentation& b2 = builtin_presentation("b2");
    const Presentation& v = builtin_presentation("b2_localized");
    uqp_test::Rng rng(404);
    for (int iter = 0; iter < 30; ++iter) {
        FreeWord word;
        for (long i = 0, len = rng.range(0, 5); i < len; ++i)
            word.push_back(SignedLetter{static_cast<int>(rng.range(0, 3)), 1});
        AlgebraElement in_b2 = AlgebraElement::from_word(b2, word);
        AlgebraElement in_v = AlgebraElement::from_word(v, word);
        AlgebraElement mapped = AlgebraElement::zero(v);
        for (const auto& [m, c] : in_b2.terms()) mapped.add(m, c);
        CHECK(mapped == in_v);
    }
}

TEST_CASE("presentations round-trip through their JSON form") {
    for (const auto& name : builtin_names()) {
        const Presentation& p = builtin_presentation(name);
        Presentation back = presentation_from_json(presentation_to_json(p));
        CHECK(back.gens == p.gens);
        CHECK(back.degree == p.degree);
        CHECK(back.mdeg == p.mdeg);
        CHECK(back.localized == p.localized);
        CHECK(back.rules == p.rules);
        CHECK(confluence_check(back).empty());
    }
    CHECK_THROWS(presentation_from_json("{\"generators\": [\"a\"]}"));
}

TEST_CASE("the quotient hom constructor") {
    AlgebraHom pi = quotient_b2_to_heisenberg();
    CHECK(hom_check(pi).empty());
    CHECK(hom_apply(pi, AlgebraElement::generator(*pi.src, "z")).is_zero());
}

TEST_CASE("element text is canonical") {
    const Presentation& b2 = builtin_presentation("b2");
    AlgebraElement zp = named_element(b2, "z'");
    CHECK(zp.str() ==
          "(1 - q^-2 - q^-4 + q^-6)*e3*e1*e2 + (q^-4 - q^-6)*e3^2 + (1 - q^-4)*z*e1");
    CHECK(AlgebraElement::zero(b2).str() == "0");
    CHECK(AlgebraElement::one(b2).str() == "1");
    CHECK(gen(b2, "e1").scaled(RatFunc(-1)).str() == "-e1");
}

} // TEST_SUITE
