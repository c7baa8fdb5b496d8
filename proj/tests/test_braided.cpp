#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "uqp/braiding.hpp"

using namespace uqp;

namespace {

BraidingMatrix constant_braiding(int n) {
    RatMatrix q(static_cast<std::size_t>(n),
                std::vector<RatFunc>(static_cast<std::size_t>(n), RatFunc::q_power(1)));
    return BraidingMatrix(q);
}

RatMatrix swap_matrix() {
    return {{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}};
}

} // namespace

TEST_SUITE("braided") {

TEST_CASE("cartan validation names the violated axiom") {
    CartanData bad = CartanData::a2();
    bad.a[0][0] = 3;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("a_ii = 2"), std::invalid_argument);
    bad = CartanData::a2();
    bad.a[0][1] = 1;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("a_ij <= 0"), std::invalid_argument);
    bad = CartanData::a2();
    bad.a[0][1] = 0;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("a_ij = 0 iff a_ji = 0"),
                         std::invalid_argument);
    bad = CartanData::b2();
    bad.d = {1, 1};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("symmetrizability"),
                         std::invalid_argument);
    bad = CartanData::a2();
    bad.d = {0, 1};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("positive"), std::invalid_argument);
    CHECK_NOTHROW(CartanData::a1().validate());
    CHECK_NOTHROW(CartanData::a2().validate());
    CHECK_NOTHROW(CartanData::b2().validate());
}

TEST_CASE("braiding from cartan data") {
    BraidingMatrix a2 = braiding_from_cartan(CartanData::a2());
    CHECK(a2.entry(0, 0) == RatFunc::q_power(2));
    CHECK(a2.entry(0, 1) == RatFunc::q_power(-1));
    CHECK(a2.entry(1, 0) == RatFunc::q_power(-1));
    CHECK(a2.entry(1, 1) == RatFunc::q_power(2));

    BraidingMatrix b2 = braiding_from_cartan(CartanData::b2());
    CHECK(b2.entry(0, 0) == RatFunc::q_power(4));
    CHECK(b2.entry(0, 1) == RatFunc::q_power(-2));
    CHECK(b2.entry(1, 0) == RatFunc::q_power(-2));
    CHECK(b2.entry(1, 1) == RatFunc::q_power(2));

    BraidingMatrix a1 = braiding_from_cartan(CartanData::a1());
    CHECK(a1.entry(0, 0) == RatFunc::q_power(2));

    // entries are always single Laurent monomials
    for (const auto* b : {&a2, &b2, &a1})
        for (int i = 0; i < b->size(); ++i)
            for (int j = 0; j < b->size(); ++j) CHECK(b->entry(i, j).is_monomial());
}

TEST_CASE("autdiagr examples") {
    CHECK(autdiagr(braiding_from_cartan(CartanData::a2())).size() == 2);
    CHECK(autdiagr(braiding_from_cartan(CartanData::b2())).size() == 1);
    CHECK(autdiagr(braiding_from_cartan(CartanData::a1())).size() == 1);
    CHECK(autdiagr(constant_braiding(3)).size() == 6); // all of S_3
}

TEST_CASE("autdiagr is a subgroup (closure and inverses, n <= 4)") {
    auto check_subgroup = [](const BraidingMatrix& b) {
        auto group = autdiagr(b);
        std::set<Perm> members(group.begin(), group.end());
        CHECK(members.count(Perm::identity(b.size())) == 1);
        for (const auto& x : group) {
            CHECK(members.count(x.inverse()) == 1);
            for (const auto& y : group) CHECK(members.count(x.compose(y)) == 1);
        }
    };
    check_subgroup(braiding_from_cartan(CartanData::a2()));
    check_subgroup(braiding_from_cartan(CartanData::b2()));
    check_subgroup(constant_braiding(4));
    // two A1 blocks with equal parameters: the swap of the blocks survives
    RatMatrix q(4, std::vector<RatFunc>(4, RatFunc(1)));
    for (int i = 0; i < 4; ++i) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = RatFunc::q_power(2);
    BraidingMatrix two_blocks(q);
    check_subgroup(two_blocks);
    CHECK(autdiagr(two_blocks).size() == 24); // off-diagonal constant: all permutations
}

TEST_CASE("lemma conditions") {
    LemmaConditions a2 = lemma_conditions(braiding_from_cartan(CartanData::a2()));
    CHECK(a2.rows_separated);
    CHECK(a2.cols_separated);
    CHECK(a2.no_constant_block);
    LemmaConditions b2 = lemma_conditions(braiding_from_cartan(CartanData::b2()));
    CHECK(b2.rows_separated);
    CHECK(b2.cols_separated);
    CHECK(b2.no_constant_block);
    LemmaConditions cst = lemma_conditions(constant_braiding(2));
    CHECK_FALSE(cst.rows_separated);
    CHECK_FALSE(cst.cols_separated);
    CHECK_FALSE(cst.no_constant_block);
    CHECK_FALSE(cst.any());
}

TEST_CASE("glvc membership") {
    BraidingMatrix a2 = braiding_from_cartan(CartanData::a2());
    BraidingMatrix b2 = braiding_from_cartan(CartanData::b2());

    // any invertible diagonal map is braided
    uqp_test::Rng rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        RatMatrix g{{RatFunc(0), RatFunc(0)}, {RatFunc(0), RatFunc(0)}};
        g[0][0] = RatFunc(make_rat(rng.range(1, 9)));
        g[1][1] = RatFunc(make_rat(rng.range(1, 9)));
        CHECK(glvc_member(g, a2));
        CHECK(glvc_member(g, b2));
    }
    CHECK(glvc_member(swap_matrix(), a2));
    CHECK_FALSE(glvc_member(swap_matrix(), b2));

    RatMatrix singular{{RatFunc(1), RatFunc(1)}, {RatFunc(1), RatFunc(1)}};
    CHECK_THROWS_AS(glvc_member(singular, a2), std::invalid_argument);

    // a non-monomial invertible map fails for both
    RatMatrix dense{{RatFunc(1), RatFunc(1)}, {RatFunc(0), RatFunc(1)}};
    CHECK_FALSE(glvc_member(dense, a2));
    CHECK_FALSE(glvc_member(dense, b2));
}

TEST_CASE("monomial maps with a diagram permutation are members") {
    for (const auto& cd : {CartanData::a2(), CartanData::b2()}) {
        BraidingMatrix b = braiding_from_cartan(cd);
        uqp_test::Rng rng(17);
        for (const Perm& s : autdiagr(b)) {
            for (int iter = 0; iter < 20; ++iter) {
                MonomialMap g{s, {RatFunc(make_rat(rng.range(1, 12))),
                                  RatFunc(make_rat(rng.range(1, 12)))}};
                CHECK(glvc_member(g.to_matrix(), b));
            }
        }
    }
}

TEST_CASE("rank-2 classification mirrors the lemma proof") {
    // brute force over the zero/nonzero patterns of a 2x2 matrix with
    // symbolically independent nonzero entries: a pattern can satisfy the
    // commutation equation iff q_ij = q_sr whenever lambda_{r,j};lambda_{s,i}
    // are marked nonzero; invertible surviving patterns must be monomial with
    // a diagram permutation
    for (const auto& cd : {CartanData::a2(), CartanData::b2()}) {
        BraidingMatrix b = braiding_from_cartan(cd);
        auto diagr = autdiagr(b);
        std::set<std::vector<int>> surviving_monomial_patterns;
        for (int mask = 0; mask < 16; ++mask) {
            auto nonzero = [&](int r, int c) { return (mask >> (2 * r + c)) & 1; };
            // invertibility of a generic pattern: some permutation is fully nonzero
            bool invertible = (nonzero(0, 0) && nonzero(1, 1)) || (nonzero(0, 1) && nonzero(1, 0));
            if (!invertible) continue;
            bool satisfiable = true;
            for (int i = 0; i < 2 && satisfiable; ++i)
                for (int j = 0; j < 2 && satisfiable; ++j)
                    for (int r = 0; r < 2 && satisfiable; ++r)
                        for (int s = 0; s < 2 && satisfiable; ++s)
                            if (nonzero(r, j) && nonzero(s, i) && !(b.entry(i, j) == b.entry(s, r)))
                                satisfiable = false;
            if (!satisfiable) continue;
            // surviving pattern must be exactly one nonzero per column and row
            int count = 0;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) count += nonzero(r, c);
            CHECK(count == 2);
            std::vector<int> sigma(2);
            for (int c = 0; c < 2; ++c)
                for (int r = 0; r < 2; ++r)
                    if (nonzero(r, c)) sigma[static_cast<std::size_t>(c)] = r;
            bool in_diagr = false;
            for (const auto& s : diagr)
                if (s.one_line() == sigma) in_diagr = true;
            CHECK(in_diagr);
            surviving_monomial_patterns.insert(sigma);
        }
        CHECK(surviving_monomial_patterns.size() == diagr.size());
    }
}

TEST_CASE("glvc structure") {
    auto a2 = glvc_structure(braiding_from_cartan(CartanData::a2()));
    CHECK(a2.decided);
    CHECK(a2.torus_rank == 2);
    CHECK(a2.diagram_group.size() == 2);
    auto b2 = glvc_structure(braiding_from_cartan(CartanData::b2()));
    CHECK(b2.decided);
    CHECK(b2.torus_rank == 2);
    CHECK(b2.diagram_group.size() == 1);
    auto cst = glvc_structure(constant_braiding(2));
    CHECK_FALSE(cst.decided);
    CHECK(cst.structure() == "undecided");
}

TEST_CASE("hopf automorphisms of the bosonization") {
    auto a2 = hopf_aut_bosonization(CartanData::a2());
    CHECK(a2.torus_rank == 2);
    CHECK(a2.diagram_group.size() == 2);
    auto b2 = hopf_aut_bosonization(CartanData::b2());
    CHECK(b2.torus_rank == 2);
    CHECK(b2.diagram_group.size() == 1);
    auto a1 = hopf_aut_bosonization(CartanData::a1());
    CHECK(a1.torus_rank == 1);
    CHECK(a1.diagram_group.size() == 1);
}

} // TEST_SUITE
