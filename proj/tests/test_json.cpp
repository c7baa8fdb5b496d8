#include <doctest.h>

#include "uqp/builtins.hpp"
#include "uqp/json_io.hpp"
#include "uqp/symmetrizer.hpp"

using namespace uqp;

TEST_SUITE("json") {

TEST_CASE("cartan data round-trip and validation") {
    CartanData b2 = cartan_from_json(R"({"C": [[2, -1], [-2, 2]], "d": [2, 1]})");
    CHECK(b2.rank == 2);
    CHECK(b2.a == CartanData::b2().a);
    CHECK(b2.d == CartanData::b2().d);
    CHECK(cartan_from_json(cartan_to_json(b2)).a == b2.a);
    CHECK_THROWS_AS(cartan_from_json(R"({"C": [[2, -1], [-1, 2]], "d": [2, 1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(cartan_from_json(R"({"d": [1]})"), std::invalid_argument);
    CHECK_THROWS(cartan_from_json("not json"));
}

TEST_CASE("relations are emitted with 1-based words and coefficient strings") {
    auto rb = minimal_relations(braiding_from_cartan(CartanData::b2()), 3);
    std::string j = relations_to_json(rb);
    CHECK(j ==
          R"([{"degree":3,"multidegree":[2,1],"relation":[{"word":[1,1,2],"coeff":"1"},)"
          R"({"word":[1,2,1],"coeff":"-q^2 - q^-2"},{"word":[2,1,1],"coeff":"1"}]}])");
}

TEST_CASE("element json carries the named exponents") {
    const Presentation& b2 = builtin_presentation("b2");
    AlgebraElement nf =
        AlgebraElement::generator(b2, "e2") * AlgebraElement::generator(b2, "e1");
    CHECK(element_to_json(nf) ==
          R"([{"monomial":{"e1":1,"e2":1},"coeff":"q^-2"},{"monomial":{"e3":1},"coeff":"-q^-2"}])");
    CHECK(element_to_json(AlgebraElement::zero(b2)) == "[]");
}

TEST_CASE("group description json") {
    auto g = hopf_aut_bosonization(CartanData::a2());
    std::string j = group_description_to_json(g);
    CHECK(j.find("\"torus_rank\":2") != std::string::npos);
    CHECK(j.find("[2,1]") != std::string::npos); // the swap in one-line notation
    GroupDescription undecided;
    CHECK(group_description_to_json(undecided) == R"({"structure":"undecided"})");
}

TEST_CASE("hspec json carries the bijection and the pairing assumption") {
    std::string j = hspec_to_json(hspec_poset());
    CHECK(j.find("\"order\":\"inclusion\"") != std::string::npos);
    CHECK(j.find("\"s1s2s1\":\"(z)\"") != std::string::npos);
    CHECK(j.find("\"s2s1s2\":\"(z')\"") != std::string::npos);
    CHECK(j.find("\"pairing\":\"positional\"") != std::string::npos);
}

} // TEST_SUITE
