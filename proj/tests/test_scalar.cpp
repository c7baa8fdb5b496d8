#include <doctest.h>

#include "test_util.hpp"
#include "uqp/laurent.hpp"
#include "uqp/ratfunc.hpp"

using namespace uqp;

TEST_SUITE("scalar") {

TEST_CASE("laurent basics") {
    LaurentPoly q2 = LaurentPoly::q_power(2);
    LaurentPoly one(1);
    CHECK(q2 * LaurentPoly::q_power(-2) == one);
    CHECK((q2 + one - q2) == one);
    CHECK(LaurentPoly().is_zero());
    CHECK((q2 - q2).is_zero());
    CHECK(q2.str() == "q^2");
    CHECK((q2 + one + LaurentPoly::q_power(-2)).str() == "q^2 + 1 + q^-2");
    CHECK((-q2 - one).str() == "-q^2 - 1");
    CHECK(LaurentPoly::monomial(1, make_rat(3, 2)).str() == "3/2*q");
    CHECK(LaurentPoly().str() == "0");
}

TEST_CASE("laurent multiplication agrees with a naive convolution oracle") {
    uqp_test::Rng rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        LaurentPoly a = uqp_test::random_laurent(rng);
        LaurentPoly b = uqp_test::random_laurent(rng);
        LaurentPoly prod = a * b;
        // oracle: collect the full convolution in a plain map
        std::map<long, BigRat> conv;
        for (const auto& [ea, ca] : a.terms())
            for (const auto& [eb, cb] : b.terms()) conv[ea + eb] += ca * cb;
        LaurentPoly expect;
        for (const auto& [e, c] : conv) expect += LaurentPoly::monomial(e, c);
        CHECK(prod == expect);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("laurent multiplication is associative on random triples") {
    uqp_test::Rng rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        LaurentPoly a = uqp_test::random_laurent(rng);
        LaurentPoly b = uqp_test::random_laurent(rng);
        LaurentPoly c = uqp_test::random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("exact division and gcd") {
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly p = (q + LaurentPoly(1)) * (q - LaurentPoly(1));
    CHECK(LaurentPoly::div_exact(p, q + LaurentPoly(1)) == q - LaurentPoly(1));
    CHECK_THROWS_AS(LaurentPoly::div_exact(q + LaurentPoly(1), q + LaurentPoly(2)),
                    std::logic_error);
    // gcd is canonical: lowest exponent 0, primitive, positive leading coefficient
    LaurentPoly g = LaurentPoly::gcd(p.shifted(-3), (q + LaurentPoly(1)).scaled(make_rat(-2, 3)));
    CHECK(g == q + LaurentPoly(1));
}

TEST_CASE("q_int values") {
    CHECK(q_int(0, 1).is_zero());
    CHECK(q_int(2, 2).str() == "q^2 + q^-2");
    CHECK(q_int(3, 1).str() == "q^2 + 1 + q^-2");
    CHECK(q_int(1, 5) == LaurentPoly(1));
    CHECK_THROWS_AS(q_int(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_int(2, 0), std::invalid_argument);
}

TEST_CASE("q_binom displayed values") {
    CHECK(q_binom(2, 0, 2) == LaurentPoly(1));
    CHECK(q_binom(2, 2, 2) == LaurentPoly(1));
    CHECK(q_binom(2, 1, 2).str() == "q^2 + q^-2");
    CHECK(q_binom(3, 0, 1) == LaurentPoly(1));
    CHECK(q_binom(3, 3, 1) == LaurentPoly(1));
    CHECK(q_binom(3, 1, 1).str() == "q^2 + 1 + q^-2");
    CHECK(q_binom(3, 2, 1) == q_binom(3, 1, 1));
    CHECK_THROWS_AS(q_binom(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(q_binom(2, -1, 1), std::invalid_argument);
}

TEST_CASE("q_binom is symmetric under q -> q^-1 and k -> n-k") {
    for (long d : {1L, 2L}) {
        for (long n = 0; n <= 8; ++n) {
            for (long k = 0; k <= n; ++k) {
                LaurentPoly b = q_binom(n, k, d);
                CHECK(b == b.inverted_q());
                CHECK(b == q_binom(n, n - k, d));
            }
        }
    }
}

TEST_CASE("balanced q-Pascal identity up to n = 8") {
    // [n k]_v = v^k [n-1 k]_v + v^{k-n} [n-1 k-1]_v with v = q^d
    for (long d : {1L, 2L, 3L}) {
        for (long n = 1; n <= 8; ++n) {
            for (long k = 0; k <= n; ++k) {
                LaurentPoly lhs = q_binom(n, k, d);
                LaurentPoly rhs;
                if (k <= n - 1) rhs += q_binom(n - 1, k, d).shifted(d * k);
                if (k >= 1) rhs += q_binom(n - 1, k - 1, d).shifted(d * (k - n));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("ratfunc normalization") {
    LaurentPoly q = LaurentPoly::q_power(1);
    // (q^2 - 1)/(q - q^-1) = q
    RatFunc r(q * q - LaurentPoly(1), q - LaurentPoly::q_power(-1));
    CHECK(r == RatFunc(q));
    CHECK(r.is_laurent());
    // denominator canonical: lowest exponent 0, integer primitive, positive lead
    RatFunc s(LaurentPoly(1), (q - LaurentPoly(1)).scaled(make_rat(-2, 3)).shifted(4));
    CHECK(s.denominator().lowest_exp() == 0);
    CHECK(s.denominator().leading_coeff() > 0);
    CHECK(s.denominator().content_signed() == 1);
    CHECK(s * RatFunc((q - LaurentPoly(1)).scaled(make_rat(-2, 3)).shifted(4)) == RatFunc(1));
}

TEST_CASE("ratfunc field axioms and cross-multiplication equality") {
    uqp_test::Rng rng(99);
    for (int iter = 0; iter < 60; ++iter) {
        RatFunc a(uqp_test::random_laurent(rng), uqp_test::random_nonzero_laurent(rng));
        RatFunc b(uqp_test::random_laurent(rng), uqp_test::random_nonzero_laurent(rng));
        RatFunc c(uqp_test::random_laurent(rng), uqp_test::random_nonzero_laurent(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
        // equality iff cross multiplication agrees
        bool eq = a == b;
        bool cross = a.numerator() * b.denominator() == b.numerator() * a.denominator();
        CHECK(eq == cross);
    }
}

TEST_CASE("ratfunc division by zero") {
    CHECK_THROWS_AS(RatFunc(1).inverse().inverse() / RatFunc(0), std::domain_error);
    CHECK_THROWS_AS(RatFunc(0).inverse(), std::domain_error);
    // x * x^-1 = 1 for x = 1 - q^-4
    RatFunc x = RatFunc(1) - RatFunc::q_power(-4);
    CHECK(x * x.inverse() == RatFunc(1));
}

TEST_CASE("identity-1 coefficient") {
    RatFunc a = ((RatFunc(1) - RatFunc::q_power(-4)) * (RatFunc::q_power(2) - RatFunc(1))).inverse();
    // (1-q^-4)(q^2-1) = q^2 - 1 - q^-2 + q^-4
    LaurentPoly den = LaurentPoly::q_power(2) - LaurentPoly(1) - LaurentPoly::q_power(-2) +
                      LaurentPoly::q_power(-4);
    CHECK(a == RatFunc(LaurentPoly(1), den));
    CHECK(a.str() == "q^4/(q^6 - q^4 - q^2 + 1)");
}

} // TEST_SUITE
