#include <doctest.h>

#include "test_util.hpp"
#include "uqp/linalg.hpp"

using namespace uqp;

namespace {

LaurentMatrix random_matrix(uqp_test::Rng& rng, std::size_t rows, std::size_t cols) {
    LaurentMatrix m(rows, std::vector<LaurentPoly>(cols));
    for (auto& row : m)
        for (auto& e : row)
            if (rng.range(0, 2)) e = uqp_test::random_laurent(rng, 3, 3);
    return m;
}

// independent oracle: plain Gaussian elimination over the fraction field
std::size_t rank_over_field(const LaurentMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    RatMatrix a(rows, std::vector<RatFunc>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = RatFunc(m[i][j]);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t sel = r;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        RatFunc inv = a[r][col].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            RatFunc f = a[i][col] * inv;
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank and kernel on random matrices match the field oracle") {
    uqp_test::Rng rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t rows = static_cast<std::size_t>(rng.range(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.range(1, 6));
        LaurentMatrix m = random_matrix(rng, rows, cols);
        auto kr = laurent_rank_kernel(m);
        CHECK(kr.rank == rank_over_field(m));
        CHECK(kr.rank + kr.kernel.size() == cols);
        for (const auto& v : kr.kernel) {
            bool nonzero = false;
            for (const auto& e : v)
                if (!e.is_zero()) nonzero = true;
            CHECK(nonzero);
            for (std::size_t i = 0; i < rows; ++i) {
                LaurentPoly acc;
                for (std::size_t j = 0; j < cols; ++j) acc += m[i][j] * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("singular example has the expected kernel") {
    LaurentPoly q = LaurentPoly::q_power(1);
    // second column is q times the first
    LaurentMatrix m{{LaurentPoly(1), q}, {q, q * q}};
    auto kr = laurent_rank_kernel(m);
    CHECK(kr.rank == 1);
    REQUIRE(kr.kernel.size() == 1);
    // kernel spanned by (q, -1) up to scaling
    const auto& v = kr.kernel[0];
    CHECK(v[0].scaled(BigRat(-1)) == v[1] * q);
}

TEST_CASE("rat_det") {
    RatMatrix m{{RatFunc::q_power(1), RatFunc(1)}, {RatFunc(1), RatFunc::q_power(-1)}};
    CHECK(rat_det(m).is_zero());
    RatMatrix id{{RatFunc(1), RatFunc(0)}, {RatFunc(0), RatFunc(1)}};
    CHECK(rat_det(id) == RatFunc(1));
    RatMatrix swap{{RatFunc(0), RatFunc(1)}, {RatFunc(1), RatFunc(0)}};
    CHECK(rat_det(swap) == RatFunc(-1));
}

TEST_CASE("modular rank is a lower bound") {
    uqp_test::Rng rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
        LaurentMatrix m = random_matrix(rng, n, n);
        std::size_t exact = laurent_rank_kernel(m).rank;
        std::size_t modular = rank_mod(m, 5, 2147483647ULL);
        CHECK(modular <= exact);
    }
}

TEST_CASE("mod span certifies independence") {
    ModSpan span(3, 5, 2147483647ULL);
    std::vector<LaurentPoly> v1{LaurentPoly(1), LaurentPoly::q_power(1), LaurentPoly()};
    std::vector<LaurentPoly> v2{LaurentPoly(), LaurentPoly(1), LaurentPoly(1)};
    CHECK(span.insert(v1));
    CHECK(span.insert(v2));
    CHECK_FALSE(span.insert(v1));
    // v1 + v2 is dependent
    std::vector<LaurentPoly> sum{LaurentPoly(1), LaurentPoly::q_power(1) + LaurentPoly(1),
                                 LaurentPoly(1)};
    CHECK_FALSE(span.insert(sum));
    CHECK(span.dim() == 2);
}

TEST_CASE("span insertion is order-independent") {
    // a later insertion with a smaller lead column must not corrupt reductions
    LaurentPoly one(1);
    ModSpan mspan(3, 5, 2147483647ULL);
    CHECK(mspan.insert({LaurentPoly(), one, one}));       // lead 1
    CHECK(mspan.insert({one, one, LaurentPoly()}));       // lead 0 after reduction
    CHECK_FALSE(mspan.insert({one, LaurentPoly(), -one})); // the difference of the two
    CHECK(mspan.dim() == 2);

    RowSpan rspan(3);
    CHECK(rspan.insert({RatFunc(0), RatFunc(1), RatFunc(1)}));
    CHECK(rspan.insert({RatFunc(1), RatFunc(1), RatFunc(0)}));
    CHECK_FALSE(rspan.insert({RatFunc(1), RatFunc(0), RatFunc(-1)}));
    CHECK(rspan.dim() == 2);
}

TEST_CASE("row span reduce and insert") {
    RowSpan span(3);
    std::vector<RatFunc> v1{RatFunc(1), RatFunc::q_power(2), RatFunc(0)};
    CHECK(span.insert(v1));
    auto reduced = span.reduce(v1);
    for (const auto& e : reduced) CHECK(e.is_zero());
    std::vector<RatFunc> v2{RatFunc(2), RatFunc::q_power(2) * RatFunc(2), RatFunc(0)};
    CHECK_FALSE(span.insert(v2));
    std::vector<RatFunc> v3{RatFunc(0), RatFunc(0), RatFunc(1)};
    CHECK(span.insert(v3));
    CHECK(span.dim() == 2);
}

} // TEST_SUITE
