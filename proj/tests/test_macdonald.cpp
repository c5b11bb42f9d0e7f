#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/macdonald.hpp"

using namespace qfock;

// here the two variable slots of RatFun2 are read as (q, t)
namespace {
RatFun2 qt(const Laurent2& n, const Laurent2& d) { return RatFun2(n, d); }
}

TEST_CASE("two-parameter basis: pinned expansion of P_(2)") {
    SymBasisTable tab(3);
    MacdonaldTable mt(3, tab);

    MSym p2 = mt.P(Partition{2});
    REQUIRE(p2.size() == 2);
    CHECK(p2.at(Partition{2}) == RatFun2::one());
    // coefficient of m_(1,1): (1+q)(1-t)/(1-qt)
    Laurent2 one = Laurent2::one(), q = Laurent2::t1(1), t = Laurent2::t2(1);
    CHECK(p2.at(Partition{1, 1}) == qt((one + q) * (one - t), one - q * t));

    // partitions with a single addable pattern stay monomial
    CHECK(mt.P(Partition{1, 1}).size() == 1);
    CHECK(mt.P(Partition{1}).at(Partition{1}) == RatFun2::one());
}

TEST_CASE("orthogonality under the deformed power-sum pairing") {
    SymBasisTable tab(4);
    MacdonaldTable mt(4, tab);
    for (int n = 1; n <= 4; ++n) {
        auto parts = partitions_of(n);
        for (auto& a : parts)
            for (auto& b : parts) {
                RatFun2 ip = inner_product_p(mt.P_in_p(a), mt.P_in_p(b));
                if (a == b)
                    CHECK(!ip.is_zero());
                else
                    CHECK(ip.is_zero());
            }
    }
}

TEST_CASE("vertical-strip coefficients: pinned value and consistency") {
    Laurent2 one = Laurent2::one(), q = Laurent2::t1(1), t = Laurent2::t2(1);
    // e_1 P_(1) = P_(2) + psi'_{(1,1)/(1)} P_(1,1) with psi' = (1-q)(1+t)/(1-qt)
    CHECK(pieri_coeff(Partition{1, 1}, Partition{1}) ==
          qt((one - q) * (one + t), one - q * t));
    CHECK(pieri_coeff(Partition{2}, Partition{1}) == RatFun2::one());

    for (int n = 0; n <= 3; ++n)
        for (auto& mu : partitions_of(n))
            for (int j : addable_rows(mu))
                CHECK(pieri_coeff_single(mu, j) == pieri_coeff(add_row(mu, j), mu));
}

TEST_CASE("multiplication by elementary symmetric functions matches the coefficients") {
    SymBasisTable tab(4);
    MacdonaldTable mt(4, tab);
    for (int n = 0; n < 4; ++n)
        for (auto& mu : partitions_of(n))
            for (int r = 1; r + n <= 4; ++r) {
                MSym exp = mt.expand_in_P(m_multiply(mt.P(mu), e_to_m(Partition{r})));
                for (auto& lam : partitions_of(n + r)) {
                    auto it = exp.find(lam);
                    RatFun2 got = (it == exp.end()) ? RatFun2() : it->second;
                    CHECK(pieri_coeff(lam, mu) == got);
                    if (!is_vertical_strip(lam, mu)) CHECK(got.is_zero());
                }
            }
}

TEST_CASE("Newton identity: exponential and recursive forms") {
    auto a = newton_e_exponential(5), b = newton_e_recursion(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(msym_equal(a[i], b[i]));
}
