#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/theta.hpp"

using namespace qfock;

TEST_CASE("normalization constants: pinned values") {
    Laurent2 one = Laurent2::one(), t1 = Laurent2::t1(1), t2 = Laurent2::t2(1);
    CHECK(c_norm(Partition{}) == RatFun2::one());
    CHECK(c_norm(Partition{1}) == RatFun2::one());
    CHECK(c_norm(Partition{2}) == RatFun2(t1 * (one - t2), t1 - t2));
    CHECK(c_norm(Partition{1, 1}) == RatFun2(t2, t2 + one));
}

TEST_CASE("closed-form norm ratios telescope correctly") {
    for (int n = 0; n <= 4; ++n)
        for (auto& lam : partitions_of(n))
            for (int j : addable_rows(lam))
                CHECK(c_ratio_closed(lam, j) == c_norm(add_row(lam, j)) / c_norm(lam));
}

TEST_CASE("rescaled matrix elements: chain and closed product forms agree") {
    for (int n = 1; n <= 2; ++n) {
        ShuffleElement kn = k_element(n);
        for (int m = 0; m + n <= 4; ++m)
            for (auto& mu : partitions_of(m))
                for (auto& lam : partitions_of(m + n))
                    CHECK(k_tilde_element(kn, mu, lam) == k_tilde_element_closed(n, mu, lam));
    }
}

TEST_CASE("edges and strips match the specialized coefficients on small sizes") {
    ShuffleElement k1 = k_element(1);
    for (int n = 0; n <= 3; ++n)
        for (auto& lam : partitions_of(n))
            for (int j : addable_rows(lam)) CHECK(check_theta_edge(k1, lam, j));

    ShuffleElement k2 = k_element(2);
    for (int m = 0; m <= 2; ++m)
        for (auto& mu : partitions_of(m))
            for (auto& lam : partitions_of(m + 2)) CHECK(check_theta_strip(k2, mu, lam));
}

TEST_CASE("extracted operators commute and track power-sum multiplication") {
    std::pair<Partition, Partition> rc;
    CHECK(heisenberg_commutators_vanish(2, 3, 6, &rc));

    SymBasisTable tab(3);
    MacdonaldTable mt(3, tab);
    std::vector<GradedOperator> H = heisenberg_ops(2, 6);
    for (int i = 1; i <= 2; ++i) {
        IntertwineResult res = check_intertwining(i, 3, H[i], mt);
        CHECK(res.proportional);
        CHECK(res.scalar == RatFun2::one());
    }
}
