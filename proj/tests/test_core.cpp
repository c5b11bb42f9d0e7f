#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfock/ratfun2.hpp"
#include "qfock/factored.hpp"
#include "qfock/partition.hpp"

using namespace qfock;

TEST_CASE("laurent polynomials: arithmetic and canonical printing") {
    Laurent2 p = one_minus(1, 0);  // 1 - t1
    CHECK(p.str() == "-t1+1");
    Laurent2 q = p * p;
    CHECK(q.str() == "t1^2+-2*t1+1");
    CHECK((q - q).is_zero());
    CHECK(Laurent2::monomial(-1, 2, BigRat(3)).str() == "3*t1^-1*t2^2");
    CHECK(Laurent2::one().str() == "1");
    CHECK(p.eval(BigRat(1, 2), BigRat(7)) == BigRat(1, 2));
}

TEST_CASE("rational functions: canonical form and equality") {
    // (1-t1^2)/(1-t1) reduces to 1+t1
    RatFun2 a(one_minus(2, 0), one_minus(1, 0));
    CHECK(a.is_polynomial());
    CHECK(a.str() == "t1+1");

    // monomial denominator content is pushed into the numerator
    RatFun2 b(Laurent2::one(), Laurent2::monomial(2, 1, BigRat(1)));
    CHECK(b.is_polynomial());
    CHECK(b.str() == "t1^-2*t2^-1");

    // equality is independent of the representation used to build the value
    RatFun2 c = RatFun2(one_minus(1, 0)) * RatFun2(Laurent2::one(), one_minus(2, 0));
    RatFun2 d(Laurent2::one(), Laurent2::one() + Laurent2::t1(1));
    CHECK(c == d);
    CHECK(c.str() == d.str());

    CHECK_THROWS_AS(RatFun2(Laurent2::one(), Laurent2()), std::domain_error);
}

TEST_CASE("rational functions: pow, inverse, substitution") {
    RatFun2 t1 = RatFun2::t1(), t2 = RatFun2::t2();
    RatFun2 f = (RatFun2::one() - t1) / (RatFun2::one() - t2);
    CHECK(f.pow(3) * f.pow(-3) == RatFun2::one());
    // q -> t1, t -> t2^{-1}
    RatFun2 g = RatFun2(one_minus(1, 0)).subst_monomial(1, 0, 0, -1);
    CHECK(g == RatFun2::one() - t1);
    RatFun2 h = RatFun2(one_minus(0, 1)).subst_monomial(1, 0, 0, -1);
    CHECK(h == RatFun2::one() - t2.pow(-1));
}

TEST_CASE("factored form: binomial bookkeeping and expansion") {
    FactoredRat v;
    v.mul_binom(1, 0);       // (1 - t1)
    v.mul_binom(0, 1, -1);   // / (1 - t2)
    v.mul_monomial(0, 2);    // * t2^2
    v.mul_scalar(BigRat(-3));
    RatFun2 expect = RatFun2(Laurent2::monomial(0, 2, BigRat(-3))) *
                     RatFun2(one_minus(1, 0), one_minus(0, 1));
    CHECK(v.to_ratfun() == expect);

    // (t1^2 - t2) as a monomial difference
    FactoredRat w;
    w.mul_monomial_diff(2, 0, 0, 1, 1);
    CHECK(w.to_ratfun() == RatFun2(Laurent2::t1(2) - Laurent2::t2(1)));

    FactoredRat z;
    z.mul_binom(0, 0);  // 1 - 1 = 0
    CHECK(z.is_zero());
}

TEST_CASE("cyclotomic-denominator form: gcd-free arithmetic is exact") {
    FactoredRat v;
    v.mul_binom(1, 0, -1);
    v.mul_binom(0, 1, -1);
    CycRat a = CycRat::from_factored(v);          // 1/((1-t1)(1-t2))
    CycRat b = a * CycRat{one_minus(1, 0), {}};   // 1/(1-t2)
    CHECK(b.to_ratfun() == RatFun2(Laurent2::one(), one_minus(0, 1)));

    CycRat c = b;
    c.add_scaled(b, BigRat(-1));
    CHECK(c.is_zero());

    // (1-t1^2)/(1-t1) - (1+t1) = 0, across different denominators
    FactoredRat f1;
    f1.mul_binom(1, 0, -1);
    CycRat d = CycRat::from_factored(f1) * CycRat{one_minus(2, 0), {}};
    d.add_scaled(CycRat{Laurent2::one() + Laurent2::t1(1), {}}, BigRat(-1));
    CHECK(d.is_zero());
}

TEST_CASE("partitions: enumeration, strings, box geometry") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(6).size() == 11);
    CHECK(part_str(Partition{}) == "[]");
    CHECK(part_str(Partition{3, 1}) == "[3,1]");
    CHECK(part_parse("[3,1]") == Partition{3, 1});
    CHECK(part_parse("[]") == Partition{});

    Partition lam{3, 1};
    CHECK(part_size(lam) == 4);
    CHECK(addable_rows(lam) == std::vector<int>{1, 2, 3});
    CHECK(removable_rows(lam) == std::vector<int>{1, 2});
    CHECK(add_row(lam, 2) == Partition{3, 2});
    CHECK(remove_row(lam, 2) == Partition{3});
    CHECK(boxes_of(lam).size() == 4);
    // column convention: arm counts boxes below, leg counts boxes to the right
    CHECK(arm(lam, 1, 1) == 1);
    CHECK(leg(lam, 1, 1) == 2);
}
