#pragma once

// Univariate polynomials and rational functions in an auxiliary variable
// (z^{-1}, z, or a truncation marker) with RatFun2 coefficients, plus series
// expansion at 0 and at infinity. Everything stays exact over Q(t1,t2).

#include <vector>
#include <stdexcept>

#include "qfock/ratfun2.hpp"

namespace qfock {

// Dense polynomial in one variable y over RatFun2; index = power of y.
using UniR = std::vector<RatFun2>;

inline void ur_trim(UniR& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int ur_deg(const UniR& p) { return (int)p.size() - 1; }

inline UniR ur_const(const RatFun2& c) {
    UniR p;
    if (!c.is_zero()) p.push_back(c);
    return p;
}

inline UniR ur_add(const UniR& a, const UniR& b) {
    UniR r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ur_trim(r);
    return r;
}

inline UniR ur_mul(const UniR& a, const UniR& b) {
    if (a.empty() || b.empty()) return {};
    UniR r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ur_trim(r);
    return r;
}

// Rational function num/den in y; no reduction is attempted (the coefficient
// field is already expensive), only series extraction.
struct RatSeries1 {
    UniR num, den;

    RatSeries1() : num(), den(ur_const(RatFun2::one())) {}
    RatSeries1(UniR n, UniR d) : num(std::move(n)), den(std::move(d)) {
        ur_trim(num);
        ur_trim(den);
        if (den.empty()) throw std::domain_error("RatSeries1: zero denominator");
    }

    static RatSeries1 constant(const RatFun2& c) { return RatSeries1(ur_const(c), ur_const(RatFun2::one())); }

    RatSeries1 operator*(const RatSeries1& o) const {
        return RatSeries1(ur_mul(num, o.num), ur_mul(den, o.den));
    }
    RatSeries1 operator+(const RatSeries1& o) const {
        return RatSeries1(ur_add(ur_mul(num, o.den), ur_mul(o.num, den)), ur_mul(den, o.den));
    }
    RatSeries1 operator-() const {
        UniR n = num;
        for (auto& c : n) c = -c;
        return RatSeries1(std::move(n), den);
    }

    // Taylor coefficients [y^0..y^N] at y = 0. Requires den(0) != 0.
    std::vector<RatFun2> expand_at_zero(int N) const {
        if (den.empty() || den[0].is_zero())
            throw std::domain_error("expand_at_zero: denominator vanishes at 0");
        std::vector<RatFun2> c(N + 1);
        RatFun2 inv0 = den[0].inv();
        for (int k = 0; k <= N; ++k) {
            RatFun2 acc = ((std::size_t)k < num.size()) ? num[k] : RatFun2();
            for (int j = 1; j <= k && (std::size_t)j < den.size(); ++j)
                acc -= den[j] * c[k - j];
            c[k] = acc * inv0;
        }
        return c;
    }

    // Laurent expansion at y = infinity: returns (offset, coeffs) such that
    // the function equals sum_k coeffs[k] * y^{offset-k}. offset may be
    // positive (polynomial part present).
    std::pair<int, std::vector<RatFun2>> expand_at_infinity(int N) const {
        if (num.empty()) return {0, std::vector<RatFun2>(N + 1)};
        int offset = ur_deg(num) - ur_deg(den);
        // substitute y = 1/u and expand at u = 0
        UniR rn(num.rbegin(), num.rend());
        UniR rd(den.rbegin(), den.rend());
        return {offset, RatSeries1(std::move(rn), std::move(rd)).expand_at_zero(N)};
    }

    // The coefficient of y^0 in the expansion at infinity.
    RatFun2 constant_term_at_infinity() const {
        auto [off, c] = expand_at_infinity(std::max(0, ur_deg(num) - ur_deg(den)));
        if (off < 0) return RatFun2();
        return c[off];
    }
};

}  // namespace qfock
