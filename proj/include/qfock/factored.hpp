#pragma once

// Exact rational functions kept in factored form: a rational scalar, a
// monomial t1^m1 t2^m2, and a multiset of binomial factors (1 - t1^a t2^b)
// with integer exponents. Every closed product formula in this codebase is of
// this shape, so multiplying in factored form and cancelling matching
// binomials exactly avoids almost all polynomial gcd work; the result is
// expanded (and canonically reduced) only once at the end.

#include <map>
#include <array>
#include <mutex>
#include <vector>
#include <numeric>

#include "qfock/ratfun2.hpp"

namespace qfock {

namespace detail {

// coefficients of the n-th cyclotomic polynomial, by exact division of
// x^n - 1 by the lower ones (cached; the lock is recursive because of the
// divisor recursion, and node references stay valid after unlocking)
inline const std::vector<long>& cyclotomic(int n) {
    static std::map<int, std::vector<long>> cache;
    static std::recursive_mutex mtx;
    std::lock_guard<std::recursive_mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<long> p(n + 1, 0);  // x^n - 1
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<long>& phi = cyclotomic(d);
        // exact division p /= phi (both monic)
        std::vector<long> q(p.size() - phi.size() + 1, 0);
        for (int k = (int)q.size() - 1; k >= 0; --k) {
            long c = p[k + phi.size() - 1];
            q[k] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i < phi.size(); ++i) p[k + i] -= c * phi[i];
        }
        p = std::move(q);
    }
    return cache.emplace(n, std::move(p)).first->second;
}

// A cyclotomic factor key: Phi_d(t1^g t2^h) with (g, h) a primitive exponent
// direction. These are irreducible and pairwise non-associate (a primitive
// monomial substitution extends to a Laurent-ring automorphism), which is
// what makes factor-level cancellation exact.
using CycKey = std::array<int, 3>;  // {g, h, d}

// expansion of Phi_d(t1^g t2^h) as a Laurent polynomial
inline Laurent2 cyclo_expand(const CycKey& k) {
    const std::vector<long>& phi = cyclotomic(k[2]);
    Laurent2 L;
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i] != 0) L.add_term(k[0] * (int)i, k[1] * (int)i, BigRat(phi[i]));
    return L;
}

// Split a multiset of binomial factors (1 - t1^a t2^b)^e into net cyclotomic
// exponents via 1 - x^m = -prod_{d|m} Phi_d(x), x = t1^g t2^h primitive.
// Returns the accumulated sign (+1 or -1).
inline int split_cyclotomic(const std::map<Exp2, int, GrlexDesc>& fac,
                            std::map<CycKey, long>& out) {
    int sign = 1;
    std::map<Exp2, std::map<int, int>> dirs;  // dir -> (m -> multiplicity)
    for (auto& [ab, e] : fac) {
        int g = std::gcd(ab.first, ab.second < 0 ? -ab.second : ab.second);
        dirs[{ab.first / g, ab.second / g}][g] += e;
        if (e % 2 != 0) sign = -sign;
    }
    for (auto& [dir, ms] : dirs)
        for (auto& [m, c] : ms)
            for (int d = 1; d <= m; ++d)
                if (m % d == 0) {
                    CycKey k{dir.first, dir.second, d};
                    long& slot = out[k];
                    slot += c;
                    if (slot == 0) out.erase(k);
                }
    return sign;
}

}  // namespace detail

struct FactoredRat {
    BigRat scalar{1};
    int m1 = 0, m2 = 0;                   // monomial part t1^m1 t2^m2
    std::map<Exp2, int, GrlexDesc> fac;   // (a,b) -> exponent of (1 - t1^a t2^b)

    bool is_zero() const { return qfock::is_zero(scalar); }

    void mul_scalar(const BigRat& c) { scalar *= c; }
    void mul_monomial(int a, int b, int e = 1) {
        m1 += a * e;
        m2 += b * e;
    }

    // multiply by (1 - t1^a t2^b)^e; the key is normalized so that inverse
    // exponent pairs collapse onto one representative via
    // (1 - x^{-1}) = -x^{-1}(1 - x)
    void mul_binom(int a, int b, int e = 1) {
        if (e == 0) return;
        if (a == 0 && b == 0) {  // 1 - 1 = 0
            scalar = 0;
            return;
        }
        if (a < 0 || (a == 0 && b < 0)) {
            if (e % 2 != 0) scalar = -scalar;
            m1 += a * e;
            m2 += b * e;
            a = -a;
            b = -b;
        }
        int& slot = fac[{a, b}];
        slot += e;
        if (slot == 0) fac.erase({a, b});
    }

    // multiply by (t1^p t2^q - t1^u t2^v)^e, a difference of monomials
    void mul_monomial_diff(int p, int q, int u, int v, int e = 1) {
        mul_monomial(p, q, e);
        mul_binom(u - p, v - q, e);
    }

    void mul(const FactoredRat& o) {
        scalar *= o.scalar;
        if (is_zero()) return;
        m1 += o.m1;
        m2 += o.m2;
        for (auto& [ab, e] : o.fac) mul_binom(ab.first, ab.second, e);
    }

    void div(const FactoredRat& o) {
        if (o.is_zero()) throw std::domain_error("FactoredRat: division by zero");
        scalar /= o.scalar;
        m1 -= o.m1;
        m2 -= o.m2;
        for (auto& [ab, e] : o.fac) mul_binom(ab.first, ab.second, -e);
    }

    // Expand to a canonical rational function. The binomials are first split
    // into cyclotomic factors per primitive monomial direction:
    //   1 - x^m = -prod_{d|m} Phi_d(x),   x = t1^g t2^h with gcd(g,h) = 1.
    // A primitive monomial substitution extends to a Laurent-ring
    // automorphism, so each Phi_d(x) is irreducible and distinct (direction,
    // d) pairs are non-associate; cancelling the cyclotomic exponents
    // therefore yields an already-reduced fraction and no polynomial gcd is
    // needed.
    RatFun2 to_ratfun() const {
        if (is_zero()) return RatFun2();
        std::map<detail::CycKey, long> E;
        int sign = detail::split_cyclotomic(fac, E);
        Laurent2 num = Laurent2::monomial(m1, m2, sign > 0 ? scalar : -scalar);
        Laurent2 den = Laurent2::one();
        for (auto& [k, e] : E) {
            Laurent2 p = detail::cyclo_expand(k).pow((int)(e > 0 ? e : -e));
            if (e > 0)
                num *= p;
            else
                den *= p;
        }
        return RatFun2::from_coprime(std::move(num), std::move(den));
    }
};

// Exact rational function with an expanded numerator and a denominator kept
// as a multiset of cyclotomic factors. This is the workhorse for sums of
// products of closed-form coefficients (operator composition): addition uses
// the factor-level lcm of the denominators, multiplication concatenates
// factor multisets, and reduction is trial exact-division of the numerator by
// the (known, irreducible) denominator factors — no polynomial gcd anywhere.
struct CycRat {
    Laurent2 num;                         // may carry negative exponents
    std::map<detail::CycKey, long> den;   // factor -> positive exponent

    bool is_zero() const { return num.is_zero(); }

    static CycRat from_factored(const FactoredRat& f) {
        CycRat r;
        if (f.is_zero()) return r;
        std::map<detail::CycKey, long> E;
        int sign = detail::split_cyclotomic(f.fac, E);
        r.num = Laurent2::monomial(f.m1, f.m2, sign > 0 ? f.scalar : -f.scalar);
        for (auto& [k, e] : E) {
            if (e > 0)
                r.num *= detail::cyclo_expand(k).pow((int)e);
            else
                r.den.emplace(k, -e);
        }
        return r;
    }

    static CycRat from_scalar(const BigRat& c) {
        CycRat r;
        if (!qfock::is_zero(c)) r.num = Laurent2::monomial(0, 0, c);
        return r;
    }

    friend CycRat operator*(const CycRat& a, const CycRat& b) {
        CycRat r;
        if (a.is_zero() || b.is_zero()) return r;
        r.num = a.num * b.num;
        r.den = a.den;
        for (auto& [k, e] : b.den) r.den[k] += e;
        return r;
    }

    void scale(const BigRat& c) {
        if (qfock::is_zero(c)) {
            num = Laurent2();
            den.clear();
            return;
        }
        num *= c;
    }

    // this += c * o, over the factor-level lcm of the denominators
    void add_scaled(const CycRat& o, const BigRat& c) {
        if (o.is_zero() || qfock::is_zero(c)) return;
        if (is_zero()) {
            num = o.num;
            num *= c;
            den = o.den;
            return;
        }
        std::map<detail::CycKey, long> l = den;
        for (auto& [k, e] : o.den) {
            long& s = l[k];
            if (e > s) s = e;
        }
        Laurent2 on = o.num;
        on *= c;
        for (auto& [k, e] : l) {
            auto it = den.find(k);
            long mine = it == den.end() ? 0 : it->second;
            if (e > mine) num *= detail::cyclo_expand(k).pow((int)(e - mine));
            auto jt = o.den.find(k);
            long theirs = jt == o.den.end() ? 0 : jt->second;
            if (e > theirs) on *= detail::cyclo_expand(k).pow((int)(e - theirs));
        }
        num += on;
        den = std::move(l);
        if (num.is_zero()) den.clear();
    }

    // cancel numerator against the denominator factors by trial division
    void reduce() {
        if (is_zero()) return;
        for (auto it = den.begin(); it != den.end();) {
            Laurent2 phi = detail::cyclo_expand(it->first);
            Laurent2 q;
            while (it->second > 0 && laurent_try_divexact(num, phi, q)) {
                num = std::move(q);
                --it->second;
            }
            it = it->second == 0 ? den.erase(it) : std::next(it);
        }
    }

    RatFun2 to_ratfun() const {
        CycRat r = *this;
        r.reduce();
        if (r.is_zero()) return RatFun2();
        Laurent2 d = Laurent2::one();
        for (auto& [k, e] : r.den) d *= detail::cyclo_expand(k).pow((int)e);
        return RatFun2::from_coprime(std::move(r.num), std::move(d));
    }
};

}  // namespace qfock
