#pragma once

// Rational functions in t1, t2 over Q, kept in a canonical reduced form:
//  - num/den gcd-reduced (bivariate gcd over Q[t1,t2]),
//  - den is an ordinary polynomial with monic grlex-leading coefficient
//    (any monomial content of the denominator is pushed into the numerator),
//  - zero is 0/1.
// Equality of canonical forms is plain representation equality, but the
// checking layer never relies on that: op== cross-multiplies.

#include <string>
#include <stdexcept>

#include "qfock/laurent2.hpp"
#include "qfock/poly_gcd.hpp"

namespace qfock {

class RatFun2 {
  public:
    RatFun2() : num_(), den_(Laurent2::one()) {}
    explicit RatFun2(const BigRat& c) : num_(c), den_(Laurent2::one()) {}
    explicit RatFun2(long c) : num_(BigRat(c)), den_(Laurent2::one()) {}
    explicit RatFun2(const Laurent2& p) : num_(p), den_(Laurent2::one()) { canonicalize(); }
    RatFun2(const Laurent2& n, const Laurent2& d) : num_(n), den_(d) {
        if (den_.is_zero()) throw std::domain_error("RatFun2: zero denominator");
        canonicalize();
    }

    static RatFun2 t1(int a = 1) { return RatFun2(Laurent2::t1(a)); }
    static RatFun2 t2(int b = 1) { return RatFun2(Laurent2::t2(b)); }
    static RatFun2 one() { return RatFun2(1L); }

    // Build from a numerator/denominator pair the caller guarantees to be
    // coprime (up to monomial factors): performs only the monomial-content
    // and monic normalization, skipping the gcd. The result is identical to
    // the fully canonicalized form.
    static RatFun2 from_coprime(Laurent2 n, Laurent2 d) {
        if (d.is_zero()) throw std::domain_error("RatFun2: zero denominator");
        RatFun2 r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        if (r.num_.is_zero()) {
            r.den_ = Laurent2::one();
            return r;
        }
        auto [d1, d2] = r.den_.min_exponents();
        if (d1 != 0 || d2 != 0) {
            r.den_ = r.den_.shifted(-d1, -d2);
            r.num_ = r.num_.shifted(-d1, -d2);
        }
        BigRat lc = r.den_.lead().second;
        if (lc != 1) {
            BigRat ic = 1 / lc;
            r.num_ *= ic;
            r.den_ *= ic;
        }
        return r;
    }

    const Laurent2& num() const { return num_; }
    const Laurent2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFun2 operator-() const {
        RatFun2 r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFun2 operator+(const RatFun2& a, const RatFun2& b) {
        if (a.den_ == b.den_) return RatFun2(a.num_ + b.num_, a.den_);
        return RatFun2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun2 operator-(const RatFun2& a, const RatFun2& b) {
        if (a.den_ == b.den_) return RatFun2(a.num_ - b.num_, a.den_);
        return RatFun2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun2 operator*(const RatFun2& a, const RatFun2& b) {
        if (a.is_zero() || b.is_zero()) return RatFun2();
        RatFun2 r;
        if (a.den_.is_one() && b.den_.is_one()) {  // polynomial fast path
            r.num_ = a.num_ * b.num_;
            return r;
        }
        // cross-reduce first to keep intermediate products small
        if (b.den_.is_one()) {
            Laurent2 g2 = laurent_gcd(b.num_, a.den_);
            r.num_ = a.num_ * laurent_divexact(b.num_, g2);
            r.den_ = laurent_divexact(a.den_, g2);
        } else if (a.den_.is_one()) {
            Laurent2 g1 = laurent_gcd(a.num_, b.den_);
            r.num_ = laurent_divexact(a.num_, g1) * b.num_;
            r.den_ = laurent_divexact(b.den_, g1);
        } else {
            Laurent2 g1 = laurent_gcd(a.num_, b.den_);
            Laurent2 g2 = laurent_gcd(b.num_, a.den_);
            r.num_ = laurent_divexact(a.num_, g1) * laurent_divexact(b.num_, g2);
            r.den_ = laurent_divexact(a.den_, g2) * laurent_divexact(b.den_, g1);
        }
        r.canonicalize();
        return r;
    }
    friend RatFun2 operator/(const RatFun2& a, const RatFun2& b) {
        if (b.is_zero()) throw std::domain_error("RatFun2: division by zero");
        return RatFun2(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun2& operator+=(const RatFun2& o) { *this = *this + o; return *this; }
    RatFun2& operator-=(const RatFun2& o) { *this = *this - o; return *this; }
    RatFun2& operator*=(const RatFun2& o) { *this = *this * o; return *this; }
    RatFun2& operator/=(const RatFun2& o) { *this = *this / o; return *this; }

    RatFun2 inv() const {
        if (is_zero()) throw std::domain_error("RatFun2: inverse of zero");
        return RatFun2(den_, num_);
    }

    RatFun2 pow(int n) const {
        if (n < 0) return inv().pow(-n);
        RatFun2 r = one();
        RatFun2 base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            if ((n >>= 1)) base *= base;
        }
        return r;
    }

    // Exact equality via cross-multiplication (independent of reduction).
    friend bool operator==(const RatFun2& a, const RatFun2& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun2& a, const RatFun2& b) { return !(a == b); }

    // Evaluation at exact rational points; throws if the denominator vanishes.
    BigRat eval(const BigRat& v1, const BigRat& v2) const {
        BigRat d = den_.eval(v1, v2);
        if (qfock::is_zero(d)) throw std::domain_error("RatFun2::eval: pole");
        return num_.eval(v1, v2) / d;
    }

    RatFun2 subst_monomial(int p1, int q1, int p2, int q2) const {
        return RatFun2(num_.subst_monomial(p1, q1, p2, q2),
                       den_.subst_monomial(p1, q1, p2, q2));
    }

    std::string str(const char* v1 = "t1", const char* v2 = "t2") const {
        if (den_.is_one()) return num_.str(v1, v2);
        return "(" + num_.str(v1, v2) + ") / (" + den_.str(v1, v2) + ")";
    }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Laurent2::one();
            return;
        }
        if (den_.is_one()) return;
        if (den_.is_monomial()) {
            auto& [e, c] = den_.lead();
            num_ = num_.shifted(-e.first, -e.second) * (1 / c);
            den_ = Laurent2::one();
            return;
        }
        Laurent2 g = laurent_gcd(num_, den_);
        if (!(g.is_monomial() && g.lead().second == 1)) {
            num_ = laurent_divexact(num_, g);
            den_ = laurent_divexact(den_, g);
        }
        // clear the denominator's monomial content into the numerator
        auto [d1, d2] = den_.min_exponents();
        if (d1 != 0 || d2 != 0) {
            den_ = den_.shifted(-d1, -d2);
            num_ = num_.shifted(-d1, -d2);
        }
        // make the denominator monic under grlex
        BigRat lc = den_.lead().second;
        if (lc != 1) {
            BigRat ic = 1 / lc;
            num_ *= ic;
            den_ *= ic;
        }
    }

    Laurent2 num_;
    Laurent2 den_;
};

// convenience: 1 - t1^a t2^b, ubiquitous in the coefficient formulas
inline Laurent2 one_minus(int a, int b) {
    Laurent2 p = Laurent2::one();
    p.add_term(a, b, BigRat(-1));
    return p;
}

}  // namespace qfock
