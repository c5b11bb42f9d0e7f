#pragma once

#include <map>
#include <utility>
#include <vector>
#include <string>
#include <sstream>
#include <stdexcept>

#include "qfock/bigrat.hpp"

namespace qfock {

// Exponent pair (a,b) for t1^a * t2^b. Negative exponents allowed.
using Exp2 = std::pair<int, int>;

// Graded lexicographic order with t1 > t2, arranged so that std::map
// iteration visits terms in *descending* grlex order. That makes begin()
// the leading term and gives the canonical display order for free.
struct GrlexDesc {
    bool operator()(const Exp2& x, const Exp2& y) const {
        long dx = (long)x.first + x.second, dy = (long)y.first + y.second;
        if (dx != dy) return dx > dy;
        if (x.first != y.first) return x.first > y.first;
        return x.second > y.second;
    }
};

// Sparse Laurent polynomial in t1, t2 over BigRat.
class Laurent2 {
  public:
    using Terms = std::map<Exp2, BigRat, GrlexDesc>;

    Laurent2() = default;
    explicit Laurent2(const BigRat& c) {
        if (!qfock::is_zero(c)) terms_[{0, 0}] = c;
    }
    explicit Laurent2(long c) : Laurent2(BigRat(c)) {}

    static Laurent2 monomial(int a, int b, const BigRat& c = BigRat(1)) {
        Laurent2 p;
        if (!qfock::is_zero(c)) p.terms_[{a, b}] = c;
        return p;
    }
    static Laurent2 t1(int a = 1) { return monomial(a, 0); }
    static Laurent2 t2(int b = 1) { return monomial(0, b); }
    static Laurent2 one() { return Laurent2(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exp2{0, 0} &&
               terms_.begin()->second == 1;
    }
    std::size_t size() const { return terms_.size(); }

    // Leading term under the grlex order.
    const std::pair<const Exp2, BigRat>& lead() const {
        if (terms_.empty()) throw std::domain_error("lead() of zero polynomial");
        return *terms_.begin();
    }

    void add_term(int a, int b, const BigRat& c) {
        if (qfock::is_zero(c)) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Exp2{a, b}, c);
        } else {
            it->second += c;
            if (qfock::is_zero(it->second)) terms_.erase(it);
        }
    }

    Laurent2 operator-() const {
        Laurent2 r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent2& operator+=(const Laurent2& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { a += b; return a; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { a -= b; return a; }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    Laurent2& operator*=(const Laurent2& o) { *this = *this * o; return *this; }
    Laurent2& operator*=(const BigRat& c) {
        if (qfock::is_zero(c)) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend Laurent2 operator*(Laurent2 a, const BigRat& c) { a *= c; return a; }

    friend bool operator==(const Laurent2& a, const Laurent2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

    Laurent2 pow(int n) const {
        if (n < 0) throw std::domain_error("Laurent2::pow negative exponent");
        Laurent2 r = one();
        Laurent2 base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // Multiply by the monomial t1^a t2^b (cheap exponent shift).
    Laurent2 shifted(int a, int b) const {
        Laurent2 r;
        for (auto& [e, c] : terms_) r.terms_.emplace(Exp2{e.first + a, e.second + b}, c);
        return r;
    }

    // Minimal exponents across all terms; (0,0) for the zero polynomial.
    Exp2 min_exponents() const {
        if (terms_.empty()) return {0, 0};
        int ma = terms_.begin()->first.first, mb = terms_.begin()->first.second;
        for (auto& [e, c] : terms_) {
            if (e.first < ma) ma = e.first;
            if (e.second < mb) mb = e.second;
        }
        return {ma, mb};
    }

    bool is_monomial() const { return terms_.size() == 1; }

    // Exact evaluation at numeric points (sampled checking mode).
    BigRat eval(const BigRat& v1, const BigRat& v2) const;

    // Substitute t1 -> t1^p1*t2^q1, t2 -> t1^p2*t2^q2 (monomial substitution;
    // used for the q,t -> t1,t2^{-1} specialization).
    Laurent2 subst_monomial(int p1, int q1, int p2, int q2) const {
        Laurent2 r;
        for (auto& [e, c] : terms_)
            r.add_term(e.first * p1 + e.second * p2, e.first * q1 + e.second * q2, c);
        return r;
    }

    std::string str(const char* v1 = "t1", const char* v2 = "t2") const;

  private:
    Terms terms_;
};

inline BigRat pow_rat(const BigRat& x, int n) {
    if (n == 0) return BigRat(1);
    bool neg = n < 0;
    unsigned long k = neg ? (unsigned long)(-(long)n) : (unsigned long)n;
    BigRat r(1), base = x;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    if (neg) {
        if (qfock::is_zero(r)) throw std::domain_error("0 to negative power");
        r = 1 / r;
    }
    return r;
}

inline BigRat Laurent2::eval(const BigRat& v1, const BigRat& v2) const {
    BigRat acc(0);
    for (auto& [e, c] : terms_) acc += c * pow_rat(v1, e.first) * pow_rat(v2, e.second);
    return acc;
}

inline std::string Laurent2::str(const char* v1, const char* v2) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) out << "+";
        first = false;
        std::string mono;
        if (e.first != 0) {
            mono += v1;
            if (e.first != 1) mono += "^" + std::to_string(e.first);
        }
        if (e.second != 0) {
            if (!mono.empty()) mono += "*";
            mono += v2;
            if (e.second != 1) mono += "^" + std::to_string(e.second);
        }
        if (mono.empty()) {
            out << to_string(c);
        } else if (c == 1) {
            out << mono;
        } else if (c == -1) {
            out << "-" << mono;
        } else {
            out << to_string(c) << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace qfock
