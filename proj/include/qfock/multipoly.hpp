#pragma once

// Sparse Laurent polynomials in x_1..x_n with RatFun2 coefficients, the
// workhorse for shuffle-algebra numerators. Exponent vectors have fixed
// length n; negative exponents are allowed (generators like x^{-1}).

#include <map>
#include <vector>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qfock/ratfun2.hpp"

namespace qfock {

using ExpVec = std::vector<int>;

class MultiPoly {
  public:
    using Terms = std::map<ExpVec, RatFun2>;

    explicit MultiPoly(int nvars = 0) : n_(nvars) {}

    static MultiPoly constant(int nvars, const RatFun2& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars, 0), c);
        return p;
    }
    static MultiPoly monomial(int nvars, const ExpVec& e, const RatFun2& c) {
        if ((int)e.size() != nvars) throw std::invalid_argument("monomial: arity mismatch");
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(e, c);
        return p;
    }
    // x_i^k (1-based variable index)
    static MultiPoly var_pow(int nvars, int i, int k) {
        ExpVec e(nvars, 0);
        e[i - 1] = k;
        return monomial(nvars, e, RatFun2::one());
    }

    int nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& e, const RatFun2& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_arity(o);
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a.n_);
        ExpVec e(a.n_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    MultiPoly operator*(const RatFun2& c) const {
        MultiPoly r(n_);
        for (auto& [e, v] : terms_) {
            RatFun2 p = v * c;
            if (!p.is_zero()) r.terms_.emplace(e, p);
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (auto& [e, c] : a.terms_) {
            if (it->first != e || !(it->second == c)) return false;
            ++it;
        }
        return true;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Apply a permutation of variables: result(x_i) gets the exponent the
    // source had on x_{perm[i]} — i.e. substitute x_i -> x_{perm^{-1}(i)}.
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r(n_);
        ExpVec e(n_);
        for (auto& [src, c] : terms_) {
            for (int i = 0; i < n_; ++i) e[perm[i]] = src[i];
            r.add_term(e, c);
        }
        return r;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < n_; ++i) {
            std::vector<int> perm(n_);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[i + 1]);
            if (permuted(perm) != *this) return false;
        }
        return true;
    }

    // x_i - x_j as a polynomial (1-based indices)
    static MultiPoly diff(int nvars, int i, int j) {
        MultiPoly p(nvars);
        ExpVec e(nvars, 0);
        e[i - 1] = 1;
        p.add_term(e, RatFun2::one());
        e[i - 1] = 0;
        e[j - 1] = 1;
        p.add_term(e, -RatFun2::one());
        return p;
    }

    // Exact division by (x_i - x_j); throws if the remainder is nonzero.
    MultiPoly div_exact_diff(int i, int j) const {
        // shift to clear negative exponents of x_i (homogeneous divisor
        // commutes with monomial shifts)
        int mi = 0;
        for (auto& [e, c] : terms_) mi = std::min(mi, e[i - 1]);
        MultiPoly p = *this;
        if (mi < 0) p = p.shifted_var(i, -mi);
        MultiPoly q(n_);
        while (!p.terms_.empty()) {
            // take a term of maximal x_i exponent
            auto best = p.terms_.begin();
            for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
                if (it->first[i - 1] > best->first[i - 1]) best = it;
            if (best->first[i - 1] == 0)
                throw std::domain_error("div_exact_diff: not divisible");
            ExpVec e = best->first;
            RatFun2 c = best->second;
            e[i - 1] -= 1;
            q.add_term(e, c);
            // subtract c * x^(e) * (x_i - x_j)
            ExpVec ei = e;
            ei[i - 1] += 1;
            p.add_term(ei, -c);
            ExpVec ej = e;
            ej[j - 1] += 1;
            p.add_term(ej, c);
        }
        if (mi < 0) q = q.shifted_var(i, mi);
        return q;
    }

    MultiPoly shifted_var(int i, int k) const {
        MultiPoly r(n_);
        for (auto& [e, c] : terms_) {
            ExpVec f = e;
            f[i - 1] += k;
            r.terms_.emplace(f, c);
        }
        return r;
    }

    // Evaluate at given values per variable (exact; negative exponents use inverses).
    RatFun2 eval(const std::vector<RatFun2>& xs) const {
        if ((int)xs.size() != n_) throw std::invalid_argument("eval: arity mismatch");
        RatFun2 acc;
        for (auto& [e, c] : terms_) {
            RatFun2 t = c;
            for (int i = 0; i < n_; ++i)
                if (e[i] != 0) t *= xs[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    // Substitute monomials of an auxiliary variable s for x_1..x_3:
    // x_1 = c1*s, x_2 = c2*s, x_3 = s; remaining variables become x_4.. of the
    // result, s is variable 1. Requires n >= 3.
    MultiPoly wheel_substitute(const RatFun2& c1, const RatFun2& c2) const {
        if (n_ < 3) throw std::invalid_argument("wheel_substitute: need arity >= 3");
        MultiPoly r(n_ - 2);
        ExpVec e(n_ - 2);
        for (auto& [src, c] : terms_) {
            e[0] = src[0] + src[1] + src[2];
            for (int i = 3; i < n_; ++i) e[i - 2] = src[i];
            r.add_term(e, c * c1.pow(src[0]) * c2.pow(src[1]));
        }
        return r;
    }

  private:
    void check_arity(const MultiPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("MultiPoly arity mismatch");
    }

    int n_;
    Terms terms_;
};

}  // namespace qfock
