#pragma once

// Bivariate polynomial gcd and exact division, viewing Q[t1,t2] as
// (Q[t2])[t1]. The gcd pipeline runs entirely over Z with primitive
// pseudo-remainder sequences at both levels — rational arithmetic in the
// remainder sequences causes severe coefficient blowup. The gcd is only used
// to keep rational-function representations small; equality checks never
// depend on it.

#include <vector>
#include <algorithm>
#include <stdexcept>

#include "qfock/laurent2.hpp"

namespace qfock {

namespace detail {

// ---- dense univariate over Q (variable t2), used by exact division ----
using UniQ = std::vector<BigRat>;

inline void uni_trim(UniQ& p) {
    while (!p.empty() && qfock::is_zero(p.back())) p.pop_back();
}
inline bool uni_is_zero(const UniQ& p) { return p.empty(); }
inline int uni_deg(const UniQ& p) { return (int)p.size() - 1; }

inline UniQ uni_add(const UniQ& a, const UniQ& b) {
    UniQ r(std::max(a.size(), b.size()), BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uni_trim(r);
    return r;
}
inline UniQ uni_neg(UniQ a) {
    for (auto& c : a) c = -c;
    return a;
}
inline UniQ uni_mul(const UniQ& a, const UniQ& b) {
    if (a.empty() || b.empty()) return {};
    UniQ r(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

// Exact quotient a/b; throws if not divisible.
inline UniQ uni_divexact(UniQ a, const UniQ& b) {
    int db = uni_deg(b);
    UniQ q(a.empty() ? 0 : (std::size_t)std::max(0, uni_deg(a) - db) + 1, BigRat(0));
    while (!a.empty() && uni_deg(a) >= db) {
        BigRat c = a.back() / b.back();
        int shift = uni_deg(a) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw std::domain_error("uni_divexact: not divisible");
    uni_trim(q);
    return q;
}

// ---- dense univariate over Z ----
using UniZ = std::vector<mpz_class>;

inline void uniz_trim(UniZ& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}
inline int uniz_deg(const UniZ& p) { return (int)p.size() - 1; }

inline void uniz_make_primitive(UniZ& p) {
    mpz_class g(0);
    for (auto& c : p) g = gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && sgn(p.back()) < 0)
        for (auto& c : p) c = -c;
}

inline UniZ uniz_mul(const UniZ& a, const UniZ& b) {
    if (a.empty() || b.empty()) return {};
    UniZ r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uniz_trim(r);
    return r;
}

// Exact quotient over Z (caller guarantees divisibility, e.g. via Gauss's
// lemma when dividing by a primitive gcd).
inline UniZ uniz_divexact(UniZ a, const UniZ& b) {
    int db = uniz_deg(b);
    UniZ q(a.empty() ? 0 : (std::size_t)std::max(0, uniz_deg(a) - db) + 1, mpz_class(0));
    while (!a.empty() && uniz_deg(a) >= db) {
        mpz_class c = a.back() / b.back();
        if (c * b.back() != a.back()) throw std::domain_error("uniz_divexact: not divisible");
        int shift = uniz_deg(a) - db;
        q[shift] = c;
        for (int i = 0; i <= db; ++i) a[i + shift] -= c * b[i];
        uniz_trim(a);
    }
    if (!a.empty()) throw std::domain_error("uniz_divexact: not divisible");
    uniz_trim(q);
    return q;
}

// primitive gcd via primitive pseudo-remainder sequence
inline UniZ uniz_gcd(UniZ a, UniZ b) {
    uniz_trim(a);
    uniz_trim(b);
    uniz_make_primitive(a);
    uniz_make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const mpz_class& lb = b.back();
        int db = uniz_deg(b);
        UniZ r = a;
        while (!r.empty() && uniz_deg(r) >= db) {
            mpz_class lr = r.back();
            int dr = uniz_deg(r);
            for (auto& c : r) c *= lb;
            for (int i = 0; i <= db; ++i) r[i + dr - db] -= lr * b[i];
            uniz_trim(r);
            uniz_make_primitive(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// ---- dense bivariate: coefficients of t1^i are univariate in t2 ----
using BivQ = std::vector<UniQ>;
using BivZ = std::vector<UniZ>;

inline void biv_trim(BivQ& p) {
    while (!p.empty() && uni_is_zero(p.back())) p.pop_back();
}
inline int biv_deg(const BivQ& p) { return (int)p.size() - 1; }

inline void bivz_trim(BivZ& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}
inline int bivz_deg(const BivZ& p) { return (int)p.size() - 1; }

inline BivQ biv_from_laurent(const Laurent2& p) {
    // caller must have shifted away negative exponents
    BivQ r;
    for (auto& [e, c] : p.terms()) {
        if ((std::size_t)e.first >= r.size()) r.resize(e.first + 1);
        UniQ& u = r[e.first];
        if ((std::size_t)e.second >= u.size()) u.resize(e.second + 1, BigRat(0));
        u[e.second] = c;
    }
    for (auto& u : r) uni_trim(u);
    biv_trim(r);
    return r;
}

// to integer coefficients: scale by the common denominator (the overall
// rational factor is irrelevant for gcd purposes)
inline BivZ bivz_from_laurent(const Laurent2& p) {
    mpz_class den(1);
    for (auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
    BivZ r;
    for (auto& [e, c] : p.terms()) {
        if ((std::size_t)e.first >= r.size()) r.resize(e.first + 1);
        UniZ& u = r[e.first];
        if ((std::size_t)e.second >= u.size()) u.resize(e.second + 1, mpz_class(0));
        mpq_class v = c * BigRat(den);
        u[e.second] = v.get_num();
    }
    for (auto& u : r) uniz_trim(u);
    bivz_trim(r);
    return r;
}

inline Laurent2 bivz_to_laurent(const BivZ& p) {
    Laurent2 r;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (sgn(p[i][j]) != 0) r.add_term((int)i, (int)j, BigRat(p[i][j]));
    return r;
}

inline Laurent2 biv_to_laurent(const BivQ& p) {
    Laurent2 r;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i].size(); ++j)
            if (!qfock::is_zero(p[i][j])) r.add_term((int)i, (int)j, p[i][j]);
    return r;
}

// content of a bivariate over Z: primitive gcd of the t1-coefficients
inline UniZ bivz_content(const BivZ& p) {
    UniZ g;
    for (auto& u : p) {
        if (u.empty()) continue;
        g = uniz_gcd(g, u);
        if (uniz_deg(g) == 0) break;
    }
    return g;
}

inline BivZ bivz_divexact_content(const BivZ& p, const UniZ& c) {
    if (!c.empty() && uniz_deg(c) == 0 && c[0] == 1) return p;
    BivZ r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[i].empty() ? UniZ{} : uniz_divexact(p[i], c);
    return r;
}

inline BivZ bivz_primitive(BivZ p) {
    bivz_trim(p);
    if (p.empty()) return p;
    UniZ c = bivz_content(p);
    return bivz_divexact_content(p, c);
}

// primitive PRS in (Z[t2])[t1]
inline BivZ bivz_gcd(BivZ a, BivZ b) {
    bivz_trim(a);
    bivz_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UniZ ca = bivz_content(a), cb = bivz_content(b);
    UniZ cg = uniz_gcd(ca, cb);
    a = bivz_divexact_content(a, ca);
    b = bivz_divexact_content(b, cb);
    if (bivz_deg(a) < bivz_deg(b)) std::swap(a, b);
    while (true) {
        // pseudo-remainder of a by b
        int db = bivz_deg(b);
        const UniZ& lb = b.back();
        BivZ r = a;
        while (!r.empty() && bivz_deg(r) >= db) {
            UniZ lr = r.back();
            int dr = bivz_deg(r);
            for (auto& u : r) u = uniz_mul(u, lb);
            for (int i = 0; i <= db; ++i) {
                UniZ sub = uniz_mul(lr, b[i]);
                UniZ& dst = r[i + dr - db];
                if (dst.size() < sub.size()) dst.resize(sub.size(), mpz_class(0));
                for (std::size_t k = 0; k < sub.size(); ++k) dst[k] -= sub[k];
                uniz_trim(dst);
            }
            bivz_trim(r);
            if (!r.empty() && bivz_deg(r) >= dr) throw std::logic_error("prem failed to reduce");
            r = bivz_primitive(std::move(r));
        }
        if (r.empty()) break;
        a = std::move(b);
        b = std::move(r);
    }
    BivZ g = bivz_primitive(std::move(b));
    if (!(uniz_deg(cg) == 0 && cg[0] == 1))
        for (auto& u : g) u = uniz_mul(u, cg);
    return g;
}

}  // namespace detail

// Gcd of two Laurent polynomials, defined up to a scalar and monomial factor
// (the rational-function canonicalization absorbs both). Returns an ordinary
// polynomial with integer coefficients.
inline Laurent2 laurent_gcd(const Laurent2& a, const Laurent2& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [a1, a2] = a.min_exponents();
    auto [b1, b2] = b.min_exponents();
    detail::BivZ pa = detail::bivz_from_laurent(a.shifted(-a1, -a2));
    detail::BivZ pb = detail::bivz_from_laurent(b.shifted(-b1, -b2));
    return detail::bivz_to_laurent(detail::bivz_gcd(std::move(pa), std::move(pb)));
}

// Exact division of Laurent polynomials (throws if not divisible).
inline Laurent2 laurent_divexact(const Laurent2& a, const Laurent2& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Laurent2();
    auto [a1, a2] = a.min_exponents();
    auto [b1, b2] = b.min_exponents();
    detail::BivQ pa = detail::biv_from_laurent(a.shifted(-a1, -a2));
    detail::BivQ pb = detail::biv_from_laurent(b.shifted(-b1, -b2));
    // long division in (Q(t2))[t1]; every remainder step must divide exactly
    detail::BivQ q(std::max<std::size_t>(1, pa.size()));
    int db = detail::biv_deg(pb);
    while (!pa.empty() && detail::biv_deg(pa) >= db) {
        int da = detail::biv_deg(pa);
        detail::UniQ qc;
        try {
            qc = detail::uni_divexact(pa.back(), pb.back());
        } catch (const std::domain_error&) {
            throw std::domain_error("laurent_divexact: not divisible");
        }
        int shift = da - db;
        q[shift] = detail::uni_add(q[shift], qc);
        for (int i = 0; i <= db; ++i)
            pa[i + shift] = detail::uni_add(pa[i + shift], detail::uni_neg(detail::uni_mul(qc, pb[i])));
        detail::biv_trim(pa);
        if (!pa.empty() && detail::biv_deg(pa) >= da) throw std::logic_error("divexact stuck");
    }
    if (!pa.empty()) throw std::domain_error("laurent_divexact: not divisible");
    detail::biv_trim(q);
    return detail::biv_to_laurent(q).shifted(a1 - b1, a2 - b2);
}

// Attempted exact division: true and the quotient if b | a, false otherwise.
inline bool laurent_try_divexact(const Laurent2& a, const Laurent2& b, Laurent2& q) {
    try {
        q = laurent_divexact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace qfock
