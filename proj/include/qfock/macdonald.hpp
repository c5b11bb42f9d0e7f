#pragma once

// Symmetric functions over Q(q,t) and Macdonald polynomials. The ground
// field reuses the two-variable rational-function kernel; the first variable
// plays the role of q and the second of t (printed as "q"/"t" by callers).
//
// Basis conversions go through explicit expansions in d = degree variables:
// a homogeneous symmetric function of degree d is faithfully represented by
// its polynomial in x_1..x_d, and the m-coefficients are read off the sorted
// representative monomials.

#include <map>
#include <vector>
#include <algorithm>
#include <stdexcept>

#include "qfock/partition.hpp"
#include "qfock/ratfun2.hpp"
#include "qfock/multipoly.hpp"

namespace qfock {

inline RatFun2 qvar() { return RatFun2::t1(); }
inline RatFun2 tvar() { return RatFun2::t2(); }

// Sparse symmetric function in the monomial basis, homogeneous pieces mixed.
using MSym = std::map<Partition, RatFun2>;

inline void msym_add(MSym& f, const Partition& lam, const RatFun2& c) {
    if (c.is_zero()) return;
    auto it = f.find(lam);
    if (it == f.end()) {
        f.emplace(lam, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

inline bool msym_equal(const MSym& a, const MSym& b) {
    if (a.size() != b.size()) return false;
    for (auto& [lam, c] : a) {
        auto it = b.find(lam);
        if (it == b.end() || !(it->second == c)) return false;
    }
    return true;
}

namespace detail {

// monomial symmetric polynomial m_lam in d variables
inline MultiPoly expand_m(const Partition& lam, int d) {
    if ((int)lam.size() > d) return MultiPoly(d);
    ExpVec e(d, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) e[i] = lam[i];
    std::sort(e.begin(), e.end());
    MultiPoly p(d);
    do {
        p.add_term(e, RatFun2::one());
    } while (std::next_permutation(e.begin(), e.end()));
    return p;
}

inline MultiPoly expand_p(int r, int d) {
    MultiPoly p(d);
    for (int i = 1; i <= d; ++i) {
        ExpVec e(d, 0);
        e[i - 1] = r;
        p.add_term(e, RatFun2::one());
    }
    return p;
}

inline MultiPoly expand_e(int r, int d) {
    if (r > d) return MultiPoly(d);
    MultiPoly p(d);
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        ExpVec e(d, 0);
        for (int i : idx) e[i] = 1;
        p.add_term(e, RatFun2::one());
        int i = r - 1;
        while (i >= 0 && idx[i] == d - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return p;
}

// read off m-coefficients of a symmetric polynomial in d >= degree variables
inline MSym poly_to_m(const MultiPoly& p) {
    MSym out;
    for (auto& [e, c] : p.terms()) {
        bool sorted_desc = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] > e[i - 1]) { sorted_desc = false; break; }
        if (!sorted_desc) continue;
        Partition lam;
        for (int x : e) {
            if (x < 0) throw std::domain_error("poly_to_m: negative exponent");
            if (x > 0) lam.push_back(x);
        }
        msym_add(out, lam, c);
    }
    return out;
}

}  // namespace detail

// p_lam expanded in the m basis (degree = |lam| variables suffice)
inline MSym p_to_m(const Partition& lam) {
    int d = std::max(1, part_size(lam));
    MultiPoly p = MultiPoly::constant(d, RatFun2::one());
    for (int r : lam) p *= detail::expand_p(r, d);
    return detail::poly_to_m(p);
}

inline MSym e_to_m(const Partition& lam) {
    int d = std::max(1, part_size(lam));
    MultiPoly p = MultiPoly::constant(d, RatFun2::one());
    for (int r : lam) p *= detail::expand_e(r, d);
    return detail::poly_to_m(p);
}

// product of two m-basis symmetric functions, re-expanded in m
inline MSym m_multiply(const MSym& f, const MSym& g) {
    // group by degrees; expand each homogeneous product in enough variables
    MSym out;
    for (auto& [lam, cf] : f)
        for (auto& [mu, cg] : g) {
            int d = std::max(1, part_size(lam) + part_size(mu));
            MultiPoly p = detail::expand_m(lam, d) * detail::expand_m(mu, d);
            for (auto& [nu, c] : detail::poly_to_m(p)) msym_add(out, nu, c * cf * cg);
        }
    return out;
}

// Per-degree conversion tables between the m and p bases.
class SymBasisTable {
  public:
    explicit SymBasisTable(int max_degree) : D_(max_degree) {
        for (int n = 0; n <= D_; ++n) {
            auto parts = partitions_of(n);
            // p_lam in m basis
            std::map<Partition, MSym> p_in_m;
            for (auto& lam : parts) p_in_m.emplace(lam, p_to_m(lam));
            p_in_m_.push_back(p_in_m);
            // invert: m_lam in p basis, by exact Gaussian elimination
            m_in_p_.push_back(invert_table(parts, p_in_m));
        }
    }

    int max_degree() const { return D_; }

    // f (m basis, homogeneous mixed) -> p-basis coefficients
    MSym to_p(const MSym& f) const {
        MSym out;
        for (auto& [lam, c] : f) {
            int n = part_size(lam);
            if (n > D_) throw std::domain_error("SymBasisTable: degree exceeds table");
            for (auto& [mu, d] : m_in_p_[n].at(lam)) msym_add(out, mu, d * c);
        }
        return out;
    }

    MSym p_basis_to_m(const MSym& f) const {
        MSym out;
        for (auto& [lam, c] : f) {
            int n = part_size(lam);
            if (n > D_) throw std::domain_error("SymBasisTable: degree exceeds table");
            for (auto& [mu, d] : p_in_m_[n].at(lam)) msym_add(out, mu, d * c);
        }
        return out;
    }

  private:
    static std::map<Partition, MSym> invert_table(const std::vector<Partition>& parts,
                                                  const std::map<Partition, MSym>& fwd) {
        // solve  [fwd matrix] * X = I  columnwise, exact over the field
        int N = (int)parts.size();
        std::map<Partition, int> idx;
        for (int i = 0; i < N; ++i) idx[parts[i]] = i;
        // A[i][j] = coefficient of m_{parts[i]} in p_{parts[j]}
        std::vector<std::vector<RatFun2>> A(N, std::vector<RatFun2>(2 * N));
        for (int j = 0; j < N; ++j)
            for (auto& [mu, c] : fwd.at(parts[j])) A[idx[mu]][j] = c;
        for (int i = 0; i < N; ++i) A[i][N + i] = RatFun2::one();
        // Gauss-Jordan
        for (int col = 0; col < N; ++col) {
            int piv = -1;
            for (int r = col; r < N; ++r)
                if (!A[r][col].is_zero()) { piv = r; break; }
            if (piv < 0) throw std::logic_error("basis matrix singular");
            std::swap(A[col], A[piv]);
            RatFun2 inv = A[col][col].inv();
            for (int c = col; c < 2 * N; ++c)
                if (!A[col][c].is_zero()) A[col][c] = A[col][c] * inv;
            for (int r = 0; r < N; ++r) {
                if (r == col || A[r][col].is_zero()) continue;
                RatFun2 f = A[r][col];
                for (int c = col; c < 2 * N; ++c)
                    if (!A[col][c].is_zero()) A[r][c] -= f * A[col][c];
            }
        }
        std::map<Partition, MSym> inv_tab;
        for (int j = 0; j < N; ++j) {
            MSym col;
            for (int i = 0; i < N; ++i)
                if (!A[i][N + j].is_zero()) col.emplace(parts[i], A[i][N + j]);
            inv_tab.emplace(parts[j], std::move(col));
        }
        return inv_tab;
    }

    int D_;
    std::vector<std::map<Partition, MSym>> p_in_m_;  // per degree
    std::vector<std::map<Partition, MSym>> m_in_p_;
};

inline BigRat z_factor(const Partition& lam) {
    std::map<int, int> mult;
    for (int r : lam) mult[r]++;
    BigRat z(1);
    for (auto& [r, m] : mult) {
        for (int i = 0; i < m; ++i) z *= r;
        for (int i = 2; i <= m; ++i) z *= i;  // m_r!
    }
    return z;
}

// diagonal inner product of two p-basis coefficient vectors:
// (p_lam, p_mu) = delta z_lam prod (1-q^{lam_i})/(1-t^{lam_i})
inline RatFun2 inner_product_p(const MSym& fp, const MSym& gp) {
    RatFun2 acc;
    for (auto& [lam, cf] : fp) {
        auto it = gp.find(lam);
        if (it == gp.end()) continue;
        Laurent2 num = Laurent2::one(), den = Laurent2::one();
        for (int r : lam) {
            num *= one_minus(r, 0);  // 1 - q^r
            den *= one_minus(0, r);  // 1 - t^r
        }
        acc += cf * it->second * RatFun2(num * Laurent2(z_factor(lam)), den);
    }
    return acc;
}

// Macdonald inner product of two m-basis functions via the p basis.
inline RatFun2 inner_product(const MSym& f, const MSym& g, const SymBasisTable& tab) {
    return inner_product_p(tab.to_p(f), tab.to_p(g));
}

namespace detail {

// Per-degree data for inner products of p-coordinate vectors with polynomial
// entries: Dt is a common denominator for all the weights (1-q^r)/(1-t^r)
// occurring in degree n, and wnum[rho] = z_rho prod(1-q^{rho_i}) * Dt /
// prod(1-t^{rho_i}) is the weight numerator over Dt (an honest polynomial).
struct PWeightTable {
    Laurent2 Dt;
    std::map<Partition, Laurent2> wnum;
};

inline PWeightTable make_pweights(int n) {
    PWeightTable w;
    w.Dt = Laurent2::one();
    for (int r = 1; r <= n; ++r)
        for (int k = 0; k < n / r; ++k) w.Dt *= one_minus(0, r);
    for (auto& rho : partitions_of(n)) {
        Laurent2 num = Laurent2(z_factor(rho)), den = Laurent2::one();
        for (int r : rho) {
            num *= one_minus(r, 0);
            den *= one_minus(0, r);
        }
        w.wnum.emplace(rho, num * laurent_divexact(w.Dt, den));
    }
    return w;
}

// p-coordinate vector with polynomial entries over one shared denominator
using PolyVec = std::map<Partition, Laurent2>;

inline Laurent2 pvec_inner_num(const PolyVec& a, const PolyVec& b, const PWeightTable& w) {
    Laurent2 acc;
    for (auto& [rho, ca] : a) {
        auto it = b.find(rho);
        if (it == b.end()) continue;
        acc += ca * it->second * w.wnum.at(rho);
    }
    return acc;
}

// divide the vector and denominator by their common polynomial content
inline void pvec_reduce(PolyVec& v, Laurent2& den) {
    Laurent2 g = den;
    for (auto& [rho, c] : v) {
        if (g.is_monomial()) break;
        g = laurent_gcd(g, c);
    }
    if (g.is_monomial() && g.lead().second == 1 && g.lead().first == Exp2{0, 0}) return;
    den = laurent_divexact(den, g);
    for (auto& [rho, c] : v) c = laurent_divexact(c, g);
}

}  // namespace detail

// Macdonald polynomials P_lam in the m basis, by Gram-Schmidt along a total
// order refining dominance. Two different tie-break orders must produce the
// same result (checked by tests).
//
// The orthogonalization keeps each partial vector as p-basis coordinates with
// polynomial entries over a single shared denominator; rational-function
// canonicalization happens once per projection step instead of once per
// coefficient operation, which is what makes degrees 5-6 tractable.
class MacdonaldTable {
  public:
    MacdonaldTable(int max_degree, const SymBasisTable& tab, bool alt_tie_break = false)
        : tab_(tab) {
        for (int n = 0; n <= max_degree; ++n) {
            auto parts = partitions_of(n);
            // two total orders refining dominance, both ascending
            // (dominance-minimal first): partial-sum lex, or the conjugate
            // order transported through lam -> lam' (which reverses dominance)
            std::sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
                if (alt_tie_break)
                    return dominance_refining_less(conjugate(a), conjugate(b));
                return dominance_refining_less(b, a);
            });
            detail::PWeightTable w = detail::make_pweights(n);
            // per-partition scaled vectors Q_mu = den_mu * P_mu (p basis)
            std::map<Partition, std::pair<detail::PolyVec, Laurent2>> scaled;
            for (auto& lam : parts) {
                // m_lam in p coordinates has rational-number entries
                detail::PolyVec N;
                Laurent2 e = Laurent2::one();
                for (auto& [rho, c] : tab_.to_p(MSym{{lam, RatFun2::one()}})) {
                    if (!c.is_polynomial() || c.num().size() > 1)
                        throw std::logic_error("m-to-p coefficients must be numeric");
                    N.emplace(rho, c.num());
                }
                for (auto& mu : parts) {
                    if (mu == lam) break;
                    auto& [Q, eQ] = scaled.at(mu);
                    Laurent2 I = detail::pvec_inner_num(N, Q, w);
                    if (I.is_zero()) continue;
                    const RatFun2& nm = table_.at(mu).second;
                    // c = (v, P_mu)/(P_mu, P_mu); v_new = (N*cd*eQ - cn*e*Q)/(e*cd*eQ)
                    RatFun2 c(I * nm.den(), w.Dt * e * eQ * nm.num());
                    Laurent2 mul_old = c.den() * eQ, mul_new = c.num() * e;
                    for (auto& [rho, coef] : N) coef *= mul_old;
                    for (auto& [rho, coef] : Q) {
                        Laurent2 sub = coef * mul_new;
                        auto it = N.find(rho);
                        if (it == N.end())
                            N.emplace(rho, -sub);
                        else
                            it->second -= sub;
                    }
                    e = e * c.den() * eQ;
                    for (auto it = N.begin(); it != N.end();)
                        it = it->second.is_zero() ? N.erase(it) : std::next(it);
                    detail::pvec_reduce(N, e);
                }
                RatFun2 norm(detail::pvec_inner_num(N, N, w), w.Dt * e * e);
                // unpack to rational-coefficient p and m expansions
                MSym pp;
                for (auto& [rho, coef] : N) pp.emplace(rho, RatFun2(coef, e));
                MSym pm = tab_.p_basis_to_m(pp);
                scaled.emplace(lam, std::make_pair(std::move(N), std::move(e)));
                p_coords_.emplace(lam, std::move(pp));
                table_.emplace(lam, std::make_pair(std::move(pm), std::move(norm)));
            }
        }
    }

    const MSym& P(const Partition& lam) const { return table_.at(lam).first; }
    const MSym& P_in_p(const Partition& lam) const { return p_coords_.at(lam); }
    const RatFun2& norm(const Partition& lam) const { return table_.at(lam).second; }
    bool has(const Partition& lam) const { return table_.count(lam) != 0; }

    // expand an m-basis function in the P basis (unitriangular back-substitution)
    MSym expand_in_P(MSym f) const {
        MSym out;
        while (!f.empty()) {
            // pick a dominance-maximal remaining term
            auto best = f.begin();
            for (auto it = f.begin(); it != f.end(); ++it)
                if (dominance_refining_less(it->first, best->first)) best = it;
            Partition lam = best->first;
            RatFun2 c = best->second;
            out.emplace(lam, c);
            for (auto& [nu, d] : P(lam)) msym_add(f, nu, -(c * d));
        }
        return out;
    }

  private:
    const SymBasisTable& tab_;
    std::map<Partition, std::pair<MSym, RatFun2>> table_;
    std::map<Partition, MSym> p_coords_;  // P_lam in the p basis
};

// vertical strip test: lam/mu has at most one box per row
inline bool is_vertical_strip(const Partition& lam, const Partition& mu) {
    std::size_t L = std::max(lam.size(), mu.size());
    for (std::size_t i = 1; i <= L; ++i) {
        int d = part_get(lam, (int)i) - part_get(mu, (int)i);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

// Pieri coefficient psi_{lam/mu}: product over pairs (i,j), i<j, with
// lam_i = mu_i and lam_j = mu_j + 1; rows indexed over the length of lam.
inline RatFun2 pieri_coeff(const Partition& lam, const Partition& mu) {
    if (!is_vertical_strip(lam, mu)) return RatFun2();
    Laurent2 num = Laurent2::one(), den = Laurent2::one();
    int L = (int)lam.size();
    for (int i = 1; i <= L; ++i) {
        if (part_get(lam, i) != part_get(mu, i)) continue;
        for (int j = i + 1; j <= L; ++j) {
            if (part_get(lam, j) != part_get(mu, j) + 1) continue;
            int dmu = part_get(mu, i) - part_get(mu, j);
            int dlm = part_get(lam, i) - part_get(lam, j);
            num *= one_minus(dmu, j - i - 1) * one_minus(dlm, j - i + 1);
            den *= one_minus(dmu, j - i) * one_minus(dlm, j - i);
        }
    }
    return RatFun2(num, den);
}

// Expansions of the elementary symmetric functions in the power sums, by two
// independent routes: the exponential generating identity
//   1 + sum_i e_i z^i = exp(sum_i (-1)^{i-1} p_i z^i / i)
// and the classical Newton recursion n e_n = sum (-1)^{i-1} e_{n-i} p_i.
// The returned maps are p-basis coefficient vectors for e_1..e_N.

inline MSym p_basis_multiply(const MSym& f, const MSym& g) {
    MSym out;
    for (auto& [lam, cf] : f)
        for (auto& [mu, cg] : g) {
            Partition nu = lam;
            nu.insert(nu.end(), mu.begin(), mu.end());
            std::sort(nu.begin(), nu.end(), std::greater<int>());
            msym_add(out, nu, cf * cg);
        }
    return out;
}

inline std::vector<MSym> newton_e_exponential(int N) {
    // series coefficients of exp(L) by degree, L = sum (-1)^{i-1} p_i z^i / i
    std::vector<MSym> L(N + 1);
    for (int i = 1; i <= N; ++i) {
        BigRat c = rat(i % 2 ? 1 : -1) / BigRat(i);
        L[i] = MSym{{Partition{i}, RatFun2(c)}};
    }
    std::vector<MSym> E(N + 1);
    E[0] = MSym{{Partition{}, RatFun2::one()}};
    std::vector<MSym> power = E;  // L^k / k!, truncated
    for (int k = 1; k <= N; ++k) {
        std::vector<MSym> next(N + 1);
        for (int a = 0; a <= N; ++a) {
            if (power[a].empty()) continue;
            for (int b = 1; a + b <= N; ++b) {
                if (L[b].empty()) continue;
                for (auto& [nu, c] : p_basis_multiply(power[a], L[b]))
                    msym_add(next[a + b], nu, c * RatFun2(BigRat(1) / BigRat(k)));
            }
        }
        power = std::move(next);
        bool empty = true;
        for (int a = 0; a <= N; ++a) {
            for (auto& [nu, c] : power[a]) msym_add(E[a], nu, c);
            if (!power[a].empty()) empty = false;
        }
        if (empty) break;
    }
    return E;  // E[n] = e_n in the p basis
}

inline std::vector<MSym> newton_e_recursion(int N) {
    std::vector<MSym> E(N + 1);
    E[0] = MSym{{Partition{}, RatFun2::one()}};
    for (int n = 1; n <= N; ++n) {
        MSym acc;
        for (int i = 1; i <= n; ++i) {
            MSym pi{{Partition{i}, RatFun2(rat(i % 2 ? 1 : -1))}};
            for (auto& [nu, c] : p_basis_multiply(E[n - i], pi)) msym_add(acc, nu, c);
        }
        for (auto& [nu, c] : acc) msym_add(E[n], nu, c * RatFun2(BigRat(1) / BigRat(n)));
    }
    return E;
}

// single-box Pieri product (independent formula)
inline RatFun2 pieri_coeff_single(const Partition& mu, int j) {
    Laurent2 num = Laurent2::one(), den = Laurent2::one();
    int mj = part_get(mu, j);
    for (int i = 1; i < j; ++i) {
        int d = part_get(mu, i) - mj;
        num *= one_minus(d, j - i - 1) * one_minus(d - 1, j - i + 1);
        den *= one_minus(d, j - i) * one_minus(d - 1, j - i);
    }
    return RatFun2(num, den);
}

}  // namespace qfock
