#pragma once

// The defining relations of the algebra, verified on the materialized
// operators: the cubic e-e and f-f exchange relations, diagonality of
// [e_a, f_b] with eigenvalues matching the psi-series bookkeeping, and the
// psi-e / psi-f relations in their edge-local form.

#include <map>
#include <vector>
#include <string>
#include <optional>

#include "qfock/operators.hpp"
#include "qfock/cyc_op.hpp"
#include "qfock/useries.hpp"
#include "qfock/gamma.hpp"

namespace qfock {

// elementary symmetric polynomials in q1 = t1, q2 = t2, q3 = (t1 t2)^{-1}
inline RatFun2 sigma_sym(int k) {
    Laurent2 p;
    switch (k) {
        case 1:
            p.add_term(1, 0, BigRat(1));
            p.add_term(0, 1, BigRat(1));
            p.add_term(-1, -1, BigRat(1));
            return RatFun2(p);
        case 2:
            p.add_term(1, 1, BigRat(1));
            p.add_term(0, -1, BigRat(1));
            p.add_term(-1, 0, BigRat(1));
            return RatFun2(p);
        case 3:
            return RatFun2::one();  // q1 q2 q3 = 1
    }
    throw std::invalid_argument("sigma_sym: k in {1,2,3}");
}

// same, as a gcd-free polynomial coefficient for operator combinations
inline CycRat sigma_cyc(int k) {
    CycRat r;
    r.num = sigma_sym(k).num();
    return r;
}

// D = (1 - q1)(1 - q2)(1 - q3)
inline RatFun2 delta_denominator() {
    return RatFun2(one_minus(1, 0)) * RatFun2(one_minus(0, 1)) * RatFun2(one_minus(-1, -1));
}

// Eigenvalue series of psi^{+-}(z) on [lam]: the rational function
//   -((1 - (t1 t2)^{-1} z^{-1})/(1 - z^{-1})) *
//   prod_box (1 - t1^{-1}chi/z)(1 - t2^{-1}chi/z)(1 - t1 t2 chi/z)
//            / ((1 - t1 chi/z)(1 - t2 chi/z)(1 - (t1 t2)^{-1}chi/z))
// expanded at z = infinity (plus: coefficients of z^{-s}) or at z = 0
// (minus: coefficients of z^{s}), s = 0..N.
inline std::vector<RatFun2> psi_eigenvalue(const Partition& lam, bool plus, int N) {
    auto lin = [](const Laurent2& a) {  // 1 - a*y as a UniR
        UniR p(2);
        p[0] = RatFun2::one();
        p[1] = -RatFun2(a);
        return p;
    };
    UniR num = lin(Laurent2::monomial(-1, -1));
    for (auto& c : num) c = -c;
    UniR den = lin(Laurent2::one());
    for (auto& [i, j] : boxes_of(lam)) {
        Laurent2 chi = box_char(i, j);
        num = ur_mul(num, lin(chi.shifted(-1, 0)));
        num = ur_mul(num, lin(chi.shifted(0, -1)));
        num = ur_mul(num, lin(chi.shifted(1, 1)));
        den = ur_mul(den, lin(chi.shifted(1, 0)));
        den = ur_mul(den, lin(chi.shifted(0, 1)));
        den = ur_mul(den, lin(chi.shifted(-1, -1)));
    }
    RatSeries1 f(std::move(num), std::move(den));
    if (plus) return f.expand_at_zero(N);
    auto [off, c] = f.expand_at_infinity(N);
    if (off != 0) throw std::logic_error("psi series: unexpected degree offset");
    return c;
}

// Caches the e_r / f_r operator blocks so relation checks can share them.
class OperatorCache {
  public:
    explicit OperatorCache(int n_max) : n_max_(n_max) {}

    int n_max() const { return n_max_; }

    const CycOp& e(int r) {
        auto it = e_.find(r);
        if (it == e_.end()) it = e_.emplace(r, CycOp::e_op(r, n_max_)).first;
        return it->second;
    }
    const CycOp& f(int r) {
        auto it = f_.find(r);
        if (it == f_.end()) it = f_.emplace(r, CycOp::f_op(r, n_max_)).first;
        return it->second;
    }

  private:
    int n_max_;
    std::map<int, CycOp> e_, f_;
};

// Cubic exchange relation in coefficient form. For the e's (which=1):
//   e_{i+3}e_j - s1 e_{i+2}e_{j+1} + s2 e_{i+1}e_{j+2} - s3 e_i e_{j+3}
//     = s3 e_j e_{i+3} - s2 e_{j+1}e_{i+2} + s1 e_{j+2}e_{i+1} - e_{j+3}e_i.
// The f relation swaps the two kernel factors, which mirrors the indices:
//   f_i f_{j+3} - s1 f_{i+1}f_{j+2} + s2 f_{i+2}f_{j+1} - s3 f_{i+3}f_j
//     = s3 f_{j+3}f_i - s2 f_{j+2}f_{i+1} + s1 f_{j+1}f_{i+2} - f_j f_{i+3}.
// The cache must be built with n_max one above the largest degree to check.
inline bool check_exchange_relation(int which, int i, int j, OperatorCache& ops) {
    auto X = [&](int r) -> const CycOp& { return which == 1 ? ops.e(r) : ops.f(r); };
    auto P = [&](int a, int b) { return X(a).compose(X(b)); };
    auto S = [](int k, int sign) {
        CycRat c = sigma_cyc(k);
        if (sign < 0) c.scale(BigRat(-1));
        return c;
    };
    // accumulate lhs - rhs and test for exact zero (s3 = 1)
    CycOp acc = (which == 1) ? P(i + 3, j) : P(i, j + 3);
    if (which == 1) {
        acc.add_scaled(P(i + 2, j + 1), S(1, -1));
        acc.add_scaled(P(i + 1, j + 2), S(2, +1));
        acc.add_scaled(P(i, j + 3), BigRat(-1));
        acc.add_scaled(P(j, i + 3), BigRat(-1));
        acc.add_scaled(P(j + 1, i + 2), S(2, +1));
        acc.add_scaled(P(j + 2, i + 1), S(1, -1));
        acc.add_scaled(P(j + 3, i), BigRat(1));
    } else {
        acc.add_scaled(P(i + 1, j + 2), S(1, -1));
        acc.add_scaled(P(i + 2, j + 1), S(2, +1));
        acc.add_scaled(P(i + 3, j), BigRat(-1));
        acc.add_scaled(P(j + 3, i), BigRat(-1));
        acc.add_scaled(P(j + 2, i + 1), S(2, +1));
        acc.add_scaled(P(j + 1, i + 2), S(1, -1));
        acc.add_scaled(P(j, i + 3), BigRat(1));
    }
    return acc.zero_on_known_blocks();
}

// [e_a, f_b] as a degree-0 operator (source degrees 0..n_max-1 fully covered
// when the cache holds blocks up to n_max).
inline CycOp ef_commutator_op(int a, int b, OperatorCache& ops) {
    CycOp acc = ops.e(a).compose(ops.f(b));
    acc.add_scaled(ops.f(b).compose(ops.e(a)), BigRat(-1));
    return acc;
}

// Expected eigenvalue of [e_a, f_b] on [lam] from the psi-series coefficients:
// s = a+b; s>0 -> psi^+_s/D, s<0 -> -psi^-_{-s}/D, s=0 -> (psi^+_0-psi^-_0)/D.
inline RatFun2 ef_expected_eigenvalue(const Partition& lam, int a, int b) {
    int s = a + b;
    RatFun2 D = delta_denominator();
    if (s > 0) return psi_eigenvalue(lam, true, s)[s] / D;
    if (s < 0) return -psi_eigenvalue(lam, false, -s)[-s] / D;
    return (psi_eigenvalue(lam, true, 0)[0] - psi_eigenvalue(lam, false, 0)[0]) / D;
}

struct EfCheckResult {
    bool diagonal = false;
    bool eigenvalues_match = false;
    std::optional<std::pair<Partition, Partition>> offdiag_witness;
    std::optional<Partition> eigen_witness;
    bool ok() const { return diagonal && eigenvalues_match; }
};

// Full relation-(3) check for one pair (a, b): diagonality and eigenvalue
// match on all degrees up to and including max_check_degree.
inline EfCheckResult check_ef_relation(int a, int b, int max_check_degree, OperatorCache& ops) {
    EfCheckResult res;
    CycOp com = ef_commutator_op(a, b, ops);
    std::map<Partition, RatFun2> diag;
    for (auto& [n, blk] : com.blocks) {
        for (auto& lam : partitions_of(n)) diag.emplace(lam, RatFun2());
        for (auto& [rc, e] : blk) {
            if (e.is_zero()) continue;
            if (rc.first != rc.second) {
                res.offdiag_witness = rc;
                return res;
            }
            diag[rc.first] = e.to_ratfun();
        }
    }
    res.diagonal = true;
    res.eigenvalues_match = true;
    for (auto& [lam, val] : diag) {
        if (part_size(lam) > max_check_degree) continue;
        if (!(val == ef_expected_eigenvalue(lam, a, b))) {
            res.eigenvalues_match = false;
            res.eigen_witness = lam;
            return res;
        }
    }
    return res;
}

// Edge-local form of the psi-e relation (which=4, psi^+ coefficients) and
// psi-f relation (which=5, psi^- coefficients) on the edge (lam, lam+k),
// with chi1 the character of the added box. Substituting the edge character
// for w in the relation and reading off powers of z gives, for psi^+,
//   (phi_{i+3} - s1 chi1 phi_{i+2} + s2 chi1^2 phi_{i+1} - s3 chi1^3 phi_i)|_{lam'}
//     = (s3 phi_{i+3} - s2 chi1 phi_{i+2} + s1 chi1^2 phi_{i+1} - chi1^3 phi_i)|_{lam};
// for psi^- the series runs in positive powers of z, which mirrors the
// coefficient indices:
//   (phi_i - s1 chi1 phi_{i+1} + s2 chi1^2 phi_{i+2} - s3 chi1^3 phi_{i+3})|_{lam'}
//     = (s3 phi_i - s2 chi1 phi_{i+1} + s1 chi1^2 phi_{i+2} - chi1^3 phi_{i+3})|_{lam}.
// Checked for all i with i+3 <= N (phi_j = 0 for j < 0).
inline bool check_psi_edge_relation(int which, const Partition& lam, int k, int N) {
    bool plus = (which == 4);
    Partition lamp = add_row(lam, k);
    std::vector<RatFun2> lo = psi_eigenvalue(lam, plus, N);
    std::vector<RatFun2> hi = psi_eigenvalue(lamp, plus, N);
    RatFun2 chi1(Laurent2::monomial(part_get(lam, k), k - 1));
    RatFun2 s1 = sigma_sym(1), s2 = sigma_sym(2), s3 = sigma_sym(3);
    auto at = [](const std::vector<RatFun2>& v, int idx) {
        return idx < 0 ? RatFun2() : v[idx];
    };
    // index sequence: descending for psi^+, ascending for psi^-
    auto idx = [plus](int i, int m) { return plus ? i + 3 - m : i + m; };
    for (int i = -3; i + 3 <= N; ++i) {
        RatFun2 lhs = at(hi, idx(i, 0)) - s1 * chi1 * at(hi, idx(i, 1)) +
                      s2 * chi1.pow(2) * at(hi, idx(i, 2)) - s3 * chi1.pow(3) * at(hi, idx(i, 3));
        RatFun2 rhs = s3 * at(lo, idx(i, 0)) - s2 * chi1 * at(lo, idx(i, 1)) +
                      s1 * chi1.pow(2) * at(lo, idx(i, 2)) - chi1.pow(3) * at(lo, idx(i, 3));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// Independent oracle for the psi^+ series machinery: along an edge the whole
// eigenvalue series gets multiplied by the six-factor ratio of the new box,
//   psi^+|_{lam'} = psi^+|_{lam} *
//     (1-chi1 y/t1)(1-chi1 y/t2)(1-t1 t2 chi1 y) /
//     ((1-t1 chi1 y)(1-t2 chi1 y)(1-chi1 y/(t1 t2))),   y = z^{-1},
// compared as truncated series to order N.
inline bool check_psi_edge_ratio(const Partition& lam, int k, int N) {
    Partition lamp = add_row(lam, k);
    std::vector<RatFun2> lo = psi_eigenvalue(lam, true, N);
    std::vector<RatFun2> hi = psi_eigenvalue(lamp, true, N);
    Laurent2 chi = Laurent2::monomial(part_get(lam, k), k - 1);
    auto lin = [](const Laurent2& a) {
        UniR p(2);
        p[0] = RatFun2::one();
        p[1] = -RatFun2(a);
        return p;
    };
    UniR num = ur_mul(ur_mul(lin(chi.shifted(-1, 0)), lin(chi.shifted(0, -1))), lin(chi.shifted(1, 1)));
    UniR den = ur_mul(ur_mul(lin(chi.shifted(1, 0)), lin(chi.shifted(0, 1))), lin(chi.shifted(-1, -1)));
    std::vector<RatFun2> ratio = RatSeries1(std::move(num), std::move(den)).expand_at_zero(N);
    for (int s = 0; s <= N; ++s) {
        RatFun2 acc;
        for (int j = 0; j <= s; ++j) acc += lo[j] * ratio[s - j];
        if (!(acc == hi[s])) return false;
    }
    return true;
}

// The cubic annihilation identity from the exchange-relation proof: the
// polynomial 1 - s1 u + s2 u^2 - s3 u^3 vanishes at u = t1^{-1} and u = t2^{-1}.
inline bool check_cubic_annihilation() {
    for (int v = 1; v <= 2; ++v) {
        RatFun2 u = (v == 1) ? RatFun2(Laurent2::monomial(-1, 0)) : RatFun2(Laurent2::monomial(0, -1));
        RatFun2 val = RatFun2::one() - sigma_sym(1) * u + sigma_sym(2) * u.pow(2) - sigma_sym(3) * u.pow(3);
        if (!val.is_zero()) return false;
    }
    return true;
}

}  // namespace qfock
