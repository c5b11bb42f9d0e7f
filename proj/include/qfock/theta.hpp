#pragma once

// The correspondence with Macdonald polynomials: the normalization c_lam of
// the fixed-point basis, the rescaled commuting family, the comparison of its
// matrix elements with specialized Pieri coefficients, and the half-Heisenberg
// operators extracted from the rescaled family.

#include <vector>
#include <map>

#include "qfock/shuffle.hpp"
#include "qfock/cyc_op.hpp"
#include "qfock/macdonald.hpp"

namespace qfock {

// specialization q -> t1, t -> t2^{-1} of a rational function whose two slots
// are read as (q, t)
inline RatFun2 specialize_qt(const RatFun2& f) { return f.subst_monomial(1, 0, 0, -1); }

// c_lam = (-(1-t2)^{-1} t2)^{-|lam|} t1^{sum lam_i(lam_i-1)/2}
//         prod_box (1 - t1^{l} t2^{-a-1})^{-1}
inline RatFun2 c_norm(const Partition& lam) {
    int n = part_size(lam);
    long e1 = 0;
    for (int li : lam) e1 += (long)li * (li - 1) / 2;
    RatFun2 base(Laurent2::monomial(0, 1, BigRat(-1)), one_minus(0, 1));
    RatFun2 r = base.pow(-n) * RatFun2(Laurent2::t1((int)e1));
    Laurent2 den = Laurent2::one();
    for (auto& [i, j] : boxes_of(lam)) den *= one_minus(leg(lam, i, j), -arm(lam, i, j) - 1);
    return r / RatFun2(den);
}

// closed form for c_{lam+j}/c_lam in factored form: the infinite product
// over rows i > j telescopes past k' = max(len(lam), j)
inline FactoredRat c_ratio_factored(const Partition& lam, int j) {
    int kp = std::max((int)lam.size(), j);
    int lj = part_get(lam, j);
    FactoredRat v;
    v.mul_binom(0, 1);
    for (int i = j + 1; i <= kp; ++i) {
        int d = part_get(lam, i) - lj;
        v.mul_binom(d, i - j + 1);
        v.mul_binom(d, i - j, -1);
    }
    v.mul_binom(-lj, kp + 1 - j, -1);
    for (int i = 1; i < j; ++i) {
        int d = part_get(lam, i) - lj;
        v.mul_binom(d - 1, i - j);
        v.mul_binom(d - 1, i - j - 1, -1);
    }
    return v;
}

inline RatFun2 c_ratio_closed(const Partition& lam, int j) {
    return c_ratio_factored(lam, j).to_ratfun();
}

// d_n = (-t1)^{n-1}/((1-t1)(1-t2)); the rescaled family divides by d_1...d_n
inline RatFun2 d_factor(int n) {
    BigRat sign = (n % 2 == 1) ? BigRat(1) : BigRat(-1);
    return RatFun2(Laurent2::monomial(n - 1, 0, sign), one_minus(1, 0) * one_minus(0, 1));
}

inline RatFun2 d_prefactor_inv(int n) {
    RatFun2 r = RatFun2::one();
    for (int i = 1; i <= n; ++i) r /= d_factor(i);
    return r;
}

// c_mu/c_lam along the chain of added boxes, as a product of the small
// closed-form ratios (avoids forming the big c_norm quotient)
inline RatFun2 c_ratio_chain_inv(const Partition& mu, const std::vector<int>& chain) {
    RatFun2 r = RatFun2::one();
    Partition cur = mu;
    for (int row : chain) {
        r /= c_ratio_closed(cur, row);
        cur = add_row(cur, row);
    }
    return r;
}

// matrix element of the rescaled family in the normalized basis:
// K~_{n<mu,lam>} = K_{n[mu,lam]} * c_mu / c_lam / (d_1...d_n)
inline RatFun2 k_tilde_element(const ShuffleElement& kn, const Partition& mu, const Partition& lam) {
    RatFun2 raw = shuffle_matrix_element(kn, mu, lam);
    if (raw.is_zero()) return raw;
    return raw * c_ratio_chain_inv(mu, sorted_chain(mu, lam)) * d_prefactor_inv(kn.arity);
}

// same, but through the closed product form of the family's matrix elements
// (used when materializing operators, where speed matters). Every factor is
// a monomial or a binomial, so the whole element is accumulated in factored
// form and expanded only once.
inline FactoredRat k_tilde_factored(int n, const Partition& mu, const Partition& lam) {
    FactoredRat v = k_matrix_factored(n, mu, lam);
    if (v.is_zero()) return v;
    Partition cur = mu;
    for (int row : sorted_chain(mu, lam)) {
        v.div(c_ratio_factored(cur, row));  // times c_cur/c_next
        cur = add_row(cur, row);
    }
    for (int i = 1; i <= n; ++i) {  // divide by d_i = (-t1)^{i-1}/((1-t1)(1-t2))
        v.mul_binom(1, 0);
        v.mul_binom(0, 1);
        v.mul_monomial(-(i - 1), 0);
        if ((i - 1) % 2 != 0) v.mul_scalar(BigRat(-1));
    }
    return v;
}

inline RatFun2 k_tilde_element_closed(int n, const Partition& mu, const Partition& lam) {
    return k_tilde_factored(n, mu, lam).to_ratfun();
}

// The comparison on a single edge: (1-t1)(1-t2) K_1<lam,lam+j> equals the
// specialized single-box Pieri coefficient. Since d_1 = 1/((1-t1)(1-t2)),
// the left side is exactly the rescaled matrix element.
inline bool check_theta_edge(const ShuffleElement& k1, const Partition& lam, int j) {
    return k_tilde_element(k1, lam, add_row(lam, j)) == specialize_qt(pieri_coeff_single(lam, j));
}

// The strip-level statement: K~_{n<mu,lam>} equals the specialized Pieri
// coefficient on vertical n-strips and vanishes on all other nested pairs.
inline bool check_theta_strip(const ShuffleElement& kn, const Partition& mu, const Partition& lam) {
    RatFun2 val = k_tilde_element(kn, mu, lam);
    if (!is_vertical_strip(lam, mu)) return val.is_zero();
    return val == specialize_qt(pieri_coeff(lam, mu));
}

// Rescaled-family operator in the normalized basis (degree shift n), built
// from the closed product form of the matrix elements.
inline GradedOperator k_tilde_op(int n, int n_max) {
    return GradedOperator::build(n, n_max, [n](const Partition& mu) {
        FockVector v;
        for (auto& lam : partitions_of(part_size(mu) + n)) {
            RatFun2 c = k_tilde_element_closed(n, mu, lam);
            if (!c.is_zero()) fv_add(v, lam, c);
        }
        return v;
    });
}

namespace detail {

inline CycOp k_tilde_cyc_op(int n, int n_max) {
    CycOp op;
    op.shift = n;
    for (int d = 0; d <= n_max; ++d) {
        auto& blk = op.blocks[d];
        for (auto& mu : partitions_of(d))
            for (auto& lam : partitions_of(d + n)) {
                CycRat c = CycRat::from_factored(k_tilde_factored(n, mu, lam));
                if (!c.is_zero()) blk.emplace(std::make_pair(lam, mu), std::move(c));
            }
    }
    return op;
}

// Half-Heisenberg operators from the rescaled family, via the Newton
// recursion p_n = (-1)^{n-1}(n e_n - sum_{i<n} (-1)^{i-1} e_{n-i} p_i) with
// e_i replaced by the rescaled family operators.
inline std::vector<CycOp> heisenberg_cyc_ops(int i_max, int n_max) {
    std::vector<CycOp> K(i_max + 1), H(i_max + 1);
    for (int n = 1; n <= i_max; ++n) K[n] = k_tilde_cyc_op(n, n_max);
    for (int n = 1; n <= i_max; ++n) {
        CycOp acc = K[n];
        acc.scale(BigRat((long)n));
        for (int i = 1; i < n; ++i)
            acc.add_scaled(K[n - i].compose(H[i]), (i % 2 == 1) ? BigRat(-1) : BigRat(1));
        if (n % 2 == 0) acc.scale(BigRat(-1));
        acc.reduce_entries();
        H[n] = std::move(acc);
    }
    return H;
}

}  // namespace detail

inline std::vector<GradedOperator> heisenberg_ops(int i_max, int n_max) {
    std::vector<CycOp> Hc = detail::heisenberg_cyc_ops(i_max, n_max);
    std::vector<GradedOperator> H(i_max + 1);
    for (int n = 1; n <= i_max; ++n) H[n] = Hc[n].to_graded();
    return H;
}

// [h_i, h_j] = 0, verified exactly on all source degrees <= max_degree.
inline bool heisenberg_commutators_vanish(int i_max, int max_degree, int n_max,
                                          std::pair<Partition, Partition>* witness = nullptr) {
    std::vector<CycOp> H = detail::heisenberg_cyc_ops(i_max, n_max);
    for (int i = 1; i <= i_max; ++i)
        for (int j = i + 1; j <= i_max; ++j) {
            CycOp c = H[i].compose(H[j]);
            c.add_scaled(H[j].compose(H[i]), BigRat(-1));
            // composing drops degrees whose blocks were never built, so make
            // sure the requested range is actually present before testing it
            for (int d = 0; d <= max_degree; ++d)
                if (!c.blocks.count(d))
                    throw std::invalid_argument("heisenberg commutator: n_max too small");
            if (!c.zero_up_to(max_degree, witness)) return false;
        }
    return true;
}

// Matrix of multiplication by p_i in the Macdonald basis, specialized to
// (t1, t2^{-1}): entries lam <- mu with |mu| = deg, |lam| = deg + i.
inline std::map<std::pair<Partition, Partition>, RatFun2> p_mult_matrix_specialized(
    int i, int deg, const MacdonaldTable& mt) {
    std::map<std::pair<Partition, Partition>, RatFun2> out;
    MSym pi = p_to_m(Partition{i});
    for (auto& mu : partitions_of(deg)) {
        MSym prod = m_multiply(mt.P(mu), pi);
        for (auto& [lam, c] : mt.expand_in_P(prod)) {
            RatFun2 s = specialize_qt(c);
            if (!s.is_zero()) out.emplace(std::make_pair(lam, mu), s);
        }
    }
    return out;
}

struct IntertwineResult {
    bool proportional = false;
    RatFun2 scalar;  // expected 1
    bool ok() const { return proportional && scalar == RatFun2::one(); }
};

// Compare the i-th half-Heisenberg operator with specialized p_i
// multiplication on all source degrees <= max_degree - i; reports the single
// proportionality scalar.
inline IntertwineResult check_intertwining(int i, int max_degree, const GradedOperator& Hi,
                                           const MacdonaldTable& mt) {
    IntertwineResult res;
    bool have_scalar = false;
    for (int deg = 0; deg + i <= max_degree; ++deg) {
        auto pmat = p_mult_matrix_specialized(i, deg, mt);
        auto it = Hi.blocks().find(deg);
        if (it == Hi.blocks().end()) return res;
        const SparseBlock& hblk = it->second;
        if (hblk.size() != pmat.size()) return res;
        for (auto& [rc, hval] : hblk) {
            auto jt = pmat.find(rc);
            if (jt == pmat.end()) return res;
            if (!have_scalar) {
                res.scalar = hval / jt->second;
                have_scalar = true;
            } else if (!(hval == res.scalar * jt->second)) {
                return res;
            }
        }
    }
    res.proportional = have_scalar;
    return res;
}

}  // namespace qfock
